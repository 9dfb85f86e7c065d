/* xagdepth: multiplicative-depth optimization for XOR-AND graphs
 * Copyright (C) 2026  The xagdepth authors
 *
 * Permission is hereby granted, free of charge, to any person
 * obtaining a copy of this software and associated documentation
 * files (the "Software"), to deal in the Software without
 * restriction, including without limitation the rights to use,
 * copy, modify, merge, publish, distribute, sublicense, and/or sell
 * copies of the Software, and to permit persons to whom the
 * Software is furnished to do so, subject to the following
 * conditions:
 *
 * The above copyright notice and this permission notice shall be
 * included in all copies or substantial portions of the Software.
 *
 * THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND,
 * EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES
 * OF MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND
 * NONINFRINGEMENT. IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT
 * HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER LIABILITY,
 * WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
 * FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR
 * OTHER DEALINGS IN THE SOFTWARE.
 */

/*!
  \file io.hpp
  \brief ASCII AIGER parsing, the native XAG text format, and qc output

  The native format is line-oriented and diff-friendly:

    xag <inputs> <gates> <outputs>
    g<i> = AND|XOR <lit> <lit>
    out <lit>

  where <lit> is [~]x<j> for inputs, [~]g<i> for gates (steps are
  numbered globally, so the first gate of a 2-input network is g3) and
  [~]0 for the constant.  Writing always emits the swept network, so
  parse(write(net)) is structurally identical to sweep_dead(net).

  Only combinational ASCII AIGER (aag, L = 0) is accepted; symbol table
  entries become input/output names.
*/

#pragma once

#include <charconv>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <fmt/format.h>

#include "quantum.hpp"
#include "transforms.hpp"
#include "xag.hpp"

namespace xagdepth
{

class parse_error : public std::runtime_error
{
public:
  parse_error( uint64_t line, std::string const& what )
      : std::runtime_error( fmt::format( "parse error at line {}: {}", line, what ) )
  {
  }
};

namespace detail
{

inline std::vector<std::string_view> split_tokens( std::string_view line )
{
  std::vector<std::string_view> tokens;
  uint64_t pos = 0u;
  while ( pos < line.size() )
  {
    while ( pos < line.size() && ( line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r' ) )
    {
      ++pos;
    }
    const uint64_t start = pos;
    while ( pos < line.size() && line[pos] != ' ' && line[pos] != '\t' && line[pos] != '\r' )
    {
      ++pos;
    }
    if ( pos > start )
    {
      tokens.push_back( line.substr( start, pos - start ) );
    }
  }
  return tokens;
}

inline bool parse_number( std::string_view token, uint64_t& value )
{
  const auto* end = token.data() + token.size();
  const auto res = std::from_chars( token.data(), end, value );
  return res.ec == std::errc{} && res.ptr == end;
}

} // namespace detail

/*! \brief Parses combinational ASCII AIGER into an XAG. */
inline xag parse_aiger_ascii( std::string const& text )
{
  std::istringstream in( text );
  std::string line;
  uint64_t line_no = 0u;

  const auto next_line = [&]() -> std::vector<std::string_view> {
    while ( std::getline( in, line ) )
    {
      ++line_no;
      auto tokens = detail::split_tokens( line );
      if ( !tokens.empty() )
      {
        return tokens;
      }
    }
    throw parse_error( line_no, "unexpected end of file" );
  };

  const auto header = next_line();
  uint64_t m, i, l, o, a;
  if ( header.size() != 6u || header[0] != "aag" || !detail::parse_number( header[1], m ) ||
       !detail::parse_number( header[2], i ) || !detail::parse_number( header[3], l ) ||
       !detail::parse_number( header[4], o ) || !detail::parse_number( header[5], a ) )
  {
    throw parse_error( line_no, "malformed aag header, expected 'aag M I L O A'" );
  }
  if ( l != 0u )
  {
    throw parse_error( line_no, "latches are not supported (combinational networks only)" );
  }
  if ( m < i + a )
  {
    throw parse_error( line_no, "header maximum variable index is too small" );
  }

  xag net( static_cast<uint32_t>( i ) );
  /* signal per AIGER variable; index 0 is the constant */
  std::vector<signal> var_signal( m + 1u, signal::constant0() );
  std::vector<bool> defined( m + 1u, false );
  defined[0] = true;

  const auto lit_signal = [&]( uint64_t lit, uint64_t at_line ) {
    const uint64_t var = lit >> 1u;
    if ( var > m || !defined[var] )
    {
      throw parse_error( at_line, fmt::format( "literal {} is out of range or used before definition", lit ) );
    }
    return var_signal[var] ^ static_cast<bool>( lit & 1u );
  };

  std::vector<uint64_t> input_vars;
  for ( uint64_t k = 0u; k < i; ++k )
  {
    const auto tokens = next_line();
    uint64_t lit;
    if ( tokens.size() != 1u || !detail::parse_number( tokens[0], lit ) )
    {
      throw parse_error( line_no, "malformed input line" );
    }
    if ( lit < 2u || ( lit & 1u ) || ( lit >> 1u ) > m || defined[lit >> 1u] )
    {
      throw parse_error( line_no, fmt::format( "invalid input literal {}", lit ) );
    }
    var_signal[lit >> 1u] = net.input( static_cast<uint32_t>( k ) + 1u );
    defined[lit >> 1u] = true;
    input_vars.push_back( lit >> 1u );
  }

  struct pending_output
  {
    uint64_t lit;
    uint64_t line;
  };
  std::vector<pending_output> outs;
  for ( uint64_t k = 0u; k < o; ++k )
  {
    const auto tokens = next_line();
    uint64_t lit;
    if ( tokens.size() != 1u || !detail::parse_number( tokens[0], lit ) )
    {
      throw parse_error( line_no, "malformed output line" );
    }
    outs.push_back( { lit, line_no } );
  }

  for ( uint64_t k = 0u; k < a; ++k )
  {
    const auto tokens = next_line();
    uint64_t lhs, rhs0, rhs1;
    if ( tokens.size() != 3u || !detail::parse_number( tokens[0], lhs ) ||
         !detail::parse_number( tokens[1], rhs0 ) || !detail::parse_number( tokens[2], rhs1 ) )
    {
      throw parse_error( line_no, "malformed and line, expected 'lhs rhs0 rhs1'" );
    }
    if ( ( lhs & 1u ) || ( lhs >> 1u ) > m || defined[lhs >> 1u] )
    {
      throw parse_error( line_no, fmt::format( "invalid and output literal {}", lhs ) );
    }
    const auto f0 = lit_signal( rhs0, line_no );
    const auto f1 = lit_signal( rhs1, line_no );
    var_signal[lhs >> 1u] = net.add_gate( gate_op::AND, f0, f1 );
    defined[lhs >> 1u] = true;
  }

  for ( auto const& po : outs )
  {
    net.add_output( lit_signal( po.lit, po.line ) );
  }

  /* optional symbol table and comments */
  while ( std::getline( in, line ) )
  {
    ++line_no;
    auto tokens = detail::split_tokens( line );
    if ( tokens.empty() )
    {
      continue;
    }
    if ( tokens[0] == "c" )
    {
      break;
    }
    if ( tokens.size() >= 2u && ( tokens[0].front() == 'i' || tokens[0].front() == 'o' ) )
    {
      uint64_t pos;
      if ( detail::parse_number( tokens[0].substr( 1u ), pos ) )
      {
        std::string name( tokens[1] );
        for ( uint64_t t = 2u; t < tokens.size(); ++t )
        {
          name += ' ';
          name += std::string( tokens[t] );
        }
        if ( tokens[0].front() == 'i' && pos < i )
        {
          net.set_input_name( static_cast<uint32_t>( pos ) + 1u, name );
        }
        else if ( tokens[0].front() == 'o' && pos < o )
        {
          net.set_output_name( static_cast<uint32_t>( pos ), name );
        }
      }
    }
  }

  return net;
}

namespace detail
{

inline std::string native_literal( xag const& net, signal s )
{
  std::string lit = s.complement() ? "~" : "";
  if ( s.step() == 0u )
  {
    lit += '0';
  }
  else if ( net.is_input( s.step() ) )
  {
    lit += fmt::format( "x{}", s.step() );
  }
  else
  {
    lit += fmt::format( "g{}", s.step() );
  }
  return lit;
}

} // namespace detail

/*! \brief Renders the swept network in the native format. */
inline std::string write_native( xag const& input_net )
{
  const xag net = sweep_dead( input_net );
  std::string out = fmt::format( "xag {} {} {}\n", net.num_inputs(), net.num_gates(),
                                 net.num_outputs() );
  net.foreach_gate( [&]( uint32_t step, xag::gate const& g ) {
    out += fmt::format( "g{} = {} {} {}\n", step, g.op == gate_op::AND ? "AND" : "XOR",
                        detail::native_literal( net, g.fanin0 ),
                        detail::native_literal( net, g.fanin1 ) );
  } );
  for ( uint32_t i = 0u; i < net.num_outputs(); ++i )
  {
    out += fmt::format( "out {}\n", detail::native_literal( net, net.output_signal( i ) ) );
  }
  return out;
}

inline xag parse_native( std::string const& text )
{
  std::istringstream in( text );
  std::string line;
  uint64_t line_no = 0u;

  const auto next_line = [&]() -> std::vector<std::string_view> {
    while ( std::getline( in, line ) )
    {
      ++line_no;
      auto tokens = detail::split_tokens( line );
      if ( !tokens.empty() && tokens[0].front() != '#' )
      {
        return tokens;
      }
    }
    throw parse_error( line_no, "unexpected end of file" );
  };

  const auto header = next_line();
  uint64_t n, r, o;
  if ( header.size() != 4u || header[0] != "xag" || !detail::parse_number( header[1], n ) ||
       !detail::parse_number( header[2], r ) || !detail::parse_number( header[3], o ) )
  {
    throw parse_error( line_no, "malformed header, expected 'xag <n> <r> <outputs>'" );
  }

  xag net( static_cast<uint32_t>( n ) );
  std::vector<signal> step_signal( n + r + 1u, signal::constant0() );
  for ( uint64_t k = 1u; k <= n; ++k )
  {
    step_signal[k] = net.input( static_cast<uint32_t>( k ) );
  }
  uint64_t defined = n;

  const auto parse_literal = [&]( std::string_view token ) {
    bool complement = false;
    if ( !token.empty() && token.front() == '~' )
    {
      complement = true;
      token.remove_prefix( 1u );
    }
    if ( token == "0" )
    {
      return signal::constant0() ^ complement;
    }
    if ( token.size() < 2u || ( token.front() != 'x' && token.front() != 'g' ) )
    {
      throw parse_error( line_no, fmt::format( "malformed literal '{}'", token ) );
    }
    uint64_t index;
    if ( !detail::parse_number( token.substr( 1u ), index ) )
    {
      throw parse_error( line_no, fmt::format( "malformed literal '{}'", token ) );
    }
    if ( token.front() == 'x' && ( index < 1u || index > n ) )
    {
      throw parse_error( line_no, fmt::format( "input literal x{} out of range", index ) );
    }
    if ( token.front() == 'g' && ( index <= n || index > defined ) )
    {
      throw parse_error( line_no, fmt::format( "gate literal g{} is undefined here", index ) );
    }
    return step_signal[index] ^ complement;
  };

  for ( uint64_t k = 0u; k < r; ++k )
  {
    const auto tokens = next_line();
    const uint64_t expected = n + k + 1u;
    if ( tokens.size() != 5u || tokens[1] != "=" ||
         tokens[0] != fmt::format( "g{}", expected ) )
    {
      throw parse_error( line_no, fmt::format( "expected definition of g{}", expected ) );
    }
    gate_op op;
    if ( tokens[2] == "AND" )
    {
      op = gate_op::AND;
    }
    else if ( tokens[2] == "XOR" )
    {
      op = gate_op::XOR;
    }
    else
    {
      throw parse_error( line_no, "gate operator must be AND or XOR" );
    }
    const auto f0 = parse_literal( tokens[3] );
    const auto f1 = parse_literal( tokens[4] );
    step_signal[expected] = net.add_gate( op, f0, f1 );
    defined = expected;
  }

  for ( uint64_t k = 0u; k < o; ++k )
  {
    const auto tokens = next_line();
    if ( tokens.size() != 2u || tokens[0] != "out" )
    {
      throw parse_error( line_no, "expected output line 'out <lit>'" );
    }
    net.add_output( parse_literal( tokens[1] ) );
  }

  return net;
}

/*! \brief Deterministic rendering of a quantum gate list.
 *
 * Layer separators precede each block of compute-AND gates; the
 * uncompute tail stays unseparated since it adds no T cost.
 */
inline std::string write_qc( quantum_circuit const& qc )
{
  std::string out = fmt::format( "qc {}\n", qc.qubit_count );
  uint32_t current_layer = 0u;
  for ( auto const& g : qc.gates )
  {
    switch ( g.op )
    {
    case qgate::kind::X:
      out += fmt::format( "x q{}\n", g.target );
      break;
    case qgate::kind::CNOT:
      out += fmt::format( "cnot q{} q{}\n", g.c0, g.target );
      break;
    case qgate::kind::AND:
      if ( g.layer != current_layer )
      {
        current_layer = g.layer;
        out += fmt::format( "-- layer {}\n", g.layer );
      }
      out += fmt::format( "and q{} q{} q{}\n", g.c0, g.c1, g.target );
      break;
    case qgate::kind::UNAND:
      out += fmt::format( "unand q{} q{} q{}\n", g.c0, g.c1, g.target );
      break;
    }
  }
  return out;
}

} // namespace xagdepth
