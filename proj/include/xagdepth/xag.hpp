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
  \file xag.hpp
  \brief XOR-AND graph data structure

  Steps are numbered as in the underlying algebraic model: step 0 is the
  constant-0 node, steps 1..n are primary inputs, and steps n+1..n+r are
  gates.  Both fanins of a gate strictly precede it.  Inversions are
  complement flags on signals (fanin or output edges); constant 1 is the
  complement of constant 0.

  Construction folds constants, removes duplicate gates through structural
  hashing, and lifts complement flags out of XOR fanins (an inverted XOR
  operand only flips the parity of the result).  AND fanins keep their
  complement flags until propagate_inverters() is applied.
*/

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace xagdepth
{

enum class gate_op : uint8_t
{
  XOR = 0,
  AND = 1
};

/*! \brief Edge reference: step index plus complement flag. */
class signal
{
public:
  constexpr signal() = default;

  constexpr signal( uint32_t step, bool complement )
      : lit_( ( step << 1u ) | static_cast<uint32_t>( complement ) )
  {
  }

  static constexpr signal constant0() { return signal( 0u, false ); }
  static constexpr signal constant1() { return signal( 0u, true ); }
  static constexpr signal from_literal( uint32_t lit ) { return signal( lit >> 1u, lit & 1u ); }

  constexpr uint32_t step() const { return lit_ >> 1u; }
  constexpr bool complement() const { return lit_ & 1u; }
  constexpr uint32_t literal() const { return lit_; }
  constexpr bool is_constant() const { return step() == 0u; }

  constexpr signal positive() const { return signal( step(), false ); }
  constexpr signal operator~() const { return signal( step(), !complement() ); }
  constexpr signal operator^( bool flip ) const { return signal( step(), complement() ^ flip ); }

  constexpr bool operator==( signal const& other ) const { return lit_ == other.lit_; }
  constexpr bool operator!=( signal const& other ) const { return lit_ != other.lit_; }
  constexpr bool operator<( signal const& other ) const { return lit_ < other.lit_; }

private:
  uint32_t lit_{ 0u };
};

class xag
{
public:
  struct gate
  {
    gate_op op;
    signal fanin0;
    signal fanin1;
  };

  explicit xag( uint32_t num_inputs = 0u ) : num_inputs_( num_inputs )
  {
    input_names_.resize( num_inputs );
  }

  uint32_t num_inputs() const { return num_inputs_; }
  uint32_t num_gates() const { return static_cast<uint32_t>( gates_.size() ); }
  uint32_t num_outputs() const { return static_cast<uint32_t>( outputs_.size() ); }

  /*! \brief Number of steps, not counting the constant node: n + r. */
  uint32_t num_steps() const { return num_inputs_ + num_gates(); }

  bool is_constant( uint32_t step ) const { return step == 0u; }
  bool is_input( uint32_t step ) const { return step >= 1u && step <= num_inputs_; }
  bool is_gate( uint32_t step ) const { return step > num_inputs_ && step <= num_steps(); }

  /*! \brief Signal of primary input i, 1-based as in x1..xn. */
  signal input( uint32_t i ) const
  {
    if ( i < 1u || i > num_inputs_ )
    {
      throw std::out_of_range( "xag: input index out of range" );
    }
    return signal( i, false );
  }

  gate const& gate_at( uint32_t step ) const
  {
    if ( !is_gate( step ) )
    {
      throw std::out_of_range( "xag: not a gate step" );
    }
    return gates_[step - num_inputs_ - 1u];
  }

  /*! \brief Adds a gate; returns an existing step on structural match.
   *
   * XOR fanin complements are lifted into the returned signal; trivial
   * gates (shared fanin steps, constant fanins) fold to existing signals.
   */
  signal add_gate( gate_op op, signal a, signal b )
  {
    if ( a.step() > num_steps() || b.step() > num_steps() )
    {
      throw std::invalid_argument( "xag: gate fanin references a nonexistent step" );
    }
    if ( a.literal() > b.literal() )
    {
      std::swap( a, b );
    }
    if ( op == gate_op::XOR )
    {
      const bool parity = a.complement() ^ b.complement();
      a = a.positive();
      b = b.positive();
      if ( a.step() == b.step() )
      {
        return signal::constant0() ^ parity;
      }
      if ( a.is_constant() )
      {
        return b ^ parity;
      }
      return hash_gate( op, a, b ) ^ parity;
    }
    /* AND */
    if ( a.step() == b.step() )
    {
      return a == b ? a : signal::constant0();
    }
    if ( a.is_constant() )
    {
      return a.complement() ? b : signal::constant0();
    }
    return hash_gate( op, a, b );
  }

  uint32_t add_output( signal s, std::string name = {} )
  {
    if ( s.step() > num_steps() )
    {
      throw std::invalid_argument( "xag: output references a nonexistent step" );
    }
    outputs_.push_back( s );
    output_names_.push_back( std::move( name ) );
    return num_outputs() - 1u;
  }

  std::vector<signal> const& outputs() const { return outputs_; }
  signal output_signal( uint32_t i ) const { return outputs_.at( i ); }
  void replace_output( uint32_t i, signal s ) { outputs_.at( i ) = s; }

  std::string const& output_name( uint32_t i ) const { return output_names_.at( i ); }
  void set_output_name( uint32_t i, std::string name ) { output_names_.at( i ) = std::move( name ); }
  std::string const& input_name( uint32_t i ) const { return input_names_.at( i - 1u ); }
  void set_input_name( uint32_t i, std::string name ) { input_names_.at( i - 1u ) = std::move( name ); }

  template<typename Fn>
  void foreach_gate( Fn&& fn ) const
  {
    for ( uint32_t step = num_inputs_ + 1u; step <= num_steps(); ++step )
    {
      fn( step, gates_[step - num_inputs_ - 1u] );
    }
  }

private:
  signal hash_gate( gate_op op, signal a, signal b )
  {
    const uint64_t key = ( static_cast<uint64_t>( op ) << 62u ) |
                         ( static_cast<uint64_t>( a.literal() ) << 31u ) |
                         static_cast<uint64_t>( b.literal() );
    if ( auto it = strash_.find( key ); it != strash_.end() )
    {
      return signal( it->second, false );
    }
    gates_.push_back( { op, a, b } );
    const uint32_t step = num_steps();
    strash_.emplace( key, step );
    return signal( step, false );
  }

  uint32_t num_inputs_;
  std::vector<gate> gates_;
  std::vector<signal> outputs_;
  std::vector<std::string> output_names_;
  std::vector<std::string> input_names_;
  std::unordered_map<uint64_t, uint32_t> strash_;
};

/*! \brief Balanced 2-input decomposition of a multi-input XOR. */
inline signal add_xor_chain( xag& net, std::vector<signal> operands )
{
  if ( operands.empty() )
  {
    return signal::constant0();
  }
  while ( operands.size() > 1u )
  {
    std::vector<signal> next;
    next.reserve( ( operands.size() + 1u ) / 2u );
    for ( uint64_t i = 0u; i + 1u < operands.size(); i += 2u )
    {
      next.push_back( net.add_gate( gate_op::XOR, operands[i], operands[i + 1u] ) );
    }
    if ( operands.size() & 1u )
    {
      next.push_back( operands.back() );
    }
    operands = std::move( next );
  }
  return operands.front();
}

} // namespace xagdepth
