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
  \file analysis.hpp
  \brief Level/depth analytics and simulation for XAGs

  Logic levels count AND gates only: inputs are at level 0, an XOR gate
  sits at the maximum of its fanin levels, an AND gate one above it.  The
  reverse level of a step is the latest time it can be computed without
  increasing the network depth; steps without fanout anchor at the depth.
*/

#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "truth_table.hpp"
#include "xag.hpp"

namespace xagdepth
{

struct level_info
{
  std::vector<uint32_t> level;  /* indexed by step, entry 0 is the constant */
  std::vector<uint32_t> rlevel;
  uint32_t depth{ 0u };
};

inline level_info compute_levels( xag const& net )
{
  level_info info;
  const uint32_t size = net.num_steps() + 1u;
  info.level.assign( size, 0u );

  net.foreach_gate( [&]( uint32_t step, xag::gate const& g ) {
    const uint32_t l = std::max( info.level[g.fanin0.step()], info.level[g.fanin1.step()] );
    info.level[step] = g.op == gate_op::AND ? l + 1u : l;
  } );
  info.depth = size > 1u ? *std::max_element( info.level.begin(), info.level.end() ) : 0u;

  info.rlevel.assign( size, info.depth );
  for ( uint32_t step = net.num_steps(); step > net.num_inputs(); --step )
  {
    auto const& g = net.gate_at( step );
    const uint32_t bound = info.rlevel[step] - ( g.op == gate_op::AND ? 1u : 0u );
    for ( auto f : { g.fanin0, g.fanin1 } )
    {
      info.rlevel[f.step()] = std::min( info.rlevel[f.step()], bound );
    }
  }
  return info;
}

/*! \brief Marks steps in the transitive fanin of some output. */
inline std::vector<bool> live_mask( xag const& net )
{
  std::vector<bool> live( net.num_steps() + 1u, false );
  std::vector<uint32_t> stack;
  for ( auto const& out : net.outputs() )
  {
    stack.push_back( out.step() );
  }
  while ( !stack.empty() )
  {
    const uint32_t step = stack.back();
    stack.pop_back();
    if ( live[step] )
    {
      continue;
    }
    live[step] = true;
    if ( net.is_gate( step ) )
    {
      auto const& g = net.gate_at( step );
      stack.push_back( g.fanin0.step() );
      stack.push_back( g.fanin1.step() );
    }
  }
  return live;
}

/*! \brief AND-depth of the output cones. */
inline uint32_t mult_depth( xag const& net )
{
  const auto info = compute_levels( net );
  const auto live = live_mask( net );
  uint32_t depth = 0u;
  net.foreach_gate( [&]( uint32_t step, xag::gate const& ) {
    if ( live[step] )
    {
      depth = std::max( depth, info.level[step] );
    }
  } );
  return depth;
}

/*! \brief Number of AND gates in the output cones. */
inline uint32_t mult_complexity( xag const& net )
{
  const auto live = live_mask( net );
  uint32_t count = 0u;
  net.foreach_gate( [&]( uint32_t step, xag::gate const& g ) {
    if ( live[step] && g.op == gate_op::AND )
    {
      ++count;
    }
  } );
  return count;
}

/*! \brief Depth counting every gate, XOR included. */
inline uint32_t general_depth( xag const& net )
{
  std::vector<uint32_t> level( net.num_steps() + 1u, 0u );
  const auto live = live_mask( net );
  uint32_t depth = 0u;
  net.foreach_gate( [&]( uint32_t step, xag::gate const& g ) {
    level[step] = std::max( level[g.fanin0.step()], level[g.fanin1.step()] ) + 1u;
    if ( live[step] )
    {
      depth = std::max( depth, level[step] );
    }
  } );
  return depth;
}

/*! \brief Word-parallel simulation: 64 assignments per call. */
inline std::vector<uint64_t> simulate_words( xag const& net, std::vector<uint64_t> const& inputs )
{
  if ( inputs.size() != net.num_inputs() )
  {
    throw std::invalid_argument( "simulate: assignment length differs from input count" );
  }
  std::vector<uint64_t> value( net.num_steps() + 1u, 0u );
  for ( uint32_t i = 1u; i <= net.num_inputs(); ++i )
  {
    value[i] = inputs[i - 1u];
  }
  net.foreach_gate( [&]( uint32_t step, xag::gate const& g ) {
    const uint64_t a = value[g.fanin0.step()] ^ ( g.fanin0.complement() ? ~0ull : 0ull );
    const uint64_t b = value[g.fanin1.step()] ^ ( g.fanin1.complement() ? ~0ull : 0ull );
    value[step] = g.op == gate_op::AND ? ( a & b ) : ( a ^ b );
  } );
  std::vector<uint64_t> out;
  out.reserve( net.num_outputs() );
  for ( auto const& o : net.outputs() )
  {
    out.push_back( value[o.step()] ^ ( o.complement() ? ~0ull : 0ull ) );
  }
  return out;
}

inline std::vector<bool> simulate( xag const& net, std::vector<bool> const& assignment )
{
  if ( assignment.size() != net.num_inputs() )
  {
    throw std::invalid_argument( "simulate: assignment length differs from input count" );
  }
  std::vector<uint64_t> words( assignment.size() );
  for ( uint64_t i = 0u; i < assignment.size(); ++i )
  {
    words[i] = assignment[i] ? 1ull : 0ull;
  }
  const auto out_words = simulate_words( net, words );
  std::vector<bool> out( out_words.size() );
  for ( uint64_t i = 0u; i < out_words.size(); ++i )
  {
    out[i] = out_words[i] & 1u;
  }
  return out;
}

/*! \brief Truth tables of all outputs; exhaustive over 2^n assignments. */
inline std::vector<truth_table> simulate_full( xag const& net )
{
  const uint32_t n = net.num_inputs();
  assert( n <= truth_table::max_vars );
  const uint64_t blocks = n <= 6u ? 1u : ( 1ull << ( n - 6u ) );
  std::vector<truth_table> tts( net.num_outputs(), truth_table( n ) );
  std::vector<uint64_t> inputs( n );
  for ( uint64_t b = 0u; b < blocks; ++b )
  {
    for ( uint32_t v = 0u; v < n; ++v )
    {
      if ( v < 6u )
      {
        inputs[v] = truth_table::nth_var( std::min<uint32_t>( n, 6u ), v ).words()[0];
      }
      else
      {
        inputs[v] = ( b >> ( v - 6u ) ) & 1u ? ~0ull : 0ull;
      }
    }
    const auto out = simulate_words( net, inputs );
    for ( uint64_t i = 0u; i < out.size(); ++i )
    {
      if ( n <= 6u )
      {
        tts[i].words()[0] = out[i] & ( n == 6u ? ~0ull : ( 1ull << ( 1u << n ) ) - 1u );
      }
      else
      {
        tts[i].words()[b] = out[i];
      }
    }
  }
  return tts;
}

/*! \brief Exhaustive equivalence check; requires matching arities. */
inline bool equivalent_exhaustive( xag const& a, xag const& b )
{
  if ( a.num_inputs() != b.num_inputs() || a.num_outputs() != b.num_outputs() )
  {
    throw std::invalid_argument( "equivalence: input/output arity mismatch" );
  }
  return simulate_full( a ) == simulate_full( b );
}

/*! \brief Seeded random-vector equivalence check (64 assignments per word).
 *
 * Returns true when no mismatch is found; otherwise fills *counterexample
 * with one failing assignment.
 */
inline bool equivalent_random( xag const& a, xag const& b, uint64_t num_vectors, uint64_t seed,
                               std::vector<bool>* counterexample = nullptr )
{
  if ( a.num_inputs() != b.num_inputs() || a.num_outputs() != b.num_outputs() )
  {
    throw std::invalid_argument( "equivalence: input/output arity mismatch" );
  }
  std::mt19937_64 rng( seed );
  const uint32_t n = a.num_inputs();
  std::vector<uint64_t> inputs( n );
  for ( uint64_t done = 0u; done < num_vectors; done += 64u )
  {
    for ( auto& w : inputs )
    {
      w = rng();
    }
    const auto oa = simulate_words( a, inputs );
    const auto ob = simulate_words( b, inputs );
    for ( uint64_t i = 0u; i < oa.size(); ++i )
    {
      if ( oa[i] != ob[i] )
      {
        if ( counterexample != nullptr )
        {
          const auto bit = static_cast<uint32_t>( __builtin_ctzll( oa[i] ^ ob[i] ) );
          counterexample->resize( n );
          for ( uint32_t v = 0u; v < n; ++v )
          {
            ( *counterexample )[v] = ( inputs[v] >> bit ) & 1u;
          }
        }
        return false;
      }
    }
  }
  return true;
}

} // namespace xagdepth
