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
  \file transforms.hpp
  \brief Structural normalization passes

  propagate_inverters() pushes all inner inversions towards the outputs
  using only XOR corrections, so that afterwards complement flags appear
  on output edges only.  The rewrites for a complemented AND fanin are

    ~a & b  =  (a & b) ^ b
    a & ~b  =  (a & b) ^ a
    ~a & ~b = ~((a & b) ^ a ^ b)

  which neither add AND gates nor raise any AND level.
*/

#pragma once

#include <vector>

#include "analysis.hpp"
#include "xag.hpp"

namespace xagdepth
{

/*! \brief True if no AND fanin carries a complement flag.
 *
 * XOR fanins are complement-free by construction, so a normalized
 * network has inversions on output edges only.
 */
inline bool is_normalized( xag const& net )
{
  bool ok = true;
  net.foreach_gate( [&]( uint32_t, xag::gate const& g ) {
    if ( g.op == gate_op::AND && ( g.fanin0.complement() || g.fanin1.complement() ) )
    {
      ok = false;
    }
  } );
  return ok;
}

inline xag propagate_inverters( xag const& net )
{
  xag result( net.num_inputs() );
  for ( uint32_t i = 1u; i <= net.num_inputs(); ++i )
  {
    result.set_input_name( i, net.input_name( i ) );
  }

  std::vector<signal> map( net.num_steps() + 1u );
  map[0] = signal::constant0();
  for ( uint32_t i = 1u; i <= net.num_inputs(); ++i )
  {
    map[i] = result.input( i );
  }

  net.foreach_gate( [&]( uint32_t step, xag::gate const& g ) {
    const signal a = map[g.fanin0.step()] ^ g.fanin0.complement();
    const signal b = map[g.fanin1.step()] ^ g.fanin1.complement();
    if ( g.op == gate_op::XOR )
    {
      map[step] = result.add_gate( gate_op::XOR, a, b );
      return;
    }
    const bool ca = a.complement();
    const bool cb = b.complement();
    const signal conj = result.add_gate( gate_op::AND, a.positive(), b.positive() );
    if ( !ca && !cb )
    {
      map[step] = conj;
    }
    else if ( ca && !cb )
    {
      map[step] = result.add_gate( gate_op::XOR, conj, b.positive() );
    }
    else if ( !ca && cb )
    {
      map[step] = result.add_gate( gate_op::XOR, conj, a.positive() );
    }
    else
    {
      const signal t = result.add_gate( gate_op::XOR, conj, a.positive() );
      map[step] = ~result.add_gate( gate_op::XOR, t, b.positive() );
    }
  } );

  for ( uint32_t i = 0u; i < net.num_outputs(); ++i )
  {
    const auto o = net.output_signal( i );
    result.add_output( map[o.step()] ^ o.complement(), net.output_name( i ) );
  }
  return result;
}

/*! \brief Removes steps outside every output cone; order is preserved. */
inline xag sweep_dead( xag const& net )
{
  const auto live = live_mask( net );
  xag result( net.num_inputs() );
  for ( uint32_t i = 1u; i <= net.num_inputs(); ++i )
  {
    result.set_input_name( i, net.input_name( i ) );
  }

  std::vector<signal> map( net.num_steps() + 1u );
  map[0] = signal::constant0();
  for ( uint32_t i = 1u; i <= net.num_inputs(); ++i )
  {
    map[i] = result.input( i );
  }
  net.foreach_gate( [&]( uint32_t step, xag::gate const& g ) {
    if ( !live[step] )
    {
      return;
    }
    map[step] = result.add_gate( g.op, map[g.fanin0.step()] ^ g.fanin0.complement(),
                                 map[g.fanin1.step()] ^ g.fanin1.complement() );
  } );
  for ( uint32_t i = 0u; i < net.num_outputs(); ++i )
  {
    const auto o = net.output_signal( i );
    result.add_output( map[o.step()] ^ o.complement(), net.output_name( i ) );
  }
  return result;
}

/*! \brief Step-for-step identity of two networks (names ignored). */
inline bool structurally_equal( xag const& a, xag const& b )
{
  if ( a.num_inputs() != b.num_inputs() || a.num_gates() != b.num_gates() ||
       a.num_outputs() != b.num_outputs() )
  {
    return false;
  }
  bool equal = true;
  a.foreach_gate( [&]( uint32_t step, xag::gate const& ga ) {
    auto const& gb = b.gate_at( step );
    if ( ga.op != gb.op || ga.fanin0 != gb.fanin0 || ga.fanin1 != gb.fanin1 )
    {
      equal = false;
    }
  } );
  for ( uint32_t i = 0u; i < a.num_outputs(); ++i )
  {
    if ( a.output_signal( i ) != b.output_signal( i ) )
    {
      equal = false;
    }
  }
  return equal;
}

} // namespace xagdepth
