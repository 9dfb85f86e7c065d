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
  \file balancing.hpp
  \brief Cut-based multiplicative-depth balancing

  A dynamic-programming sweep over all steps keeps, per step, the best
  known replacement signal over the new network.  For every non-trivial
  cut the cut function is resynthesized from an ESOP (optionally an
  ESPP) over the best leaf signals: each cube becomes a level-balanced
  AND tree, cube roots combine through XOR trees that add no AND depth,
  and negative literals ride on complement flags.  A structural rebuild
  of the original gate always competes as fallback, so depth never
  regresses.  Candidates tie-break on fewer cone AND gates, then fewer
  cone gates, then first-seen.
*/

#pragma once

#include <cassert>
#include <cstdint>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

#include "analysis.hpp"
#include "cut_enumeration.hpp"
#include "esop.hpp"
#include "espp.hpp"
#include "transforms.hpp"
#include "xag.hpp"

namespace xagdepth
{

enum class balancing_strategy
{
  esop,
  espp
};

struct balancing_params
{
  balancing_strategy strategy{ balancing_strategy::esop };

  /*! \brief Cut enumeration bounds. */
  uint32_t cut_size{ 6u };
  uint32_t cut_limit{ 25u };

  /*! \brief Rewrite passes inside the ESOP minimizer. */
  uint32_t esop_effort{ 4u };
  esop_cost cost{ esop_cost::cubes };

  /*! \brief Bound for optimize_to_fixpoint. */
  uint32_t max_rounds{ 64u };
};

struct leaf_ref
{
  signal s;
  uint32_t level;
};

/*! \brief A network under construction with per-step AND levels. */
class depth_builder
{
public:
  explicit depth_builder( uint32_t num_inputs ) : net( num_inputs )
  {
    level_.assign( num_inputs + 1u, 0u );
  }

  signal add( gate_op op, signal a, signal b )
  {
    const auto s = net.add_gate( op, a, b );
    if ( s.step() >= level_.size() )
    {
      auto const& g = net.gate_at( s.step() );
      const uint32_t l = std::max( level_[g.fanin0.step()], level_[g.fanin1.step()] );
      level_.push_back( g.op == gate_op::AND ? l + 1u : l );
    }
    return s;
  }

  uint32_t level_of( signal s ) const { return level_[s.step()]; }

  xag net;

private:
  std::vector<uint32_t> level_;
};

namespace detail
{

/* min-queue ordered by level, ties by insertion order */
struct queue_item
{
  signal s;
  uint32_t level;
  uint64_t seq;
};

struct queue_order
{
  bool operator()( queue_item const& a, queue_item const& b ) const
  {
    return a.level != b.level ? a.level > b.level : a.seq > b.seq;
  }
};

using level_queue = std::priority_queue<queue_item, std::vector<queue_item>, queue_order>;

inline level_queue make_queue( std::vector<leaf_ref> const& items )
{
  level_queue q;
  uint64_t seq = 0u;
  for ( auto const& it : items )
  {
    q.push( { it.s, it.level, seq++ } );
  }
  return q;
}

} // namespace detail

/*! \brief Level-balanced AND tree over the given leaves.
 *
 * Repeatedly joins the two lowest-level queue entries; the resulting
 * level is minimal over all binary AND-tree shapes.
 */
inline signal balance_cube( depth_builder& builder, std::vector<leaf_ref> const& items )
{
  if ( items.empty() )
  {
    throw std::invalid_argument( "balance_cube: constant term has no literals" );
  }
  auto q = detail::make_queue( items );
  uint64_t seq = items.size();
  while ( q.size() > 1u )
  {
    const auto u = q.top();
    q.pop();
    const auto v = q.top();
    q.pop();
    const auto s = builder.add( gate_op::AND, u.s, v.s );
    q.push( { s, builder.level_of( s ), seq++ } );
  }
  return q.top().s;
}

namespace detail
{

/* XOR combination; does not add AND depth, balanced for general depth */
inline signal combine_xor( depth_builder& builder, std::vector<leaf_ref> items, bool flip )
{
  if ( items.empty() )
  {
    return signal::constant0() ^ flip;
  }
  auto q = make_queue( items );
  uint64_t seq = items.size();
  while ( q.size() > 1u )
  {
    const auto u = q.top();
    q.pop();
    const auto v = q.top();
    q.pop();
    const auto s = builder.add( gate_op::XOR, u.s, v.s );
    q.push( { s, builder.level_of( s ), seq++ } );
  }
  return q.top().s ^ flip;
}

} // namespace detail

/*! \brief Realizes an ESOP over leaf signals; negative literals are free. */
inline signal balance_esop( depth_builder& builder, esop const& form,
                            std::vector<leaf_ref> const& leaves )
{
  assert( leaves.size() == form.num_vars );
  bool flip = false;
  std::vector<leaf_ref> roots;
  for ( auto const& c : form.cubes )
  {
    std::vector<leaf_ref> items;
    for ( uint32_t v = 0u; v < form.num_vars; ++v )
    {
      const auto p = c.polarity( v );
      if ( p != 2u )
      {
        items.push_back( { leaves[v].s ^ ( p == 0u ), leaves[v].level } );
      }
    }
    if ( items.empty() )
    {
      flip = !flip; /* all-absent cube contributes constant 1 */
      continue;
    }
    const auto root = balance_cube( builder, items );
    roots.push_back( { root, builder.level_of( root ) } );
  }
  return detail::combine_xor( builder, std::move( roots ), flip );
}

/*! \brief Realizes an ESPP: parity literals as XOR trees, then AND trees. */
inline signal balance_espp( depth_builder& builder, espp const& form,
                            std::vector<leaf_ref> const& leaves )
{
  assert( leaves.size() == form.num_vars );
  bool flip = false;
  std::vector<leaf_ref> roots;
  for ( auto const& term : form.terms )
  {
    std::vector<leaf_ref> items;
    for ( auto const& [index, pol] : term.literals )
    {
      std::vector<leaf_ref> parity_leaves;
      for ( uint32_t v = 0u; v < form.num_vars; ++v )
      {
        if ( ( index >> v ) & 1u )
        {
          parity_leaves.push_back( leaves[v] );
        }
      }
      const auto parity = detail::combine_xor( builder, std::move( parity_leaves ), pol == 0u );
      items.push_back( { parity, builder.level_of( parity ) } );
    }
    if ( items.empty() )
    {
      flip = !flip;
      continue;
    }
    const auto root = balance_cube( builder, items );
    roots.push_back( { root, builder.level_of( root ) } );
  }
  return detail::combine_xor( builder, std::move( roots ), flip );
}

namespace detail
{

/* AND/total gate counts of the transitive fanin of s */
inline std::pair<uint32_t, uint32_t> cone_counts( xag const& net, signal s )
{
  std::vector<bool> visited( net.num_steps() + 1u, false );
  std::vector<uint32_t> stack{ s.step() };
  uint32_t ands = 0u, gates = 0u;
  while ( !stack.empty() )
  {
    const auto step = stack.back();
    stack.pop_back();
    if ( visited[step] || !net.is_gate( step ) )
    {
      continue;
    }
    visited[step] = true;
    auto const& g = net.gate_at( step );
    ++gates;
    if ( g.op == gate_op::AND )
    {
      ++ands;
    }
    stack.push_back( g.fanin0.step() );
    stack.push_back( g.fanin1.step() );
  }
  return { ands, gates };
}

/* is tt the (possibly complemented) projection of variable var? */
inline int projection_polarity( truth_table const& tt, uint32_t var )
{
  const auto proj = truth_table::nth_var( tt.num_vars(), var );
  if ( tt == proj )
  {
    return 1;
  }
  if ( tt == ~proj )
  {
    return 0;
  }
  return -1;
}

} // namespace detail

/*! \brief One depth-balancing pass; the result is swept and hashed. */
inline xag balance_network( xag const& net, balancing_params const& ps = {} )
{
  const auto cuts = enumerate_cuts( net, { ps.cut_size, ps.cut_limit } );

  depth_builder builder( net.num_inputs() );
  for ( uint32_t i = 1u; i <= net.num_inputs(); ++i )
  {
    builder.net.set_input_name( i, net.input_name( i ) );
  }

  std::vector<signal> best( net.num_steps() + 1u );
  best[0] = signal::constant0();
  for ( uint32_t i = 1u; i <= net.num_inputs(); ++i )
  {
    best[i] = builder.net.input( i );
  }

  net.foreach_gate( [&]( uint32_t step, xag::gate const& g ) {
    /* structural fallback keeps depth monotone */
    signal chosen = builder.add( g.op, best[g.fanin0.step()] ^ g.fanin0.complement(),
                                 best[g.fanin1.step()] ^ g.fanin1.complement() );
    uint32_t chosen_level = builder.level_of( chosen );
    std::pair<uint32_t, uint32_t> chosen_cost{ 0u, 0u };
    bool chosen_cost_known = false;

    const auto consider = [&]( signal cand ) {
      const uint32_t cand_level = builder.level_of( cand );
      if ( cand_level > chosen_level )
      {
        return;
      }
      const auto cand_cost = detail::cone_counts( builder.net, cand );
      if ( !chosen_cost_known )
      {
        chosen_cost = detail::cone_counts( builder.net, chosen );
        chosen_cost_known = true;
      }
      if ( cand_level < chosen_level ||
           cand_cost < chosen_cost )
      {
        chosen = cand;
        chosen_level = cand_level;
        chosen_cost = cand_cost;
        chosen_cost_known = true;
      }
    };

    for ( auto const& c : cuts.of( step ) )
    {
      if ( c.is_trivial( step ) )
      {
        continue;
      }
      if ( c.function.is_const0() )
      {
        consider( signal::constant0() );
        continue;
      }
      if ( c.function.is_const1() )
      {
        consider( signal::constant1() );
        continue;
      }

      std::vector<leaf_ref> leaves;
      leaves.reserve( c.leaves.size() );
      for ( auto l : c.leaves )
      {
        leaves.push_back( { best[l], builder.level_of( best[l] ) } );
      }

      bool projected = false;
      for ( uint32_t v = 0u; v < c.leaves.size() && !projected; ++v )
      {
        const int pol = detail::projection_polarity( c.function, v );
        if ( pol >= 0 )
        {
          consider( leaves[v].s ^ ( pol == 0 ) );
          projected = true;
        }
      }
      if ( projected )
      {
        continue;
      }

      const auto form = minimize_esop( anf_from_tt( c.function ), ps.esop_effort, ps.cost );
      consider( balance_esop( builder, form, leaves ) );
      if ( ps.strategy == balancing_strategy::espp )
      {
        const auto pp = greedy_merge( espp_from_esop( form ) );
        consider( balance_espp( builder, pp, leaves ) );
      }
    }

    best[step] = chosen;
  } );

  for ( uint32_t i = 0u; i < net.num_outputs(); ++i )
  {
    const auto o = net.output_signal( i );
    builder.net.add_output( best[o.step()] ^ o.complement(), net.output_name( i ) );
  }
  return sweep_dead( builder.net );
}

/*! \brief Repeats balance_network while the depth strictly decreases.
 *
 * The returned round count includes the final non-improving round.
 */
inline std::pair<xag, uint32_t> optimize_to_fixpoint( xag const& net, balancing_params const& ps = {} )
{
  if ( ps.max_rounds < 1u )
  {
    throw std::invalid_argument( "optimize_to_fixpoint: max rounds must be at least 1" );
  }
  xag result = net;
  uint32_t depth = mult_depth( result );
  uint32_t rounds = 0u;
  while ( rounds < ps.max_rounds )
  {
    ++rounds;
    auto cand = balance_network( result, ps );
    const uint32_t cand_depth = mult_depth( cand );
    if ( cand_depth >= depth )
    {
      break;
    }
    result = std::move( cand );
    depth = cand_depth;
  }
  return { std::move( result ), rounds };
}

} // namespace xagdepth
