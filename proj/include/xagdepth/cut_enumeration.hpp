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
  \file cut_enumeration.hpp
  \brief Priority-based k-feasible cut enumeration with cut functions

  Every step keeps its trivial cut plus at most cut_limit non-trivial
  cuts, obtained by merging fanin cuts.  Cut functions are computed
  bit-parallel during merging, support-normalized to the sorted leaf
  list.  Dominated cuts (strict supersets of another cut of the same
  step) are dropped; when a step exceeds the limit, cuts ranked by
  (fewer leaves, lower maximum leaf level, lexicographic leaves) are
  kept.
*/

#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "analysis.hpp"
#include "truth_table.hpp"
#include "xag.hpp"

namespace xagdepth
{

struct cut
{
  std::vector<uint32_t> leaves; /* sorted step refs */
  truth_table function;         /* over |leaves| variables, leaf order */

  bool is_trivial( uint32_t root ) const
  {
    return leaves.size() == 1u && leaves.front() == root;
  }
};

struct cut_set
{
  /* cuts[step]; the trivial cut comes first */
  std::vector<std::vector<cut>> cuts;

  std::vector<cut> const& of( uint32_t step ) const { return cuts.at( step ); }
};

struct cut_enumeration_params
{
  /*! \brief Maximum number of leaves per cut. */
  uint32_t cut_size{ 6u };

  /*! \brief Maximum number of non-trivial cuts kept per step. */
  uint32_t cut_limit{ 25u };
};

inline constexpr uint32_t unlimited_cuts = std::numeric_limits<uint32_t>::max();

namespace detail
{

/*! \brief Re-expresses a table over `from` leaves in terms of `to` leaves. */
inline truth_table expand_table( truth_table const& tt, std::vector<uint32_t> const& from,
                                 std::vector<uint32_t> const& to )
{
  std::vector<uint32_t> position( from.size() );
  for ( uint64_t i = 0u; i < from.size(); ++i )
  {
    position[i] = static_cast<uint32_t>(
        std::lower_bound( to.begin(), to.end(), from[i] ) - to.begin() );
  }
  truth_table result( static_cast<uint32_t>( to.size() ) );
  const uint64_t bits = result.num_bits();
  for ( uint64_t m = 0u; m < bits; ++m )
  {
    uint64_t src = 0u;
    for ( uint64_t i = 0u; i < from.size(); ++i )
    {
      src |= ( ( m >> position[i] ) & 1u ) << i;
    }
    result.set_bit( m, tt.get_bit( src ) );
  }
  return result;
}

struct cut_rank
{
  std::vector<uint32_t> const* levels;

  bool operator()( cut const& a, cut const& b ) const
  {
    if ( a.leaves.size() != b.leaves.size() )
    {
      return a.leaves.size() < b.leaves.size();
    }
    uint32_t la = 0u, lb = 0u;
    for ( auto l : a.leaves )
    {
      la = std::max( la, ( *levels )[l] );
    }
    for ( auto l : b.leaves )
    {
      lb = std::max( lb, ( *levels )[l] );
    }
    if ( la != lb )
    {
      return la < lb;
    }
    return a.leaves < b.leaves;
  }
};

/* leaf l must be a fanin of some visited cone step, or the root itself */
inline bool cone_reads_leaf( xag const& net, uint32_t root, uint32_t leaf,
                             std::vector<bool> const& visited )
{
  if ( leaf == root )
  {
    return true;
  }
  bool read = false;
  net.foreach_gate( [&]( uint32_t step, xag::gate const& g ) {
    if ( visited[step] && ( g.fanin0.step() == leaf || g.fanin1.step() == leaf ) )
    {
      read = true;
    }
  } );
  return read;
}

} // namespace detail

inline cut_set enumerate_cuts( xag const& net, cut_enumeration_params const& ps = {} )
{
  if ( ps.cut_size < 2u || ps.cut_size > truth_table::max_vars )
  {
    throw std::invalid_argument( "enumerate_cuts: cut size must be in [2, 16]" );
  }
  if ( ps.cut_limit < 1u )
  {
    throw std::invalid_argument( "enumerate_cuts: cut limit must be at least 1" );
  }

  const auto info = compute_levels( net );
  cut_set result;
  result.cuts.resize( net.num_steps() + 1u );

  /* constant node and primary inputs have the trivial cut only */
  for ( uint32_t i = 0u; i <= net.num_inputs(); ++i )
  {
    result.cuts[i].push_back( { { i }, truth_table::nth_var( 1u, 0u ) } );
  }

  net.foreach_gate( [&]( uint32_t step, xag::gate const& g ) {
    auto const& set0 = result.cuts[g.fanin0.step()];
    auto const& set1 = result.cuts[g.fanin1.step()];

    std::vector<cut> merged;
    for ( auto const& c0 : set0 )
    {
      for ( auto const& c1 : set1 )
      {
        std::vector<uint32_t> leaves;
        leaves.reserve( c0.leaves.size() + c1.leaves.size() );
        std::set_union( c0.leaves.begin(), c0.leaves.end(), c1.leaves.begin(), c1.leaves.end(),
                        std::back_inserter( leaves ) );
        if ( leaves.size() > ps.cut_size )
        {
          continue;
        }
        auto t0 = detail::expand_table( c0.function, c0.leaves, leaves );
        auto t1 = detail::expand_table( c1.function, c1.leaves, leaves );
        if ( g.fanin0.complement() )
        {
          t0 = ~t0;
        }
        if ( g.fanin1.complement() )
        {
          t1 = ~t1;
        }
        merged.push_back( { std::move( leaves ),
                            g.op == gate_op::AND ? ( t0 & t1 ) : ( t0 ^ t1 ) } );
      }
    }

    std::stable_sort( merged.begin(), merged.end(), detail::cut_rank{ &info.level } );

    auto& kept = result.cuts[step];
    kept.push_back( { { step }, truth_table::nth_var( 1u, 0u ) } );
    for ( auto& cand : merged )
    {
      if ( static_cast<uint64_t>( kept.size() ) - 1u >= ps.cut_limit )
      {
        break;
      }
      bool dominated = false;
      for ( uint64_t i = 1u; i < kept.size(); ++i )
      {
        auto const& prev = kept[i].leaves;
        if ( prev == cand.leaves ||
             std::includes( cand.leaves.begin(), cand.leaves.end(), prev.begin(), prev.end() ) )
        {
          dominated = true;
          break;
        }
      }
      if ( !dominated )
      {
        kept.push_back( std::move( cand ) );
      }
    }
  } );

  return result;
}

/*! \brief Cut function by cone evaluation, support-normalized to the leaf order.
 *
 * Independent of the merge-time tables above: leaves become projections
 * and the cone is evaluated bottom-up over all leaf assignments.
 * Throws if the leaf set is not a cut of the root.
 */
inline truth_table cut_function( xag const& net, uint32_t root, cut const& c )
{
  const auto& leaves = c.leaves;
  const auto k = static_cast<uint32_t>( leaves.size() );
  if ( k == 0u || k > truth_table::max_vars )
  {
    throw std::invalid_argument( "cut_function: unsupported leaf count" );
  }

  std::vector<truth_table> value( net.num_steps() + 1u );
  std::vector<bool> known( net.num_steps() + 1u, false );
  for ( uint32_t i = 0u; i < k; ++i )
  {
    value[leaves[i]] = truth_table::nth_var( k, i );
    known[leaves[i]] = true;
  }

  /* explicit stack; marks internal cone steps reached on leaf-blocked paths */
  std::vector<uint32_t> stack{ root };
  std::vector<uint32_t> order;
  std::vector<bool> visited( net.num_steps() + 1u, false );
  while ( !stack.empty() )
  {
    const uint32_t step = stack.back();
    stack.pop_back();
    if ( known[step] || visited[step] )
    {
      continue;
    }
    if ( !net.is_gate( step ) )
    {
      throw std::invalid_argument( "cut_function: leaf set does not block all paths" );
    }
    visited[step] = true;
    order.push_back( step );
    auto const& g = net.gate_at( step );
    stack.push_back( g.fanin0.step() );
    stack.push_back( g.fanin1.step() );
  }
  std::sort( order.begin(), order.end() );
  for ( auto step : order )
  {
    auto const& g = net.gate_at( step );
    auto t0 = value[g.fanin0.step()];
    auto t1 = value[g.fanin1.step()];
    if ( g.fanin0.complement() )
    {
      t0 = ~t0;
    }
    if ( g.fanin1.complement() )
    {
      t1 = ~t1;
    }
    value[step] = g.op == gate_op::AND ? ( t0 & t1 ) : ( t0 ^ t1 );
    known[step] = true;
  }

  /* condition (ii): every leaf lies on some root-to-input path */
  for ( auto l : leaves )
  {
    if ( !detail::cone_reads_leaf( net, root, l, visited ) )
    {
      throw std::invalid_argument( "cut_function: leaf not reachable from root" );
    }
  }
  return value[root];
}

} // namespace xagdepth
