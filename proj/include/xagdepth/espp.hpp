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
  \file espp.hpp
  \brief Exclusive sums of pseudoproducts and the greedy term merger

  A pseudoproduct is an AND of possibly-negated parity literals L_i,
  where index i selects inputs by its binary expansion.  Literals are a
  sparse sorted (index, polarity) list; an absent index means the parity
  does not occur.  Two terms that agree everywhere except for one
  private parity each combine into one term over the XOR of the two
  indices, because L_i ^ L_j = L_{i^j}; a polarity clash on that
  combined index cancels both terms instead.
*/

#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <utility>
#include <vector>

#include "esop.hpp"
#include "truth_table.hpp"

namespace xagdepth
{

struct pseudoproduct
{
  /* sorted by index; index in [1, 2^n), polarity in {0, 1} */
  std::vector<std::pair<uint32_t, uint8_t>> literals;

  uint8_t polarity( uint32_t index ) const
  {
    const auto it = std::lower_bound( literals.begin(), literals.end(),
                                      std::make_pair( index, uint8_t{ 0u } ),
                                      []( auto const& a, auto const& b ) { return a.first < b.first; } );
    return it != literals.end() && it->first == index ? it->second : uint8_t{ 2u };
  }

  bool evaluate( uint32_t assignment ) const
  {
    for ( auto const& [index, pol] : literals )
    {
      const bool parity = __builtin_popcount( assignment & index ) & 1u;
      if ( parity != ( pol == 1u ) )
      {
        return false;
      }
    }
    return true;
  }

  bool operator==( pseudoproduct const& other ) const { return literals == other.literals; }
  bool operator<( pseudoproduct const& other ) const { return literals < other.literals; }
};

struct espp
{
  std::vector<pseudoproduct> terms;
  uint32_t num_vars{ 0u };

  void sort_canonical() { std::sort( terms.begin(), terms.end() ); }
};

/*! \brief AND gates needed for one term: literal count minus one. */
inline uint32_t espp_and_cost( pseudoproduct const& term )
{
  return term.literals.empty() ? 0u : static_cast<uint32_t>( term.literals.size() ) - 1u;
}

inline bool eval_espp( espp const& e, uint32_t assignment )
{
  bool value = false;
  for ( auto const& t : e.terms )
  {
    value ^= t.evaluate( assignment );
  }
  return value;
}

inline truth_table tt_from_espp( espp const& e )
{
  truth_table tt( e.num_vars );
  for ( uint64_t m = 0u; m < tt.num_bits(); ++m )
  {
    tt.set_bit( m, eval_espp( e, static_cast<uint32_t>( m ) ) );
  }
  return tt;
}

/*! \brief Embeds an ESOP: a literal on variable t becomes parity index 2^(t-1). */
inline espp espp_from_esop( esop const& e )
{
  espp result;
  result.num_vars = e.num_vars;
  result.terms.reserve( e.cubes.size() );
  for ( auto const& c : e.cubes )
  {
    pseudoproduct term;
    for ( uint32_t v = 0u; v < e.num_vars; ++v )
    {
      const auto p = c.polarity( v );
      if ( p != 2u )
      {
        term.literals.emplace_back( 1u << v, p );
      }
    }
    result.terms.push_back( std::move( term ) );
  }
  result.sort_canonical();
  return result;
}

namespace detail
{

struct espp_rewrite
{
  uint64_t term_a;
  uint64_t term_b;
  bool cancel;            /* delete both terms */
  pseudoproduct merged;   /* valid when !cancel */
};

/* The merge condition requires exactly one private index on each side
 * and equal polarities elsewhere; (i1, i2) is then forced, so the
 * "cheapest combined parity" tie-break never has more than one choice. */
inline bool find_pair_rewrite( pseudoproduct const& a, pseudoproduct const& b,
                               espp_rewrite& out )
{
  if ( a == b )
  {
    out.cancel = true; /* T ^ T = 0 */
    return true;
  }

  uint32_t private_a = 0u, private_b = 0u; /* indices */
  uint8_t pol_a = 2u, pol_b = 2u;
  uint32_t privates_a = 0u, privates_b = 0u;
  pseudoproduct common;

  uint64_t i = 0u, j = 0u;
  while ( i < a.literals.size() || j < b.literals.size() )
  {
    if ( j >= b.literals.size() ||
         ( i < a.literals.size() && a.literals[i].first < b.literals[j].first ) )
    {
      private_a = a.literals[i].first;
      pol_a = a.literals[i].second;
      ++privates_a;
      ++i;
    }
    else if ( i >= a.literals.size() || b.literals[j].first < a.literals[i].first )
    {
      private_b = b.literals[j].first;
      pol_b = b.literals[j].second;
      ++privates_b;
      ++j;
    }
    else
    {
      if ( a.literals[i].second != b.literals[j].second )
      {
        return false; /* polarity clash on a shared index */
      }
      common.literals.push_back( a.literals[i] );
      ++i;
      ++j;
    }
    if ( privates_a > 1u || privates_b > 1u )
    {
      return false;
    }
  }
  if ( privates_a != 1u || privates_b != 1u )
  {
    return false;
  }

  const uint32_t combined = private_a ^ private_b;
  const uint8_t combined_pol = pol_b == pol_a ? 1u : 0u;
  const auto existing = common.polarity( combined );
  if ( existing == 2u )
  {
    auto it = std::lower_bound(
        common.literals.begin(), common.literals.end(),
        std::make_pair( combined, uint8_t{ 0u } ),
        []( auto const& x, auto const& y ) { return x.first < y.first; } );
    common.literals.insert( it, { combined, combined_pol } );
    out.cancel = false;
    out.merged = std::move( common );
    return true;
  }
  if ( existing == combined_pol )
  {
    out.cancel = false; /* L^p * L^p = L^p, the term collapses to the common part */
    out.merged = std::move( common );
    return true;
  }
  out.cancel = true; /* L^p * L^(1-p) = 0 */
  return true;
}

} // namespace detail

/*! \brief Greedy pairwise term merging to fixpoint; function preserving.
 *
 * Pairs are scanned in canonical order and the first applicable rewrite
 * is taken; each rewrite strictly decreases the term count.  Duplicate
 * terms produced by a merge cancel as well, keeping the no-duplicate
 * invariant.
 */
inline espp greedy_merge( espp e )
{
  e.sort_canonical();

  bool changed = true;
  while ( changed )
  {
    changed = false;
    for ( uint64_t i = 0u; i < e.terms.size() && !changed; ++i )
    {
      for ( uint64_t j = i + 1u; j < e.terms.size(); ++j )
      {
        detail::espp_rewrite rw{ i, j, false, {} };
        if ( !detail::find_pair_rewrite( e.terms[i], e.terms[j], rw ) )
        {
          continue;
        }
        e.terms.erase( e.terms.begin() + j );
        e.terms.erase( e.terms.begin() + i );
        if ( !rw.cancel )
        {
          /* a duplicate of an existing term cancels against it */
          auto dup = std::find( e.terms.begin(), e.terms.end(), rw.merged );
          if ( dup != e.terms.end() )
          {
            e.terms.erase( dup );
          }
          else
          {
            e.terms.insert(
                std::upper_bound( e.terms.begin(), e.terms.end(), rw.merged ),
                std::move( rw.merged ) );
          }
        }
        changed = true;
        break;
      }
    }
  }
  return e;
}

} // namespace xagdepth
