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
  \file esop.hpp
  \brief ESOP/ANF forms of small Boolean functions and cube minimization

  A cube stores one polarity per variable: 0 for a negative literal, 1
  for a positive literal, 2 for an absent one.  The empty cube list is
  constant 0; a single all-absent cube is constant 1.  anf_from_tt uses
  the in-place butterfly Reed-Muller transform, which is its own inverse.

  minimize_esop is a heuristic pairwise rewriter: equal cubes cancel,
  and cubes at polarity distance 1 merge into one cube (the surviving
  polarity is the third value, by x ^ ~x = 1, 1 ^ x = ~x and friends).
  Cube count never increases.
*/

#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <vector>

#include "truth_table.hpp"

namespace xagdepth
{

struct cube
{
  uint32_t bits{ 0u }; /* polarity of present literals */
  uint32_t mask{ 0u }; /* which literals are present */

  uint8_t polarity( uint32_t var ) const
  {
    return ( mask >> var ) & 1u ? static_cast<uint8_t>( ( bits >> var ) & 1u ) : uint8_t{ 2u };
  }

  void set_polarity( uint32_t var, uint8_t p )
  {
    const uint32_t bit = 1u << var;
    if ( p == 2u )
    {
      mask &= ~bit;
      bits &= ~bit;
    }
    else
    {
      mask |= bit;
      bits = p ? ( bits | bit ) : ( bits & ~bit );
    }
  }

  uint32_t degree() const { return static_cast<uint32_t>( __builtin_popcount( mask ) ); }

  bool evaluate( uint32_t assignment ) const
  {
    return ( ( assignment ^ bits ) & mask ) == 0u;
  }

  bool operator==( cube const& other ) const
  {
    return bits == other.bits && mask == other.mask;
  }
};

/*! \brief Canonical order: lexicographic on polarity vectors, 0 < 1 < 2. */
inline bool cube_less( cube const& a, cube const& b, uint32_t num_vars )
{
  for ( uint32_t v = 0u; v < num_vars; ++v )
  {
    const auto pa = a.polarity( v );
    const auto pb = b.polarity( v );
    if ( pa != pb )
    {
      return pa < pb;
    }
  }
  return false;
}

struct esop
{
  std::vector<cube> cubes;
  uint32_t num_vars{ 0u };

  bool is_anf() const
  {
    for ( auto const& c : cubes )
    {
      if ( ( c.mask & ~c.bits ) != 0u )
      {
        return false;
      }
    }
    return true;
  }

  uint32_t degree() const
  {
    uint32_t d = 0u;
    for ( auto const& c : cubes )
    {
      d = std::max( d, c.degree() );
    }
    return d;
  }

  uint64_t literal_count() const
  {
    uint64_t l = 0u;
    for ( auto const& c : cubes )
    {
      l += c.degree();
    }
    return l;
  }

  void sort_canonical()
  {
    std::sort( cubes.begin(), cubes.end(), [this]( cube const& a, cube const& b ) {
      return cube_less( a, b, num_vars );
    } );
  }
};

enum class esop_cost
{
  cubes,
  literals
};

inline bool eval_esop( esop const& e, uint32_t assignment )
{
  bool value = false;
  for ( auto const& c : e.cubes )
  {
    value ^= c.evaluate( assignment );
  }
  return value;
}

inline truth_table tt_from_esop( esop const& e )
{
  truth_table tt( e.num_vars );
  for ( uint64_t m = 0u; m < tt.num_bits(); ++m )
  {
    tt.set_bit( m, eval_esop( e, static_cast<uint32_t>( m ) ) );
  }
  return tt;
}

/*! \brief Positive-polarity Reed-Muller (ANF) form of a truth table. */
inline esop anf_from_tt( truth_table const& tt )
{
  const uint32_t k = tt.num_vars();
  truth_table spectrum = tt;
  auto& words = spectrum.words();

  for ( uint32_t v = 0u; v < k; ++v )
  {
    if ( v < 6u )
    {
      const uint64_t shift = 1ull << v;
      const uint64_t lo = v < 6u ? ~truth_table::nth_var( 6u, v ).words()[0] : 0ull;
      for ( auto& w : words )
      {
        w ^= ( w & lo ) << shift;
      }
    }
    else
    {
      const uint64_t half = 1ull << ( v - 6u );
      for ( uint64_t i = 0u; i < words.size(); ++i )
      {
        if ( i & half )
        {
          words[i] ^= words[i ^ half];
        }
      }
    }
  }

  esop result;
  result.num_vars = k;
  for ( uint64_t m = 0u; m < spectrum.num_bits(); ++m )
  {
    if ( spectrum.get_bit( m ) )
    {
      result.cubes.push_back( { static_cast<uint32_t>( m ), static_cast<uint32_t>( m ) } );
    }
  }
  result.sort_canonical();
  return result;
}

/*! \brief Expands negative literals; the result is the unique ANF. */
inline esop expand_to_anf( esop const& e )
{
  std::vector<cube> acc;
  const auto toggle = [&]( cube c ) {
    auto it = std::find( acc.begin(), acc.end(), c );
    if ( it != acc.end() )
    {
      acc.erase( it ); /* duplicate ANF cubes cancel pairwise */
    }
    else
    {
      acc.push_back( c );
    }
  };

  for ( auto const& c : e.cubes )
  {
    const uint32_t negatives = c.mask & ~c.bits;
    /* each negative literal expands to {positive, absent} */
    uint32_t subset = negatives;
    while ( true )
    {
      cube expanded;
      expanded.mask = ( c.mask & c.bits ) | subset;
      expanded.bits = expanded.mask;
      toggle( expanded );
      if ( subset == 0u )
      {
        break;
      }
      subset = ( subset - 1u ) & negatives;
    }
  }

  esop result{ std::move( acc ), e.num_vars };
  result.sort_canonical();
  return result;
}

namespace detail
{

/* polarity distance; 3 means "more than 2" (early out) */
inline uint32_t cube_distance( cube const& a, cube const& b, uint32_t num_vars )
{
  uint32_t d = 0u;
  for ( uint32_t v = 0u; v < num_vars && d < 3u; ++v )
  {
    if ( a.polarity( v ) != b.polarity( v ) )
    {
      ++d;
    }
  }
  return d;
}

/* merge two distance-1 cubes: the differing variable takes the third polarity */
inline cube merge_distance_one( cube const& a, cube const& b, uint32_t num_vars )
{
  cube merged = a;
  for ( uint32_t v = 0u; v < num_vars; ++v )
  {
    const auto pa = a.polarity( v );
    const auto pb = b.polarity( v );
    if ( pa != pb )
    {
      merged.set_polarity( v, static_cast<uint8_t>( 3u - pa - pb ) );
      break;
    }
  }
  return merged;
}

} // namespace detail

/*! \brief Heuristic cube minimization; function-preserving, never adds cubes.
 *
 * Runs up to `effort` passes of pairwise rewrites until a pass applies
 * nothing.  With esop_cost::literals the pass picks, among all
 * applicable rewrites, one with the largest literal saving.
 */
inline esop minimize_esop( esop e, uint32_t effort = 4u, esop_cost cost = esop_cost::cubes )
{
  const uint32_t k = e.num_vars;

  for ( uint32_t pass = 0u; pass < effort; ++pass )
  {
    bool changed = false;
    e.sort_canonical();

    bool rewrote = true;
    while ( rewrote )
    {
      rewrote = false;
      uint64_t best_i = 0u, best_j = 0u;
      uint64_t best_saving = 0u;
      for ( uint64_t i = 0u; i < e.cubes.size() && !rewrote; ++i )
      {
        for ( uint64_t j = i + 1u; j < e.cubes.size(); ++j )
        {
          const auto d = detail::cube_distance( e.cubes[i], e.cubes[j], k );
          if ( d > 1u )
          {
            continue;
          }
          const uint64_t saving =
              d == 0u ? e.cubes[i].degree() + e.cubes[j].degree() + 1u
                      : e.cubes[i].degree() + e.cubes[j].degree() -
                            detail::merge_distance_one( e.cubes[i], e.cubes[j], k ).degree();
          if ( cost == esop_cost::cubes )
          {
            best_i = i;
            best_j = j;
            best_saving = 1u;
            rewrote = true;
            break;
          }
          if ( saving + 1u > best_saving )
          {
            best_i = i;
            best_j = j;
            best_saving = saving + 1u;
          }
        }
      }
      if ( best_saving > 0u )
      {
        const auto a = e.cubes[best_i];
        const auto b = e.cubes[best_j];
        e.cubes.erase( e.cubes.begin() + best_j );
        e.cubes.erase( e.cubes.begin() + best_i );
        if ( detail::cube_distance( a, b, k ) == 1u )
        {
          e.cubes.push_back( detail::merge_distance_one( a, b, k ) );
        }
        changed = true;
        rewrote = true;
      }
    }

    if ( !changed )
    {
      break;
    }
  }
  e.sort_canonical();
  return e;
}

} // namespace xagdepth
