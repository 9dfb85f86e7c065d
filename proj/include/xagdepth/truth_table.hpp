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
  \file truth_table.hpp
  \brief Small dynamic truth tables (up to 16 variables)

  Minterm m stores f(x), where bit i of m is the value of variable i
  (variable 0 is the least significant index bit).
*/

#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

namespace xagdepth
{

class truth_table
{
public:
  static constexpr uint32_t max_vars = 16u;

  truth_table() = default;

  explicit truth_table( uint32_t num_vars )
      : num_vars_( num_vars ), bits_( word_count( num_vars ), 0u )
  {
    assert( num_vars <= max_vars );
  }

  /*! \brief Projection table of a single variable, optionally complemented. */
  static truth_table nth_var( uint32_t num_vars, uint32_t var, bool complement = false )
  {
    assert( var < num_vars );
    truth_table tt( num_vars );
    if ( var < 6u )
    {
      for ( auto& w : tt.bits_ )
      {
        w = projections[var];
      }
    }
    else
    {
      const uint64_t period = 1ull << ( var - 6u );
      for ( uint64_t i = 0u; i < tt.bits_.size(); ++i )
      {
        tt.bits_[i] = ( i & period ) ? ~0ull : 0ull;
      }
    }
    if ( complement )
    {
      tt = ~tt;
    }
    tt.trim();
    return tt;
  }

  static truth_table constant( uint32_t num_vars, bool value )
  {
    truth_table tt( num_vars );
    if ( value )
    {
      tt = ~tt;
    }
    return tt;
  }

  uint32_t num_vars() const { return num_vars_; }
  uint64_t num_bits() const { return 1ull << num_vars_; }

  bool get_bit( uint64_t index ) const
  {
    assert( index < num_bits() );
    return ( bits_[index >> 6u] >> ( index & 63u ) ) & 1u;
  }

  void set_bit( uint64_t index, bool value )
  {
    assert( index < num_bits() );
    if ( value )
    {
      bits_[index >> 6u] |= 1ull << ( index & 63u );
    }
    else
    {
      bits_[index >> 6u] &= ~( 1ull << ( index & 63u ) );
    }
  }

  uint64_t count_ones() const
  {
    uint64_t count = 0u;
    for ( auto w : bits_ )
    {
      count += __builtin_popcountll( w );
    }
    return count;
  }

  bool is_const0() const
  {
    for ( auto w : bits_ )
    {
      if ( w != 0u )
      {
        return false;
      }
    }
    return true;
  }

  bool is_const1() const
  {
    if ( num_vars_ < 6u )
    {
      return ( bits_[0] & mask() ) == mask();
    }
    for ( auto w : bits_ )
    {
      if ( w != ~0ull )
      {
        return false;
      }
    }
    return true;
  }

  truth_table operator~() const
  {
    truth_table r( num_vars_ );
    for ( uint64_t i = 0u; i < bits_.size(); ++i )
    {
      r.bits_[i] = ~bits_[i];
    }
    r.trim();
    return r;
  }

  truth_table operator&( truth_table const& other ) const
  {
    assert( num_vars_ == other.num_vars_ );
    truth_table r( num_vars_ );
    for ( uint64_t i = 0u; i < bits_.size(); ++i )
    {
      r.bits_[i] = bits_[i] & other.bits_[i];
    }
    return r;
  }

  truth_table operator^( truth_table const& other ) const
  {
    assert( num_vars_ == other.num_vars_ );
    truth_table r( num_vars_ );
    for ( uint64_t i = 0u; i < bits_.size(); ++i )
    {
      r.bits_[i] = bits_[i] ^ other.bits_[i];
    }
    return r;
  }

  truth_table& operator^=( truth_table const& other )
  {
    assert( num_vars_ == other.num_vars_ );
    for ( uint64_t i = 0u; i < bits_.size(); ++i )
    {
      bits_[i] ^= other.bits_[i];
    }
    return *this;
  }

  bool operator==( truth_table const& other ) const
  {
    return num_vars_ == other.num_vars_ && bits_ == other.bits_;
  }

  bool operator!=( truth_table const& other ) const { return !( *this == other ); }

  bool operator<( truth_table const& other ) const
  {
    if ( num_vars_ != other.num_vars_ )
    {
      return num_vars_ < other.num_vars_;
    }
    return bits_ < other.bits_;
  }

  std::vector<uint64_t> const& words() const { return bits_; }
  std::vector<uint64_t>& words() { return bits_; }

private:
  static uint64_t word_count( uint32_t num_vars )
  {
    return num_vars <= 6u ? 1u : ( 1ull << ( num_vars - 6u ) );
  }

  uint64_t mask() const
  {
    return num_vars_ >= 6u ? ~0ull : ( 1ull << ( 1u << num_vars_ ) ) - 1u;
  }

  void trim()
  {
    if ( num_vars_ < 6u )
    {
      bits_[0] &= mask();
    }
  }

  static constexpr uint64_t projections[6] = {
      0xaaaaaaaaaaaaaaaaull, 0xccccccccccccccccull, 0xf0f0f0f0f0f0f0f0ull,
      0xff00ff00ff00ff00ull, 0xffff0000ffff0000ull, 0xffffffff00000000ull };

  uint32_t num_vars_{ 0u };
  std::vector<uint64_t> bits_{ 0ull };
};

} // namespace xagdepth
