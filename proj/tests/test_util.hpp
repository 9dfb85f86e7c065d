#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include <xagdepth/truth_table.hpp>
#include <xagdepth/xag.hpp>

namespace xagdepth::test
{

inline truth_table random_table( uint32_t num_vars, std::mt19937_64& rng )
{
  truth_table tt( num_vars );
  const uint64_t mask = num_vars >= 6u ? ~0ull : ( 1ull << ( 1u << num_vars ) ) - 1ull;
  for ( auto& w : tt.words() )
  {
    w = rng() & mask;
  }
  return tt;
}

/* Majority-of-5 with multiplicative complexity 3 and depth 2: products of
 * parities at level 1, one more AND of corrected parities at level 2. */
inline xag make_maj5()
{
  xag net( 5u );
  const auto x1 = net.input( 1u );
  const auto x2 = net.input( 2u );
  const auto x3 = net.input( 3u );
  const auto x4 = net.input( 4u );
  const auto x5 = net.input( 5u );

  const auto pa = add_xor_chain( net, { x1, x3, x4, x2 } );
  const auto pb = net.add_gate( gate_op::XOR, x2, x5 );
  const auto pc = net.add_gate( gate_op::XOR, x5, x4 );
  const auto pd = net.add_gate( gate_op::XOR, x4, x3 );
  const auto a1 = net.add_gate( gate_op::AND, pa, pb );
  const auto a2 = net.add_gate( gate_op::AND, pc, pd );
  const auto pe = add_xor_chain( net, { a1, x5, x1 } );
  const auto pf = add_xor_chain( net, { x1, x4, a2 } );
  const auto a3 = net.add_gate( gate_op::AND, pe, pf );
  net.add_output( net.add_gate( gate_op::XOR, a3, x1 ) );
  return net;
}

/* Majority-of-5 as a sum of all ten 3-literal products; ORs through
 * complemented ANDs, so the depth is far from optimal. */
inline xag make_maj5_and_or()
{
  xag net( 5u );
  std::vector<signal> products;
  for ( uint32_t i = 1u; i <= 5u; ++i )
  {
    for ( uint32_t j = i + 1u; j <= 5u; ++j )
    {
      for ( uint32_t k = j + 1u; k <= 5u; ++k )
      {
        const auto ij = net.add_gate( gate_op::AND, net.input( i ), net.input( j ) );
        products.push_back( net.add_gate( gate_op::AND, ij, net.input( k ) ) );
      }
    }
  }
  while ( products.size() > 1u )
  {
    std::vector<signal> next;
    for ( uint64_t i = 0u; i + 1u < products.size(); i += 2u )
    {
      next.push_back( ~net.add_gate( gate_op::AND, ~products[i], ~products[i + 1u] ) );
    }
    if ( products.size() & 1u )
    {
      next.push_back( products.back() );
    }
    products = std::move( next );
  }
  net.add_output( products.front() );
  return net;
}

/* left-leaning chain computing the AND of all inputs */
inline xag make_and_chain( uint32_t inputs )
{
  xag net( inputs );
  auto acc = net.input( 1u );
  for ( uint32_t i = 2u; i <= inputs; ++i )
  {
    acc = net.add_gate( gate_op::AND, acc, net.input( i ) );
  }
  net.add_output( acc );
  return net;
}

/* full decoder: 2^bits minterm outputs from balanced AND trees (MD = log2) */
inline xag make_decoder( uint32_t bits )
{
  xag net( bits );
  std::vector<std::vector<signal>> minterms; /* per variable: {~x, x} */
  for ( uint32_t v = 1u; v <= bits; ++v )
  {
    minterms.push_back( { ~net.input( v ), net.input( v ) } );
  }
  while ( minterms.size() > 1u )
  {
    std::vector<std::vector<signal>> next;
    for ( uint64_t i = 0u; i + 1u < minterms.size(); i += 2u )
    {
      std::vector<signal> joined;
      joined.reserve( minterms[i].size() * minterms[i + 1u].size() );
      for ( auto hi : minterms[i + 1u] )
      {
        for ( auto lo : minterms[i] )
        {
          joined.push_back( net.add_gate( gate_op::AND, lo, hi ) );
        }
      }
      next.push_back( std::move( joined ) );
    }
    if ( minterms.size() & 1u )
    {
      next.push_back( minterms.back() );
    }
    minterms = std::move( next );
  }
  for ( auto s : minterms.front() )
  {
    net.add_output( s );
  }
  return net;
}

/* seeded random network; at least one output, last gate always observed */
inline xag random_xag( uint64_t seed, uint32_t max_inputs = 10u, uint32_t max_gates = 40u )
{
  std::mt19937_64 rng( seed );
  const auto pick = [&]( uint32_t lo, uint32_t hi ) {
    return lo + static_cast<uint32_t>( rng() % ( hi - lo + 1u ) );
  };

  const uint32_t n = pick( 1u, max_inputs );
  const uint32_t attempts = pick( 1u, max_gates );
  xag net( n );
  std::vector<signal> pool;
  for ( uint32_t i = 1u; i <= n; ++i )
  {
    pool.push_back( net.input( i ) );
  }
  signal last = pool.front();
  for ( uint32_t g = 0u; g < attempts; ++g )
  {
    const auto a = pool[rng() % pool.size()] ^ static_cast<bool>( rng() & 1u );
    const auto b = pool[rng() % pool.size()] ^ static_cast<bool>( rng() & 1u );
    const auto s = net.add_gate( rng() & 1u ? gate_op::AND : gate_op::XOR, a, b );
    pool.push_back( s );
    last = s;
  }
  net.add_output( last ^ static_cast<bool>( rng() & 1u ) );
  const uint32_t extra = pick( 0u, 2u );
  for ( uint32_t i = 0u; i < extra; ++i )
  {
    net.add_output( pool[rng() % pool.size()] ^ static_cast<bool>( rng() & 1u ) );
  }
  return net;
}

} // namespace xagdepth::test
