#include <catch2/catch_amalgamated.hpp>

#include <set>

#include <xagdepth/analysis.hpp>
#include <xagdepth/io.hpp>
#include <xagdepth/transforms.hpp>
#include <xagdepth/xag.hpp>

#include "test_util.hpp"

using namespace xagdepth;
using test::make_and_chain;
using test::make_maj5;
using test::random_xag;

TEST_CASE( "structural hashing returns the same step for identical gates" )
{
  xag net( 2u );
  const auto g1 = net.add_gate( gate_op::AND, net.input( 1u ), net.input( 2u ) );
  const auto g2 = net.add_gate( gate_op::AND, net.input( 2u ), net.input( 1u ) );
  CHECK( g1 == g2 );
  CHECK( net.num_gates() == 1u );
}

TEST_CASE( "trivial gates fold to constants and wires" )
{
  xag net( 2u );
  const auto x1 = net.input( 1u );
  const auto x2 = net.input( 2u );
  CHECK( net.add_gate( gate_op::XOR, x1, x1 ) == signal::constant0() );
  CHECK( net.add_gate( gate_op::XOR, x1, ~x1 ) == signal::constant1() );
  CHECK( net.add_gate( gate_op::AND, x1, x1 ) == x1 );
  CHECK( net.add_gate( gate_op::AND, x1, ~x1 ) == signal::constant0() );
  CHECK( net.add_gate( gate_op::AND, signal::constant0(), x2 ) == signal::constant0() );
  CHECK( net.add_gate( gate_op::AND, signal::constant1(), x2 ) == x2 );
  CHECK( net.add_gate( gate_op::XOR, signal::constant0(), x2 ) == x2 );
  CHECK( net.add_gate( gate_op::XOR, signal::constant1(), x2 ) == ~x2 );
  CHECK( net.num_gates() == 0u );
}

TEST_CASE( "XOR fanin complements are lifted into the result parity" )
{
  xag net( 2u );
  const auto plain = net.add_gate( gate_op::XOR, net.input( 1u ), net.input( 2u ) );
  const auto lifted = net.add_gate( gate_op::XOR, ~net.input( 1u ), net.input( 2u ) );
  CHECK( lifted == ~plain );
  CHECK( net.num_gates() == 1u );
}

TEST_CASE( "gate fanins must reference existing steps" )
{
  xag net( 2u );
  CHECK_THROWS_AS( net.add_gate( gate_op::AND, signal( 7u, false ), net.input( 1u ) ),
                   std::invalid_argument );
}

TEST_CASE( "majority-of-5 network: size and cost metrics" )
{
  const auto net = make_maj5();
  /* merged multi-input XORs expand into 11 two-input XOR gates */
  CHECK( net.num_gates() == 14u );
  CHECK( mult_complexity( net ) == 3u );
  CHECK( mult_depth( net ) == 2u );
}

TEST_CASE( "levels follow the AND-counting recurrence" )
{
  xag net( 3u );
  const auto x12 = net.add_gate( gate_op::XOR, net.input( 1u ), net.input( 2u ) );
  net.add_output( x12 );
  auto info = compute_levels( net );
  CHECK( info.level[net.input( 1u ).step()] == 0u );
  CHECK( info.level[x12.step()] == 0u );

  xag net2( 3u );
  const auto inner = net2.add_gate( gate_op::AND, net2.input( 2u ), net2.input( 3u ) );
  const auto root = net2.add_gate( gate_op::AND, net2.input( 1u ), inner );
  net2.add_output( root );
  info = compute_levels( net2 );
  CHECK( info.level[root.step()] == 2u );
  CHECK( info.depth == 2u );
}

TEST_CASE( "majority-of-5 levels and reverse levels" )
{
  const auto net = make_maj5();
  const auto info = compute_levels( net );
  CHECK( info.depth == 2u );

  std::vector<std::pair<uint32_t, uint32_t>> and_levels;
  net.foreach_gate( [&]( uint32_t step, xag::gate const& g ) {
    if ( g.op == gate_op::AND )
    {
      and_levels.emplace_back( info.level[step], info.rlevel[step] );
    }
  } );
  REQUIRE( and_levels.size() == 3u );
  CHECK( and_levels[0] == std::pair<uint32_t, uint32_t>{ 1u, 1u } );
  CHECK( and_levels[1] == std::pair<uint32_t, uint32_t>{ 1u, 1u } );
  CHECK( and_levels[2] == std::pair<uint32_t, uint32_t>{ 2u, 2u } );
}

TEST_CASE( "multiplicative depth of simple shapes" )
{
  CHECK( mult_depth( make_maj5() ) == 2u );

  xag xor_only( 4u );
  xor_only.add_output( add_xor_chain(
      xor_only, { xor_only.input( 1u ), xor_only.input( 2u ), xor_only.input( 3u ),
                  xor_only.input( 4u ) } ) );
  CHECK( mult_depth( xor_only ) == 0u );
  CHECK( mult_complexity( xor_only ) == 0u );

  CHECK( mult_depth( make_and_chain( 8u ) ) == 7u );
  CHECK( mult_complexity( make_and_chain( 8u ) ) == 7u );
}

TEST_CASE( "dangling AND gates are not counted" )
{
  xag net( 3u );
  const auto used = net.add_gate( gate_op::AND, net.input( 1u ), net.input( 2u ) );
  net.add_gate( gate_op::AND, net.input( 2u ), net.input( 3u ) ); /* dangling */
  net.add_output( used );
  CHECK( mult_complexity( net ) == 1u );

  const auto swept = sweep_dead( net );
  CHECK( swept.num_gates() == 1u );
}

TEST_CASE( "simulate majority-of-5" )
{
  const auto net = make_maj5();
  CHECK( simulate( net, { true, true, true, false, false } ) == std::vector<bool>{ true } );
  CHECK( simulate( net, { false, false, false, false, false } ) == std::vector<bool>{ false } );
  CHECK( simulate( net, { true, false, true, false, false } ) == std::vector<bool>{ false } );

  /* exhaustive against the counting definition */
  for ( uint32_t m = 0u; m < 32u; ++m )
  {
    std::vector<bool> assignment( 5u );
    for ( uint32_t v = 0u; v < 5u; ++v )
    {
      assignment[v] = ( m >> v ) & 1u;
    }
    const bool expected = __builtin_popcount( m ) >= 3;
    CHECK( simulate( net, assignment )[0] == expected );
  }
}

TEST_CASE( "simulate rejects wrong assignment lengths" )
{
  const auto net = make_maj5();
  CHECK_THROWS_AS( simulate( net, { true, false } ), std::invalid_argument );
}

TEST_CASE( "propagate_inverters leaves inversions on outputs only" )
{
  SECTION( "output inversion stays put" )
  {
    xag net( 2u );
    const auto g = net.add_gate( gate_op::AND, net.input( 1u ), net.input( 2u ) );
    net.add_output( ~g );
    const auto norm = propagate_inverters( net );
    CHECK( norm.num_gates() == 1u );
    CHECK( norm.output_signal( 0u ).complement() );
    CHECK( is_normalized( norm ) );
  }

  SECTION( "NAND feeding NAND keeps its two AND gates" )
  {
    xag net( 3u );
    const auto nand1 = ~net.add_gate( gate_op::AND, net.input( 1u ), net.input( 2u ) );
    const auto nand2 = ~net.add_gate( gate_op::AND, nand1, net.input( 3u ) );
    net.add_output( nand2 );
    CHECK( !is_normalized( net ) );

    const auto norm = propagate_inverters( net );
    CHECK( is_normalized( norm ) );
    CHECK( mult_complexity( norm ) == 2u );
    CHECK( mult_depth( norm ) == mult_depth( net ) );
    CHECK( equivalent_exhaustive( net, norm ) );
  }
}

TEST_CASE( "propagate_inverters and sweep_dead preserve function and depth" )
{
  for ( uint64_t seed = 1u; seed <= 40u; ++seed )
  {
    const auto net = random_xag( seed, 8u, 30u );
    const auto norm = propagate_inverters( net );
    const auto swept = sweep_dead( net );
    CHECK( equivalent_exhaustive( net, norm ) );
    CHECK( equivalent_exhaustive( net, swept ) );
    CHECK( is_normalized( norm ) );
    CHECK( mult_depth( norm ) == mult_depth( net ) );
    CHECK( mult_depth( swept ) == mult_depth( net ) );
    CHECK( mult_complexity( norm ) == mult_complexity( net ) );
  }
}

TEST_CASE( "sweep_dead removes everything without outputs" )
{
  xag net( 2u );
  net.add_gate( gate_op::AND, net.input( 1u ), net.input( 2u ) );
  const auto swept = sweep_dead( net );
  CHECK( swept.num_gates() == 0u );
}

TEST_CASE( "sweep_dead keeps the majority network intact" )
{
  const auto net = make_maj5();
  CHECK( structurally_equal( net, sweep_dead( net ) ) );
}

TEST_CASE( "levels are within reverse levels; layer counts match the depth" )
{
  for ( uint64_t seed = 100u; seed < 140u; ++seed )
  {
    const auto net = sweep_dead( random_xag( seed ) );
    const auto info = compute_levels( net );
    const auto recomputed = compute_levels( net );
    CHECK( info.level == recomputed.level );
    CHECK( info.rlevel == recomputed.rlevel );

    std::set<uint32_t> asap_layers, alap_layers;
    net.foreach_gate( [&]( uint32_t step, xag::gate const& g ) {
      CHECK( info.level[step] <= info.rlevel[step] );
      CHECK( info.rlevel[step] <= info.depth );
      if ( g.op == gate_op::AND )
      {
        asap_layers.insert( info.level[step] );
        alap_layers.insert( info.rlevel[step] );
      }
    } );
    const auto d = mult_depth( net );
    CHECK( asap_layers.size() == d );
    CHECK( alap_layers.size() == d );
  }
}

TEST_CASE( "reconstruction is deterministic" )
{
  const auto a = make_maj5();
  const auto b = make_maj5();
  CHECK( structurally_equal( a, b ) );
  CHECK( write_native( a ) == write_native( b ) );
}
