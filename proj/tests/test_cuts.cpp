#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>
#include <vector>

#include <xagdepth/analysis.hpp>
#include <xagdepth/cut_enumeration.hpp>
#include <xagdepth/xag.hpp>

#include "test_util.hpp"

using namespace xagdepth;
using test::make_maj5;
using test::random_xag;

namespace
{

/* per-assignment cone evaluation with fixed leaf values; an oracle kept
 * independent of the bit-parallel tables in the implementation */
bool eval_cone( xag const& net, uint32_t step, std::vector<uint32_t> const& leaves,
                uint32_t assignment, std::map<uint32_t, bool>& memo )
{
  for ( uint64_t i = 0u; i < leaves.size(); ++i )
  {
    if ( leaves[i] == step )
    {
      return ( assignment >> i ) & 1u;
    }
  }
  if ( auto it = memo.find( step ); it != memo.end() )
  {
    return it->second;
  }
  REQUIRE( net.is_gate( step ) );
  auto const& g = net.gate_at( step );
  const bool a = eval_cone( net, g.fanin0.step(), leaves, assignment, memo ) ^ g.fanin0.complement();
  const bool b = eval_cone( net, g.fanin1.step(), leaves, assignment, memo ) ^ g.fanin1.complement();
  const bool v = g.op == gate_op::AND ? ( a && b ) : ( a != b );
  memo.emplace( step, v );
  return v;
}

truth_table cone_oracle( xag const& net, uint32_t root, std::vector<uint32_t> const& leaves )
{
  truth_table tt( static_cast<uint32_t>( leaves.size() ) );
  for ( uint32_t m = 0u; m < tt.num_bits(); ++m )
  {
    std::map<uint32_t, bool> memo;
    tt.set_bit( m, eval_cone( net, root, leaves, m, memo ) );
  }
  return tt;
}

/* all k-feasible cuts, written directly from the recursive definition:
 * inputs get their trivial cut, a gate takes the trivial cut plus every
 * small-enough union of one cut per fanin */
using leafset = std::vector<uint32_t>;

std::vector<std::set<leafset>> reference_enumeration( xag const& net, uint32_t k )
{
  std::vector<std::set<leafset>> sets( net.num_steps() + 1u );
  for ( uint32_t i = 0u; i <= net.num_inputs(); ++i )
  {
    sets[i].insert( { i } );
  }
  net.foreach_gate( [&]( uint32_t step, xag::gate const& g ) {
    sets[step].insert( { step } );
    for ( auto const& c0 : sets[g.fanin0.step()] )
    {
      for ( auto const& c1 : sets[g.fanin1.step()] )
      {
        leafset merged;
        std::set_union( c0.begin(), c0.end(), c1.begin(), c1.end(),
                        std::back_inserter( merged ) );
        if ( merged.size() <= k )
        {
          sets[step].insert( merged );
        }
      }
    }
  } );
  return sets;
}

std::set<leafset> irredundant( std::set<leafset> const& cuts )
{
  std::set<leafset> result;
  for ( auto const& c : cuts )
  {
    bool dominated = false;
    for ( auto const& other : cuts )
    {
      if ( other != c && std::includes( c.begin(), c.end(), other.begin(), other.end() ) )
      {
        dominated = true;
        break;
      }
    }
    if ( !dominated )
    {
      result.insert( c );
    }
  }
  return result;
}

} // namespace

TEST_CASE( "primary inputs have the trivial cut only" )
{
  xag net( 2u );
  net.add_output( net.add_gate( gate_op::AND, net.input( 1u ), net.input( 2u ) ) );
  const auto cuts = enumerate_cuts( net );
  CHECK( cuts.of( 1u ).size() == 1u );
  CHECK( cuts.of( 1u ).front().leaves == std::vector<uint32_t>{ 1u } );
}

TEST_CASE( "a single AND gate has the trivial cut and its fanin cut" )
{
  xag net( 2u );
  const auto g = net.add_gate( gate_op::AND, net.input( 1u ), net.input( 2u ) );
  net.add_output( g );
  const auto cuts = enumerate_cuts( net, { 2u, 25u } );
  auto const& set = cuts.of( g.step() );
  REQUIRE( set.size() == 2u );
  CHECK( set[0].leaves == std::vector<uint32_t>{ g.step() } );
  CHECK( set[1].leaves == std::vector<uint32_t>{ 1u, 2u } );
  CHECK( set[1].function.words()[0] == 0b1000u );
}

TEST_CASE( "majority root keeps its all-input cut under the default limit" )
{
  const auto net = make_maj5();
  const auto cuts = enumerate_cuts( net, { 6u, 25u } );
  const uint32_t root = net.output_signal( 0u ).step();

  /* the output XOR sits above the last AND; check the root's cut set */
  bool found = false;
  for ( auto const& c : cuts.of( root ) )
  {
    if ( c.leaves == std::vector<uint32_t>{ 1u, 2u, 3u, 4u, 5u } )
    {
      found = true;
      CHECK( c.function == cone_oracle( net, root, c.leaves ) );
      /* majority of 5: bit m set iff popcount(m) >= 3 */
      for ( uint32_t m = 0u; m < 32u; ++m )
      {
        CHECK( c.function.get_bit( m ) == ( __builtin_popcount( m ) >= 3 ) );
      }
    }
  }
  CHECK( found );
}

TEST_CASE( "cut size bounds are validated" )
{
  const auto net = make_maj5();
  CHECK_THROWS_AS( enumerate_cuts( net, { 1u, 25u } ), std::invalid_argument );
  CHECK_THROWS_AS( enumerate_cuts( net, { 17u, 25u } ), std::invalid_argument );
  CHECK_THROWS_AS( enumerate_cuts( net, { 6u, 0u } ), std::invalid_argument );
}

TEST_CASE( "cut_function of a trivial cut is the projection" )
{
  const auto net = make_maj5();
  const cut trivial{ { 7u }, {} };
  const auto tt = cut_function( net, 7u, trivial );
  CHECK( tt.num_vars() == 1u );
  CHECK( tt.words()[0] == 0b10u );
}

TEST_CASE( "cut functions are support-normalized" )
{
  xag net( 9u );
  const auto a = net.add_gate( gate_op::AND, net.input( 1u ), net.input( 3u ) );
  const auto b = net.add_gate( gate_op::AND, net.input( 4u ), net.input( 9u ) );
  net.add_output( a );
  net.add_output( b );
  const auto ta = cut_function( net, a.step(), { { 1u, 3u }, {} } );
  const auto tb = cut_function( net, b.step(), { { 4u, 9u }, {} } );
  CHECK( ta == tb );
  CHECK( ta.words()[0] == 0b1000u );
}

TEST_CASE( "cut_function of a majority-of-3 cone" )
{
  xag net( 3u );
  const auto x1 = net.input( 1u );
  const auto x2 = net.input( 2u );
  const auto x3 = net.input( 3u );
  const auto p12 = net.add_gate( gate_op::AND, x1, x2 );
  const auto p13 = net.add_gate( gate_op::AND, x1, x3 );
  const auto p23 = net.add_gate( gate_op::AND, x2, x3 );
  const auto root = add_xor_chain( net, { p12, p13, p23 } );
  net.add_output( root );
  const auto tt = cut_function( net, root.step(), { { 1u, 2u, 3u }, {} } );
  CHECK( tt.words()[0] == 0b11101000u );
}

TEST_CASE( "cut_function rejects invalid cuts" )
{
  const auto net = make_maj5();
  const uint32_t root = net.output_signal( 0u ).step();
  /* does not block every path to the inputs */
  CHECK_THROWS_AS( cut_function( net, root, { { 1u, 2u }, {} } ), std::invalid_argument );
  /* a step outside the cone is not on any path */
  xag net2( 3u );
  const auto g = net2.add_gate( gate_op::AND, net2.input( 1u ), net2.input( 2u ) );
  net2.add_output( g );
  CHECK_THROWS_AS( cut_function( net2, g.step(), { { 1u, 2u, 3u }, {} } ),
                   std::invalid_argument );
}

TEST_CASE( "enumerated cut functions match cone evaluation" )
{
  for ( uint64_t seed = 400u; seed < 420u; ++seed )
  {
    const auto net = random_xag( seed, 6u, 15u );
    const auto cuts = enumerate_cuts( net, { 4u, 25u } );
    net.foreach_gate( [&]( uint32_t step, xag::gate const& ) {
      for ( auto const& c : cuts.of( step ) )
      {
        if ( c.is_trivial( step ) )
        {
          continue;
        }
        CHECK( c.function == cone_oracle( net, step, c.leaves ) );
        CHECK( c.function == cut_function( net, step, c ) );
      }
    } );
  }
}

TEST_CASE( "no enumerated cut is a strict superset of another" )
{
  for ( uint64_t seed = 500u; seed < 520u; ++seed )
  {
    const auto net = random_xag( seed, 8u, 25u );
    const auto cuts = enumerate_cuts( net );
    net.foreach_gate( [&]( uint32_t step, xag::gate const& ) {
      auto const& set = cuts.of( step );
      for ( auto const& a : set )
      {
        for ( auto const& b : set )
        {
          if ( &a != &b )
          {
            CHECK( !( a.leaves != b.leaves &&
                      std::includes( a.leaves.begin(), a.leaves.end(), b.leaves.begin(),
                                     b.leaves.end() ) ) );
          }
        }
      }
    } );
  }
}

TEST_CASE( "unlimited enumeration matches the recursive reference" )
{
  for ( uint64_t seed = 600u; seed < 615u; ++seed )
  {
    const auto net = random_xag( seed, 6u, 14u );
    const uint32_t k = 4u;
    const auto cuts = enumerate_cuts( net, { k, unlimited_cuts } );
    const auto raw = reference_enumeration( net, k );

    net.foreach_gate( [&]( uint32_t step, xag::gate const& ) {
      std::set<leafset> produced;
      for ( auto const& c : cuts.of( step ) )
      {
        produced.insert( c.leaves );
      }
      auto expected = irredundant( raw[step] );
      expected.insert( { step } ); /* trivial cut is never dominated away */
      CHECK( produced == expected );
    } );
  }
}
