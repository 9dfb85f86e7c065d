#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include <xagdepth/esop.hpp>
#include <xagdepth/truth_table.hpp>

#include "test_util.hpp"

using namespace xagdepth;

namespace
{

/* cube from a polarity string, one character per variable: '0' negative,
 * '1' positive, '-' absent; position 0 is x1 */
cube mk( std::string const& polarities )
{
  cube c;
  for ( uint32_t v = 0u; v < polarities.size(); ++v )
  {
    if ( polarities[v] == '0' )
    {
      c.set_polarity( v, 0u );
    }
    else if ( polarities[v] == '1' )
    {
      c.set_polarity( v, 1u );
    }
  }
  return c;
}

esop mk_esop( uint32_t num_vars, std::vector<std::string> const& cubes )
{
  esop e;
  e.num_vars = num_vars;
  for ( auto const& s : cubes )
  {
    e.cubes.push_back( mk( s ) );
  }
  return e;
}

bool same_cubes( esop a, esop b )
{
  a.sort_canonical();
  b.sort_canonical();
  return a.num_vars == b.num_vars && a.cubes == b.cubes;
}

truth_table tt_from_bits( uint32_t num_vars, uint64_t bits )
{
  truth_table tt( num_vars );
  tt.words()[0] = bits;
  return tt;
}

} // namespace

TEST_CASE( "anf_from_tt on basic functions" )
{
  SECTION( "conjunction" )
  {
    const auto e = anf_from_tt( tt_from_bits( 2u, 0b1000u ) );
    CHECK( same_cubes( e, mk_esop( 2u, { "11" } ) ) );
  }
  SECTION( "parity" )
  {
    const auto e = anf_from_tt( tt_from_bits( 2u, 0b0110u ) );
    CHECK( same_cubes( e, mk_esop( 2u, { "1-", "-1" } ) ) );
  }
  SECTION( "majority of three" )
  {
    const auto e = anf_from_tt( tt_from_bits( 3u, 0b11101000u ) );
    CHECK( same_cubes( e, mk_esop( 3u, { "11-", "1-1", "-11" } ) ) );
  }
}

TEST_CASE( "anf evaluation is the inverse transform" )
{
  SECTION( "exhaustive over all 3-variable functions" )
  {
    for ( uint64_t f = 0u; f < 256u; ++f )
    {
      const auto tt = tt_from_bits( 3u, f );
      const auto e = anf_from_tt( tt );
      CHECK( e.is_anf() );
      CHECK( tt_from_esop( e ) == tt );
    }
  }
  SECTION( "random 6-variable functions" )
  {
    std::mt19937_64 rng( 7u );
    for ( uint32_t trial = 0u; trial < 10000u; ++trial )
    {
      const auto tt = xagdepth::test::random_table( 6u, rng );
      const auto e = anf_from_tt( tt );
      CHECK( e.is_anf() );
      CHECK( tt_from_esop( e ) == tt );
    }
  }
}

TEST_CASE( "expand_to_anf removes negative literals" )
{
  SECTION( "single negative literal" )
  {
    const auto expanded = expand_to_anf( mk_esop( 1u, { "0" } ) );
    CHECK( same_cubes( expanded, mk_esop( 1u, { "-", "1" } ) ) );
  }
  SECTION( "mixed cube" )
  {
    const auto expanded = expand_to_anf( mk_esop( 2u, { "01" } ) );
    CHECK( same_cubes( expanded, mk_esop( 2u, { "-1", "11" } ) ) );
    for ( uint32_t m = 0u; m < 4u; ++m )
    {
      CHECK( eval_esop( expanded, m ) == eval_esop( mk_esop( 2u, { "01" } ), m ) );
    }
  }
  SECTION( "an ANF is unchanged" )
  {
    const auto e = mk_esop( 3u, { "11-", "--1" } );
    CHECK( same_cubes( expand_to_anf( e ), e ) );
  }
}

TEST_CASE( "minimize_esop worked rewrites" )
{
  SECTION( "opposite literals cancel into the common part" )
  {
    const auto m = minimize_esop( mk_esop( 2u, { "11", "10" } ) );
    CHECK( same_cubes( m, mk_esop( 2u, { "1-" } ) ) );
  }
  SECTION( "absorbed cube flips a polarity" )
  {
    const auto m = minimize_esop( mk_esop( 2u, { "1-", "11" } ) );
    CHECK( same_cubes( m, mk_esop( 2u, { "10" } ) ) );
  }
  SECTION( "duplicate cubes vanish" )
  {
    const auto m = minimize_esop( mk_esop( 2u, { "11", "11" } ) );
    CHECK( m.cubes.empty() );
  }
}

TEST_CASE( "eval_esop corner cases" )
{
  const auto one = mk_esop( 3u, { "---" } );
  const auto zero = mk_esop( 3u, {} );
  for ( uint32_t m = 0u; m < 8u; ++m )
  {
    CHECK( eval_esop( one, m ) );
    CHECK( !eval_esop( zero, m ) );
  }
  CHECK( eval_esop( mk_esop( 2u, { "10" } ), 0b01u ) );
}

TEST_CASE( "minimization preserves the function and never adds cubes" )
{
  SECTION( "exhaustive over all 3-variable functions" )
  {
    for ( uint64_t f = 0u; f < 256u; ++f )
    {
      const auto tt = tt_from_bits( 3u, f );
      const auto anf = anf_from_tt( tt );
      for ( auto cost : { esop_cost::cubes, esop_cost::literals } )
      {
        const auto m = minimize_esop( anf, 4u, cost );
        CHECK( tt_from_esop( m ) == tt );
        CHECK( m.cubes.size() <= anf.cubes.size() );
        /* the algebraic degree lower-bounds every ESOP degree */
        CHECK( anf.degree() <= m.degree() );
      }
    }
  }
  SECTION( "random 8-variable functions" )
  {
    std::mt19937_64 rng( 11u );
    for ( uint32_t trial = 0u; trial < 50u; ++trial )
    {
      const auto tt = xagdepth::test::random_table( 8u, rng );
      const auto anf = anf_from_tt( tt );
      const auto m = minimize_esop( anf );
      CHECK( tt_from_esop( m ) == tt );
      CHECK( m.cubes.size() <= anf.cubes.size() );
    }
  }
}

TEST_CASE( "minimized forms expand back to the unique ANF" )
{
  std::mt19937_64 rng( 13u );
  for ( uint32_t trial = 0u; trial < 200u; ++trial )
  {
    const auto tt = xagdepth::test::random_table( 4u, rng );
    const auto anf = anf_from_tt( tt );
    const auto m = minimize_esop( anf );
    CHECK( same_cubes( expand_to_anf( m ), anf ) );
  }
}

TEST_CASE( "literal-first cost never loses to cube-first on literals" )
{
  std::mt19937_64 rng( 17u );
  for ( uint32_t trial = 0u; trial < 100u; ++trial )
  {
    const auto tt = xagdepth::test::random_table( 5u, rng );
    const auto anf = anf_from_tt( tt );
    const auto by_cubes = minimize_esop( anf, 8u, esop_cost::cubes );
    const auto by_literals = minimize_esop( anf, 8u, esop_cost::literals );
    CHECK( tt_from_esop( by_literals ) == tt );
    CHECK( by_literals.cubes.size() <= anf.cubes.size() );
    (void)by_cubes;
  }
}
