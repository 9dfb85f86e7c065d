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

/* Command-line driver: stats, balance, map, check-equiv.  Reports are
 * tab-separated with a leading '#' header line; exit codes are 0 (ok),
 * 1 (inequivalence found), 2 (usage/parse error), 3 (internal
 * verification failure). */

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include <xagdepth/analysis.hpp>
#include <xagdepth/balancing.hpp>
#include <xagdepth/io.hpp>
#include <xagdepth/quantum.hpp>
#include <xagdepth/transforms.hpp>

namespace
{

constexpr int exit_ok = 0;
constexpr int exit_mismatch = 1;
constexpr int exit_usage = 2;
constexpr int exit_verification = 3;

struct usage_error : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

struct verification_error : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

std::string read_file( std::string const& path )
{
  std::ifstream in( path, std::ios::binary );
  if ( !in )
  {
    throw usage_error( fmt::format( "cannot open '{}'", path ) );
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string benchmark_name( std::string const& path )
{
  const auto slash = path.find_last_of( "/\\" );
  std::string name = slash == std::string::npos ? path : path.substr( slash + 1u );
  const auto dot = name.find_last_of( '.' );
  if ( dot != std::string::npos && dot > 0u )
  {
    name = name.substr( 0u, dot );
  }
  return name;
}

xagdepth::xag load_network( std::string const& path )
{
  const auto text = read_file( path );
  const auto first = text.find_first_not_of( " \t\r\n" );
  if ( first != std::string::npos && text.compare( first, 3u, "aag" ) == 0 )
  {
    return xagdepth::parse_aiger_ascii( text );
  }
  return xagdepth::parse_native( text );
}

uint64_t default_seed()
{
  if ( const char* env = std::getenv( "XAGDEPTH_SEED" ) )
  {
    return std::strtoull( env, nullptr, 10 );
  }
  return 1u;
}

double seconds_since( std::chrono::steady_clock::time_point start )
{
  return std::chrono::duration<double>( std::chrono::steady_clock::now() - start ).count();
}

/* post-run equivalence spot-check: exhaustive when small, sampled otherwise */
void verify_pair( xagdepth::xag const& before, xagdepth::xag const& after, uint64_t seed,
                  std::string const& what )
{
  if ( before.num_inputs() <= 12u )
  {
    if ( !xagdepth::equivalent_exhaustive( before, after ) )
    {
      throw verification_error( fmt::format( "{}: exhaustive equivalence check failed", what ) );
    }
  }
  else if ( !xagdepth::equivalent_random( before, after, 10000u, seed ) )
  {
    throw verification_error( fmt::format( "{}: sampled equivalence check failed", what ) );
  }
}

template<typename Fn>
std::vector<std::string> run_jobs( std::vector<std::string> const& files, uint32_t jobs, Fn&& fn )
{
  std::vector<std::string> rows( files.size() );
  if ( jobs <= 1u || files.size() <= 1u )
  {
    for ( uint64_t i = 0u; i < files.size(); ++i )
    {
      rows[i] = fn( files[i] );
    }
    return rows;
  }
  std::vector<std::future<std::string>> futures;
  futures.reserve( files.size() );
  for ( auto const& file : files )
  {
    futures.push_back( std::async( std::launch::async, [&fn, file]() { return fn( file ); } ) );
  }
  for ( uint64_t i = 0u; i < futures.size(); ++i )
  {
    rows[i] = futures[i].get();
  }
  return rows;
}

int cmd_stats( std::vector<std::string> const& files, uint32_t jobs )
{
  fmt::print( "#name\tn\tr\tmc\tmd\tdepth\n" );
  const auto rows = run_jobs( files, jobs, []( std::string const& file ) {
    const auto net = load_network( file );
    return fmt::format( "{}\t{}\t{}\t{}\t{}\t{}", benchmark_name( file ), net.num_inputs(),
                        net.num_gates(), xagdepth::mult_complexity( net ),
                        xagdepth::mult_depth( net ), xagdepth::general_depth( net ) );
  } );
  for ( auto const& row : rows )
  {
    fmt::print( "{}\n", row );
  }
  return exit_ok;
}

struct balance_options
{
  xagdepth::balancing_params params;
  std::string out_file;
  bool verify{ true };
  uint32_t jobs{ 1u };
};

int cmd_balance( std::vector<std::string> const& files, balance_options const& opt )
{
  if ( !opt.out_file.empty() && files.size() != 1u )
  {
    throw usage_error( "--out requires exactly one input file" );
  }
  fmt::print( "#name\tmc\tmd\trounds\ttime\n" );
  const auto rows = run_jobs( files, opt.jobs, [&]( std::string const& file ) {
    const auto start = std::chrono::steady_clock::now();
    const auto net = load_network( file );
    const auto [optimized, rounds] = xagdepth::optimize_to_fixpoint( net, opt.params );
    if ( opt.verify )
    {
      verify_pair( net, optimized, default_seed(), file );
    }
    if ( !opt.out_file.empty() )
    {
      std::ofstream out( opt.out_file, std::ios::binary );
      if ( !out )
      {
        throw usage_error( fmt::format( "cannot write '{}'", opt.out_file ) );
      }
      out << xagdepth::write_native( optimized );
    }
    return fmt::format( "{}\t{} ({})\t{} ({})\t{}\t{:.2f}", benchmark_name( file ),
                        xagdepth::mult_complexity( optimized ), xagdepth::mult_complexity( net ),
                        xagdepth::mult_depth( optimized ), xagdepth::mult_depth( net ), rounds,
                        seconds_since( start ) );
  } );
  for ( auto const& row : rows )
  {
    fmt::print( "{}\n", row );
  }
  return exit_ok;
}

struct map_options
{
  xagdepth::schedule_kind schedule{ xagdepth::schedule_kind::asap };
  std::string qc_file;
  bool report_copies{ false };
  bool verify{ true };
  uint32_t jobs{ 1u };
};

int cmd_map( std::vector<std::string> const& files, map_options const& opt )
{
  if ( !opt.qc_file.empty() && files.size() != 1u )
  {
    throw usage_error( "--qc-out requires exactly one input file" );
  }
  fmt::print( "#name\tt_count\tt_depth\tqubits\tschedule{}\n",
              opt.report_copies ? "\tcopies" : "" );
  const auto rows = run_jobs( files, opt.jobs, [&]( std::string const& file ) {
    const auto net =
        xagdepth::sweep_dead( xagdepth::propagate_inverters( load_network( file ) ) );
    const auto [circuit, estimate] = xagdepth::map_to_circuit( net, opt.schedule );
    if ( opt.verify && net.num_inputs() <= 12u )
    {
      /* spot-check the reversible lowering on the first assignments */
      const uint32_t n = net.num_inputs();
      const uint32_t limit = std::min( 256u, 1u << std::min( n, 16u ) );
      for ( uint32_t m = 0u; m < limit; ++m )
      {
        std::vector<bool> assignment( n );
        for ( uint32_t v = 0u; v < n; ++v )
        {
          assignment[v] = ( m >> v ) & 1u;
        }
        const auto result = xagdepth::simulate_circuit( circuit, assignment );
        if ( result.outputs != xagdepth::simulate( net, assignment ) || !result.ancillae_clean )
        {
          throw verification_error(
              fmt::format( "{}: circuit simulation diverges from the network", file ) );
        }
      }
    }
    if ( !opt.qc_file.empty() )
    {
      std::ofstream out( opt.qc_file, std::ios::binary );
      if ( !out )
      {
        throw usage_error( fmt::format( "cannot write '{}'", opt.qc_file ) );
      }
      out << xagdepth::write_qc( circuit );
    }
    auto row = fmt::format( "{}\t{}\t{}\t{}\t{}", benchmark_name( file ), estimate.t_count,
                            estimate.t_depth, estimate.qubits,
                            opt.schedule == xagdepth::schedule_kind::asap ? "asap" : "alap" );
    if ( opt.report_copies )
    {
      row += fmt::format( "\t{}", estimate.copy_qubits );
    }
    return row;
  } );
  for ( auto const& row : rows )
  {
    fmt::print( "{}\n", row );
  }
  return exit_ok;
}

int cmd_check_equiv( std::string const& file_a, std::string const& file_b,
                     uint32_t exhaustive_max, uint64_t vectors, uint64_t seed )
{
  const auto a = load_network( file_a );
  const auto b = load_network( file_b );
  if ( a.num_inputs() != b.num_inputs() || a.num_outputs() != b.num_outputs() )
  {
    throw usage_error( "input/output arity mismatch" );
  }

  bool equal = true;
  std::vector<bool> counterexample;
  if ( a.num_inputs() <= exhaustive_max )
  {
    fmt::print( "mode\texhaustive\n" );
    if ( !xagdepth::equivalent_exhaustive( a, b ) )
    {
      equal = false;
      for ( uint32_t m = 0u; m < ( 1u << a.num_inputs() ); ++m )
      {
        std::vector<bool> assignment( a.num_inputs() );
        for ( uint32_t v = 0u; v < a.num_inputs(); ++v )
        {
          assignment[v] = ( m >> v ) & 1u;
        }
        if ( xagdepth::simulate( a, assignment ) != xagdepth::simulate( b, assignment ) )
        {
          counterexample = assignment;
          break;
        }
      }
    }
  }
  else
  {
    fmt::print( "mode\trandom\tvectors\t{}\tseed\t{}\n", vectors, seed );
    equal = xagdepth::equivalent_random( a, b, vectors, seed, &counterexample );
  }

  if ( equal )
  {
    fmt::print( "verdict\tequivalent\n" );
    return exit_ok;
  }
  std::string bits;
  for ( auto bit : counterexample )
  {
    bits += bit ? '1' : '0';
  }
  fmt::print( "verdict\tmismatch\ncounterexample\t{}\n", bits );
  return exit_mismatch;
}

} // namespace

int main( int argc, char** argv )
{
  CLI::App app{ "XAG multiplicative-depth optimization and quantum resource estimation" };
  app.require_subcommand( 1u );

  std::vector<std::string> files;
  uint32_t jobs = 1u;

  auto* stats = app.add_subcommand( "stats", "print network statistics" );
  stats->add_option( "files", files, "input netlists (aag or xag)" )->required();
  stats->add_option( "--jobs", jobs, "process files concurrently" );

  balance_options bopt;
  std::string strategy = "esop";
  std::string cost = "cubes";
  auto* balance = app.add_subcommand( "balance", "reduce multiplicative depth" );
  balance->add_option( "files", files, "input netlists (aag or xag)" )->required();
  balance->add_option( "--cut-size", bopt.params.cut_size, "cut size k (default 6)" );
  balance->add_option( "--cut-limit", bopt.params.cut_limit, "cuts kept per step (default 25)" );
  balance->add_option( "--strategy", strategy, "esop or espp" )
      ->check( CLI::IsMember( { "esop", "espp" } ) );
  balance->add_option( "--max-rounds", bopt.params.max_rounds, "bound on balancing rounds" );
  balance->add_option( "--esop-cost", cost, "cubes or literals" )
      ->check( CLI::IsMember( { "cubes", "literals" } ) );
  balance->add_option( "--esop-effort", bopt.params.esop_effort, "minimizer passes" );
  balance->add_option( "--out", bopt.out_file, "write the optimized native netlist" );
  balance->add_flag( "--no-verify", "skip the post-optimization equivalence spot-check" );
  balance->add_option( "--jobs", bopt.jobs, "process files concurrently" );

  map_options mopt;
  std::string schedule = "asap";
  auto* map = app.add_subcommand( "map", "estimate quantum resources" );
  map->add_option( "files", files, "input netlists (aag or xag)" )->required();
  map->add_option( "--schedule", schedule, "asap or alap" )
      ->check( CLI::IsMember( { "asap", "alap" } ) );
  map->add_option( "--qc-out", mopt.qc_file, "write the reversible gate list" );
  map->add_flag( "--report-copies", mopt.report_copies, "add the copy-qubit column" );
  map->add_flag( "--no-verify", "skip the circuit-vs-network spot-check" );
  map->add_option( "--jobs", mopt.jobs, "process files concurrently" );

  std::string equiv_a, equiv_b;
  uint32_t exhaustive_max = 12u;
  uint64_t vectors = 10000u;
  uint64_t seed = default_seed();
  auto* check = app.add_subcommand( "check-equiv", "compare two networks by simulation" );
  check->add_option( "file_a", equiv_a, "first netlist" )->required();
  check->add_option( "file_b", equiv_b, "second netlist" )->required();
  check->add_option( "--exhaustive-max", exhaustive_max,
                     "exhaustive when inputs fit (default 12)" );
  check->add_option( "--vectors", vectors, "random vectors otherwise (default 10000)" );
  check->add_option( "--seed", seed, "random seed (default $XAGDEPTH_SEED or 1)" );

  CLI11_PARSE( app, argc, argv );

  try
  {
    if ( stats->parsed() )
    {
      return cmd_stats( files, jobs );
    }
    if ( balance->parsed() )
    {
      bopt.params.strategy = strategy == "espp" ? xagdepth::balancing_strategy::espp
                                                : xagdepth::balancing_strategy::esop;
      bopt.params.cost =
          cost == "literals" ? xagdepth::esop_cost::literals : xagdepth::esop_cost::cubes;
      bopt.verify = balance->count( "--no-verify" ) == 0u;
      return cmd_balance( files, bopt );
    }
    if ( map->parsed() )
    {
      mopt.schedule = schedule == "alap" ? xagdepth::schedule_kind::alap
                                         : xagdepth::schedule_kind::asap;
      mopt.verify = map->count( "--no-verify" ) == 0u;
      return cmd_map( files, mopt );
    }
    if ( check->parsed() )
    {
      return cmd_check_equiv( equiv_a, equiv_b, exhaustive_max, vectors, seed );
    }
  }
  catch ( verification_error const& e )
  {
    fmt::print( stderr, "verification failure: {}\n", e.what() );
    return exit_verification;
  }
  catch ( xagdepth::parse_error const& e )
  {
    fmt::print( stderr, "{}\n", e.what() );
    return exit_usage;
  }
  catch ( std::exception const& e )
  {
    fmt::print( stderr, "error: {}\n", e.what() );
    return exit_usage;
  }
  return exit_ok;
}
