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
  \file quantum.hpp
  \brief Reversible lowering of XAGs with T-count/T-depth/qubit accounting

  Every live AND becomes a compute-AND gadget (4 T gates, T-depth 1 with
  one helper qubit) writing a fresh target; all XOR logic is CNOT
  accumulation in place on the input qubits.  ANDs sharing a layer
  (logic level for ASAP, reverse level for ALAP) execute in parallel, so
  their control values must sit on distinct qubits: values whose input
  parities are linearly independent are steered onto input qubits, the
  rest - duplicated controls, parities of AND outputs, or parities
  dependent on already placed ones - go to copy qubits CNOT-created and
  CNOT-reclaimed inside the layer.  After the outputs are copied out,
  the forward sequence is mirrored with uncomputing ANDs (no T cost),
  returning every non-output qubit to its initial state.

  Qubit accounting: inputs + outputs + interior AND ancillae + peak
  per-layer copies + peak per-layer helpers.  Helper qubits are reserved
  in the circuit but used only inside the AND gadget, so no listed gate
  addresses them.
*/

#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "analysis.hpp"
#include "transforms.hpp"
#include "xag.hpp"

namespace xagdepth
{

enum class schedule_kind
{
  asap,
  alap
};

struct qgate
{
  enum class kind : uint8_t
  {
    X,
    CNOT,
    AND,
    UNAND
  };

  kind op;
  uint32_t c0{ 0u };    /* control (the single control for CNOT) */
  uint32_t c1{ 0u };    /* second control for AND/UNAND */
  uint32_t target{ 0u };
  uint32_t layer{ 0u }; /* compute layer for AND/UNAND gates */
};

struct quantum_circuit
{
  uint32_t qubit_count{ 0u }; /* includes reserved helper qubits */
  uint32_t num_inputs{ 0u };
  uint32_t helper_count{ 0u };
  std::vector<uint32_t> output_qubits;
  std::vector<qgate> gates;
};

struct resource_estimate
{
  uint64_t t_count{ 0u };
  uint32_t t_depth{ 0u };
  uint32_t qubits{ 0u };
  uint32_t copy_qubits{ 0u }; /* peak per-layer copies */
  schedule_kind schedule{ schedule_kind::asap };
};

namespace detail
{

struct bitrow
{
  std::vector<uint64_t> w;

  explicit bitrow( uint32_t bits = 0u ) : w( ( bits + 63u ) / 64u, 0ull ) {}

  void flip( uint32_t i ) { w[i >> 6u] ^= 1ull << ( i & 63u ); }
  bool get( uint32_t i ) const { return ( w[i >> 6u] >> ( i & 63u ) ) & 1u; }

  /* bits [0, n) as an n-bit row */
  bitrow prefix( uint32_t n ) const
  {
    bitrow r( n );
    for ( uint32_t i = 0u; i < n; ++i )
    {
      if ( get( i ) )
      {
        r.flip( i );
      }
    }
    return r;
  }

  void operator^=( bitrow const& o )
  {
    assert( w.size() == o.w.size() );
    for ( uint64_t i = 0u; i < w.size(); ++i )
    {
      w[i] ^= o.w[i];
    }
  }

  bool any() const
  {
    for ( auto x : w )
    {
      if ( x != 0u )
      {
        return true;
      }
    }
    return false;
  }

  bool operator==( bitrow const& o ) const { return w == o.w; }
};

/* incremental GF(2) independence test (row-reduced basis) */
struct gf2_basis
{
  std::vector<bitrow> reduced;

  bool is_independent_and_insert( bitrow v )
  {
    for ( auto const& r : reduced )
    {
      const auto p = pivot( r );
      if ( v.get( p ) )
      {
        v ^= r;
      }
    }
    if ( !v.any() )
    {
      return false;
    }
    reduced.push_back( std::move( v ) );
    return true;
  }

  static uint32_t pivot( bitrow const& v )
  {
    for ( uint64_t i = 0u; i < v.w.size(); ++i )
    {
      if ( v.w[i] != 0u )
      {
        return static_cast<uint32_t>( i * 64u + __builtin_ctzll( v.w[i] ) );
      }
    }
    return ~0u;
  }
};

/* Expresses target as a XOR of the given rows (rows span the space and
 * are linearly independent), returning the participating row indices. */
inline std::vector<uint32_t> solve_combination( std::vector<bitrow> rows, bitrow target )
{
  const auto n = static_cast<uint32_t>( rows.size() );
  std::vector<bitrow> tags;
  tags.reserve( n );
  for ( uint32_t i = 0u; i < n; ++i )
  {
    bitrow t( n );
    t.flip( i );
    tags.push_back( std::move( t ) );
  }

  /* forward elimination with tag tracking */
  std::vector<uint32_t> pivot_col( n, ~0u );
  uint32_t rank = 0u;
  const uint32_t cols = n;
  for ( uint32_t col = 0u; col < cols && rank < n; ++col )
  {
    uint32_t sel = ~0u;
    for ( uint32_t r = rank; r < n; ++r )
    {
      if ( rows[r].get( col ) )
      {
        sel = r;
        break;
      }
    }
    if ( sel == ~0u )
    {
      continue;
    }
    std::swap( rows[rank], rows[sel] );
    std::swap( tags[rank], tags[sel] );
    for ( uint32_t r = 0u; r < n; ++r )
    {
      if ( r != rank && rows[r].get( col ) )
      {
        rows[r] ^= rows[rank];
        tags[r] ^= tags[rank];
      }
    }
    pivot_col[rank] = col;
    ++rank;
  }

  bitrow combo( n );
  for ( uint32_t r = 0u; r < rank; ++r )
  {
    if ( target.get( pivot_col[r] ) )
    {
      combo ^= tags[r];
      target ^= rows[r];
    }
  }
  if ( target.any() )
  {
    throw std::logic_error( "quantum mapper: parity not in the row span" );
  }

  std::vector<uint32_t> indices;
  for ( uint32_t i = 0u; i < n; ++i )
  {
    if ( combo.get( i ) )
    {
      indices.push_back( i );
    }
  }
  return indices;
}

enum class carrier_kind : uint8_t
{
  ancilla, /* the control is an AND step; its target holds the value */
  pinned,  /* steered onto an input qubit */
  copy     /* materialized on a layer-local copy qubit */
};

struct control_plan
{
  uint32_t step;
  carrier_kind kind;
  uint32_t uses;
};

struct layer_plan
{
  uint32_t layer;
  std::vector<uint32_t> and_steps; /* ascending */
  std::vector<control_plan> controls;
  uint32_t copies{ 0u };
};

struct mapping_plan
{
  xag net; /* swept */
  schedule_kind schedule;
  uint32_t num_ands{ 0u };
  uint32_t interior_ancillae{ 0u };
  uint32_t max_copies{ 0u };
  uint32_t max_helpers{ 0u };
  std::vector<uint32_t> and_steps;
  std::vector<uint32_t> and_index;  /* step -> dense AND index */
  std::vector<int64_t> claimed_by;  /* AND index -> output index, -1 if interior */
  std::vector<layer_plan> layers;
  std::vector<bitrow> support; /* per step, over n + num_ands base values */
  resource_estimate estimate;
};

inline mapping_plan plan_mapping( xag const& input_net, schedule_kind schedule )
{
  if ( !is_normalized( input_net ) )
  {
    throw std::invalid_argument(
        "quantum mapper: network has complemented AND fanins; run propagate_inverters first" );
  }

  mapping_plan plan;
  plan.net = sweep_dead( input_net );
  plan.schedule = schedule;
  xag const& net = plan.net;
  const uint32_t n = net.num_inputs();

  const auto info = compute_levels( net );

  plan.and_index.assign( net.num_steps() + 1u, ~0u );
  net.foreach_gate( [&]( uint32_t step, xag::gate const& g ) {
    if ( g.op == gate_op::AND )
    {
      plan.and_index[step] = plan.num_ands;
      plan.and_steps.push_back( step );
      ++plan.num_ands;
    }
  } );

  /* flatten every step to a parity over inputs and AND outputs */
  const uint32_t dim = n + plan.num_ands;
  plan.support.assign( net.num_steps() + 1u, bitrow( dim ) );
  for ( uint32_t i = 1u; i <= n; ++i )
  {
    plan.support[i].flip( i - 1u );
  }
  net.foreach_gate( [&]( uint32_t step, xag::gate const& g ) {
    if ( g.op == gate_op::AND )
    {
      plan.support[step].flip( n + plan.and_index[step] );
    }
    else
    {
      plan.support[step] = plan.support[g.fanin0.step()];
      plan.support[step] ^= plan.support[g.fanin1.step()];
    }
  } );

  /* the first output rooted at an AND claims its target qubit */
  plan.claimed_by.assign( plan.num_ands, -1 );
  for ( uint32_t i = 0u; i < net.num_outputs(); ++i )
  {
    const auto root = net.output_signal( i ).step();
    if ( plan.and_index[root] != ~0u && plan.claimed_by[plan.and_index[root]] < 0 )
    {
      plan.claimed_by[plan.and_index[root]] = i;
    }
  }
  plan.interior_ancillae = 0u;
  for ( auto c : plan.claimed_by )
  {
    if ( c < 0 )
    {
      ++plan.interior_ancillae;
    }
  }

  /* group ANDs into layers */
  std::vector<std::pair<uint32_t, uint32_t>> layer_of; /* (layer, step) */
  for ( auto step : plan.and_steps )
  {
    const uint32_t layer =
        schedule == schedule_kind::asap ? info.level[step] : info.rlevel[step];
    layer_of.emplace_back( layer, step );
  }
  std::sort( layer_of.begin(), layer_of.end() );
  for ( auto const& [layer, step] : layer_of )
  {
    if ( plan.layers.empty() || plan.layers.back().layer != layer )
    {
      plan.layers.push_back( { layer, {}, {}, 0u } );
    }
    plan.layers.back().and_steps.push_back( step );
  }

  /* per layer: classify control carriers and count copies */
  for ( auto& lp : plan.layers )
  {
    std::vector<std::pair<uint32_t, uint32_t>> uses; /* (control step, count) */
    for ( auto step : lp.and_steps )
    {
      auto const& g = net.gate_at( step );
      for ( auto f : { g.fanin0, g.fanin1 } )
      {
        auto it = std::find_if( uses.begin(), uses.end(),
                                [&]( auto const& u ) { return u.first == f.step(); } );
        if ( it == uses.end() )
        {
          uses.emplace_back( f.step(), 1u );
        }
        else
        {
          ++it->second;
        }
      }
    }
    std::sort( uses.begin(), uses.end() );

    gf2_basis basis;
    for ( auto const& [step, count] : uses )
    {
      control_plan cp{ step, carrier_kind::copy, count };
      if ( plan.and_index[step] != ~0u )
      {
        cp.kind = carrier_kind::ancilla;
      }
      else
      {
        bitrow w( n );
        for ( uint32_t i = 0u; i < n; ++i )
        {
          if ( plan.support[step].get( i ) )
          {
            w.flip( i );
          }
        }
        if ( w.any() && basis.is_independent_and_insert( w ) )
        {
          cp.kind = carrier_kind::pinned;
        }
      }
      lp.copies += ( cp.kind == carrier_kind::copy ? 1u : 0u ) + ( count - 1u );
      lp.controls.push_back( cp );
    }
    plan.max_copies = std::max( plan.max_copies, lp.copies );
    plan.max_helpers = std::max( plan.max_helpers, static_cast<uint32_t>( lp.and_steps.size() ) );
  }

  plan.estimate.t_count = 4ull * plan.num_ands;
  plan.estimate.t_depth = static_cast<uint32_t>( plan.layers.size() );
  plan.estimate.qubits = n + net.num_outputs() + plan.interior_ancillae + plan.max_copies +
                         plan.max_helpers;
  plan.estimate.copy_qubits = plan.max_copies;
  plan.estimate.schedule = schedule;
  return plan;
}

} // namespace detail

/*! \brief Resource accounting without materializing gates. */
inline resource_estimate estimate_only( xag const& net, schedule_kind schedule )
{
  return detail::plan_mapping( net, schedule ).estimate;
}

/*! \brief Lowers a normalized XAG to a reversible gate list. */
inline std::pair<quantum_circuit, resource_estimate> map_to_circuit( xag const& input_net,
                                                                     schedule_kind schedule )
{
  auto plan = detail::plan_mapping( input_net, schedule );
  xag const& net = plan.net;
  const uint32_t n = net.num_inputs();
  const uint32_t n_out = net.num_outputs();

  quantum_circuit qc;
  qc.num_inputs = n;
  qc.helper_count = plan.max_helpers;
  qc.qubit_count = plan.estimate.qubits;

  /* layout: inputs | outputs | interior ancillae | copy pool | helpers */
  const uint32_t out_base = n;
  const uint32_t anc_base = out_base + n_out;
  const uint32_t copy_base = anc_base + plan.interior_ancillae;
  qc.output_qubits.resize( n_out );
  for ( uint32_t i = 0u; i < n_out; ++i )
  {
    qc.output_qubits[i] = out_base + i;
  }

  /* target qubit per AND: claimed output qubit or the next ancilla */
  std::vector<uint32_t> and_target( plan.num_ands );
  {
    uint32_t next_anc = anc_base;
    for ( uint32_t i = 0u; i < plan.num_ands; ++i )
    {
      and_target[i] = plan.claimed_by[i] >= 0
                          ? out_base + static_cast<uint32_t>( plan.claimed_by[i] )
                          : next_anc++;
    }
  }

  /* live row state of the input qubits over (inputs | AND outputs) */
  const uint32_t dim = n + plan.num_ands;
  std::vector<detail::bitrow> rows( n, detail::bitrow( dim ) );
  for ( uint32_t i = 0u; i < n; ++i )
  {
    rows[i].flip( i );
  }

  const auto input_parts = [&]() {
    std::vector<detail::bitrow> parts;
    parts.reserve( n );
    for ( auto const& r : rows )
    {
      parts.push_back( r.prefix( n ) );
    }
    return parts;
  };

  /* CNOTs that accumulate `value` onto a fresh qubit q; rows mix AND
     components in, so those are corrected alongside the requested ones */
  const auto accumulate = [&]( detail::bitrow const& value, uint32_t q,
                               std::vector<qgate>& ops ) {
    detail::bitrow acc( n + plan.num_ands );
    const auto w = value.prefix( n );
    if ( w.any() )
    {
      for ( auto r : detail::solve_combination( input_parts(), w ) )
      {
        ops.push_back( { qgate::kind::CNOT, r, 0u, q, 0u } );
        acc ^= rows[r];
      }
    }
    for ( uint32_t a = 0u; a < plan.num_ands; ++a )
    {
      if ( value.get( n + a ) != acc.get( n + a ) )
      {
        ops.push_back( { qgate::kind::CNOT, and_target[a], 0u, q, 0u } );
      }
    }
  };

  struct layer_ops
  {
    std::vector<qgate> prep;    /* steering CNOTs for pinned controls */
    std::vector<qgate> creates; /* copy-creation CNOTs */
    std::vector<qgate> ands;
  };
  std::vector<layer_ops> emitted;

  for ( auto const& lp : plan.layers )
  {
    layer_ops ops;
    std::vector<bool> pinned_row( n, false );
    std::vector<uint32_t> primary( net.num_steps() + 1u, ~0u );
    uint32_t next_copy = copy_base;

    /* primaries first: ancilla carriers are free, pinned values are
       steered in place, the rest goes to copy qubits */
    for ( auto const& cp : lp.controls )
    {
      if ( cp.kind == detail::carrier_kind::ancilla )
      {
        primary[cp.step] = and_target[plan.and_index[cp.step]];
        continue;
      }
      if ( cp.kind == detail::carrier_kind::pinned )
      {
        const auto w = plan.support[cp.step].prefix( n );
        const auto combo = detail::solve_combination( input_parts(), w );
        uint32_t target_row = ~0u;
        for ( auto r : combo )
        {
          if ( !pinned_row[r] )
          {
            target_row = r;
            break;
          }
        }
        assert( target_row != ~0u );
        for ( auto r : combo )
        {
          if ( r != target_row )
          {
            ops.prep.push_back( { qgate::kind::CNOT, r, 0u, target_row, 0u } );
            rows[target_row] ^= rows[r];
          }
        }
        /* correct the AND-output components */
        for ( uint32_t a = 0u; a < plan.num_ands; ++a )
        {
          if ( rows[target_row].get( n + a ) != plan.support[cp.step].get( n + a ) )
          {
            ops.prep.push_back( { qgate::kind::CNOT, and_target[a], 0u, target_row, 0u } );
            rows[target_row].flip( n + a );
          }
        }
        assert( rows[target_row] == plan.support[cp.step] );
        pinned_row[target_row] = true;
        primary[cp.step] = target_row;
        continue;
      }
      const uint32_t q = next_copy++;
      accumulate( plan.support[cp.step], q, ops.creates );
      primary[cp.step] = q;
    }

    /* assign carriers per use: the first use takes the primary, every
       further use within the layer gets a plain copy of it */
    std::vector<uint32_t> used( net.num_steps() + 1u, 0u );
    for ( auto step : lp.and_steps )
    {
      auto const& g = net.gate_at( step );
      uint32_t carrier[2];
      uint32_t slot = 0u;
      for ( auto f : { g.fanin0, g.fanin1 } )
      {
        if ( used[f.step()] == 0u )
        {
          carrier[slot] = primary[f.step()];
        }
        else
        {
          const uint32_t q = next_copy++;
          ops.creates.push_back( { qgate::kind::CNOT, primary[f.step()], 0u, q, 0u } );
          carrier[slot] = q;
        }
        ++used[f.step()];
        ++slot;
      }
      ops.ands.push_back(
          { qgate::kind::AND, carrier[0], carrier[1], and_target[plan.and_index[step]], lp.layer } );
    }
    assert( next_copy - copy_base == lp.copies );

    /* forward emission: prep, creates, ANDs, reclaim copies */
    for ( auto const& g : ops.prep )
    {
      qc.gates.push_back( g );
    }
    for ( auto const& g : ops.creates )
    {
      qc.gates.push_back( g );
    }
    for ( auto const& g : ops.ands )
    {
      qc.gates.push_back( g );
    }
    for ( auto it = ops.creates.rbegin(); it != ops.creates.rend(); ++it )
    {
      qc.gates.push_back( *it );
    }
    emitted.push_back( std::move( ops ) );
  }

  /* output stage: copy out everything that does not own an AND target */
  std::vector<qgate> final_x;
  for ( uint32_t i = 0u; i < n_out; ++i )
  {
    const auto o = net.output_signal( i );
    const uint32_t root = o.step();
    const uint32_t q = qc.output_qubits[i];
    const bool claimed = plan.and_index[root] != ~0u &&
                         plan.claimed_by[plan.and_index[root]] == static_cast<int64_t>( i );
    if ( claimed )
    {
      if ( o.complement() )
      {
        /* deferred past the mirror: interior reads need the plain value */
        final_x.push_back( { qgate::kind::X, 0u, 0u, q, 0u } );
      }
      continue;
    }
    if ( root != 0u )
    {
      std::vector<qgate> ops;
      accumulate( plan.support[root], q, ops );
      for ( auto const& g : ops )
      {
        qc.gates.push_back( g );
      }
    }
    if ( o.complement() )
    {
      qc.gates.push_back( { qgate::kind::X, 0u, 0u, q, 0u } );
    }
  }

  /* mirror: uncompute layers in reverse, restoring inputs and ancillae */
  for ( uint64_t li = emitted.size(); li-- > 0u; )
  {
    auto const& ops = emitted[li];
    for ( auto const& g : ops.creates )
    {
      qc.gates.push_back( g );
    }
    for ( auto it = ops.ands.rbegin(); it != ops.ands.rend(); ++it )
    {
      /* claimed outputs keep their value; everything else is uncomputed */
      if ( it->target >= anc_base )
      {
        qc.gates.push_back( { qgate::kind::UNAND, it->c0, it->c1, it->target, it->layer } );
      }
    }
    for ( auto it = ops.creates.rbegin(); it != ops.creates.rend(); ++it )
    {
      qc.gates.push_back( *it );
    }
    for ( auto it = ops.prep.rbegin(); it != ops.prep.rend(); ++it )
    {
      qc.gates.push_back( *it );
    }
  }

  for ( auto const& g : final_x )
  {
    qc.gates.push_back( g );
  }

  return { std::move( qc ), plan.estimate };
}

struct circuit_sim_result
{
  std::vector<bool> outputs;
  bool ancillae_clean{ false };
};

/*! \brief Classical simulation of the reversible gate list.
 *
 * Throws when an AND gate targets a non-zero qubit (the gadget requires
 * a clean target).  ancillae_clean reports whether every non-output
 * qubit ended in its initial state.
 */
inline circuit_sim_result simulate_circuit( quantum_circuit const& qc,
                                            std::vector<bool> const& inputs )
{
  if ( inputs.size() != qc.num_inputs )
  {
    throw std::invalid_argument( "simulate_circuit: wrong input length" );
  }
  std::vector<uint8_t> state( qc.qubit_count, 0u );
  for ( uint32_t i = 0u; i < qc.num_inputs; ++i )
  {
    state[i] = inputs[i] ? 1u : 0u;
  }

  for ( uint64_t idx = 0u; idx < qc.gates.size(); ++idx )
  {
    auto const& g = qc.gates[idx];
    switch ( g.op )
    {
    case qgate::kind::X:
      state[g.target] ^= 1u;
      break;
    case qgate::kind::CNOT:
      state[g.target] ^= state[g.c0];
      break;
    case qgate::kind::AND:
      if ( state[g.target] != 0u )
      {
        throw std::runtime_error( "simulate_circuit: AND onto non-zero target at gate index " +
                                  std::to_string( idx ) );
      }
      state[g.target] = state[g.c0] & state[g.c1];
      break;
    case qgate::kind::UNAND:
      state[g.target] ^= state[g.c0] & state[g.c1];
      break;
    }
  }

  circuit_sim_result result;
  std::vector<bool> is_output( qc.qubit_count, false );
  for ( auto q : qc.output_qubits )
  {
    is_output[q] = true;
  }
  result.outputs.reserve( qc.output_qubits.size() );
  for ( auto q : qc.output_qubits )
  {
    result.outputs.push_back( state[q] != 0u );
  }
  result.ancillae_clean = true;
  for ( uint32_t q = 0u; q < qc.qubit_count; ++q )
  {
    if ( is_output[q] )
    {
      continue;
    }
    const uint8_t expected = q < qc.num_inputs ? ( inputs[q] ? 1u : 0u ) : 0u;
    if ( state[q] != expected )
    {
      result.ancillae_clean = false;
    }
  }
  return result;
}

} // namespace xagdepth
