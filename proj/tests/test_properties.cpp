#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

#include <revhash/analyze.hpp>
#include <revhash/esop.hpp>
#include <revhash/invert.hpp>
#include <revhash/pla_io.hpp>
#include <revhash/sim.hpp>
#include <revhash/synth.hpp>

#include <cstdlib>

using namespace revhash;

// Randomized invariants.  Every property runs `cases` instances from a
// logged base seed; set REVHASH_PROPERTY_SEED to replay a run.

namespace
{

constexpr int cases = 10000;

uint64_t base_seed( uint64_t fallback )
{
  if ( auto const* env = std::getenv( "REVHASH_PROPERTY_SEED" ) )
    return std::strtoull( env, nullptr, 10 );
  return fallback;
}

uint32_t pick( std::mt19937_64& rng, uint32_t lo, uint32_t hi )
{
  return lo + static_cast<uint32_t>( rng() % ( hi - lo + 1 ) );
}

gate random_gate( std::mt19937_64& rng, uint32_t width, uint32_t max_controls = 4 )
{
  auto const target = pick( rng, 0, width - 1 );
  std::vector<uint32_t> pos, neg;
  auto const wanted = pick( rng, 0, std::min( max_controls, width - 1 ) );
  std::vector<uint32_t> lines;
  for ( uint32_t l = 0; l < width; ++l )
    if ( l != target )
      lines.push_back( l );
  std::shuffle( lines.begin(), lines.end(), rng );
  for ( uint32_t k = 0; k < wanted; ++k )
    ( rng() & 1 ? pos : neg ).push_back( lines[k] );
  return gate::make( target, pos, neg );
}

circuit random_circuit( std::mt19937_64& rng, uint32_t n, uint32_t m, uint32_t gates, uint32_t not_percent = 30 )
{
  circuit c{n, m, {}, {}};
  for ( uint32_t i = 0; i < gates; ++i )
  {
    if ( rng() % 100 < not_percent )
      c.gates.push_back( gate::make_not( pick( rng, 0, c.width() - 1 ) ) );
    else
      c.gates.push_back( random_gate( rng, c.width() ) );
  }
  return c;
}

cube random_cube( std::mt19937_64& rng, uint32_t n, uint32_t m, uint32_t dash_percent = 35, bool allow_zero = true )
{
  cube c;
  for ( uint32_t k = 0; k < n; ++k )
  {
    if ( rng() % 100 < dash_percent )
      continue;
    c.set_input( k, n, rng() & 1 ? literal::one : literal::zero );
  }
  do
    c.outputs = rng() & low_mask( m );
  while ( !allow_zero && c.outputs == 0 );
  return c;
}

pla_function random_pla( std::mt19937_64& rng, uint32_t n, uint32_t m, uint32_t rows, cover_semantics sem )
{
  pla_function f;
  f.num_inputs = n;
  f.num_outputs = m;
  f.semantics = sem;
  for ( uint32_t i = 0; i < rows; ++i )
    f.cubes.push_back( random_cube( rng, n, m ) );
  // duplicates exercise cancellation and deduplication
  if ( rows > 1 && rng() % 4 == 0 )
    f.cubes.push_back( f.cubes[rng() % f.cubes.size()] );
  return f;
}

esop_cover random_esop( std::mt19937_64& rng, uint32_t n, uint32_t m, uint32_t rows )
{
  esop_cover c{n, m, {}};
  for ( uint32_t i = 0; i < rows; ++i )
    c.cubes.push_back( random_cube( rng, n, m, 30, false ) );
  if ( rows > 1 && rng() % 4 == 0 )
    c.cubes.push_back( c.cubes[rng() % c.cubes.size()] );
  return c;
}

// character-level XOR oracle, independent of cube::matches
uint64_t xor_oracle( std::vector<cube> const& cubes, uint32_t n, uint32_t m, uint64_t x, bool inclusive = false )
{
  uint64_t y = 0;
  for ( auto const& q : cubes )
  {
    auto const in = q.inputs_string( n );
    bool match = true;
    for ( uint32_t k = 0; k < n && match; ++k )
      match = in[k] == '-' || in[k] == ( ( ( x >> ( n - 1 - k ) ) & 1 ) ? '1' : '0' );
    if ( !match )
      continue;
    auto const out = string_to_numeral( q.outputs_string( m ) );
    y = inclusive ? ( y | out ) : ( y ^ out );
  }
  return y;
}

state random_state( std::mt19937_64& rng, uint32_t width )
{
  state s( width );
  for ( uint32_t k = 0; k < width; ++k )
    s.set( k, rng() & 1 );
  return s;
}

std::vector<bool> bools_of( state const& s )
{
  std::vector<bool> out( s.size() );
  for ( uint32_t k = 0; k < s.size(); ++k )
    out[k] = s.get( k );
  return out;
}

} // namespace

TEST_CASE( "property: gate application is an involution" )
{
  auto rng = support::seeded( "gate involution", base_seed( 1001 ) );
  for ( int i = 0; i < cases; ++i )
  {
    auto const width = pick( rng, 1, 130 );
    auto const g = random_gate( rng, width, 8 );
    auto const s = random_state( rng, width );
    REQUIRE( apply_gate( apply_gate( s, g ), g ) == s );
    REQUIRE( bools_of( apply_gate( s, g ) ) == support::reference_run( circuit{width, 0, {g}, {}}, bools_of( s ) ) );
  }
}

TEST_CASE( "property: reversal applied twice is the identity" )
{
  auto rng = support::seeded( "double reversal", base_seed( 1002 ) );
  for ( int i = 0; i < cases; ++i )
  {
    auto const n = pick( rng, 1, 10 );
    auto const m = pick( rng, 1, 10 );
    auto const c = random_circuit( rng, n, m, pick( rng, 0, 30 ) );
    REQUIRE( reverse( reverse( c ) ) == c );
    auto const s = random_state( rng, c.width() );
    REQUIRE( run( reverse( c ), run( c, s ) ) == s );
    REQUIRE( run( c, run( reverse( c ), s ) ) == s );
  }
}

TEST_CASE( "property: rewrites preserve semantics" )
{
  auto rng = support::seeded( "rewrite preservation", base_seed( 1003 ) );
  for ( int i = 0; i < cases; ++i )
  {
    auto const n = pick( rng, 1, 5 );
    auto const m = pick( rng, 1, 4 );
    auto const c = random_circuit( rng, n, m, pick( rng, 0, 24 ), 40 );
    auto const expanded = expand_negative_controls( c );
    auto const cleaned = remove_superfluous_nots( c );
    auto const both = remove_superfluous_nots( expanded );
    for ( auto const& g : expanded.gates )
      REQUIRE( g.negative_controls.empty() );
    REQUIRE( cleaned.gates.size() <= c.gates.size() );
    REQUIRE( stats( c ).total == both.gates.size() );
    // small widths: every state
    for ( uint64_t x = 0; x < ( uint64_t{1} << c.width() ); ++x )
    {
      auto const s = support::to_bools( x, c.width() );
      auto const want = support::reference_run( c, s );
      REQUIRE( support::reference_run( expanded, s ) == want );
      REQUIRE( support::reference_run( cleaned, s ) == want );
      REQUIRE( support::reference_run( both, s ) == want );
    }
  }
}

TEST_CASE( "property: minterm expansion is sound under the declared semantics" )
{
  auto rng = support::seeded( "expansion soundness", base_seed( 1004 ) );
  for ( int i = 0; i < cases; ++i )
  {
    auto const n = pick( rng, 1, 7 );
    auto const m = pick( rng, 1, 4 );
    auto const sem = rng() & 1 ? cover_semantics::exclusive_or : cover_semantics::inclusive_or;
    auto const f = random_pla( rng, n, m, pick( rng, 0, 10 ), sem );
    auto const e = expand_to_minterms( f );
    for ( auto const& c : e.cubes )
      REQUIRE( c.num_literals() == n );
    bool const inclusive = sem == cover_semantics::inclusive_or;
    for ( uint64_t x = 0; x < ( uint64_t{1} << n ); ++x )
    {
      auto const want = xor_oracle( f.cubes, n, m, x, inclusive );
      REQUIRE( evaluate_pla( f, x, sem ) == want );
      REQUIRE( evaluate_pla( e, x, sem ) == want );
    }
  }
}

TEST_CASE( "property: disjoint covers evaluate the same under OR and XOR" )
{
  auto rng = support::seeded( "disjoint OR equals XOR", base_seed( 1005 ) );
  for ( int i = 0; i < cases; ++i )
  {
    auto const n = pick( rng, 1, 8 );
    auto const m = pick( rng, 1, 4 );
    auto const f = random_pla( rng, n, m, pick( rng, 0, 10 ), cover_semantics::inclusive_or );
    auto const disjoint = from_pla( f );
    auto const g = to_pla( disjoint );
    for ( uint64_t x = 0; x < ( uint64_t{1} << n ); ++x )
      REQUIRE( evaluate_pla( g, x, cover_semantics::inclusive_or ) == evaluate_pla( g, x, cover_semantics::exclusive_or ) );
  }
}

TEST_CASE( "property: from_pla is sound" )
{
  auto rng = support::seeded( "from_pla soundness", base_seed( 1006 ) );
  for ( int i = 0; i < cases; ++i )
  {
    auto const n = pick( rng, 1, 9 );
    auto const m = pick( rng, 1, 5 );
    auto const sem = rng() % 4 == 0 ? cover_semantics::exclusive_or : cover_semantics::inclusive_or;
    auto const f = random_pla( rng, n, m, pick( rng, 0, 12 ), sem );
    auto const c = from_pla( f );
    for ( auto const& q : c.cubes )
      REQUIRE( q.outputs != 0 );
    for ( uint64_t x = 0; x < ( uint64_t{1} << n ); ++x )
      REQUIRE( evaluate_esop( c, x ) == xor_oracle( f.cubes, n, m, x, sem == cover_semantics::inclusive_or ) );
  }
}

TEST_CASE( "property: minimize preserves the function and never adds cubes" )
{
  auto rng = support::seeded( "minimizer equivalence and monotonicity", base_seed( 1007 ) );
  int fixpoints = 0;
  for ( int i = 0; i < cases; ++i )
  {
    auto const n = pick( rng, 1, 7 );
    auto const m = pick( rng, 1, 4 );
    auto const before = random_esop( rng, n, m, pick( rng, 0, 16 ) );
    minimize_stats s;
    auto const after = minimize( before, {}, &s );
    REQUIRE( after.cubes.size() <= before.cubes.size() );
    REQUIRE( cost( after ).output_ones <= cost( before ).output_ones + cost( before ).cube_count * m );
    for ( uint64_t x = 0; x < ( uint64_t{1} << n ); ++x )
      REQUIRE( xor_oracle( after.cubes, n, m, x ) == xor_oracle( before.cubes, n, m, x ) );
    if ( s.fixpoint )
    {
      ++fixpoints;
      REQUIRE( minimize( after ).cubes.size() == after.cubes.size() );
    }
  }
  MESSAGE( "idempotence checked on " << fixpoints << " fixpoint runs" );
  CHECK( fixpoints > cases / 2 );
}

TEST_CASE( "property: minimize on full truth tables" )
{
  auto rng = support::seeded( "minimizer on random tables", base_seed( 1008 ) );
  for ( int i = 0; i < cases / 10; ++i )
  {
    auto const n = pick( rng, 2, 6 );
    auto const m = pick( rng, 1, 4 );
    pla_function f;
    f.num_inputs = n;
    f.num_outputs = m;
    for ( uint64_t x = 0; x < ( uint64_t{1} << n ); ++x )
      f.cubes.push_back( cube{low_mask( n ), x, rng() & low_mask( m )} );
    auto const before = from_pla( f );
    auto const after = minimize( before );
    REQUIRE( after.cubes.size() <= before.cubes.size() );
    for ( uint64_t x = 0; x < ( uint64_t{1} << n ); ++x )
      REQUIRE( evaluate_esop( after, x ) == f.cubes[x].outputs );
  }
}

TEST_CASE( "property: synthesized circuits compute the cover and keep inputs" )
{
  auto rng = support::seeded( "synthesis correctness", base_seed( 1009 ) );
  for ( int i = 0; i < cases; ++i )
  {
    auto const n = pick( rng, 1, 7 );
    auto const m = pick( rng, 1, 5 );
    auto const c = random_esop( rng, n, m, pick( rng, 0, 10 ) );
    auto const circ = synthesize( c );
    REQUIRE( circ.gates.size() == cost( c ).output_ones );
    for ( auto const& g : circ.gates )
      REQUIRE( circ.is_output_line( g.target ) );
    for ( uint64_t x = 0; x < ( uint64_t{1} << n ); ++x )
    {
      auto const out = support::reference_run( circ, support::to_bools( x << m, circ.width() ) );
      REQUIRE( support::to_numeral( out, 0, n ) == x );
      REQUIRE( support::to_numeral( out, n, m ) == xor_oracle( c.cubes, n, m, x ) );
    }
  }
}

TEST_CASE( "property: batch simulation agrees with single-state simulation" )
{
  auto rng = support::seeded( "batch simulation", base_seed( 1010 ) );
  for ( int i = 0; i < cases; ++i )
  {
    auto const n = pick( rng, 1, 12 );
    auto const m = pick( rng, 1, 8 );
    auto const c = random_circuit( rng, n, m, pick( rng, 0, 20 ) );
    std::vector<uint64_t> lines( c.width() );
    for ( auto& w : lines )
      w = rng();
    auto const initial = lines;
    run_batch( c, lines );
    auto const lane = static_cast<uint32_t>( rng() % 64 );
    state s( c.width() );
    for ( uint32_t k = 0; k < c.width(); ++k )
      s.set( k, ( initial[k] >> lane ) & 1 );
    auto const out = run( c, s );
    for ( uint32_t k = 0; k < c.width(); ++k )
      REQUIRE( ( ( lines[k] >> lane ) & 1 ) == out.get( k ) );
  }
}

TEST_CASE( "property: gates on disjoint lines commute" )
{
  auto rng = support::seeded( "disjoint gates commute", base_seed( 1011 ) );
  for ( int i = 0; i < cases; ++i )
  {
    auto const width = pick( rng, 2, 16 );
    auto const a = random_gate( rng, width );
    auto b = random_gate( rng, width );
    if ( b.touches( a.target ) || a.touches( b.target ) )
      continue;
    auto const s = random_state( rng, width );
    REQUIRE( run( circuit{width, 0, {a, b}, {}}, s ) == run( circuit{width, 0, {b, a}, {}}, s ) );
  }
}

TEST_CASE( "property: deduction agrees with brute force" )
{
  auto rng = support::seeded( "deduction oracle agreement", base_seed( 1012 ) );
  for ( int i = 0; i < cases; ++i )
  {
    auto const n = pick( rng, 1, 8 );
    auto const m = pick( rng, 1, 5 );
    auto c = synthesize( random_esop( rng, n, m, pick( rng, 0, 12 ) ) );
    if ( rng() % 3 == 0 )
      c = remove_superfluous_nots( expand_negative_controls( c ) );
    auto const target = rng() & low_mask( m );
    auto const init = rng() % 4 == 0 ? rng() & low_mask( m ) : 0;
    auto const r = preimages_deduce( c, target, deduction_params{init, false} );
    std::vector<uint64_t> want;
    for ( uint64_t x = 0; x < ( uint64_t{1} << n ); ++x )
      if ( ( support::reference_output( c, x ) ^ init ) == target )
        want.push_back( x );
    REQUIRE( r.preimages == want );
    auto const again = preimages_deduce( c, target, deduction_params{init, false} );
    REQUIRE( again.branches == r.branches );
    REQUIRE( again.propagations == r.propagations );
    auto const first = preimage_one( c, target, deduction_params{init, false} );
    REQUIRE( first.has_value() == !want.empty() );
    if ( first )
      REQUIRE( *first == want.front() );
  }
}

TEST_CASE( "property: collision groups partition the input space" )
{
  auto rng = support::seeded( "collision partition", base_seed( 1013 ) );
  for ( int i = 0; i < cases; ++i )
  {
    auto const n = pick( rng, 1, 8 );
    auto const m = pick( rng, 1, 8 );
    auto const f = random_pla( rng, n, m, pick( rng, 0, 10 ), cover_semantics::inclusive_or );
    auto const r = collision_scan( f );
    uint64_t total = 0;
    for ( auto const& [y, xs] : r.buckets )
    {
      total += xs.size();
      for ( auto x : xs )
        REQUIRE( evaluate_pla( f, x, f.semantics ) == y );
    }
    REQUIRE( total == ( uint64_t{1} << n ) );
    REQUIRE( r.injective == ( r.buckets.size() == ( uint64_t{1} << n ) ) );
  }
}

TEST_CASE( "property: .pla text round trip" )
{
  auto rng = support::seeded( "pla round trip", base_seed( 1014 ) );
  for ( int i = 0; i < cases; ++i )
  {
    auto const n = pick( rng, 1, 20 );
    auto const m = pick( rng, 1, 20 );
    auto const sem = rng() & 1 ? cover_semantics::exclusive_or : cover_semantics::inclusive_or;
    auto f = random_pla( rng, n, m, pick( rng, 0, 8 ), sem );
    if ( rng() & 1 )
    {
      for ( uint32_t k = 0; k < n; ++k )
        f.input_labels.push_back( "x" + std::to_string( k ) );
      for ( uint32_t j = 0; j < m; ++j )
        f.output_labels.push_back( "y" + std::to_string( j ) );
    }
    REQUIRE( parse_pla( write_pla( f ) ).function == f );
  }
}
