#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "support.hpp"

#include <revhash/errors.hpp>
#include <revhash/esop.hpp>
#include <revhash/pla_io.hpp>
#include <revhash/sim.hpp>
#include <revhash/synth.hpp>

using namespace revhash;

namespace
{

circuit synth_file( std::filesystem::path const& path )
{
  return synthesize( minimize( from_pla( read_pla_file( path ).function ) ) );
}

circuit and_circuit() { return circuit{2, 1, {gate::make( 2, {0, 1} )}, {}}; }

} // namespace

TEST_CASE( "apply_gate on the basic gates" )
{
  CHECK( apply_gate( bit_vector::from_string( "111" ), gate::make( 2, {0, 1} ) ).to_string() == "110" );
  CHECK( apply_gate( bit_vector::from_string( "110" ), gate::make( 2, {0, 1} ) ).to_string() == "111" );
  CHECK( apply_gate( bit_vector::from_string( "101" ), gate::make( 2, {0, 1} ) ).to_string() == "101" );
  CHECK( apply_gate( bit_vector::from_string( "10" ), gate::make( 1, {0} ) ).to_string() == "11" );
  CHECK( apply_gate( bit_vector::from_string( "00" ), gate::make( 1, {0} ) ).to_string() == "00" );
  CHECK( apply_gate( bit_vector::from_string( "0" ), gate::make_not( 0 ) ).to_string() == "1" );
  CHECK( apply_gate( bit_vector::from_string( "01" ), gate::make( 1, {}, {0} ) ).to_string() == "00" );
  CHECK_THROWS_AS( apply_gate( bit_vector::from_string( "01" ), gate::make( 2, {0} ) ), input_error );
}

TEST_CASE( "run the 4-bit example hash" )
{
  auto const c = synth_file( oracle::corpus_dir() / "examples" / "hash4.pla" );
  auto const out = run( c, bit_vector::from_string( "01100000" ) );
  CHECK( out.to_string() == "01101001" );

  circuit const empty{2, 2, {}, {}};
  CHECK( run( empty, bit_vector::from_string( "1011" ) ).to_string() == "1011" );
  CHECK_THROWS_AS( run( empty, bit_vector::from_string( "101" ) ), input_error );

  std::mt19937_64 rng( 7 );
  for ( int i = 0; i < 100; ++i )
  {
    auto const s = bit_vector::from_numeral( rng() & 0xFF, 8 );
    CHECK( run( reverse( c ), run( c, s ) ) == s );
  }
}

TEST_CASE( "truth_table" )
{
  CHECK( truth_table( and_circuit() ) == std::vector<uint64_t>{0, 0, 0, 1} );
  auto const h4 = truth_table( synth_file( oracle::corpus_dir() / "examples" / "hash4.pla" ) );
  CHECK( h4[0b0110] == 0b1001 );
  CHECK( h4 == oracle::complement4() );
  CHECK( truth_table( circuit{3, 2, {}, {}} ) == std::vector<uint64_t>( 8, 0 ) );
  CHECK_THROWS_AS( truth_table( circuit{25, 1, {}, {}} ), resource_error );
}

TEST_CASE( "run_batch matches the reference simulator on a wide circuit" )
{
  // 70 lines exercises the multi-word path of bit_vector as well
  circuit c{66, 4, {}, {}};
  std::mt19937_64 rng( 11 );
  for ( int i = 0; i < 200; ++i )
  {
    auto const target = static_cast<uint32_t>( rng() % 70 );
    std::vector<uint32_t> pos, neg;
    for ( uint32_t l = 0; l < 70; ++l )
      if ( l != target && rng() % 20 == 0 )
        ( rng() & 1 ? pos : neg ).push_back( l );
    c.gates.push_back( gate::make( target, pos, neg ) );
  }
  std::vector<uint64_t> lines( 70 );
  for ( auto& w : lines )
    w = rng();
  auto const initial = lines;
  run_batch( c, lines );
  for ( uint32_t lane = 0; lane < 64; ++lane )
  {
    std::vector<bool> s( 70 );
    bit_vector v( 70 );
    for ( uint32_t k = 0; k < 70; ++k )
    {
      s[k] = ( initial[k] >> lane ) & 1;
      v.set( k, s[k] );
    }
    auto const want = support::reference_run( c, s );
    auto const got = run( c, v );
    for ( uint32_t k = 0; k < 70; ++k )
    {
      REQUIRE( ( ( lines[k] >> lane ) & 1 ) == want[k] );
      REQUIRE( got.get( k ) == want[k] );
    }
  }
}

TEST_CASE( "verify_identity" )
{
  auto const c = synth_file( oracle::corpus_dir() / "examples" / "hash4.pla" );
  auto const ok = verify_identity( c, reverse( c ) );
  CHECK( ok.pass );
  CHECK( ok.states_checked == 256 );
  CHECK( ok.mode == verify_mode::exhaustive );

  auto const a = verify_identity( and_circuit(), reverse( and_circuit() ) );
  CHECK( a.pass );
  CHECK( a.states_checked == 8 );

  // forward with one gate deleted, paired with the reversal of the original
  auto broken = c;
  broken.gates.erase( broken.gates.begin() );
  auto const bad = verify_identity( broken, reverse( c ) );
  CHECK_FALSE( bad.pass );
  REQUIRE( bad.counterexample );
  auto const witness = bit_vector::from_string( *bad.counterexample );
  CHECK( run( reverse( c ), run( broken, witness ) ) != witness );

  auto const sampled = verify_identity( c, reverse( c ), sampling{1000, 42} );
  CHECK( sampled.pass );
  CHECK( sampled.mode == verify_mode::sampled );
  CHECK( sampled.states_checked == 1000 );
  CHECK( sampled.seed == 42u );
  CHECK_FALSE( verify_identity( broken, reverse( c ), sampling{1000, 42} ).pass );

  CHECK_THROWS_AS( verify_identity( c, and_circuit() ), input_error );
  CHECK_THROWS_AS( verify_identity( c, reverse( c ), 4 ), resource_error );
  auto const json = ok.to_json();
  CHECK( json["pass"] == true );
  CHECK( json["states_checked"] == 256 );
}

TEST_CASE( "verify_against_spec" )
{
  auto const and_f = read_pla_file( oracle::corpus_dir() / "examples" / "and.pla" ).function;
  CHECK( verify_against_spec( synthesize( from_pla( and_f ) ), and_f ).pass );

  auto const aes_path = oracle::corpus_dir() / "bench" / "11_aes_sbox.pla";
  auto const aes_f = read_pla_file( aes_path ).function;
  auto const c = synth_file( aes_path );
  auto const report = verify_against_spec( c, aes_f );
  CHECK( report.pass );
  CHECK( report.states_checked == 256 );
  CHECK( truth_table( c ) == oracle::aes_sbox() );

  auto broken = c;
  broken.gates.erase( broken.gates.begin() + 5 );
  auto const bad = verify_against_spec( broken, aes_f );
  CHECK_FALSE( bad.pass );
  CHECK( bad.mismatch_count > 0 );
  REQUIRE_FALSE( bad.mismatches.empty() );
  auto const x = string_to_numeral( bad.mismatches[0][0] );
  CHECK( string_to_numeral( bad.mismatches[0][1] ) == oracle::aes_sbox()[x] );
  CHECK( string_to_numeral( bad.mismatches[0][2] ) == truth_table( broken )[x] );
  CHECK( bad.to_json()["mismatch_count"] == bad.mismatch_count );

  CHECK_THROWS_AS( verify_against_spec( and_circuit(), aes_f ), input_error );
}
