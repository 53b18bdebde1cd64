// revhash: synthesize, reverse, simulate, invert, verify, and benchmark
// reversible circuits for small hash functions given as .pla files.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <revhash/analyze.hpp>
#include <revhash/circuit_io.hpp>
#include <revhash/errors.hpp>
#include <revhash/esop.hpp>
#include <revhash/invert.hpp>
#include <revhash/pla_io.hpp>
#include <revhash/sim.hpp>
#include <revhash/synth.hpp>

namespace fs = std::filesystem;
using namespace revhash;

namespace
{

enum exit_code : int
{
  exit_ok = 0,
  exit_input = 1,
  exit_resource = 2,
  exit_verification = 3
};

class verification_failure : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

struct common_options
{
  std::string format = "text";
  uint32_t exhaustive_limit = default_limits().input_bits;
  uint32_t identity_limit = default_limits().state_bits;
  bool no_minimize = false;
  uint32_t effort = minimize_params{}.effort;

  bool json() const { return format == "json"; }
  /* human-readable text goes to stderr when stdout carries JSON */
  std::ostream& human() const { return json() ? std::cerr : std::cout; }
};

struct loaded
{
  circuit circ;
  std::optional<pla_function> function;
  std::optional<cover_cost> cost_before;
  std::optional<cover_cost> cost_after;
};

void print_warnings( std::vector<std::string> const& warnings, fs::path const& path )
{
  for ( auto const& w : warnings )
    std::cerr << path.string() << ": warning: " << w << '\n';
}

loaded synthesize_file( fs::path const& path, common_options const& opts )
{
  auto parsed = read_pla_file( path );
  print_warnings( parsed.warnings, path );
  loaded result;
  auto cover = from_pla( parsed.function );
  result.cost_before = cost( cover );
  if ( !opts.no_minimize )
    cover = minimize( cover, minimize_params{opts.effort} );
  result.cost_after = cost( cover );
  result.circ = synthesize( cover );
  result.circ.name = parsed.function.name;
  result.function = std::move( parsed.function );
  return result;
}

/* A `.pla` is synthesized; `.real` and `.json` are read as circuits. */
loaded load_any( fs::path const& path, common_options const& opts )
{
  if ( path.extension() == ".pla" )
    return synthesize_file( path, opts );
  loaded result;
  result.circ = read_circuit_file( path );
  return result;
}

void write_text_file( fs::path const& path, std::string const& text )
{
  std::ofstream out( path, std::ios::binary );
  if ( !out )
    throw input_error( "cannot write " + path.string() );
  out << text;
}

void write_circuit( circuit const& c, fs::path const& path )
{
  if ( path.extension() == ".json" )
    write_text_file( path, circuit_to_json( c ).dump( 2 ) + '\n' );
  else
    write_text_file( path, write_real( c ) );
}

nlohmann::json stats_json( gate_stats const& s )
{
  nlohmann::json doc;
  doc["total"] = s.total;
  doc["native"] = s.native;
  doc["not"] = s.nots();
  doc["cnot"] = s.cnots();
  doc["toffoli"] = s.toffolis();
  doc["generalized_toffoli"] = s.generalized_toffolis();
  auto& by = doc["by_controls"] = nlohmann::json::object();
  for ( auto const& [k, count] : s.by_controls )
    by[std::to_string( k )] = count;
  return doc;
}

nlohmann::json cost_json( cover_cost const& c )
{
  return {{"cube_count", c.cube_count}, {"literal_count", c.literal_count}, {"output_ones", c.output_ones}};
}

void print_stats( std::ostream& os, gate_stats const& s )
{
  os << "gates: " << s.total << " (native " << s.native << "; NOT " << s.nots() << ", CNOT " << s.cnots()
     << ", Toffoli " << s.toffolis() << ", generalized " << s.generalized_toffolis() << ")\n";
}

uint64_t parse_bits_for( std::string const& bits, uint32_t width, char const* what )
{
  if ( bits.size() != width )
    throw input_error( std::string( what ) + " '" + bits + "' has " + std::to_string( bits.size() ) +
                       " bits, expected " + std::to_string( width ) );
  return string_to_numeral( bits );
}

/* ---- subcommands ---- */

int cmd_synth( common_options const& opts, fs::path const& input, std::optional<fs::path> prefix )
{
  auto const l = synthesize_file( input, opts );
  auto const base = prefix ? *prefix : fs::path( input ).replace_extension();
  auto const real_path = fs::path( base.string() + ".real" );
  auto const json_path = fs::path( base.string() + ".json" );
  write_circuit( l.circ, real_path );
  write_circuit( l.circ, json_path );
  auto const s = stats( l.circ );

  auto& os = opts.human();
  os << l.circ.name << ": " << l.circ.num_inputs << " inputs, " << l.circ.num_outputs << " outputs\n";
  os << "cubes: " << l.cost_before->cube_count << " -> " << l.cost_after->cube_count
     << ( opts.no_minimize ? " (minimization skipped)" : "" ) << '\n';
  print_stats( os, s );
  os << "wrote " << real_path.string() << " and " << json_path.string() << '\n';
  if ( opts.json() )
  {
    nlohmann::json doc;
    doc["name"] = l.circ.name;
    doc["n"] = l.circ.num_inputs;
    doc["m"] = l.circ.num_outputs;
    doc["minimized"] = !opts.no_minimize;
    doc["cover_before"] = cost_json( *l.cost_before );
    doc["cover_after"] = cost_json( *l.cost_after );
    doc["gates"] = stats_json( s );
    doc["outputs"] = {{"real", real_path.string()}, {"json", json_path.string()}};
    std::cout << doc.dump( 2 ) << '\n';
  }
  return exit_ok;
}

int cmd_reverse( common_options const& opts, fs::path const& input, fs::path const& output )
{
  auto const l = load_any( input, opts );
  auto const rev = reverse( l.circ );
  write_circuit( rev, output );
  opts.human() << "reversed " << rev.gates.size() << " gates into " << output.string() << '\n';
  if ( opts.json() )
    std::cout << nlohmann::json{{"output", output.string()}, {"gates", rev.gates.size()}}.dump( 2 ) << '\n';
  return exit_ok;
}

int cmd_simulate( common_options const& opts, fs::path const& input, std::string const& bits, std::string const& init )
{
  auto const l = load_any( input, opts );
  auto const& c = l.circ;
  state s( c.width() );
  s.assign_numeral( 0, c.num_inputs, parse_bits_for( bits, c.num_inputs, "input" ) );
  if ( !init.empty() )
    s.assign_numeral( c.num_inputs, c.num_outputs, parse_bits_for( init, c.num_outputs, "init" ) );
  auto const out = run( c, s );
  auto const y = numeral_to_string( out.slice_numeral( c.num_inputs, c.num_outputs ), c.num_outputs );
  opts.human() << bits << " -> " << y << "  (final state " << out.to_string() << ")\n";
  if ( opts.json() )
    std::cout << nlohmann::json{{"input", bits}, {"output", y}, {"initial_state", s.to_string()}, {"final_state", out.to_string()}}.dump( 2 )
              << '\n';
  return exit_ok;
}

int cmd_invert( common_options const& opts, fs::path const& input, std::string const& target_bits, bool brute,
                bool crosscheck, std::string const& init, bool first_only )
{
  auto const l = load_any( input, opts );
  auto const& c = l.circ;
  auto const target = parse_bits_for( target_bits, c.num_outputs, "target" );
  deduction_params params;
  params.first_only = first_only;
  if ( !init.empty() )
    params.output_init = parse_bits_for( init, c.num_outputs, "init" );

  preimage_result result;
  if ( brute )
  {
    if ( params.output_init != 0 )
      throw input_error( "--init is only supported with deduction" );
    result = l.function ? preimages_bruteforce( *l.function, target, opts.exhaustive_limit )
                        : preimages_bruteforce( c, target, opts.exhaustive_limit );
  }
  else
    result = preimages_deduce( c, target, params );

  auto doc = result.to_json();
  bool const check = !brute && crosscheck && !first_only && params.output_init == 0 && c.num_inputs <= 16;
  if ( check )
  {
    auto const oracle = l.function ? preimages_bruteforce( *l.function, target, opts.exhaustive_limit )
                                   : preimages_bruteforce( c, target, opts.exhaustive_limit );
    doc["crosscheck"] = oracle.preimages == result.preimages ? "agree" : "disagree";
    if ( oracle.preimages != result.preimages )
    {
      std::cerr << "deduction disagrees with brute force for target " << target_bits << '\n';
      if ( opts.json() )
        std::cout << doc.dump( 2 ) << '\n';
      return exit_verification;
    }
  }

  auto& os = opts.human();
  os << "target " << target_bits << ": " << result.preimages.size() << " preimage(s)";
  if ( !result.preimages.empty() )
    os << ':';
  for ( auto x : result.preimages )
    os << ' ' << numeral_to_string( x, c.num_inputs );
  os << "\nmethod " << doc["method"].get<std::string>() << ", branches " << result.branches << ", propagations "
     << result.propagations;
  if ( check )
    os << ", brute-force cross-check agrees";
  os << '\n';
  if ( opts.json() )
    std::cout << doc.dump( 2 ) << '\n';
  return exit_ok;
}

int cmd_verify( common_options const& opts, fs::path const& input, std::optional<std::size_t> drop_gate,
                std::optional<uint64_t> samples, uint64_t seed )
{
  auto const l = synthesize_file( input, opts );
  auto forward = l.circ;
  auto const reversed = reverse( l.circ );
  if ( drop_gate )
  {
    if ( *drop_gate >= forward.gates.size() )
      throw input_error( "--mutate-drop-gate index " + std::to_string( *drop_gate ) + " out of range (" +
                         std::to_string( forward.gates.size() ) + " gates)" );
    forward.gates.erase( forward.gates.begin() + static_cast<std::ptrdiff_t>( *drop_gate ) );
  }

  verification_report identity;
  if ( samples || forward.width() > opts.identity_limit )
    identity = verify_identity( forward, reversed, sampling{samples.value_or( sampling{}.count ), seed} );
  else
    identity = verify_identity( forward, reversed, opts.identity_limit );
  auto const spec = verify_against_spec( forward, *l.function, opts.exhaustive_limit );

  auto& os = opts.human();
  auto const describe = [&]( char const* what, verification_report const& r ) {
    os << what << ": " << ( r.pass ? "pass" : "FAIL" ) << " (" << r.states_checked << ' '
       << ( r.mode == verify_mode::exhaustive ? "exhaustive" : "sampled" ) << " checks";
    if ( r.seed )
      os << ", seed " << *r.seed;
    os << ')';
    if ( r.counterexample )
      os << ", counterexample " << *r.counterexample;
    os << '\n';
  };
  describe( "forward+reversed identity", identity );
  describe( "specification equivalence", spec );
  for ( auto const& [x, want, got] : spec.mismatches )
    os << "  " << x << ": expected " << want << ", got " << got << '\n';

  if ( opts.json() )
    std::cout << nlohmann::json{{"name", l.circ.name}, {"identity", identity.to_json()}, {"spec", spec.to_json()}}.dump( 2 )
              << '\n';
  return identity.pass && spec.pass ? exit_ok : exit_verification;
}

int cmd_analyze( common_options const& opts, fs::path const& input )
{
  auto const parsed = read_pla_file( input );
  print_warnings( parsed.warnings, input );
  auto const& f = parsed.function;
  auto const av = avalanche_check( f, opts.exhaustive_limit );
  auto const col = collision_scan( f, opts.exhaustive_limit );

  auto& os = opts.human();
  os << f.name << ": " << f.num_inputs << " inputs, " << f.num_outputs << " outputs\n";
  os << "avalanche threshold " << av.threshold << '\n';
  os << "  part 1: "
     << ( av.applicable ? ( av.part1_pass ? "pass" : "FAIL (" + std::to_string( av.part1_violations.size() ) + " inputs)" )
                        : std::string( "not applicable (n != m)" ) )
     << '\n';
  os << "  part 2: " << ( av.part2_pass ? "pass" : "FAIL (" + std::to_string( av.part2_violations.size() ) + " pairs)" )
     << '\n';
  os << "collisions: " << ( col.injective ? "none (injective)" : std::to_string( col.colliding_groups().size() ) + " colliding groups" )
     << ", " << col.buckets.size() << " distinct outputs\n";
  if ( opts.json() )
    std::cout << nlohmann::json{{"name", f.name},
                                {"avalanche", av.to_json( f.num_inputs )},
                                {"collisions", col.to_json( f.num_inputs, f.num_outputs )}}
                     .dump( 2 )
              << '\n';
  return exit_ok;
}

int cmd_bench( common_options const& opts, std::vector<fs::path> const& inputs, std::optional<fs::path> jsonl )
{
  std::vector<fs::path> files;
  for ( auto const& p : inputs )
  {
    if ( fs::is_directory( p ) )
    {
      std::vector<fs::path> found;
      for ( auto const& entry : fs::directory_iterator( p ) )
        if ( entry.is_regular_file() && entry.path().extension() == ".pla" )
          found.push_back( entry.path() );
      std::sort( found.begin(), found.end() );
      files.insert( files.end(), found.begin(), found.end() );
    }
    else
      files.push_back( p );
  }

  bench_params params;
  params.minimize.effort = opts.effort;
  params.with_minimization = !opts.no_minimize;
  auto const records = bench_run( files, params );
  auto const lines = render_bench_jsonl( records );
  opts.human() << render_bench_table( records );
  if ( opts.json() )
  {
    auto doc = nlohmann::json::array();
    for ( auto const& r : records )
      doc.push_back( r.to_json() );
    std::cout << doc.dump( 2 ) << '\n';
  }
  if ( jsonl )
    write_text_file( *jsonl, lines );

  bool const all_failed =
      !records.empty() && std::all_of( records.begin(), records.end(), []( auto const& r ) { return r.error.has_value(); } );
  return all_failed ? exit_input : exit_ok;
}

} // namespace

int main( int argc, char** argv )
{
  CLI::App app{"Reversible-circuit synthesis and inversion for small hash functions"};
  app.require_subcommand( 1 );

  common_options opts;
  auto const add_common = [&]( CLI::App* sub ) {
    sub->add_option( "--format", opts.format, "Output format" )->check( CLI::IsMember( {"text", "json"} ) );
    sub->add_option( "--exhaustive-limit", opts.exhaustive_limit, "Largest input arity for exhaustive operations" )
        ->check( CLI::Range( 1u, 64u ) );
    sub->add_option( "--effort", opts.effort, "Maximum minimization passes" );
    sub->add_flag( "--no-minimize", opts.no_minimize, "Skip ESOP minimization" );
  };

  std::string input, output, bits, init;
  std::optional<std::string> out_prefix;
  std::vector<std::string> inputs;
  bool brute = false, no_crosscheck = false, first_only = false;
  std::optional<std::size_t> drop_gate;
  std::optional<uint64_t> samples;
  uint64_t seed = sampling{}.seed;
  std::optional<std::string> jsonl;

  auto* synth = app.add_subcommand( "synth", "Synthesize a reversible circuit from a .pla file" );
  add_common( synth );
  synth->add_option( "pla", input, "Input .pla" )->required();
  synth->add_option( "-o,--output", out_prefix, "Output path prefix for .real and .json" );

  auto* rev = app.add_subcommand( "reverse", "Write the gate-order reversal of a circuit" );
  add_common( rev );
  rev->add_option( "circuit", input, "Input .real, .json, or .pla" )->required();
  rev->add_option( "-o,--output", output, "Output .real or .json" )->required();

  auto* simulate = app.add_subcommand( "simulate", "Run a circuit on one input" );
  add_common( simulate );
  simulate->add_option( "circuit", input, "Input .real, .json, or .pla" )->required();
  simulate->add_option( "--input", bits, "Input bit string" )->required();
  simulate->add_option( "--init", init, "Initial output-line values (default all zero)" );

  auto* invert = app.add_subcommand( "invert", "Recover preimages of an output" );
  add_common( invert );
  invert->add_option( "circuit", input, "Input .pla, .real, or .json" )->required();
  invert->add_option( "--target", bits, "Output bit string to invert" )->required();
  invert->add_flag( "--brute", brute, "Use brute-force enumeration instead of deduction" );
  invert->add_flag( "--no-crosscheck", no_crosscheck, "Skip the brute-force cross-check for n <= 16" );
  invert->add_flag( "--first", first_only, "Stop at the first preimage" );
  invert->add_option( "--init", init, "Known initial output-line values (default all zero)" );

  auto* verify = app.add_subcommand( "verify", "Check forward+reversed identity and specification equivalence" );
  add_common( verify );
  verify->add_option( "pla", input, "Input .pla" )->required();
  verify->add_option( "--identity-limit", opts.identity_limit, "Largest width for exhaustive identity checks" );
  verify->add_option( "--samples", samples, "Use sampled identity verification with this many states" );
  verify->add_option( "--seed", seed, "Seed for sampled verification" );
  verify->add_option( "--mutate-drop-gate", drop_gate, "Drop gate k from the forward circuit (mutation test)" );

  auto* analyze = app.add_subcommand( "analyze", "Avalanche and collision analysis" );
  add_common( analyze );
  analyze->add_option( "pla", input, "Input .pla" )->required();

  auto* bench = app.add_subcommand( "bench", "Benchmark the pipeline over .pla files or directories" );
  add_common( bench );
  bench->add_option( "inputs", inputs, "Files or directories" )->required();
  bench->add_option( "--jsonl", jsonl, "Also write JSON lines to this file" );

  try
  {
    app.parse( argc, argv );
  }
  catch ( CLI::CallForHelp const& e )
  {
    return app.exit( e );
  }
  catch ( CLI::ParseError const& e )
  {
    app.exit( e );
    return exit_input;
  }

  try
  {
    if ( *synth )
      return cmd_synth( opts, input, out_prefix ? std::optional<fs::path>( *out_prefix ) : std::nullopt );
    if ( *rev )
      return cmd_reverse( opts, input, output );
    if ( *simulate )
      return cmd_simulate( opts, input, bits, init );
    if ( *invert )
      return cmd_invert( opts, input, bits, brute, !no_crosscheck, init, first_only );
    if ( *verify )
      return cmd_verify( opts, input, drop_gate, samples, seed );
    if ( *analyze )
      return cmd_analyze( opts, input );
    if ( *bench )
    {
      std::vector<fs::path> paths( inputs.begin(), inputs.end() );
      return cmd_bench( opts, paths, jsonl ? std::optional<fs::path>( *jsonl ) : std::nullopt );
    }
  }
  catch ( resource_error const& e )
  {
    std::cerr << "error: " << e.what() << '\n';
    return exit_resource;
  }
  catch ( error const& e )
  {
    std::cerr << "error: " << e.what() << '\n';
    return exit_input;
  }
  catch ( fs::filesystem_error const& e )
  {
    std::cerr << "error: " << e.what() << '\n';
    return exit_input;
  }
  return exit_input;
}
