#include <revhash/sim.hpp>

#include <bit>
#include <random>

#include <revhash/errors.hpp>

namespace revhash
{

namespace
{

/* lane patterns: bit b of the lane index */
constexpr uint64_t lane_patterns[6] = {0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
                                       0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull};

/* Loads lines [first, first + count) with the numerals base + lane, lane < 64. */
void load_counter( std::span<uint64_t> lines, uint32_t first, uint32_t count, uint64_t base )
{
  for ( uint32_t k = 0; k < count; ++k )
  {
    auto const b = count - 1 - k;
    lines[first + k] = b < 6 ? lane_patterns[b] : ( ( base >> b ) & 1u ? ~uint64_t{0} : 0 );
  }
}

uint64_t lane_numeral( std::span<uint64_t const> lines, uint32_t first, uint32_t count, uint32_t lane )
{
  uint64_t value = 0;
  for ( uint32_t k = 0; k < count; ++k )
    value = ( value << 1 ) | ( ( lines[first + k] >> lane ) & 1u );
  return value;
}

std::string lane_string( std::span<uint64_t const> lines, uint32_t lane )
{
  std::string s( lines.size(), '0' );
  for ( std::size_t k = 0; k < lines.size(); ++k )
    if ( ( lines[k] >> lane ) & 1u )
      s[k] = '1';
  return s;
}

void check_widths( circuit const& forward, circuit const& reversed )
{
  if ( forward.width() != reversed.width() )
    throw input_error( "circuits have different widths (" + std::to_string( forward.width() ) + " and " +
                       std::to_string( reversed.width() ) + ")" );
}

} // namespace

state apply_gate( state s, gate const& g )
{
  auto const w = s.size();
  auto const check = [w]( uint32_t l ) {
    if ( l >= w )
      throw input_error( "gate line " + std::to_string( l ) + " outside state of width " + std::to_string( w ) );
  };
  check( g.target );
  bool fire = true;
  for ( auto l : g.positive_controls )
  {
    check( l );
    fire = fire && s.get( l );
  }
  for ( auto l : g.negative_controls )
  {
    check( l );
    fire = fire && !s.get( l );
  }
  if ( fire )
    s.flip( g.target );
  return s;
}

state run( circuit const& c, state s )
{
  if ( s.size() != c.width() )
    throw input_error( "state has " + std::to_string( s.size() ) + " bits, circuit width is " +
                       std::to_string( c.width() ) );
  for ( auto const& g : c.gates )
    s = apply_gate( std::move( s ), g );
  return s;
}

void run_batch( circuit const& c, std::span<uint64_t> lines )
{
  if ( lines.size() != c.width() )
    throw input_error( "batch has " + std::to_string( lines.size() ) + " lines, circuit width is " +
                       std::to_string( c.width() ) );
  for ( auto const& g : c.gates )
  {
    auto mask = ~uint64_t{0};
    for ( auto l : g.positive_controls )
      mask &= lines[l];
    for ( auto l : g.negative_controls )
      mask &= ~lines[l];
    lines[g.target] ^= mask;
  }
}

std::vector<uint64_t> truth_table( circuit const& c, uint32_t input_limit )
{
  auto const n = c.num_inputs;
  auto const m = c.num_outputs;
  if ( n > input_limit )
    throw resource_error( "circuit has " + std::to_string( n ) + " inputs, exhaustive limit is " +
                          std::to_string( input_limit ) );
  if ( m > 64 )
    throw resource_error( "truth tables support at most 64 outputs" );
  c.validate();
  auto const rows = uint64_t{1} << n;
  std::vector<uint64_t> table( rows, 0 );
  std::vector<uint64_t> lines( c.width() );
  for ( uint64_t base = 0; base < rows; base += 64 )
  {
    load_counter( lines, 0, n, base );
    std::fill( lines.begin() + n, lines.end(), 0 );
    run_batch( c, lines );
    auto const lanes = std::min<uint64_t>( 64, rows - base );
    for ( uint32_t lane = 0; lane < lanes; ++lane )
      table[base + lane] = lane_numeral( lines, n, m, lane );
  }
  return table;
}

verification_report verify_identity( circuit const& forward, circuit const& reversed, uint32_t state_limit )
{
  check_widths( forward, reversed );
  auto const w = forward.width();
  if ( w > state_limit )
    throw resource_error( "circuit width " + std::to_string( w ) + " exceeds the exhaustive limit of " +
                          std::to_string( state_limit ) + " lines" );
  forward.validate();
  reversed.validate();

  verification_report report;
  report.mode = verify_mode::exhaustive;
  auto const states = uint64_t{1} << w;
  std::vector<uint64_t> initial( w ), lines( w );
  for ( uint64_t base = 0; base < states; base += 64 )
  {
    load_counter( initial, 0, w, base );
    lines = initial;
    run_batch( forward, lines );
    run_batch( reversed, lines );
    auto const lanes = std::min<uint64_t>( 64, states - base );
    auto const valid = lanes == 64 ? ~uint64_t{0} : ( uint64_t{1} << lanes ) - 1;
    uint64_t diff = 0;
    for ( uint32_t k = 0; k < w; ++k )
      diff |= lines[k] ^ initial[k];
    diff &= valid;
    report.states_checked += lanes;
    if ( diff )
    {
      report.pass = false;
      report.counterexample = lane_string( initial, static_cast<uint32_t>( std::countr_zero( diff ) ) );
      break;
    }
  }
  return report;
}

verification_report verify_identity( circuit const& forward, circuit const& reversed, sampling const& sample )
{
  check_widths( forward, reversed );
  forward.validate();
  reversed.validate();
  auto const w = forward.width();

  verification_report report;
  report.mode = verify_mode::sampled;
  report.seed = sample.seed;
  std::mt19937_64 rng( sample.seed );
  std::vector<uint64_t> initial( w ), lines( w );
  for ( uint64_t done = 0; done < sample.count; done += 64 )
  {
    for ( auto& word : initial )
      word = rng();
    lines = initial;
    run_batch( forward, lines );
    run_batch( reversed, lines );
    auto const lanes = std::min<uint64_t>( 64, sample.count - done );
    auto const valid = lanes == 64 ? ~uint64_t{0} : ( uint64_t{1} << lanes ) - 1;
    uint64_t diff = 0;
    for ( uint32_t k = 0; k < w; ++k )
      diff |= lines[k] ^ initial[k];
    diff &= valid;
    report.states_checked += lanes;
    if ( diff )
    {
      report.pass = false;
      report.counterexample = lane_string( initial, static_cast<uint32_t>( std::countr_zero( diff ) ) );
      break;
    }
  }
  return report;
}

verification_report verify_against_spec( circuit const& c, pla_function const& f, uint32_t input_limit )
{
  if ( c.num_inputs != f.num_inputs || c.num_outputs != f.num_outputs )
    throw input_error( "circuit arity " + std::to_string( c.num_inputs ) + "/" + std::to_string( c.num_outputs ) +
                       " does not match function arity " + std::to_string( f.num_inputs ) + "/" +
                       std::to_string( f.num_outputs ) );
  auto const actual = truth_table( c, input_limit );
  auto const expected = pla_truth_table( f, f.semantics, input_limit );

  verification_report report;
  report.mode = verify_mode::exhaustive;
  report.states_checked = actual.size();
  constexpr std::size_t max_listed = 16;
  for ( uint64_t x = 0; x < actual.size(); ++x )
  {
    if ( actual[x] == expected[x] )
      continue;
    report.pass = false;
    if ( report.mismatch_count++ == 0 )
      report.counterexample = numeral_to_string( x, f.num_inputs );
    if ( report.mismatches.size() < max_listed )
      report.mismatches.push_back( {numeral_to_string( x, f.num_inputs ), numeral_to_string( expected[x], f.num_outputs ),
                                    numeral_to_string( actual[x], f.num_outputs )} );
  }
  return report;
}

nlohmann::json verification_report::to_json() const
{
  nlohmann::json doc;
  doc["mode"] = mode == verify_mode::exhaustive ? "exhaustive" : "sampled";
  doc["states_checked"] = states_checked;
  doc["pass"] = pass;
  if ( counterexample )
    doc["counterexample"] = *counterexample;
  if ( seed )
    doc["seed"] = *seed;
  if ( mismatch_count )
  {
    doc["mismatch_count"] = mismatch_count;
    auto& list = doc["mismatches"] = nlohmann::json::array();
    for ( auto const& [x, want, got] : mismatches )
      list.push_back( {{"input", x}, {"expected", want}, {"actual", got}} );
  }
  return doc;
}

} // namespace revhash
