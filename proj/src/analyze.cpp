#include <revhash/analyze.hpp>

#include <bit>
#include <chrono>
#include <iomanip>
#include <sstream>

#include <revhash/errors.hpp>
#include <revhash/synth.hpp>

namespace revhash
{

avalanche_report avalanche_check( pla_function const& f, uint32_t input_limit )
{
  auto const table = pla_truth_table( f, f.semantics, input_limit );
  auto const n = f.num_inputs;
  auto const m = f.num_outputs;

  avalanche_report r;
  r.threshold = ( m + 1 ) / 2;
  r.applicable = n == m;
  if ( r.applicable )
  {
    for ( uint64_t x = 0; x < table.size(); ++x )
      if ( static_cast<uint32_t>( std::popcount( x ^ table[x] ) ) < r.threshold )
        r.part1_violations.push_back( x );
  }
  for ( uint64_t x = 0; x < table.size(); ++x )
  {
    for ( uint32_t b = 0; b < n; ++b )
    {
      auto const bit = uint64_t{1} << b;
      if ( x & bit )
        continue;
      if ( static_cast<uint32_t>( std::popcount( table[x] ^ table[x | bit] ) ) < r.threshold )
        r.part2_violations.emplace_back( x, x | bit );
    }
  }
  r.part1_pass = r.part1_violations.empty();
  r.part2_pass = r.part2_violations.empty();
  return r;
}

nlohmann::json avalanche_report::to_json( uint32_t n ) const
{
  nlohmann::json doc;
  doc["applicable"] = applicable;
  doc["threshold"] = threshold;
  doc["part1_pass"] = part1_pass;
  doc["part2_pass"] = part2_pass;
  auto& v1 = doc["part1_violations"] = nlohmann::json::array();
  for ( auto x : part1_violations )
    v1.push_back( numeral_to_string( x, n ) );
  auto& v2 = doc["part2_violations"] = nlohmann::json::array();
  for ( auto const& [a, b] : part2_violations )
    v2.push_back( {numeral_to_string( a, n ), numeral_to_string( b, n )} );
  return doc;
}

collision_report collision_scan( pla_function const& f, uint32_t input_limit )
{
  auto const table = pla_truth_table( f, f.semantics, input_limit );
  collision_report r;
  for ( uint64_t x = 0; x < table.size(); ++x )
    r.buckets[table[x]].push_back( x );
  for ( auto const& [y, inputs] : r.buckets )
    if ( inputs.size() > 1 )
      r.injective = false;
  return r;
}

std::vector<std::pair<uint64_t, std::vector<uint64_t>>> collision_report::colliding_groups() const
{
  std::vector<std::pair<uint64_t, std::vector<uint64_t>>> groups;
  for ( auto const& [y, inputs] : buckets )
    if ( inputs.size() > 1 )
      groups.emplace_back( y, inputs );
  return groups;
}

nlohmann::json collision_report::to_json( uint32_t n, uint32_t m ) const
{
  nlohmann::json doc;
  doc["injective"] = injective;
  doc["distinct_outputs"] = buckets.size();
  auto& groups = doc["colliding_groups"] = nlohmann::json::array();
  for ( auto const& [y, inputs] : colliding_groups() )
  {
    nlohmann::json g;
    g["output"] = numeral_to_string( y, m );
    auto& list = g["inputs"] = nlohmann::json::array();
    for ( auto x : inputs )
      list.push_back( numeral_to_string( x, n ) );
    groups.push_back( std::move( g ) );
  }
  return doc;
}

namespace
{

using clock_type = std::chrono::steady_clock;

double seconds_between( clock_type::time_point a, clock_type::time_point b )
{
  return std::chrono::duration<double>( b - a ).count();
}

} // namespace

std::vector<bench_record> bench_run( std::vector<std::filesystem::path> const& files, bench_params const& params )
{
  std::vector<bench_record> records;
  records.reserve( files.size() );
  for ( auto const& path : files )
  {
    bench_record rec;
    rec.path = path.string();
    rec.name = path.stem().string();
    try
    {
      auto const parsed = read_pla_file( path );
      auto const& f = parsed.function;
      if ( parsed.title )
        rec.name = *parsed.title;
      rec.num_inputs = f.num_inputs;
      rec.num_outputs = f.num_outputs;

      if ( params.with_minimization )
      {
        auto const t0 = clock_type::now();
        auto const cover = from_pla( f );
        auto const minimized = minimize( cover, params.minimize );
        auto const t1 = clock_type::now();
        auto const gates = stats( synthesize( minimized ) );
        auto const t2 = clock_type::now();
        rec.cube_count_before = cover.cubes.size();
        rec.cube_count_after = minimized.cubes.size();
        rec.minimization_time = seconds_between( t0, t1 );
        rec.synthesis_time_min = seconds_between( t1, t2 );
        rec.gate_count_min = gates.total;
      }
      if ( params.without_minimization )
      {
        auto const t0 = clock_type::now();
        auto const cover = from_pla( f );
        auto const gates = stats( synthesize( cover ) );
        auto const t1 = clock_type::now();
        rec.synthesis_time_nomin = seconds_between( t0, t1 );
        rec.gate_count_nomin = gates.total;
        if ( !params.with_minimization )
          rec.cube_count_before = rec.cube_count_after = cover.cubes.size();
      }
    }
    catch ( error const& e )
    {
      rec.error = e.what();
    }
    records.push_back( std::move( rec ) );
  }
  return records;
}

nlohmann::json bench_record::to_json() const
{
  nlohmann::json doc;
  doc["name"] = name;
  doc["path"] = path;
  if ( error )
  {
    doc["error"] = *error;
    return doc;
  }
  doc["n"] = num_inputs;
  doc["m"] = num_outputs;
  doc["cube_count_before"] = cube_count_before;
  doc["cube_count_after"] = cube_count_after;
  doc["minimization_time"] = minimization_time;
  doc["synthesis_time_min"] = synthesis_time_min;
  doc["gate_count_min"] = gate_count_min;
  doc["synthesis_time_nomin"] = synthesis_time_nomin;
  doc["gate_count_nomin"] = gate_count_nomin;
  return doc;
}

std::string render_bench_table( std::vector<bench_record> const& records )
{
  std::vector<std::vector<std::string>> rows;
  rows.push_back( {"Function", "In", "Out", "Cubes", "Min. time", "Synth. time (min)", "Gates (min)",
                   "Synth. time (no min)", "Gates (no min)"} );
  auto const secs = []( double t ) {
    std::ostringstream s;
    s << std::fixed << std::setprecision( 6 ) << t << " s";
    return s.str();
  };
  for ( auto const& r : records )
  {
    if ( r.error )
    {
      rows.push_back( {r.name, "-", "-", "error: " + *r.error} );
      continue;
    }
    rows.push_back( {r.name, std::to_string( r.num_inputs ), std::to_string( r.num_outputs ),
                     std::to_string( r.cube_count_before ) + " -> " + std::to_string( r.cube_count_after ),
                     secs( r.minimization_time ), secs( r.synthesis_time_min ), std::to_string( r.gate_count_min ),
                     secs( r.synthesis_time_nomin ), std::to_string( r.gate_count_nomin )} );
  }

  std::vector<std::size_t> widths( rows.front().size(), 0 );
  for ( auto const& row : rows )
  {
    if ( row.size() != widths.size() )
      continue;
    for ( std::size_t i = 0; i < row.size(); ++i )
      widths[i] = std::max( widths[i], row[i].size() );
  }
  std::ostringstream out;
  for ( std::size_t r = 0; r < rows.size(); ++r )
  {
    auto const& row = rows[r];
    for ( std::size_t i = 0; i < row.size(); ++i )
    {
      if ( i )
        out << " | ";
      if ( row.size() == widths.size() || i + 1 < row.size() )
        out << std::left << std::setw( static_cast<int>( widths[i] ) ) << row[i];
      else
        out << row[i];
    }
    out << '\n';
    if ( r == 0 )
    {
      std::size_t total = 0;
      for ( auto w : widths )
        total += w + 3;
      out << std::string( total - 3, '-' ) << '\n';
    }
  }
  return out.str();
}

std::string render_bench_jsonl( std::vector<bench_record> const& records )
{
  std::string out;
  for ( auto const& r : records )
    out += r.to_json().dump() + '\n';
  return out;
}

} // namespace revhash
