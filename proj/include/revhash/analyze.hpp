#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "esop.hpp"
#include "limits.hpp"
#include "pla_io.hpp"

namespace revhash
{

struct avalanche_report
{
  /* part 1 needs n == m */
  bool applicable = false;
  bool part1_pass = false;
  std::vector<uint64_t> part1_violations;
  bool part2_pass = false;
  std::vector<std::pair<uint64_t, uint64_t>> part2_violations;
  uint32_t threshold = 0;

  nlohmann::json to_json( uint32_t n ) const;
};

/*! \brief Two-part avalanche check with threshold ceil(m/2).

  Part 1: d(x, f(x)) >= threshold for every x (only when n == m).
  Part 2: d(f(x), f(x')) >= threshold for every pair at input distance 1.
*/
avalanche_report avalanche_check( pla_function const& f, uint32_t input_limit = exhaustive_limits{}.input_bits );

struct collision_report
{
  /* output numeral -> ascending input numerals */
  std::map<uint64_t, std::vector<uint64_t>> buckets;
  bool injective = true;

  std::vector<std::pair<uint64_t, std::vector<uint64_t>>> colliding_groups() const;
  nlohmann::json to_json( uint32_t n, uint32_t m ) const;
};

collision_report collision_scan( pla_function const& f, uint32_t input_limit = exhaustive_limits{}.input_bits );

struct bench_record
{
  std::string name;
  std::string path;
  uint32_t num_inputs = 0;
  uint32_t num_outputs = 0;
  uint64_t cube_count_before = 0;
  uint64_t cube_count_after = 0;
  double minimization_time = 0.0;
  double synthesis_time_min = 0.0;
  double synthesis_time_nomin = 0.0;
  uint64_t gate_count_min = 0;
  uint64_t gate_count_nomin = 0;
  std::optional<std::string> error;

  nlohmann::json to_json() const;
};

struct bench_params
{
  minimize_params minimize;
  bool with_minimization = true;
  bool without_minimization = true;
};

std::vector<bench_record> bench_run( std::vector<std::filesystem::path> const& files, bench_params const& params = {} );

/* Aligned text table with one row per record. */
std::string render_bench_table( std::vector<bench_record> const& records );
/* One JSON object per line. */
std::string render_bench_jsonl( std::vector<bench_record> const& records );

} // namespace revhash
