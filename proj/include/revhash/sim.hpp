#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "limits.hpp"
#include "pla_io.hpp"
#include "synth.hpp"

namespace revhash
{

using state = bit_vector;

state apply_gate( state s, gate const& g );
state run( circuit const& c, state s );

/*! \brief Simulates 64 basis states at once.

  `lines[k]` holds bit k of 64 independent states, one per bit position.
  The result agrees with `run` on every lane.
*/
void run_batch( circuit const& c, std::span<uint64_t> lines );

/* Output numeral of run(c, (x, 0^m)) for every input numeral x; throws resource_error past the limit. */
std::vector<uint64_t> truth_table( circuit const& c, uint32_t input_limit = exhaustive_limits{}.input_bits );

enum class verify_mode
{
  exhaustive,
  sampled
};

struct verification_report
{
  verify_mode mode = verify_mode::exhaustive;
  uint64_t states_checked = 0;
  bool pass = true;
  std::optional<std::string> counterexample;
  std::optional<uint64_t> seed;
  /* spec mismatches: (input, expected, actual) strings, capped */
  std::vector<std::array<std::string, 3>> mismatches;
  uint64_t mismatch_count = 0;

  nlohmann::json to_json() const;
};

struct sampling
{
  uint64_t count = 100000;
  uint64_t seed = 1;
};

/* Checks run(reversed, run(forward, s)) = s over all states of the common width. */
verification_report verify_identity( circuit const& forward, circuit const& reversed,
                                     uint32_t state_limit = exhaustive_limits{}.state_bits );

/* Same check over `sample.count` pseudo-random states drawn from `sample.seed`. */
verification_report verify_identity( circuit const& forward, circuit const& reversed, sampling const& sample );

/* Compares truth_table(c) against the function's own semantics on every input. */
verification_report verify_against_spec( circuit const& c, pla_function const& f,
                                         uint32_t input_limit = exhaustive_limits{}.input_bits );

} // namespace revhash
