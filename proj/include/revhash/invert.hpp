#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "limits.hpp"
#include "pla_io.hpp"
#include "synth.hpp"

namespace revhash
{

enum class tri_state : uint8_t
{
  zero,
  one,
  unknown
};

/* Tri-state assignment of the input variables; refinement only within a branch. */
class partial_assignment
{
public:
  explicit partial_assignment( uint32_t num_vars ) : num_vars_( num_vars ) {}

  uint32_t size() const noexcept { return num_vars_; }
  tri_state get( uint32_t var ) const noexcept;
  /* Fixes an unknown variable; returns false when it already holds the other value. */
  bool assign( uint32_t var, bool value ) noexcept;
  bool complete() const noexcept { return assigned_ == low_mask( num_vars_ ); }

  /* masks in numeral order, see cube */
  uint64_t assigned_mask() const noexcept { return assigned_; }
  uint64_t value_mask() const noexcept { return values_; }

private:
  uint32_t num_vars_;
  uint64_t assigned_ = 0;
  uint64_t values_ = 0;
};

enum class inversion_method
{
  brute_force,
  deduction
};

struct preimage_result
{
  uint32_t num_inputs = 0;
  uint32_t num_outputs = 0;
  uint64_t target = 0;
  /* input numerals, ascending */
  std::vector<uint64_t> preimages;
  inversion_method method = inversion_method::deduction;
  uint64_t branches = 0;
  uint64_t propagations = 0;
  double elapsed_seconds = 0.0;

  nlohmann::json to_json() const;
};

preimage_result preimages_bruteforce( pla_function const& f, uint64_t target, uint32_t input_limit = exhaustive_limits{}.input_bits );
preimage_result preimages_bruteforce( esop_cover const& c, uint64_t target, uint32_t input_limit = exhaustive_limits{}.input_bits );
preimage_result preimages_bruteforce( circuit const& c, uint64_t target, uint32_t input_limit = exhaustive_limits{}.input_bits );

struct deduction_params
{
  /* known initial values of the output lines, numeral over m bits */
  uint64_t output_init = 0;
  /* stop after the first preimage */
  bool first_only = false;
};

/*! \brief XOR-of-products view of a circuit whose gates only target output lines.

  Each gate targeting output line j contributes its control predicate to
  line j.  NOT gates on input lines are folded into control polarities;
  they must leave every input line restored at the end.
*/
struct output_constraints
{
  uint32_t num_inputs = 0;
  uint32_t num_outputs = 0;
  /* per output line: predicates as cubes (care/bits over the inputs) */
  std::vector<std::vector<cube>> predicates;
  /* per output line: constant flips from uncontrolled NOTs */
  std::vector<bool> constant_parity;
};

/* Throws input_error for circuits outside the supported shape. */
output_constraints extract_constraints( circuit const& c );

/*! \brief Backward deduction of all preimages of `target`.

  Unit propagation over the per-line XOR constraints, branching on the
  lowest-index unknown input with value 0 first and backtracking on
  contradiction.  Preimages come out in ascending order.
*/
preimage_result preimages_deduce( circuit const& c, uint64_t target, deduction_params const& params = {} );

/* First preimage under the deterministic branch order, if any. */
std::optional<uint64_t> preimage_one( circuit const& c, uint64_t target, deduction_params const& params = {} );

} // namespace revhash
