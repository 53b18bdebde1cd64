#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cube.hpp"

namespace revhash
{

/* How the rows of a cover combine into a function value. */
enum class cover_semantics
{
  inclusive_or,
  exclusive_or
};

/*! \brief A function B^n -> B^m given as a list of cubes. */
struct pla_function
{
  uint32_t num_inputs = 0;
  uint32_t num_outputs = 0;
  std::vector<cube> cubes;
  cover_semantics semantics = cover_semantics::inclusive_or;
  std::vector<std::string> input_labels;
  std::vector<std::string> output_labels;
  std::string name;

  /* Throws input_error when arities or cube widths are inconsistent. */
  void validate() const;

  friend bool operator==( pla_function const&, pla_function const& ) = default;
};

struct parsed_pla
{
  pla_function function;
  std::vector<std::string> warnings;
  /* text of the first comment line, if any */
  std::optional<std::string> title;
};

parsed_pla parse_pla( std::string_view text );
parsed_pla read_pla_file( std::filesystem::path const& path );

std::string write_pla( pla_function const& f );
void write_pla_file( pla_function const& f, std::filesystem::path const& path );

inline constexpr uint64_t default_cube_budget = uint64_t{1} << 24;

/*! \brief Replaces every cube by its minterms.

  Duplicate minterms with identical outputs are merged according to the
  function's semantics: one copy survives under inclusive-or, identical
  pairs cancel under exclusive-or.  Throws resource_error when more than
  `budget` minterms would be generated.
*/
pla_function expand_to_minterms( pla_function const& f, uint64_t budget = default_cube_budget );

/* Output numeral of f at input numeral x. */
uint64_t evaluate_pla( pla_function const& f, uint64_t x, cover_semantics semantics );
bit_vector evaluate_pla( pla_function const& f, bit_vector const& x, cover_semantics semantics );

/* Output numerals for every input numeral 0 .. 2^n - 1; n must not exceed input_limit. */
std::vector<uint64_t> pla_truth_table( pla_function const& f, cover_semantics semantics, uint32_t input_limit );

} // namespace revhash
