#pragma once

#include <cstdint>
#include <vector>

#include "pla_io.hpp"

namespace revhash
{

/*! \brief Exclusive-or sum of products.

  Bit j of f(x) is the XOR of output bit j over all cubes matching x.
*/
struct esop_cover
{
  uint32_t num_inputs = 0;
  uint32_t num_outputs = 0;
  std::vector<cube> cubes;

  friend bool operator==( esop_cover const&, esop_cover const& ) = default;
};

struct cover_cost
{
  uint64_t cube_count = 0;
  uint64_t literal_count = 0;
  uint64_t output_ones = 0;

  friend bool operator==( cover_cost const&, cover_cost const& ) = default;
};

/*! \brief Converts a cover to ESOP form.

  Inclusive-or covers are first made disjoint (disjoint sharp), so each
  input is matched by at most one cube and OR equals XOR.  Cubes with an
  all-zero output are dropped.  Throws resource_error when the disjoint
  cover grows beyond `budget` cubes.
*/
esop_cover from_pla( pla_function const& f, uint64_t budget = default_cube_budget );

/* ESOP cover as a `.pla` function marked with exclusive-or semantics. */
pla_function to_pla( esop_cover const& c );

struct minimize_params
{
  /* maximum number of search rounds */
  uint32_t effort = 64;
};

struct minimize_stats
{
  uint32_t passes = 0;
  uint64_t merges = 0;
  uint64_t reshapes = 0;
  bool fixpoint = false;
};

/*! \brief Pairwise EXOR-link minimization.

  Local search over cube pairs in ascending distance order: cancellation
  of identical cubes, output merging of cubes with identical inputs,
  distance-1 merges, and distance-2/3 exorlinks that lower the cost
  (cubes, output ones, literals) or enable merges.  When stuck, a round of
  cost-neutral exorlinks perturbs the cover; `effort` bounds the rounds.
  The search also runs on groups of 1, 2, 4, ... outputs separately and
  recombines them; among the candidates the one with the fewest estimated
  Toffoli and NOT gates wins.  The result is equivalent to `c`, never has
  more cubes, and is ordered so that consecutive cubes share negative
  controls.
*/
esop_cover minimize( esop_cover const& c, minimize_params const& params = {}, minimize_stats* stats = nullptr );

uint64_t evaluate_esop( esop_cover const& c, uint64_t x );
bit_vector evaluate_esop( esop_cover const& c, bit_vector const& x );

std::vector<uint64_t> esop_truth_table( esop_cover const& c, uint32_t input_limit );

cover_cost cost( esop_cover const& c );

} // namespace revhash
