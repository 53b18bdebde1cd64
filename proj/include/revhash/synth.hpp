#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "esop.hpp"

namespace revhash
{

/*! \brief Multiple-controlled Toffoli gate with mixed polarity controls.

  The target flips iff every positive control is 1 and every negative
  control is 0.  Control lists are kept sorted.
*/
struct gate
{
  uint32_t target = 0;
  std::vector<uint32_t> positive_controls;
  std::vector<uint32_t> negative_controls;

  static gate make_not( uint32_t target ) { return gate{target, {}, {}}; }
  static gate make( uint32_t target, std::vector<uint32_t> positive, std::vector<uint32_t> negative = {} );

  std::size_t num_controls() const noexcept { return positive_controls.size() + negative_controls.size(); }
  bool is_not() const noexcept { return num_controls() == 0; }
  bool touches( uint32_t line ) const noexcept;

  friend bool operator==( gate const&, gate const& ) = default;
};

/*! \brief Reversible circuit over n input lines followed by m output lines. */
struct circuit
{
  uint32_t num_inputs = 0;
  uint32_t num_outputs = 0;
  std::vector<gate> gates;
  std::string name;

  uint32_t width() const noexcept { return num_inputs + num_outputs; }
  uint32_t output_line( uint32_t j ) const noexcept { return num_inputs + j; }
  bool is_output_line( uint32_t line ) const noexcept { return line >= num_inputs && line < width(); }

  /* Throws input_error on out-of-range lines or overlapping control sets. */
  void validate() const;

  friend bool operator==( circuit const&, circuit const& ) = default;
};

/* One gate per (cube, output bit equal to 1), in cube order then ascending output bit. */
circuit synthesize( esop_cover const& c );

/* Replaces negative controls by NOT / positive-control gate / NOT. */
circuit expand_negative_controls( circuit const& c );

/* Cancels NOT pairs on a line with no other gate touching that line in between. */
circuit remove_superfluous_nots( circuit const& c );

/* Same gates in reverse order. */
circuit reverse( circuit const& c );

struct gate_stats
{
  /* gate count after negative-control expansion and NOT removal */
  uint64_t total = 0;
  /* gate count of the circuit as given */
  uint64_t native = 0;
  /* control count -> number of gates, after expansion and NOT removal */
  std::map<std::size_t, uint64_t> by_controls;

  uint64_t nots() const { return count( 0 ); }
  uint64_t cnots() const { return count( 1 ); }
  uint64_t toffolis() const { return count( 2 ); }
  uint64_t generalized_toffolis() const;

private:
  uint64_t count( std::size_t k ) const;
};

gate_stats stats( circuit const& c );

} // namespace revhash
