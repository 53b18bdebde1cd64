#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>

#include "bit_vector.hpp"

namespace revhash
{

enum class literal : uint8_t
{
  zero,
  one,
  dont_care
};

char to_char( literal l );

/*! \brief One row of a two-level cover.

  Inputs are stored as a care mask and a value mask, outputs as a bit mask,
  all in numeral order (input position k of an n-input cube lives at bit
  n - 1 - k).  Widths are owned by the enclosing function.
*/
struct cube
{
  uint64_t care = 0;
  uint64_t bits = 0;
  uint64_t outputs = 0;

  /* Parses input and output fields over {0,1,-}; throws input_error. */
  static cube from_strings( std::string_view inputs, std::string_view outputs );

  bool matches( uint64_t x ) const noexcept { return ( x & care ) == bits; }

  literal input( uint32_t pos, uint32_t n ) const noexcept
  {
    auto const b = uint64_t{1} << ( n - 1 - pos );
    if ( !( care & b ) )
      return literal::dont_care;
    return ( bits & b ) ? literal::one : literal::zero;
  }

  void set_input( uint32_t pos, uint32_t n, literal l ) noexcept;

  bool output( uint32_t j, uint32_t m ) const noexcept
  {
    return ( outputs >> ( m - 1 - j ) ) & 1u;
  }

  uint32_t num_literals() const noexcept { return std::popcount( care ); }
  uint32_t num_dont_cares( uint32_t n ) const noexcept { return n - num_literals(); }

  std::string inputs_string( uint32_t n ) const;
  std::string outputs_string( uint32_t m ) const;

  friend bool operator==( cube const&, cube const& ) = default;
  friend auto operator<=>( cube const&, cube const& ) = default;
};

/* Number of input positions whose literals differ; a dash differs from 0 and 1. */
inline uint32_t input_distance( cube const& a, cube const& b ) noexcept
{
  auto const diff = ( a.care ^ b.care ) | ( ( a.bits ^ b.bits ) & a.care & b.care );
  return std::popcount( diff );
}

inline bool inputs_intersect( cube const& a, cube const& b ) noexcept
{
  return ( ( a.bits ^ b.bits ) & a.care & b.care ) == 0;
}

} // namespace revhash
