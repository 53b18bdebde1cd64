#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace revhash
{

/*! \brief Fixed-width bit string.

  Position 0 is the leftmost character of the textual form.  When a vector
  is read as an unsigned numeral, position 0 is the most significant bit, so
  "0110" is 6 and numeric order equals lexicographic order of the strings.
*/
class bit_vector
{
public:
  bit_vector() = default;
  explicit bit_vector( uint32_t width, bool value = false );

  static bit_vector from_string( std::string_view text );
  static bit_vector from_numeral( uint64_t value, uint32_t width );

  uint32_t size() const noexcept { return width_; }

  bool get( uint32_t pos ) const
  {
    return ( words_[pos >> 6] >> ( pos & 63 ) ) & 1u;
  }

  void set( uint32_t pos, bool value )
  {
    auto const mask = uint64_t{1} << ( pos & 63 );
    if ( value )
      words_[pos >> 6] |= mask;
    else
      words_[pos >> 6] &= ~mask;
  }

  void flip( uint32_t pos ) { words_[pos >> 6] ^= uint64_t{1} << ( pos & 63 ); }

  /* Bits [first, first + count) as a numeral; count <= 64. */
  uint64_t slice_numeral( uint32_t first, uint32_t count ) const;
  void assign_numeral( uint32_t first, uint32_t count, uint64_t value );
  uint64_t to_numeral() const { return slice_numeral( 0, width_ ); }

  std::string to_string() const;

  friend bool operator==( bit_vector const&, bit_vector const& ) = default;

private:
  uint32_t width_ = 0;
  std::vector<uint64_t> words_;
};

/* Numeral <-> bit string helpers for widths up to 64. */
std::string numeral_to_string( uint64_t value, uint32_t width );
uint64_t string_to_numeral( std::string_view bits );

inline uint64_t low_mask( uint32_t width )
{
  return width >= 64 ? ~uint64_t{0} : ( uint64_t{1} << width ) - 1;
}

} // namespace revhash
