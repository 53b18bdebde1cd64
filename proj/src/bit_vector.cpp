#include <revhash/bit_vector.hpp>

#include <revhash/errors.hpp>

namespace revhash
{

bit_vector::bit_vector( uint32_t width, bool value )
    : width_( width ), words_( ( width + 63 ) / 64, value ? ~uint64_t{0} : 0 )
{
  if ( value && ( width & 63 ) )
    words_.back() &= low_mask( width & 63 );
}

bit_vector bit_vector::from_string( std::string_view text )
{
  bit_vector v( static_cast<uint32_t>( text.size() ) );
  for ( uint32_t i = 0; i < text.size(); ++i )
  {
    if ( text[i] == '1' )
      v.set( i, true );
    else if ( text[i] != '0' )
      throw input_error( "invalid bit string '" + std::string( text ) + "'" );
  }
  return v;
}

bit_vector bit_vector::from_numeral( uint64_t value, uint32_t width )
{
  bit_vector v( width );
  v.assign_numeral( 0, width, value );
  return v;
}

uint64_t bit_vector::slice_numeral( uint32_t first, uint32_t count ) const
{
  uint64_t value = 0;
  for ( uint32_t i = 0; i < count; ++i )
    value = ( value << 1 ) | static_cast<uint64_t>( get( first + i ) );
  return value;
}

void bit_vector::assign_numeral( uint32_t first, uint32_t count, uint64_t value )
{
  for ( uint32_t i = 0; i < count; ++i )
    set( first + i, ( value >> ( count - 1 - i ) ) & 1u );
}

std::string bit_vector::to_string() const
{
  std::string s( width_, '0' );
  for ( uint32_t i = 0; i < width_; ++i )
    if ( get( i ) )
      s[i] = '1';
  return s;
}

std::string numeral_to_string( uint64_t value, uint32_t width )
{
  std::string s( width, '0' );
  for ( uint32_t i = 0; i < width; ++i )
    if ( ( value >> ( width - 1 - i ) ) & 1u )
      s[i] = '1';
  return s;
}

uint64_t string_to_numeral( std::string_view bits )
{
  if ( bits.size() > 64 )
    throw input_error( "bit string longer than 64 bits" );
  uint64_t value = 0;
  for ( auto ch : bits )
  {
    if ( ch != '0' && ch != '1' )
      throw input_error( "invalid bit string '" + std::string( bits ) + "'" );
    value = ( value << 1 ) | static_cast<uint64_t>( ch == '1' );
  }
  return value;
}

} // namespace revhash
