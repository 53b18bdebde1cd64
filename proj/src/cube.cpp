#include <revhash/cube.hpp>

#include <revhash/errors.hpp>

namespace revhash
{

char to_char( literal l )
{
  switch ( l )
  {
  case literal::zero:
    return '0';
  case literal::one:
    return '1';
  default:
    return '-';
  }
}

cube cube::from_strings( std::string_view inputs, std::string_view outputs )
{
  if ( inputs.size() > 64 || outputs.size() > 64 )
    throw input_error( "cube wider than 64 positions" );
  cube c;
  auto const n = static_cast<uint32_t>( inputs.size() );
  for ( uint32_t k = 0; k < n; ++k )
  {
    switch ( inputs[k] )
    {
    case '0':
      c.set_input( k, n, literal::zero );
      break;
    case '1':
      c.set_input( k, n, literal::one );
      break;
    case '-':
      break;
    default:
      throw input_error( "invalid input literal '" + std::string( 1, inputs[k] ) + "'" );
    }
  }
  c.outputs = string_to_numeral( outputs );
  return c;
}

void cube::set_input( uint32_t pos, uint32_t n, literal l ) noexcept
{
  auto const b = uint64_t{1} << ( n - 1 - pos );
  care &= ~b;
  bits &= ~b;
  if ( l == literal::one )
  {
    care |= b;
    bits |= b;
  }
  else if ( l == literal::zero )
    care |= b;
}

std::string cube::inputs_string( uint32_t n ) const
{
  std::string s( n, '-' );
  for ( uint32_t k = 0; k < n; ++k )
    s[k] = to_char( input( k, n ) );
  return s;
}

std::string cube::outputs_string( uint32_t m ) const
{
  return numeral_to_string( outputs, m );
}

} // namespace revhash
