#include <revhash/errors.hpp>

#include <cstdlib>
#include <string>

#include <revhash/limits.hpp>

namespace revhash
{

namespace
{
std::string format_parse_message( std::size_t line, std::string const& message )
{
  if ( line == 0 )
    return message;
  return "line " + std::to_string( line ) + ": " + message;
}
} // namespace

parse_error::parse_error( parse_error_kind kind, std::size_t line, std::string const& message )
    : input_error( format_parse_message( line, message ) ), kind_( kind ), line_( line )
{
}

exhaustive_limits default_limits()
{
  exhaustive_limits limits;
  if ( auto const* env = std::getenv( "REVHASH_EXHAUSTIVE_LIMIT" ) )
  {
    char* end = nullptr;
    auto const value = std::strtoul( env, &end, 10 );
    if ( end != env && *end == '\0' && value >= 1 && value <= 64 )
      limits.input_bits = static_cast<uint32_t>( value );
  }
  return limits;
}

} // namespace revhash
