#pragma once

#include <revhash/synth.hpp>

#include <cstdint>
#include <cstdio>
#include <random>
#include <vector>

namespace support
{

// Gate-by-gate reference simulator on a plain bool vector, line k = position k.
inline std::vector<bool> reference_run( revhash::circuit const& c, std::vector<bool> s )
{
  for ( auto const& g : c.gates )
  {
    bool fire = true;
    for ( auto l : g.positive_controls )
      fire = fire && s[l];
    for ( auto l : g.negative_controls )
      fire = fire && !s[l];
    if ( fire )
      s[g.target] = !s[g.target];
  }
  return s;
}

inline std::vector<bool> to_bools( uint64_t numeral, uint32_t width )
{
  std::vector<bool> out( width );
  for ( uint32_t k = 0; k < width; ++k )
    out[k] = ( numeral >> ( width - 1 - k ) ) & 1;
  return out;
}

inline uint64_t to_numeral( std::vector<bool> const& bits, uint32_t first, uint32_t count )
{
  uint64_t v = 0;
  for ( uint32_t k = 0; k < count; ++k )
    v = ( v << 1 ) | ( bits[first + k] ? 1 : 0 );
  return v;
}

// Reference output numeral for input x with zeroed output lines.
inline uint64_t reference_output( revhash::circuit const& c, uint64_t x )
{
  auto const s = reference_run( c, to_bools( x << c.num_outputs, c.width() ) );
  return to_numeral( s, c.num_inputs, c.num_outputs );
}

// Seeded engine that reports its seed so failures can be replayed.
inline std::mt19937_64 seeded( char const* property, uint64_t seed )
{
  std::printf( "[seed] %s: %llu\n", property, static_cast<unsigned long long>( seed ) );
  std::fflush( stdout );
  return std::mt19937_64( seed );
}

} // namespace support
