#pragma once

// Reference tables for the corpus, built without the library or the corpus
// generator: AES through log/antilog tables over GF(2^8), the others typed in.

#include <array>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

namespace oracle
{

inline std::vector<uint64_t> aes_sbox()
{
  // generator 3 of GF(2^8) modulo x^8 + x^4 + x^3 + x + 1
  std::array<uint8_t, 256> exp{}, log{};
  uint8_t v = 1;
  for ( int i = 0; i < 255; ++i )
  {
    exp[i] = v;
    log[v] = static_cast<uint8_t>( i );
    uint8_t const dbl = static_cast<uint8_t>( ( v << 1 ) ^ ( ( v & 0x80 ) ? 0x1B : 0 ) );
    v = static_cast<uint8_t>( dbl ^ v );
  }
  auto const rotl = []( uint8_t b, int k ) { return static_cast<uint8_t>( ( b << k ) | ( b >> ( 8 - k ) ) ); };
  std::vector<uint64_t> box( 256 );
  for ( int x = 0; x < 256; ++x )
  {
    uint8_t const inv = x == 0 ? 0 : exp[( 255 - log[x] ) % 255];
    box[x] = static_cast<uint8_t>( inv ^ rotl( inv, 1 ) ^ rotl( inv, 2 ) ^ rotl( inv, 3 ) ^ rotl( inv, 4 ) ^ 0x63 );
  }
  return box;
}

inline std::vector<uint64_t> aes_inv_sbox()
{
  auto const fwd = aes_sbox();
  std::vector<uint64_t> inv( 256 );
  for ( uint64_t x = 0; x < 256; ++x )
    inv[fwd[x]] = x;
  return inv;
}

inline std::vector<uint64_t> from_hex( std::string const& digits )
{
  std::vector<uint64_t> out;
  for ( char ch : digits )
    out.push_back( std::stoul( std::string( 1, ch ), nullptr, 16 ) );
  return out;
}

inline std::vector<uint64_t> mini_aes_sbox() { return from_hex( "E4D12FB83A6C5907" ); }
inline std::vector<uint64_t> present_sbox() { return from_hex( "C56B90AD3EF84712" ); }

// S-boxes in the standard 4 x 16 layout, rows concatenated as hex digits.
inline std::vector<uint64_t> des_sbox( int index )
{
  static char const* const rows[8] = {
      "E4D12FB83A6C5907" "0F74E2D1A6CB9538" "41E8D62BFC973A50" "FC8249175B3EA06D",
      "F18E6B34972DC05A" "3D47F28EC01A69B5" "0E7BA4D158C6932F" "D8A13F42B67C05E9",
      "A09E63F51DC7B428" "D709346A285ECBF1" "D6498F30B12C5AE7" "1AD069874FE3B52C",
      "7DE3069A1285BC4F" "D8B56F03472C1AE9" "A690CB7DF13E5284" "3F06A1D8945BC72E",
      "2C417AB6853FD0E9" "EB2C47D150FA3986" "421BAD78F9C5630E" "B8C71E2D6F09A453",
      "C1AF92680D34E75B" "AF427C9561DE0B38" "9EF528C3704A1DB6" "432C95FABE17608D",
      "4B2EF08D3C975A61" "D0B7491AE35C2F86" "14BDC37EAF680592" "6BD814A7950FE23C",
      "D2846FB1A93E50C7" "1FD8A374C56B0E92" "7B419CE206ADF358" "21E74A8DFC90356B",
  };
  auto const table = from_hex( rows[index - 1] );
  std::vector<uint64_t> out( 64 );
  for ( uint64_t x = 0; x < 64; ++x )
  {
    // b1 is the most significant of the six input bits
    auto const row = ( ( x >> 5 ) << 1 ) | ( x & 1 );
    auto const col = ( x >> 1 ) & 0xF;
    out[x] = table[row * 16 + col];
  }
  return out;
}

inline std::vector<uint64_t> complement4()
{
  std::vector<uint64_t> out( 16 );
  for ( uint64_t x = 0; x < 16; ++x )
    out[x] = x ^ 0xF;
  return out;
}

struct corpus_entry
{
  std::string file;
  std::string name;
  uint32_t n;
  uint32_t m;
  // empty when no public reference exists
  std::vector<uint64_t> table;
};

inline std::filesystem::path corpus_dir() { return REVHASH_CORPUS_DIR; }

inline std::vector<corpus_entry> bench_corpus()
{
  std::vector<corpus_entry> out;
  out.push_back( {"01_aes4_sbox.pla", "4-bit AES S-box", 4, 4, mini_aes_sbox()} );
  out.push_back( {"02_present_sbox.pla", "PRESENT S-box", 4, 4, present_sbox()} );
  for ( int i = 1; i <= 8; ++i )
  {
    char file[32];
    std::snprintf( file, sizeof file, "%02d_des_sbox%d.pla", i + 2, i );
    out.push_back( {file, "DES S-box " + std::to_string( i ), 6, 4, des_sbox( i )} );
  }
  out.push_back( {"11_aes_sbox.pla", "AES S-box", 8, 8, aes_sbox()} );
  out.push_back( {"12_aes_inv_sbox.pla", "AES inverse S-box", 8, 8, aes_inv_sbox()} );
  out.push_back( {"13_hash8.pla", "8-bit avalanche hash", 8, 8, {}} );
  return out;
}

} // namespace oracle
