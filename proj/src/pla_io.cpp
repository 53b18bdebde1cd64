#include <revhash/pla_io.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <utility>

#include <revhash/errors.hpp>

namespace revhash
{

namespace
{

std::string_view trim( std::string_view s )
{
  auto const is_space = []( char c ) { return std::isspace( static_cast<unsigned char>( c ) ) != 0; };
  while ( !s.empty() && is_space( s.front() ) )
    s.remove_prefix( 1 );
  while ( !s.empty() && is_space( s.back() ) )
    s.remove_suffix( 1 );
  return s;
}

std::vector<std::string_view> split_ws( std::string_view s )
{
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while ( i < s.size() )
  {
    while ( i < s.size() && std::isspace( static_cast<unsigned char>( s[i] ) ) )
      ++i;
    auto const start = i;
    while ( i < s.size() && !std::isspace( static_cast<unsigned char>( s[i] ) ) )
      ++i;
    if ( i > start )
      tokens.push_back( s.substr( start, i - start ) );
  }
  return tokens;
}

uint64_t parse_count( std::string_view token, std::size_t line, std::string_view directive )
{
  uint64_t value = 0;
  auto const [ptr, ec] = std::from_chars( token.data(), token.data() + token.size(), value );
  if ( ec != std::errc{} || ptr != token.data() + token.size() )
    throw parse_error( parse_error_kind::structural, line,
                       "invalid argument '" + std::string( token ) + "' to " + std::string( directive ) );
  return value;
}

uint32_t parse_arity( std::vector<std::string_view> const& tokens, std::size_t line )
{
  if ( tokens.size() != 2 )
    throw parse_error( parse_error_kind::structural, line, std::string( tokens[0] ) + " expects one argument" );
  auto const value = parse_count( tokens[1], line, tokens[0] );
  if ( value < 1 )
    throw parse_error( parse_error_kind::structural, line, std::string( tokens[0] ) + " must be at least 1" );
  if ( value > 64 )
    throw resource_error( "line " + std::to_string( line ) + ": arity " + std::to_string( value ) +
                          " exceeds the supported maximum of 64" );
  return static_cast<uint32_t>( value );
}

std::string warn_at( std::size_t line, std::string const& message )
{
  return "line " + std::to_string( line ) + ": " + message;
}

} // namespace

void pla_function::validate() const
{
  if ( num_inputs < 1 || num_outputs < 1 )
    throw input_error( "function needs at least one input and one output" );
  if ( num_inputs > 64 || num_outputs > 64 )
    throw resource_error( "arity exceeds the supported maximum of 64" );
  auto const in_mask = low_mask( num_inputs );
  auto const out_mask = low_mask( num_outputs );
  for ( auto const& c : cubes )
  {
    if ( ( c.care & ~in_mask ) || ( c.bits & ~c.care ) || ( c.outputs & ~out_mask ) )
      throw input_error( "cube does not conform to the function arity" );
  }
  if ( !input_labels.empty() && input_labels.size() != num_inputs )
    throw input_error( "input label count does not match .i" );
  if ( !output_labels.empty() && output_labels.size() != num_outputs )
    throw input_error( "output label count does not match .o" );
}

parsed_pla parse_pla( std::string_view text )
{
  parsed_pla result;
  auto& f = result.function;
  auto& warnings = result.warnings;

  std::optional<uint64_t> declared_rows;
  bool have_inputs = false;
  bool have_outputs = false;
  std::size_t line_no = 0;

  std::size_t pos = 0;
  while ( pos <= text.size() )
  {
    auto const eol = text.find( '\n', pos );
    auto raw = text.substr( pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos );
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    if ( auto const hash = raw.find( '#' ); hash != std::string_view::npos )
    {
      auto const comment = trim( raw.substr( hash + 1 ) );
      if ( trim( raw ).front() == '#' && comment.substr( 0, 4 ) == "esop" &&
           ( comment.size() == 4 || std::isspace( static_cast<unsigned char>( comment[4] ) ) ) )
        f.semantics = cover_semantics::exclusive_or;
      else if ( !result.title && trim( raw ).front() == '#' && !comment.empty() )
        result.title = std::string( comment );
      raw = raw.substr( 0, hash );
    }
    auto const line = trim( raw );
    if ( line.empty() )
      continue;

    if ( line.front() == '.' )
    {
      auto const tokens = split_ws( line );
      auto const directive = tokens[0];
      if ( directive == ".i" )
      {
        if ( have_inputs )
          throw parse_error( parse_error_kind::structural, line_no, "duplicate .i" );
        f.num_inputs = parse_arity( tokens, line_no );
        have_inputs = true;
      }
      else if ( directive == ".o" )
      {
        if ( have_outputs )
          throw parse_error( parse_error_kind::structural, line_no, "duplicate .o" );
        f.num_outputs = parse_arity( tokens, line_no );
        have_outputs = true;
      }
      else if ( directive == ".p" )
      {
        if ( tokens.size() != 2 )
          throw parse_error( parse_error_kind::structural, line_no, ".p expects one argument" );
        declared_rows = parse_count( tokens[1], line_no, directive );
      }
      else if ( directive == ".ilb" || directive == ".ob" )
      {
        auto& labels = directive == ".ilb" ? f.input_labels : f.output_labels;
        labels.assign( tokens.begin() + 1, tokens.end() );
      }
      else if ( directive == ".type" )
      {
        if ( tokens.size() != 2 || ( tokens[1] != "fd" && tokens[1] != "f" ) )
          warnings.push_back( warn_at( line_no, "cover type '" + std::string( line.substr( 5 ) ) +
                                                    "' read as fd" ) );
      }
      else if ( directive == ".e" || directive == ".end" )
        break;
      else
        warnings.push_back( warn_at( line_no, "unsupported directive " + std::string( directive ) + " skipped" ) );
      continue;
    }

    std::string symbols;
    for ( auto ch : line )
    {
      if ( ch == ' ' || ch == '\t' || ch == '\r' )
        continue;
      if ( ch != '0' && ch != '1' && ch != '-' && ch != '~' )
        throw parse_error( parse_error_kind::lexical, line_no, "unexpected character '" + std::string( 1, ch ) + "'" );
      symbols.push_back( ch );
    }
    if ( !have_inputs || !have_outputs )
      throw parse_error( parse_error_kind::structural, line_no, "cube row before .i and .o" );

    auto const n = f.num_inputs;
    auto const m = f.num_outputs;
    if ( symbols.size() != std::size_t{n} + m )
      throw parse_error( parse_error_kind::row_length, line_no,
                         "row has " + std::to_string( symbols.size() ) + " symbols, expected " +
                             std::to_string( n + m ) );

    cube c;
    bool tilde_input = false;
    for ( uint32_t k = 0; k < n; ++k )
    {
      switch ( symbols[k] )
      {
      case '0':
        c.set_input( k, n, literal::zero );
        break;
      case '1':
        c.set_input( k, n, literal::one );
        break;
      case '~':
        tilde_input = true;
        break;
      default:
        break;
      }
    }
    bool output_dc = false;
    for ( uint32_t j = 0; j < m; ++j )
    {
      auto const ch = symbols[n + j];
      if ( ch == '1' )
        c.outputs |= uint64_t{1} << ( m - 1 - j );
      else if ( ch != '0' )
        output_dc = true;
    }
    if ( tilde_input )
      warnings.push_back( warn_at( line_no, "'~' in input field read as don't-care" ) );
    if ( output_dc )
      warnings.push_back( warn_at( line_no, "output don't-care normalized to 0" ) );
    f.cubes.push_back( c );
  }

  if ( !have_inputs || !have_outputs )
    throw parse_error( parse_error_kind::structural, 0, "missing .i or .o directive" );
  if ( declared_rows && *declared_rows != f.cubes.size() )
    throw parse_error( parse_error_kind::structural, 0,
                       ".p declares " + std::to_string( *declared_rows ) + " rows but " +
                           std::to_string( f.cubes.size() ) + " were found" );
  if ( !f.input_labels.empty() && f.input_labels.size() != f.num_inputs )
    throw parse_error( parse_error_kind::structural, 0, ".ilb label count does not match .i" );
  if ( !f.output_labels.empty() && f.output_labels.size() != f.num_outputs )
    throw parse_error( parse_error_kind::structural, 0, ".ob label count does not match .o" );
  return result;
}

parsed_pla read_pla_file( std::filesystem::path const& path )
{
  std::ifstream in( path, std::ios::binary );
  if ( !in )
    throw input_error( "cannot open " + path.string() );
  std::ostringstream buffer;
  buffer << in.rdbuf();
  auto result = parse_pla( buffer.str() );
  result.function.name = path.stem().string();
  return result;
}

std::string write_pla( pla_function const& f )
{
  std::ostringstream out;
  if ( f.semantics == cover_semantics::exclusive_or )
    out << "#esop\n";
  out << ".i " << f.num_inputs << "\n.o " << f.num_outputs << "\n";
  auto const write_labels = [&]( char const* directive, std::vector<std::string> const& labels ) {
    if ( labels.empty() )
      return;
    out << directive;
    for ( auto const& l : labels )
      out << ' ' << l;
    out << '\n';
  };
  write_labels( ".ilb", f.input_labels );
  write_labels( ".ob", f.output_labels );
  out << ".p " << f.cubes.size() << '\n';
  for ( auto const& c : f.cubes )
    out << c.inputs_string( f.num_inputs ) << ' ' << c.outputs_string( f.num_outputs ) << '\n';
  out << ".e\n";
  return out.str();
}

void write_pla_file( pla_function const& f, std::filesystem::path const& path )
{
  std::ofstream out( path, std::ios::binary );
  if ( !out )
    throw input_error( "cannot write " + path.string() );
  out << write_pla( f );
}

pla_function expand_to_minterms( pla_function const& f, uint64_t budget )
{
  f.validate();
  auto const full = low_mask( f.num_inputs );

  uint64_t total = 0;
  for ( auto const& c : f.cubes )
  {
    auto const k = c.num_dont_cares( f.num_inputs );
    if ( k >= 63 || total + ( uint64_t{1} << k ) > budget )
      throw resource_error( "minterm expansion exceeds the cube budget of " + std::to_string( budget ) );
    total += uint64_t{1} << k;
  }

  /* first-occurrence order is kept; the count decides survival */
  std::map<std::pair<uint64_t, uint64_t>, std::size_t> seen;
  std::vector<std::pair<cube, uint64_t>> minterms;
  minterms.reserve( total );
  for ( auto const& c : f.cubes )
  {
    auto const free = ~c.care & full;
    uint64_t sub = 0;
    do
    {
      auto const x = c.bits | sub;
      auto const [it, inserted] = seen.try_emplace( {x, c.outputs}, minterms.size() );
      if ( inserted )
        minterms.push_back( {cube{full, x, c.outputs}, 1} );
      else
        ++minterms[it->second].second;
      sub = ( sub - free ) & free;
    } while ( sub != 0 );
  }

  pla_function result = f;
  result.cubes.clear();
  for ( auto const& [c, count] : minterms )
  {
    if ( f.semantics == cover_semantics::inclusive_or || ( count & 1u ) )
      result.cubes.push_back( c );
  }
  return result;
}

uint64_t evaluate_pla( pla_function const& f, uint64_t x, cover_semantics semantics )
{
  uint64_t y = 0;
  for ( auto const& c : f.cubes )
  {
    if ( !c.matches( x ) )
      continue;
    if ( semantics == cover_semantics::inclusive_or )
      y |= c.outputs;
    else
      y ^= c.outputs;
  }
  return y;
}

bit_vector evaluate_pla( pla_function const& f, bit_vector const& x, cover_semantics semantics )
{
  if ( x.size() != f.num_inputs )
    throw input_error( "input has " + std::to_string( x.size() ) + " bits, function expects " +
                       std::to_string( f.num_inputs ) );
  return bit_vector::from_numeral( evaluate_pla( f, x.to_numeral(), semantics ), f.num_outputs );
}

std::vector<uint64_t> pla_truth_table( pla_function const& f, cover_semantics semantics, uint32_t input_limit )
{
  if ( f.num_inputs > input_limit )
    throw resource_error( "function has " + std::to_string( f.num_inputs ) + " inputs, exhaustive limit is " +
                          std::to_string( input_limit ) );
  auto const full = low_mask( f.num_inputs );
  std::vector<uint64_t> table( uint64_t{1} << f.num_inputs, 0 );
  for ( auto const& c : f.cubes )
  {
    auto const free = ~c.care & full;
    uint64_t sub = 0;
    do
    {
      auto& y = table[c.bits | sub];
      if ( semantics == cover_semantics::inclusive_or )
        y |= c.outputs;
      else
        y ^= c.outputs;
      sub = ( sub - free ) & free;
    } while ( sub != 0 );
  }
  return table;
}

} // namespace revhash
