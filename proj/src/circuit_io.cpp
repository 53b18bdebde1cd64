#include <revhash/circuit_io.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include <revhash/errors.hpp>

namespace revhash
{

namespace
{

std::string line_name( circuit const& c, uint32_t line )
{
  return line < c.num_inputs ? "x" + std::to_string( line ) : "y" + std::to_string( line - c.num_inputs );
}

std::vector<std::string> tokenize( std::string_view s )
{
  std::vector<std::string> tokens;
  std::istringstream in{std::string( s )};
  std::string t;
  while ( in >> t )
    tokens.push_back( t );
  return tokens;
}

} // namespace

std::string write_real( circuit const& c )
{
  auto const flat = expand_negative_controls( c );
  std::ostringstream out;
  if ( !c.name.empty() )
    out << "# " << c.name << '\n';
  out << ".version 1.0\n.numvars " << c.width() << "\n.variables";
  for ( uint32_t l = 0; l < c.width(); ++l )
    out << ' ' << line_name( c, l );
  out << "\n.inputs";
  for ( uint32_t l = 0; l < c.width(); ++l )
    out << ' ' << line_name( c, l );
  out << "\n.outputs";
  for ( uint32_t l = 0; l < c.width(); ++l )
    out << ' ' << line_name( c, l );
  out << "\n.constants " << std::string( c.num_inputs, '-' ) << std::string( c.num_outputs, '0' );
  out << "\n.garbage " << std::string( c.num_inputs, '1' ) << std::string( c.num_outputs, '-' );
  out << "\n.begin\n";
  for ( auto const& g : flat.gates )
  {
    out << 't' << g.num_controls() + 1;
    for ( auto l : g.positive_controls )
      out << ' ' << line_name( c, l );
    out << ' ' << line_name( c, g.target ) << '\n';
  }
  out << ".end\n";
  return out.str();
}

circuit parse_real( std::string_view text )
{
  circuit c;
  std::vector<std::string> variables;
  std::map<std::string, uint32_t> index;
  std::optional<std::string> constants;
  std::optional<uint32_t> numvars;
  bool in_body = false;
  bool ended = false;
  std::size_t line_no = 0;

  std::istringstream in{std::string( text )};
  std::string raw;
  while ( !ended && std::getline( in, raw ) )
  {
    ++line_no;
    if ( auto const hash = raw.find( '#' ); hash != std::string::npos )
      raw.erase( hash );
    auto const tokens = tokenize( raw );
    if ( tokens.empty() )
      continue;
    auto const& head = tokens[0];

    if ( head.front() == '.' )
    {
      if ( head == ".numvars" && tokens.size() == 2 )
      {
        uint32_t v = 0;
        auto const [ptr, ec] = std::from_chars( tokens[1].data(), tokens[1].data() + tokens[1].size(), v );
        if ( ec != std::errc{} || ptr != tokens[1].data() + tokens[1].size() )
          throw parse_error( parse_error_kind::structural, line_no, "invalid .numvars" );
        numvars = v;
      }
      else if ( head == ".variables" )
      {
        variables.assign( tokens.begin() + 1, tokens.end() );
        for ( uint32_t i = 0; i < variables.size(); ++i )
          if ( !index.emplace( variables[i], i ).second )
            throw parse_error( parse_error_kind::structural, line_no, "duplicate variable " + variables[i] );
      }
      else if ( head == ".constants" && tokens.size() == 2 )
        constants = tokens[1];
      else if ( head == ".begin" )
      {
        if ( !numvars || variables.size() != *numvars )
          throw parse_error( parse_error_kind::structural, line_no, ".variables does not match .numvars" );
        if ( !constants || constants->size() != variables.size() )
          throw parse_error( parse_error_kind::structural, line_no, ".constants missing or of wrong length" );
        auto const first_zero = constants->find_first_not_of( '-' );
        auto const n = first_zero == std::string::npos ? constants->size() : first_zero;
        if ( constants->find_first_not_of( '0', n ) != std::string::npos )
          throw parse_error( parse_error_kind::structural, line_no,
                             "expected input lines ('-') followed by zero-initialized output lines ('0')" );
        c.num_inputs = static_cast<uint32_t>( n );
        c.num_outputs = static_cast<uint32_t>( constants->size() - n );
        in_body = true;
      }
      else if ( head == ".end" )
      {
        if ( !in_body )
          throw parse_error( parse_error_kind::structural, line_no, ".end before .begin" );
        ended = true;
      }
      /* .version, .inputs, .outputs, .garbage carry no information we need */
      continue;
    }

    if ( !in_body )
      throw parse_error( parse_error_kind::structural, line_no, "gate outside .begin/.end" );
    if ( head.size() < 2 || head[0] != 't' )
      throw parse_error( parse_error_kind::lexical, line_no, "unsupported gate '" + head + "'" );
    std::size_t arity = 0;
    auto const [ptr, ec] = std::from_chars( head.data() + 1, head.data() + head.size(), arity );
    if ( ec != std::errc{} || ptr != head.data() + head.size() || arity == 0 )
      throw parse_error( parse_error_kind::lexical, line_no, "malformed gate '" + head + "'" );
    if ( tokens.size() != arity + 1 )
      throw parse_error( parse_error_kind::row_length, line_no, head + " expects " + std::to_string( arity ) + " lines" );

    auto const lookup = [&]( std::string const& name ) {
      auto const it = index.find( name );
      if ( it == index.end() )
        throw parse_error( parse_error_kind::structural, line_no, "unknown variable " + name );
      return it->second;
    };
    std::vector<uint32_t> positive, negative;
    for ( std::size_t i = 1; i < arity; ++i )
    {
      auto const& t = tokens[i];
      if ( t.size() > 1 && t[0] == '-' )
        negative.push_back( lookup( t.substr( 1 ) ) );
      else
        positive.push_back( lookup( t ) );
    }
    c.gates.push_back( gate::make( lookup( tokens[arity] ), std::move( positive ), std::move( negative ) ) );
  }
  if ( !ended )
    throw parse_error( parse_error_kind::structural, 0, "missing .end" );
  c.validate();
  return c;
}

nlohmann::json circuit_to_json( circuit const& c )
{
  nlohmann::json doc;
  doc["name"] = c.name;
  doc["width"] = c.width();
  doc["num_inputs"] = c.num_inputs;
  doc["num_outputs"] = c.num_outputs;
  auto& inputs = doc["input_lines"] = nlohmann::json::array();
  for ( uint32_t l = 0; l < c.num_inputs; ++l )
    inputs.push_back( l );
  auto& outputs = doc["output_lines"] = nlohmann::json::array();
  for ( uint32_t j = 0; j < c.num_outputs; ++j )
    outputs.push_back( c.output_line( j ) );
  auto& gates = doc["gates"] = nlohmann::json::array();
  for ( auto const& g : c.gates )
    gates.push_back( {{"target", g.target}, {"controls", g.positive_controls}, {"negative_controls", g.negative_controls}} );
  return doc;
}

circuit circuit_from_json( nlohmann::json const& doc )
{
  try
  {
    circuit c;
    c.name = doc.value( "name", std::string{} );
    c.num_inputs = doc.at( "num_inputs" ).get<uint32_t>();
    c.num_outputs = doc.at( "num_outputs" ).get<uint32_t>();
    if ( doc.contains( "width" ) && doc["width"].get<uint32_t>() != c.width() )
      throw input_error( "circuit width does not equal num_inputs + num_outputs" );
    for ( auto const& g : doc.at( "gates" ) )
      c.gates.push_back( gate::make( g.at( "target" ).get<uint32_t>(),
                                     g.value( "controls", std::vector<uint32_t>{} ),
                                     g.value( "negative_controls", std::vector<uint32_t>{} ) ) );
    c.validate();
    return c;
  }
  catch ( nlohmann::json::exception const& e )
  {
    throw input_error( std::string( "malformed circuit document: " ) + e.what() );
  }
}

circuit read_circuit_file( std::filesystem::path const& path )
{
  std::ifstream in( path, std::ios::binary );
  if ( !in )
    throw input_error( "cannot open " + path.string() );
  std::ostringstream buffer;
  buffer << in.rdbuf();
  circuit c;
  if ( path.extension() == ".json" )
  {
    auto doc = nlohmann::json::parse( buffer.str(), nullptr, false );
    if ( doc.is_discarded() )
      throw input_error( "invalid JSON in " + path.string() );
    c = circuit_from_json( doc );
  }
  else if ( path.extension() == ".real" )
    c = parse_real( buffer.str() );
  else
    throw input_error( "unknown circuit format: " + path.string() );
  if ( c.name.empty() )
    c.name = path.stem().string();
  return c;
}

} // namespace revhash
