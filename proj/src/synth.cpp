#include <revhash/synth.hpp>

#include <algorithm>
#include <optional>

#include <revhash/errors.hpp>

namespace revhash
{

gate gate::make( uint32_t target, std::vector<uint32_t> positive, std::vector<uint32_t> negative )
{
  std::sort( positive.begin(), positive.end() );
  std::sort( negative.begin(), negative.end() );
  return gate{target, std::move( positive ), std::move( negative )};
}

bool gate::touches( uint32_t line ) const noexcept
{
  return target == line || std::binary_search( positive_controls.begin(), positive_controls.end(), line ) ||
         std::binary_search( negative_controls.begin(), negative_controls.end(), line );
}

void circuit::validate() const
{
  auto const w = width();
  for ( auto const& g : gates )
  {
    if ( g.target >= w )
      throw input_error( "gate target " + std::to_string( g.target ) + " outside circuit width " + std::to_string( w ) );
    std::vector<uint32_t> lines = g.positive_controls;
    lines.insert( lines.end(), g.negative_controls.begin(), g.negative_controls.end() );
    std::sort( lines.begin(), lines.end() );
    if ( std::adjacent_find( lines.begin(), lines.end() ) != lines.end() )
      throw input_error( "gate uses a control line twice" );
    for ( auto l : lines )
    {
      if ( l >= w )
        throw input_error( "gate control " + std::to_string( l ) + " outside circuit width " + std::to_string( w ) );
      if ( l == g.target )
        throw input_error( "gate target is also a control" );
    }
  }
}

circuit synthesize( esop_cover const& c )
{
  auto const n = c.num_inputs;
  auto const m = c.num_outputs;
  circuit result;
  result.num_inputs = n;
  result.num_outputs = m;
  for ( auto const& q : c.cubes )
  {
    std::vector<uint32_t> positive, negative;
    for ( uint32_t k = 0; k < n; ++k )
    {
      switch ( q.input( k, n ) )
      {
      case literal::one:
        positive.push_back( k );
        break;
      case literal::zero:
        negative.push_back( k );
        break;
      default:
        break;
      }
    }
    for ( uint32_t j = 0; j < m; ++j )
      if ( q.output( j, m ) )
        result.gates.push_back( gate{n + j, positive, negative} );
  }
  return result;
}

circuit expand_negative_controls( circuit const& c )
{
  circuit result = c;
  result.gates.clear();
  for ( auto const& g : c.gates )
  {
    if ( g.negative_controls.empty() )
    {
      result.gates.push_back( g );
      continue;
    }
    for ( auto l : g.negative_controls )
      result.gates.push_back( gate::make_not( l ) );
    auto controls = g.positive_controls;
    controls.insert( controls.end(), g.negative_controls.begin(), g.negative_controls.end() );
    result.gates.push_back( gate::make( g.target, std::move( controls ) ) );
    for ( auto l : g.negative_controls )
      result.gates.push_back( gate::make_not( l ) );
  }
  return result;
}

circuit remove_superfluous_nots( circuit const& c )
{
  std::vector<std::optional<std::size_t>> pending( c.width() );
  std::vector<bool> removed( c.gates.size(), false );
  for ( std::size_t i = 0; i < c.gates.size(); ++i )
  {
    auto const& g = c.gates[i];
    if ( g.is_not() )
    {
      if ( auto& p = pending[g.target] )
      {
        removed[*p] = removed[i] = true;
        p.reset();
      }
      else
        p = i;
      continue;
    }
    pending[g.target].reset();
    for ( auto l : g.positive_controls )
      pending[l].reset();
    for ( auto l : g.negative_controls )
      pending[l].reset();
  }

  circuit result = c;
  result.gates.clear();
  for ( std::size_t i = 0; i < c.gates.size(); ++i )
    if ( !removed[i] )
      result.gates.push_back( c.gates[i] );
  return result;
}

circuit reverse( circuit const& c )
{
  circuit result = c;
  std::reverse( result.gates.begin(), result.gates.end() );
  return result;
}

uint64_t gate_stats::count( std::size_t k ) const
{
  auto const it = by_controls.find( k );
  return it == by_controls.end() ? 0 : it->second;
}

uint64_t gate_stats::generalized_toffolis() const
{
  uint64_t total = 0;
  for ( auto const& [k, count] : by_controls )
    if ( k >= 3 )
      total += count;
  return total;
}

gate_stats stats( circuit const& c )
{
  gate_stats s;
  s.native = c.gates.size();
  auto const flat = remove_superfluous_nots( expand_negative_controls( c ) );
  s.total = flat.gates.size();
  for ( auto const& g : flat.gates )
    ++s.by_controls[g.num_controls()];
  return s;
}

} // namespace revhash
