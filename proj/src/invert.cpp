#include <revhash/invert.hpp>

#include <bit>
#include <chrono>
#include <stdexcept>

#include <revhash/errors.hpp>
#include <revhash/esop.hpp>
#include <revhash/sim.hpp>

namespace revhash
{

tri_state partial_assignment::get( uint32_t var ) const noexcept
{
  auto const bit = uint64_t{1} << ( num_vars_ - 1 - var );
  if ( !( assigned_ & bit ) )
    return tri_state::unknown;
  return ( values_ & bit ) ? tri_state::one : tri_state::zero;
}

bool partial_assignment::assign( uint32_t var, bool value ) noexcept
{
  auto const bit = uint64_t{1} << ( num_vars_ - 1 - var );
  if ( assigned_ & bit )
    return ( ( values_ & bit ) != 0 ) == value;
  assigned_ |= bit;
  if ( value )
    values_ |= bit;
  return true;
}

namespace
{

using clock_type = std::chrono::steady_clock;

double seconds_since( clock_type::time_point start )
{
  return std::chrono::duration<double>( clock_type::now() - start ).count();
}

void check_target( uint32_t m, uint64_t target )
{
  if ( ( target & ~low_mask( m ) ) != 0 )
    throw input_error( "target does not fit in " + std::to_string( m ) + " output bits" );
}

preimage_result scan_table( std::vector<uint64_t> const& table, uint32_t n, uint32_t m, uint64_t target )
{
  preimage_result r;
  r.num_inputs = n;
  r.num_outputs = m;
  r.target = target;
  r.method = inversion_method::brute_force;
  for ( uint64_t x = 0; x < table.size(); ++x )
    if ( table[x] == target )
      r.preimages.push_back( x );
  return r;
}

/* Unit propagation and chronological backtracking over per-line XOR constraints. */
class deduction_search
{
public:
  deduction_search( output_constraints const& constraints, uint64_t required, bool first_only )
      : cons_( constraints ), first_only_( first_only )
  {
    auto const m = cons_.num_outputs;
    required_.resize( m );
    for ( uint32_t j = 0; j < m; ++j )
      required_[j] = ( ( required >> ( m - 1 - j ) ) & 1u ) != 0;
  }

  void run() { search( partial_assignment( cons_.num_inputs ) ); }

  std::vector<uint64_t> solutions;
  uint64_t branches = 0;
  uint64_t propagations = 0;

private:
  bool propagate( partial_assignment& pa )
  {
    bool changed = true;
    while ( changed )
    {
      changed = false;
      for ( uint32_t j = 0; j < cons_.num_outputs; ++j )
      {
        auto const assigned = pa.assigned_mask();
        auto const values = pa.value_mask();
        bool need = required_[j] != cons_.constant_parity[j];
        cube const* open = nullptr;
        uint32_t open_count = 0;
        for ( auto const& p : cons_.predicates[j] )
        {
          if ( ( values ^ p.bits ) & p.care & assigned )
            continue; /* a literal is false */
          if ( ( p.care & ~assigned ) == 0 )
            need = !need; /* all literals true */
          else if ( ++open_count == 1 )
            open = &p;
          if ( open_count > 1 )
            break;
        }
        if ( open_count == 0 )
        {
          if ( need )
            return false;
          continue;
        }
        if ( open_count > 1 )
          continue;

        auto const free = open->care & ~assigned;
        if ( need )
        {
          /* the only open product must be true: every literal is forced */
          for ( auto rest = free; rest; rest &= rest - 1 )
          {
            auto const bit = rest & ( ~rest + 1 );
            pa.assign( var_of( bit ), ( open->bits & bit ) != 0 );
            ++propagations;
          }
          changed = true;
        }
        else if ( std::has_single_bit( free ) )
        {
          /* the only open product must be false through its last literal */
          pa.assign( var_of( free ), ( open->bits & free ) == 0 );
          ++propagations;
          changed = true;
        }
      }
    }
    return true;
  }

  uint32_t var_of( uint64_t bit ) const
  {
    return cons_.num_inputs - 1 - static_cast<uint32_t>( std::countr_zero( bit ) );
  }

  bool search( partial_assignment pa )
  {
    if ( !propagate( pa ) )
      return false;
    if ( pa.complete() )
    {
      solutions.push_back( pa.value_mask() );
      return first_only_;
    }
    /* lowest-index unknown variable is the highest unassigned numeral bit */
    auto const unassigned = low_mask( cons_.num_inputs ) & ~pa.assigned_mask();
    auto const var = var_of( std::bit_floor( unassigned ) );
    for ( bool value : {false, true} )
    {
      ++branches;
      auto child = pa;
      child.assign( var, value );
      if ( search( child ) )
        return true;
    }
    return false;
  }

  output_constraints const& cons_;
  bool first_only_;
  std::vector<bool> required_;
};

} // namespace

output_constraints extract_constraints( circuit const& c )
{
  c.validate();
  auto const n = c.num_inputs;
  auto const m = c.num_outputs;
  if ( n > 64 || m > 64 )
    throw resource_error( "deduction supports at most 64 inputs and 64 outputs" );
  output_constraints cons;
  cons.num_inputs = n;
  cons.num_outputs = m;
  cons.predicates.resize( m );
  cons.constant_parity.assign( m, false );

  std::vector<bool> inverted( n, false );
  for ( auto const& g : c.gates )
  {
    if ( g.target < n )
    {
      if ( !g.is_not() )
        throw input_error( "controlled gate targets input line " + std::to_string( g.target ) );
      inverted[g.target] = !inverted[g.target];
      continue;
    }
    auto const j = g.target - n;
    if ( g.is_not() )
    {
      cons.constant_parity[j] = !cons.constant_parity[j];
      continue;
    }
    cube p;
    auto const add = [&]( uint32_t line, bool polarity ) {
      if ( line >= n )
        throw input_error( "gate controlled by output line " + std::to_string( line ) );
      p.set_input( line, n, ( polarity != inverted[line] ) ? literal::one : literal::zero );
    };
    for ( auto l : g.positive_controls )
      add( l, true );
    for ( auto l : g.negative_controls )
      add( l, false );
    cons.predicates[j].push_back( p );
  }
  for ( uint32_t l = 0; l < n; ++l )
    if ( inverted[l] )
      throw input_error( "input line " + std::to_string( l ) + " is not restored by the circuit" );
  return cons;
}

preimage_result preimages_bruteforce( pla_function const& f, uint64_t target, uint32_t input_limit )
{
  auto const start = clock_type::now();
  check_target( f.num_outputs, target );
  auto r = scan_table( pla_truth_table( f, f.semantics, input_limit ), f.num_inputs, f.num_outputs, target );
  r.elapsed_seconds = seconds_since( start );
  return r;
}

preimage_result preimages_bruteforce( esop_cover const& c, uint64_t target, uint32_t input_limit )
{
  auto const start = clock_type::now();
  check_target( c.num_outputs, target );
  auto r = scan_table( esop_truth_table( c, input_limit ), c.num_inputs, c.num_outputs, target );
  r.elapsed_seconds = seconds_since( start );
  return r;
}

preimage_result preimages_bruteforce( circuit const& c, uint64_t target, uint32_t input_limit )
{
  auto const start = clock_type::now();
  check_target( c.num_outputs, target );
  auto r = scan_table( truth_table( c, input_limit ), c.num_inputs, c.num_outputs, target );
  r.elapsed_seconds = seconds_since( start );
  return r;
}

preimage_result preimages_deduce( circuit const& c, uint64_t target, deduction_params const& params )
{
  auto const start = clock_type::now();
  check_target( c.num_outputs, target );
  check_target( c.num_outputs, params.output_init );
  auto const cons = extract_constraints( c );

  deduction_search search( cons, target ^ params.output_init, params.first_only );
  search.run();

  for ( auto x : search.solutions )
  {
    state s( c.width() );
    s.assign_numeral( 0, c.num_inputs, x );
    s.assign_numeral( c.num_inputs, c.num_outputs, params.output_init );
    auto const out = run( c, s );
    if ( out.slice_numeral( c.num_inputs, c.num_outputs ) != target || out.slice_numeral( 0, c.num_inputs ) != x )
      throw std::logic_error( "deduced preimage " + numeral_to_string( x, c.num_inputs ) + " fails forward simulation" );
  }

  preimage_result r;
  r.num_inputs = c.num_inputs;
  r.num_outputs = c.num_outputs;
  r.target = target;
  r.preimages = std::move( search.solutions );
  r.method = inversion_method::deduction;
  r.branches = search.branches;
  r.propagations = search.propagations;
  r.elapsed_seconds = seconds_since( start );
  return r;
}

std::optional<uint64_t> preimage_one( circuit const& c, uint64_t target, deduction_params const& params )
{
  auto p = params;
  p.first_only = true;
  auto const r = preimages_deduce( c, target, p );
  if ( r.preimages.empty() )
    return std::nullopt;
  return r.preimages.front();
}

nlohmann::json preimage_result::to_json() const
{
  nlohmann::json doc;
  doc["target"] = numeral_to_string( target, num_outputs );
  auto& list = doc["preimages"] = nlohmann::json::array();
  for ( auto x : preimages )
    list.push_back( numeral_to_string( x, num_inputs ) );
  doc["method"] = method == inversion_method::deduction ? "deduction" : "brute_force";
  doc["branches"] = branches;
  doc["propagations"] = propagations;
  doc["elapsed"] = elapsed_seconds;
  return doc;
}

} // namespace revhash
