#include <revhash/esop.hpp>

#include <algorithm>
#include <array>
#include <bit>
#include <unordered_map>
#include <optional>
#include <utility>

#include <revhash/errors.hpp>

namespace revhash
{

namespace
{

struct input_key
{
  uint64_t care;
  uint64_t bits;
  friend bool operator==( input_key const&, input_key const& ) = default;
};

struct input_key_hash
{
  std::size_t operator()( input_key const& k ) const noexcept
  {
    auto h = k.care * 0x9E3779B97F4A7C15ull;
    h ^= k.bits + 0x632BE59BD9B4E019ull + ( h << 6 ) + ( h >> 2 );
    return static_cast<std::size_t>( h );
  }
};

/* Pieces of `a` outside `b`, pairwise disjoint; `a` and `b` must intersect. */
void sharp( cube const& a, cube const& b, uint32_t n, std::vector<cube>& pieces )
{
  auto cur = a;
  auto split = b.care & ~a.care;
  for ( uint32_t k = 0; k < n && split; ++k )
  {
    auto const bit = uint64_t{1} << ( n - 1 - k );
    if ( !( split & bit ) )
      continue;
    split &= ~bit;
    auto piece = cur;
    piece.care |= bit;
    piece.bits = ( piece.bits & ~bit ) | ( ~b.bits & bit );
    pieces.push_back( piece );
    cur.care |= bit;
    cur.bits = ( cur.bits & ~bit ) | ( b.bits & bit );
  }
}

cube intersection( cube const& a, cube const& b )
{
  return cube{a.care | b.care, a.bits | b.bits, a.outputs};
}

std::vector<cube> disjoint_cover( pla_function const& f, uint64_t budget )
{
  auto const n = f.num_inputs;
  auto const full = low_mask( n );

  bool all_minterms = std::all_of( f.cubes.begin(), f.cubes.end(), [&]( cube const& c ) { return c.care == full; } );
  if ( all_minterms )
  {
    std::unordered_map<uint64_t, std::size_t> index;
    std::vector<cube> cubes;
    for ( auto const& c : f.cubes )
    {
      if ( c.outputs == 0 )
        continue;
      auto const [it, inserted] = index.try_emplace( c.bits, cubes.size() );
      if ( inserted )
        cubes.push_back( c );
      else
        cubes[it->second].outputs |= c.outputs;
    }
    return cubes;
  }

  std::vector<cube> cover;
  std::vector<cube> next, rest, next_rest;
  for ( auto const& c : f.cubes )
  {
    if ( c.outputs == 0 )
      continue;
    next.clear();
    rest.assign( 1, c );
    for ( auto const& d : cover )
    {
      if ( !inputs_intersect( d, c ) )
      {
        next.push_back( d );
        continue;
      }
      if ( ( d.outputs | c.outputs ) == d.outputs )
        next.push_back( d );
      else
      {
        sharp( d, c, n, next );
        auto both = intersection( d, c );
        both.outputs = d.outputs | c.outputs;
        next.push_back( both );
      }
      next_rest.clear();
      for ( auto const& r : rest )
      {
        if ( inputs_intersect( r, d ) )
          sharp( r, d, n, next_rest );
        else
          next_rest.push_back( r );
      }
      std::swap( rest, next_rest );
    }
    next.insert( next.end(), rest.begin(), rest.end() );
    if ( next.size() > budget )
      throw resource_error( "disjoint cover exceeds the cube budget of " + std::to_string( budget ) );
    std::swap( cover, next );
  }
  return cover;
}

/* Merges cubes with identical inputs by XORing outputs; drops zero outputs. */
uint64_t normalize( std::vector<cube>& cubes )
{
  std::unordered_map<input_key, std::size_t, input_key_hash> index;
  std::vector<cube> out;
  out.reserve( cubes.size() );
  uint64_t merges = 0;
  for ( auto const& c : cubes )
  {
    auto const [it, inserted] = index.try_emplace( input_key{c.care, c.bits}, out.size() );
    if ( inserted )
      out.push_back( c );
    else
    {
      out[it->second].outputs ^= c.outputs;
      ++merges;
    }
  }
  std::erase_if( out, []( cube const& c ) { return c.outputs == 0; } );
  cubes = std::move( out );
  return merges;
}

/* The literal at `bit` that differs from both literals of a and b there. */
void set_third_literal( cube& target, cube a, cube b, uint64_t bit )
{
  auto const a_care = ( a.care & bit ) != 0;
  auto const b_care = ( b.care & bit ) != 0;
  target.care &= ~bit;
  target.bits &= ~bit;
  if ( a_care && b_care )
    return; /* 0 and 1 -> dash */
  /* one side is a dash: the result is the complement of the other literal */
  auto const& cared = a_care ? a : b;
  target.care |= bit;
  target.bits |= ~cared.bits & bit;
}

uint64_t diff_mask( cube const& a, cube const& b )
{
  return ( a.care ^ b.care ) | ( ( a.bits ^ b.bits ) & a.care & b.care );
}

uint64_t ones( cube const& c ) { return static_cast<uint64_t>( std::popcount( c.outputs ) ); }

/* lexicographic search objective */
struct search_cost
{
  uint64_t cubes = 0;
  uint64_t ones = 0;
  uint64_t literals = 0;
  friend auto operator<=>( search_cost const&, search_cost const& ) = default;
};

search_cost measure( std::vector<cube> const& cubes )
{
  search_cost c;
  c.cubes = cubes.size();
  for ( auto const& q : cubes )
  {
    c.ones += ones( q );
    c.literals += q.num_literals();
  }
  return c;
}

/* Sentinel position for the output part of a cube. */
constexpr uint64_t output_part = 0;

/* Positions where a and b differ: input bits, plus output_part when outputs differ. */
std::vector<uint64_t> differing_parts( cube const& a, cube const& b )
{
  std::vector<uint64_t> parts;
  if ( a.outputs != b.outputs )
    parts.push_back( output_part );
  for ( auto rest = diff_mask( a, b ); rest; rest &= rest - 1 )
    parts.push_back( rest & ( ~rest + 1 ) );
  return parts;
}

/*! Exorlink of a and b along `order`: cube i takes b's literals on
  order[0..i), the XOR of both literals on order[i], and a's literals
  elsewhere.  The XOR of the result equals a ^ b. */
std::vector<cube> exorlink( cube const& a, cube const& b, std::vector<uint64_t> const& order )
{
  std::vector<cube> out;
  out.reserve( order.size() );
  auto const take_b = [&]( cube& c, uint64_t part ) {
    if ( part == output_part )
      c.outputs = b.outputs;
    else
    {
      c.care = ( c.care & ~part ) | ( b.care & part );
      c.bits = ( c.bits & ~part ) | ( b.bits & part );
    }
  };
  for ( std::size_t i = 0; i < order.size(); ++i )
  {
    auto c = a;
    for ( std::size_t k = 0; k < i; ++k )
      take_b( c, order[k] );
    if ( order[i] == output_part )
      c.outputs = a.outputs ^ b.outputs;
    else
      set_third_literal( c, a, b, order[i] );
    out.push_back( c );
  }
  return out;
}

/*! \brief EXOR-link local search.

  Improvement phases apply merges and exorlinks that strictly lower
  (cube count, output ones, literal count); when stuck, a perturbation
  phase applies cost-neutral distance-2 exorlinks.  The search stops after
  `patience` rounds without a new best or when the round budget runs out,
  and returns the best cover seen.  Each round starts from a canonically
  sorted cover, so the trajectory depends only on the cube set.
*/
class exorlink_minimizer
{
public:
  exorlink_minimizer( uint32_t num_inputs, minimize_stats& stats ) : num_inputs_( num_inputs ), stats_( stats ) {}

  struct outcome
  {
    std::vector<cube> best;
    uint32_t rounds = 0;
    /* stopped by patience or exhaustion, not by the round budget */
    bool settled = false;
  };

  outcome run( std::vector<cube> start, uint32_t budget )
  {
    constexpr uint32_t patience = 4;
    cubes_ = std::move( start );
    stats_.merges += normalize( cubes_ );
    outcome out{cubes_, 0, false};
    auto best_cost = measure( out.best );
    uint32_t stale = 0;
    while ( out.rounds < budget )
    {
      ++out.rounds;
      ++stats_.passes;
      std::sort( cubes_.begin(), cubes_.end() );
      improve();
      auto const now = measure( cubes_ );
      if ( now < best_cost )
      {
        out.best = cubes_;
        best_cost = now;
        stale = 0;
      }
      else if ( ++stale >= patience )
      {
        out.settled = true;
        break;
      }
      if ( !perturb() )
      {
        out.settled = true;
        break;
      }
    }
    return out;
  }

  /* Applies cancellations and distance-1 merges until none is left. */
  static bool merge_all( std::vector<cube>& cubes, uint64_t* merges )
  {
    bool any = false;
    bool changed = true;
    while ( changed )
    {
      changed = false;
      for ( std::size_t i = 0; i < cubes.size(); ++i )
      {
        for ( std::size_t j = i + 1; j < cubes.size(); ++j )
        {
          auto const a = cubes[i];
          auto const b = cubes[j];
          auto const diff = diff_mask( a, b );
          if ( diff != 0 && !( std::has_single_bit( diff ) && a.outputs == b.outputs ) )
            continue;
          if ( diff == 0 )
            cubes[i].outputs ^= b.outputs;
          else
            set_third_literal( cubes[i], a, b, diff );
          cubes.erase( cubes.begin() + static_cast<std::ptrdiff_t>( j ) );
          if ( merges )
            ++*merges;
          changed = any = true;
          if ( cubes[i].outputs == 0 )
          {
            cubes.erase( cubes.begin() + static_cast<std::ptrdiff_t>( i ) );
            break;
          }
          j = i;
        }
      }
    }
    return any;
  }

private:
  void improve()
  {
    while ( true )
    {
      merge_sweep();
      if ( link_pass( 2 ) )
        continue;
      if ( link_pass( 3 ) )
        continue;
      break;
    }
    std::sort( cubes_.begin(), cubes_.end() );
  }

  /* distance-0 and equal-output distance-1 merges until none apply */
  bool merge_sweep() { return merge_all( cubes_, &stats_.merges ); }

  void rebuild_index()
  {
    index_.clear();
    for ( std::size_t k = 0; k < cubes_.size(); ++k )
      index_[input_key{cubes_[k].care, cubes_[k].bits}].push_back( k );
  }

  /* index of a cube other than i and j that `c` merges with, if any */
  std::optional<std::size_t> partner( cube const& c, std::size_t i, std::size_t j ) const
  {
    std::optional<std::size_t> found;
    auto const look = [&]( input_key const& key, bool any_output ) {
      auto const it = index_.find( key );
      if ( it == index_.end() )
        return false;
      for ( auto k : it->second )
      {
        if ( k != i && k != j && ( any_output || cubes_[k].outputs == c.outputs ) )
        {
          found = k;
          return true;
        }
      }
      return false;
    };
    if ( look( input_key{c.care, c.bits}, true ) )
      return found;
    for ( uint32_t k = 0; k < num_inputs_; ++k )
    {
      auto const bit = uint64_t{1} << k;
      input_key first{c.care, c.bits}, second{c.care, c.bits};
      if ( c.care & bit )
      {
        /* the dash and the opposite polarity */
        first.care &= ~bit;
        first.bits &= ~bit;
        second.bits ^= bit;
      }
      else
      {
        first.care |= bit;
        second.care |= bit;
        second.bits |= bit;
      }
      if ( look( first, false ) || look( second, false ) )
        return found;
    }
    return std::nullopt;
  }

  void replace_pair( std::size_t i, std::size_t j, std::vector<cube> const& with )
  {
    cubes_[i] = with[0];
    cubes_[j] = with[1];
    cubes_.insert( cubes_.end(), with.begin() + 2, with.end() );
  }

  /* Applies (i, j) -> candidate when the cover gets strictly cheaper. */
  bool try_candidate( std::size_t i, std::size_t j, std::vector<cube> const& candidate )
  {
    auto const& a = cubes_[i];
    auto const& b = cubes_[j];
    std::size_t with_partner = 0;
    std::vector<std::size_t> partners;
    for ( auto const& c : candidate )
    {
      if ( auto const k = partner( c, i, j ); k && std::find( partners.begin(), partners.end(), *k ) == partners.end() )
      {
        partners.push_back( *k );
        ++with_partner;
      }
    }

    if ( candidate.size() == 2 )
    {
      search_cost const before{0, ones( a ) + ones( b ), a.num_literals() + b.num_literals()};
      search_cost const after{0, ones( candidate[0] ) + ones( candidate[1] ),
                              candidate[0].num_literals() + candidate[1].num_literals()};
      if ( with_partner == 0 && !( after < before ) )
        return false;
      if ( with_partner == 0 )
      {
        replace_pair( i, j, candidate );
        return true;
      }
    }
    else if ( with_partner + 2 <= candidate.size() )
      return false;

    /* exact check on a copy: the merges must pay for the extra cubes */
    auto trial = cubes_;
    auto const before = measure( trial );
    trial[i] = candidate[0];
    trial[j] = candidate[1];
    trial.insert( trial.end(), candidate.begin() + 2, candidate.end() );
    merge_all( trial, nullptr );
    if ( !( measure( trial ) < before ) )
      return false;
    replace_pair( i, j, candidate );
    return true;
  }

  bool link_pair( std::size_t i, std::size_t j )
  {
    auto order = differing_parts( cubes_[i], cubes_[j] );
    std::sort( order.begin(), order.end() );
    auto const a = cubes_[i];
    auto const b = cubes_[j];
    do
    {
      if ( try_candidate( i, j, exorlink( a, b, order ) ) )
      {
        ++stats_.reshapes;
        return true;
      }
    } while ( std::next_permutation( order.begin(), order.end() ) );
    return false;
  }

  static uint32_t mv_distance( cube const& a, cube const& b )
  {
    return input_distance( a, b ) + ( a.outputs != b.outputs ? 1u : 0u );
  }

  bool link_pass( uint32_t distance )
  {
    bool any = false;
    rebuild_index();
    for ( std::size_t i = 0; i < cubes_.size(); ++i )
    {
      for ( std::size_t j = i + 1; j < cubes_.size(); ++j )
      {
        if ( mv_distance( cubes_[i], cubes_[j] ) != distance )
          continue;
        if ( !link_pair( i, j ) )
          continue;
        any = true;
        merge_sweep();
        rebuild_index();
        if ( i >= cubes_.size() )
          break;
        j = i;
      }
    }
    return any;
  }

  /* cost-neutral distance-2 exorlinks, each pair at most once */
  bool perturb()
  {
    bool any = false;
    for ( std::size_t i = 0; i < cubes_.size(); ++i )
    {
      for ( std::size_t j = i + 1; j < cubes_.size(); ++j )
      {
        auto const a = cubes_[i];
        auto const b = cubes_[j];
        if ( mv_distance( a, b ) != 2 )
          continue;
        auto order = differing_parts( a, b );
        std::sort( order.begin(), order.end() );
        std::reverse( order.begin(), order.end() );
        auto const linked = exorlink( a, b, order );
        search_cost const before{0, ones( a ) + ones( b ), a.num_literals() + b.num_literals()};
        search_cost const after{0, ones( linked[0] ) + ones( linked[1] ),
                                linked[0].num_literals() + linked[1].num_literals()};
        if ( after != before )
          continue;
        cubes_[i] = linked[0];
        cubes_[j] = linked[1];
        ++stats_.reshapes;
        any = true;
        break;
      }
    }
    return any;
  }

  uint32_t num_inputs_;
  minimize_stats& stats_;
  std::vector<cube> cubes_;
  std::unordered_map<input_key, std::vector<std::size_t>, input_key_hash> index_;
};

/*! Moves single cubes while that lowers the NOT count of the synthesized
  circuit.  On input line k the count is the number of polarity changes
  along the cubes that constrain k, with the line starting and ending
  positive; cubes with a dash on k are transparent.
*/
void reduce_polarity_switches( std::vector<cube>& cubes, uint32_t n )
{
  auto const size = static_cast<std::ptrdiff_t>( cubes.size() );
  if ( size < 3 )
    return;
  auto const bit_of = [n]( uint32_t k ) { return uint64_t{1} << ( n - 1 - k ); };
  /* literal value, with positions outside the sequence reading as positive */
  auto const value = [&]( std::ptrdiff_t idx, uint64_t bit ) {
    return idx < 0 || idx >= size ? true : ( cubes[idx].bits & bit ) != 0;
  };

  /* at_or_before[k][p]: last cube at position <= p constraining line k, or -1 */
  std::vector<std::vector<std::ptrdiff_t>> at_or_before( n, std::vector<std::ptrdiff_t>( size ) );
  std::vector<std::vector<std::ptrdiff_t>> at_or_after( n, std::vector<std::ptrdiff_t>( size ) );
  auto const rebuild = [&] {
    for ( uint32_t k = 0; k < n; ++k )
    {
      auto const bit = bit_of( k );
      std::ptrdiff_t last = -1;
      for ( std::ptrdiff_t p = 0; p < size; ++p )
        at_or_before[k][p] = last = ( cubes[p].care & bit ) ? p : last;
      last = size;
      for ( auto p = size - 1; p >= 0; --p )
        at_or_after[k][p] = last = ( cubes[p].care & bit ) ? p : last;
    }
  };

  constexpr uint32_t max_rounds = 64;
  bool improved = true;
  for ( uint32_t round = 0; improved && round < max_rounds; ++round )
  {
    improved = false;
    rebuild();
    for ( std::ptrdiff_t i = 0; i < size; ++i )
    {
      auto const care = cubes[i].care;
      if ( care == 0 )
        continue;
      std::ptrdiff_t best_gap = -1;
      int best_delta = 0;
      for ( std::ptrdiff_t gap = 0; gap <= size; ++gap )
      {
        if ( gap == i || gap == i + 1 )
          continue;
        int delta = 0;
        for ( auto rest = care; rest; rest &= rest - 1 )
        {
          auto const bit = rest & ( ~rest + 1 );
          auto const k = n - 1 - static_cast<uint32_t>( std::countr_zero( bit ) );
          bool const v = ( cubes[i].bits & bit ) != 0;
          auto const prev_i = i > 0 ? at_or_before[k][i - 1] : -1;
          auto const next_i = i + 1 < size ? at_or_after[k][i + 1] : size;
          bool const a = value( prev_i, bit ), b = value( next_i, bit );
          delta += ( a != b ) - ( a != v ) - ( v != b );

          auto p = gap > 0 ? at_or_before[k][gap - 1] : -1;
          if ( p == i )
            p = prev_i;
          auto q = gap < size ? at_or_after[k][gap] : size;
          if ( q == i )
            q = next_i;
          bool const c = value( p, bit ), d = value( q, bit );
          delta += ( c != v ) + ( v != d ) - ( c != d );
        }
        if ( delta < best_delta )
        {
          best_delta = delta;
          best_gap = gap;
        }
      }
      if ( best_gap < 0 )
        continue;
      auto const at = cubes.begin();
      if ( best_gap < i )
        std::rotate( at + best_gap, at + i, at + i + 1 );
      else
        std::rotate( at + i, at + i + 1, at + best_gap );
      improved = true;
      rebuild();
    }
  }
}

/* Reflected ternary order over literals (0, -, 1) so that neighboring
   cubes tend to share control polarities and their NOT pairs cancel. */
void order_for_synthesis( std::vector<cube>& cubes, uint32_t n )
{
  auto const key = [n]( cube const& c ) {
    std::vector<uint8_t> digits( n );
    bool flip = false;
    for ( uint32_t k = 0; k < n; ++k )
    {
      uint8_t raw = 1;
      switch ( c.input( k, n ) )
      {
      case literal::zero:
        raw = 0;
        break;
      case literal::one:
        raw = 2;
        break;
      default:
        break;
      }
      auto const eff = static_cast<uint8_t>( flip ? 2 - raw : raw );
      digits[k] = eff;
      if ( eff == 1 )
        flip = !flip;
    }
    return digits;
  };
  std::vector<std::pair<std::vector<uint8_t>, cube>> keyed;
  keyed.reserve( cubes.size() );
  for ( auto const& c : cubes )
    keyed.emplace_back( key( c ), c );
  std::stable_sort( keyed.begin(), keyed.end(), []( auto const& x, auto const& y ) { return x.first < y.first; } );
  for ( std::size_t i = 0; i < cubes.size(); ++i )
    cubes[i] = keyed[i].second;
  reduce_polarity_switches( cubes, n );
}

/* Toffoli gates plus NOT gates of the cover once ordered for synthesis. */
struct gate_estimate
{
  uint64_t gates = 0;
  uint64_t cubes = 0;
  uint64_t literals = 0;
  friend auto operator<=>( gate_estimate const&, gate_estimate const& ) = default;
};

gate_estimate estimate( std::vector<cube> cubes, uint32_t n )
{
  order_for_synthesis( cubes, n );
  gate_estimate e;
  e.cubes = cubes.size();
  for ( uint32_t k = 0; k < n; ++k )
  {
    uint64_t const bit = uint64_t{1} << ( n - 1 - k );
    bool positive = true;
    for ( auto const& q : cubes )
      if ( ( q.care & bit ) && ( ( q.bits & bit ) != 0 ) != positive )
      {
        positive = !positive;
        ++e.gates;
      }
    e.gates += !positive;
  }
  for ( auto const& q : cubes )
  {
    e.gates += ones( q );
    e.literals += q.num_literals();
  }
  return e;
}

} // namespace

esop_cover from_pla( pla_function const& f, uint64_t budget )
{
  f.validate();
  esop_cover c{f.num_inputs, f.num_outputs, {}};
  if ( f.semantics == cover_semantics::exclusive_or )
  {
    c.cubes = f.cubes;
    normalize( c.cubes );
    return c;
  }
  c.cubes = disjoint_cover( f, budget );
  return c;
}

pla_function to_pla( esop_cover const& c )
{
  pla_function f;
  f.num_inputs = c.num_inputs;
  f.num_outputs = c.num_outputs;
  f.cubes = c.cubes;
  f.semantics = cover_semantics::exclusive_or;
  return f;
}

esop_cover minimize( esop_cover const& c, minimize_params const& params, minimize_stats* stats )
{
  minimize_stats local;
  auto& s = stats ? *stats : local;
  exorlink_minimizer engine( c.num_inputs, s );

  /* Each step searches from the current cover and from its per-output
     minima recombined, keeping the candidate with the fewest estimated
     gates that does not add cubes.  Restart from each new best until a
     settled step brings no gain; steps depend only on the sorted cube set,
     so a second call replays the last step and returns the same cover. */
  auto const cap = c.cubes.size();
  auto current = c.cubes;
  normalize( current );
  if ( params.effort > 0 )
    exorlink_minimizer::merge_all( current, &s.merges );
  auto current_cost = estimate( current, c.num_inputs );
  uint32_t budget = params.effort;
  while ( budget > 0 )
  {
    bool settled = true;
    auto search = [&]( std::vector<cube> start ) {
      auto out = engine.run( std::move( start ), budget );
      budget -= out.rounds;
      settled = settled && out.settled;
      return std::move( out.best );
    };
    std::vector<std::vector<cube>> candidates;
    candidates.push_back( search( current ) );
    for ( uint32_t group = 1; group < c.num_outputs; group *= 2 )
    {
      std::vector<cube> combined;
      for ( uint32_t j = 0; j < c.num_outputs; j += group )
      {
        auto const width = std::min( group, c.num_outputs - j );
        auto const shift = c.num_outputs - j - width;
        uint64_t const mask = ( ( uint64_t{1} << width ) - 1 ) << shift;
        std::vector<cube> part;
        for ( auto const& q : current )
          if ( q.outputs & mask )
            part.push_back( {q.care, q.bits, ( q.outputs & mask ) >> shift} );
        for ( auto const& q : search( std::move( part ) ) )
          combined.push_back( {q.care, q.bits, q.outputs << shift} );
      }
      normalize( combined );
      exorlink_minimizer::merge_all( combined, &s.merges );
      candidates.push_back( search( combined ) );
      candidates.push_back( std::move( combined ) );
    }
    bool gained = false;
    for ( auto& candidate : candidates )
    {
      if ( candidate.size() > cap )
        continue;
      auto const found = estimate( candidate, c.num_inputs );
      if ( found < current_cost )
      {
        current = std::move( candidate );
        current_cost = found;
        gained = true;
      }
    }
    if ( !gained && settled )
    {
      s.fixpoint = true;
      break;
    }
  }

  esop_cover result{c.num_inputs, c.num_outputs, std::move( current )};
  order_for_synthesis( result.cubes, c.num_inputs );
  /* the search returns its best cover, never worse than the input; keep the contract explicit */
  if ( result.cubes.size() > c.cubes.size() )
    return c;
  return result;
}

uint64_t evaluate_esop( esop_cover const& c, uint64_t x )
{
  uint64_t y = 0;
  for ( auto const& q : c.cubes )
    if ( q.matches( x ) )
      y ^= q.outputs;
  return y;
}

bit_vector evaluate_esop( esop_cover const& c, bit_vector const& x )
{
  if ( x.size() != c.num_inputs )
    throw input_error( "input has " + std::to_string( x.size() ) + " bits, cover expects " +
                       std::to_string( c.num_inputs ) );
  return bit_vector::from_numeral( evaluate_esop( c, x.to_numeral() ), c.num_outputs );
}

std::vector<uint64_t> esop_truth_table( esop_cover const& c, uint32_t input_limit )
{
  pla_function f = to_pla( c );
  return pla_truth_table( f, cover_semantics::exclusive_or, input_limit );
}

cover_cost cost( esop_cover const& c )
{
  cover_cost k;
  k.cube_count = c.cubes.size();
  for ( auto const& q : c.cubes )
  {
    k.literal_count += q.num_literals();
    k.output_ones += std::popcount( q.outputs );
  }
  return k;
}

} // namespace revhash
