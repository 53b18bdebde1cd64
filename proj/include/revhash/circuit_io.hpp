#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "synth.hpp"

namespace revhash
{

/*! \brief RevLib `.real` export.

  Negative controls are expanded into NOT sandwiches, since the format's
  `t<k>` gates only carry positive controls.  Input lines are declared as
  non-constant, output lines as constant 0.
*/
std::string write_real( circuit const& c );

/*! \brief RevLib `.real` import.

  Accepts `t<k>` gates (a `-` prefix on a control marks it negative) and
  uses `.constants` to recover roles: lines marked `-` are inputs and must
  precede the lines marked `0`.  Throws parse_error.
*/
circuit parse_real( std::string_view text );

nlohmann::json circuit_to_json( circuit const& c );
circuit circuit_from_json( nlohmann::json const& doc );

/* Loads `.real` or `.json` by extension. */
circuit read_circuit_file( std::filesystem::path const& path );

} // namespace revhash
