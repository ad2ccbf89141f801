#pragma once

#include "wittnum/hodge_witt.hpp"
#include "wittnum/rational.hpp"
#include "wittnum/slopes.hpp"
#include "wittnum/surface.hpp"
#include "wittnum/threefold.hpp"

#include <json.hpp>

namespace wittnum {

// Exact values only: integers are emitted as JSON numbers while they fit in
// 64 bits and as decimal strings past that; rationals are always fraction
// strings, never floats.
nlohmann::json int_to_json(const Int& value);
Int int_from_json(const nlohmann::json& j);

nlohmann::json rat_to_json(const Rat& value);
Rat rat_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const nlohmann::json& j);

// {"degree": 2, "slopes": [["1/2", 2], ["1", 18], ["3/2", 2]]}
nlohmann::json profile_to_json(const SlopeProfile& p);
SlopeProfile profile_from_json(const nlohmann::json& j);

nlohmann::json crystal_to_json(const CrystalProfile& c);
CrystalProfile crystal_from_json(const nlohmann::json& j);

nlohmann::json surface_to_json(const SurfaceInvariants& s);
SurfaceInvariants surface_from_json(const nlohmann::json& j);

// Field names: "dim", "m", "T", "hW", "hodge", "chi"; absent parts omitted.
nlohmann::json table_to_json(const HodgeWittTable& t);
HodgeWittTable table_from_json(const nlohmann::json& j);

nlohmann::json threefold_to_json(const ThreefoldInvariants& t);
ThreefoldInvariants threefold_from_json(const nlohmann::json& j);

}  // namespace wittnum
