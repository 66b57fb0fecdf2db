#pragma once

#include <nlohmann/json.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <variant>

#include "cgroupoid/complex.hpp"
#include "cgroupoid/connection.hpp"
#include "cgroupoid/games.hpp"
#include "cgroupoid/groupoid.hpp"
#include "cgroupoid/holonomy.hpp"
#include "cgroupoid/perm.hpp"

namespace cgroupoid {

using json = nlohmann::json;
using AnyComplex = std::variant<SimplicialComplex, CubicalComplex>;

/// Parses JSON text; syntax errors become Errc::ParseError with "where:line:column".
json parse_json(const std::string& text, const std::string& where = "<input>");
json load_json(const std::filesystem::path& path);

/// Complex files:
///   {"kind":"simplicial","facets":[[0,1,2],...]}
///   {"kind":"cubical","dim":2,"cubes":[{"00":0,"01":1,"10":2,"11":3},...],
///    "coords":[[0,0],...]}
/// A corner key is the address written in binary, so its last character is
/// coordinate 0. Cubes may also be arrays indexed by address. "coords" is
/// optional. Throws Errc::ParseError for shape errors and the build_* errors for
/// invalid complexes.
AnyComplex complex_from_json(const json& j);
json complex_to_json(const SimplicialComplex& c);
json complex_to_json(const CubicalComplex& c);
json complex_to_json(const AnyComplex& c);

/// {"kind":"groupoid","objects":[[labels...],...],
///  "morphisms":[{"source":0,"target":1,"ridge":0,"map":[...]},...]}
Groupoid groupoid_from_json(const json& j);
json groupoid_to_json(const Groupoid& g);

json perm_to_json(const Perm& p);
Perm perm_from_json(const json& j);
json signed_to_json(const SignedPerm& s);

json path_to_json(const TransportPath& p);
/// Generators as image arrays, order as a decimal string, recognition tag.
json holonomy_to_json(const HolonomyResult& h);

/// {"hole":15,"pieces":{"1":0,"2":1,...}}
LabelledState state_from_json(const json& j);
json state_to_json(const LabelledState& s);

/// {"vertices":4,"edges":[[0,1],...]} or a name such as "c5" or "k4".
Graph graph_from_json(const json& j);
json graph_to_json(const Graph& g);

/// {"edges":[[x,y],...],"nabla":{"x,y":{"x,z":"y,w",...},...}}
GraphConnection connection_from_json(const json& j);
json connection_to_json(const GraphConnection& c);

}  // namespace cgroupoid
