#include "cgroupoid/io.hpp"

#include <fstream>
#include <sstream>

#include "cgroupoid/error.hpp"

namespace cgroupoid {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(Errc::ParseError, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

template <class T>
T as(const json& j, const std::string& what) {
  try {
    return j.get<T>();
  } catch (const json::exception&) {
    bad(what + " has the wrong type");
  }
}

Vertex as_vertex(const json& j, const std::string& what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) bad(what + " must be a non-negative integer");
  return static_cast<Vertex>(j.get<unsigned long long>());
}

std::pair<Vertex, Vertex> parse_pair(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) bad("expected \"x,y\", got \"" + s + "\"");
  try {
    std::size_t used = 0;
    const auto x = std::stoul(s.substr(0, comma), &used);
    if (used != comma) throw std::invalid_argument(s);
    const std::string rest = s.substr(comma + 1);
    const auto y = std::stoul(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(s);
    return {static_cast<Vertex>(x), static_cast<Vertex>(y)};
  } catch (const std::logic_error&) {
    bad("expected \"x,y\", got \"" + s + "\"");
  }
}

std::string pair_key(Vertex x, Vertex y) { return std::to_string(x) + "," + std::to_string(y); }

}  // namespace

json parse_json(const std::string& text, const std::string& where) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string msg = e.what();
    if (auto pos = msg.find("syntax error"); pos != std::string::npos) msg = msg.substr(pos);
    bad(where + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + msg);
  }
}

json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_json(buffer.str(), path.string());
}

AnyComplex complex_from_json(const json& j) {
  const auto type = as<std::string>(field(j, "kind"), "kind");
  if (type == "simplicial") {
    const json& facets = field(j, "facets");
    if (!facets.is_array()) bad("facets must be an array");
    std::vector<std::vector<Vertex>> out;
    for (const auto& f : facets) {
      if (!f.is_array()) bad("each facet must be an array");
      std::vector<Vertex> facet;
      for (const auto& v : f) facet.push_back(as_vertex(v, "facet vertex"));
      out.push_back(std::move(facet));
    }
    return build_simplicial(std::move(out));
  }
  if (type != "cubical") bad("unknown complex kind \"" + type + "\"");

  const json& dim = field(j, "dim");
  if (!dim.is_number_integer() || dim.get<long long>() < 1 || dim.get<long long>() > 8)
    bad("dim must be an integer in 1..8");
  const auto k = dim.get<unsigned>();
  const json& cubes = field(j, "cubes");
  if (!cubes.is_array()) bad("cubes must be an array");
  std::vector<std::vector<Vertex>> out;
  for (const auto& c : cubes) {
    std::vector<Vertex> corners(1u << k);
    if (c.is_array()) {
      if (c.size() != corners.size()) bad("a cube array needs 2^k entries");
      for (std::size_t a = 0; a < corners.size(); ++a) corners[a] = as_vertex(c[a], "corner");
    } else if (c.is_object()) {
      if (c.size() != corners.size()) bad("a cube needs 2^k corners");
      std::vector<bool> seen(corners.size(), false);
      for (const auto& [key, v] : c.items()) {
        if (key.size() != k || key.find_first_not_of("01") != std::string::npos)
          bad("corner key \"" + key + "\" is not a binary string of length " + std::to_string(k));
        unsigned a = 0;
        for (unsigned b = 0; b < k; ++b) a |= static_cast<unsigned>(key[k - 1 - b] - '0') << b;
        seen[a] = true;
        corners[a] = as_vertex(v, "corner " + key);
      }
      for (bool s : seen)
        if (!s) bad("a cube is missing a corner");
    } else {
      bad("each cube must be an object or an array");
    }
    out.push_back(std::move(corners));
  }
  std::vector<std::vector<int>> coords;
  if (j.contains("coords")) coords = as<std::vector<std::vector<int>>>(j.at("coords"), "coords");
  return build_cubical(k, std::move(out), std::move(coords));
}

json complex_to_json(const SimplicialComplex& c) {
  return json{{"kind", "simplicial"}, {"facets", c.facets()}};
}

json complex_to_json(const CubicalComplex& c) {
  const unsigned k = c.dimension();
  json cubes = json::array();
  for (const auto& cube : c.cubes()) {
    json corners = json::object();
    for (unsigned a = 0; a < cube.size(); ++a) {
      std::string key(k, '0');
      for (unsigned b = 0; b < k; ++b)
        if (a >> b & 1u) key[k - 1 - b] = '1';
      corners[key] = cube[a];
    }
    cubes.push_back(std::move(corners));
  }
  json out{{"kind", "cubical"}, {"dim", k}, {"cubes", std::move(cubes)}};
  if (!c.coords().empty()) out["coords"] = c.coords();
  return out;
}

json complex_to_json(const AnyComplex& c) {
  return std::visit([](const auto& x) { return complex_to_json(x); }, c);
}

Groupoid groupoid_from_json(const json& j) {
  if (as<std::string>(field(j, "kind"), "kind") != "groupoid") bad("expected kind \"groupoid\"");
  std::vector<std::vector<Vertex>> objects;
  for (const auto& o : field(j, "objects")) {
    std::vector<Vertex> labels;
    for (const auto& v : o) labels.push_back(as_vertex(v, "slot label"));
    objects.push_back(std::move(labels));
  }
  std::vector<ElemMorphism> morphisms;
  for (const auto& m : field(j, "morphisms"))
    morphisms.push_back({as_vertex(field(m, "source"), "source"), as_vertex(field(m, "target"), "target"),
                         as_vertex(field(m, "ridge"), "ridge"), perm_from_json(field(m, "map"))});
  return Groupoid(std::move(objects), std::move(morphisms));
}

json groupoid_to_json(const Groupoid& g) {
  json objects = json::array();
  for (std::size_t o = 0; o < g.object_count(); ++o) objects.push_back(g.labels(o));
  json morphisms = json::array();
  for (const auto& m : g.morphisms())
    morphisms.push_back({{"source", m.source}, {"target", m.target}, {"ridge", m.ridge}, {"map", m.slot_map.images()}});
  return json{{"kind", "groupoid"}, {"objects", std::move(objects)}, {"morphisms", std::move(morphisms)}};
}

json perm_to_json(const Perm& p) { return p.images(); }

Perm perm_from_json(const json& j) {
  try {
    return Perm(as<std::vector<Point>>(j, "permutation"));
  } catch (const Error& e) {
    if (e.code() == Errc::ParseError) throw;
    bad(std::string("invalid permutation: ") + e.what());
  }
}

json signed_to_json(const SignedPerm& s) { return json{{"perm", s.perm.images()}, {"signs", s.signs}}; }

json path_to_json(const TransportPath& p) {
  return json{{"path", p.serialize()}, {"map", p.map.images()}};
}

json holonomy_to_json(const HolonomyResult& h) {
  json gens = json::array();
  for (const auto& g : h.generators) gens.push_back(g.images());
  return json{{"base", h.base},
              {"degree", h.group.degree()},
              {"order", h.group.order().str()},
              {"tag", h.tag().to_string()},
              {"generators", std::move(gens)}};
}

LabelledState state_from_json(const json& j) {
  LabelledState s;
  s.hole = as_vertex(field(j, "hole"), "hole");
  const json& pieces = field(j, "pieces");
  if (!pieces.is_object()) bad("pieces must map labels to cells");
  for (const auto& [label, cell] : pieces.items()) s.pieces[label] = as_vertex(cell, "cell of piece " + label);
  return s;
}

json state_to_json(const LabelledState& s) {
  json pieces = json::object();
  for (const auto& [label, cell] : s.pieces) pieces[label] = cell;
  return json{{"hole", s.hole}, {"pieces", std::move(pieces)}};
}

Graph graph_from_json(const json& j) {
  if (j.is_string()) return named_graph(j.get<std::string>());
  const auto n = as_vertex(field(j, "vertices"), "vertices");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const auto& e : field(j, "edges")) {
    if (!e.is_array() || e.size() != 2) bad("an edge must be a pair");
    edges.emplace_back(as_vertex(e[0], "edge endpoint"), as_vertex(e[1], "edge endpoint"));
  }
  return Graph(n, std::move(edges));
}

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return json{{"vertices", g.vertex_count()}, {"edges", std::move(edges)}};
}

GraphConnection connection_from_json(const json& j) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  Vertex n = 0;
  for (const auto& e : field(j, "edges")) {
    if (!e.is_array() || e.size() != 2) bad("an edge must be a pair");
    const Vertex x = as_vertex(e[0], "edge endpoint"), y = as_vertex(e[1], "edge endpoint");
    n = std::max({n, x + 1, y + 1});
    edges.emplace_back(x, y);
  }
  if (j.contains("vertices")) n = std::max(n, as_vertex(j.at("vertices"), "vertices"));
  GraphConnection c{Graph(n, std::move(edges)), {}};
  const Graph& g = c.graph;

  const json& nabla = field(j, "nabla");
  if (!nabla.is_object()) bad("nabla must be an object");
  for (const auto& [edge_key, table] : nabla.items()) {
    const auto [x, y] = parse_pair(edge_key);
    if (x >= n || y >= n || !g.adjacent(x, y)) throw Error(Errc::EdgeNotInGraph, "nabla entry for non-edge " + edge_key);
    if (!table.is_object()) bad("nabla[" + edge_key + "] must be an object");
    const auto& sx = g.neighbours(x);
    const auto& sy = g.neighbours(y);
    std::vector<Point> images(sx.size(), static_cast<Point>(sy.size()));
    for (const auto& [from_key, to_value] : table.items()) {
      const auto [fx, fz] = parse_pair(from_key);
      const auto [ty, tw] = parse_pair(as<std::string>(to_value, "nabla image"));
      auto fi = std::find(sx.begin(), sx.end(), fz);
      auto ti = std::find(sy.begin(), sy.end(), tw);
      if (fx != x || ty != y || fi == sx.end() || ti == sy.end())
        bad("nabla[" + edge_key + "] maps " + from_key + " outside the stars");
      images[fi - sx.begin()] = static_cast<Point>(ti - sy.begin());
    }
    c.nabla[{x, y}] = std::move(images);
  }
  return c;
}

json connection_to_json(const GraphConnection& c) {
  const Graph& g = c.graph;
  json nabla = json::object();
  for (const auto& [edge, table] : c.nabla) {
    const auto [x, y] = edge;
    json entry = json::object();
    for (std::size_t i = 0; i < table.size(); ++i)
      if (table[i] < g.degree(y)) entry[pair_key(x, g.neighbours(x)[i])] = pair_key(y, g.neighbours(y)[table[i]]);
    nabla[pair_key(x, y)] = std::move(entry);
  }
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return json{{"vertices", g.vertex_count()}, {"edges", std::move(edges)}, {"nabla", std::move(nabla)}};
}

}  // namespace cgroupoid
