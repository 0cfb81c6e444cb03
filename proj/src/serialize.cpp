#include "onefactor/serialize.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace onefactor {
namespace {

Json optional_int(const std::optional<Int>& v) { return v ? Json(*v) : Json(nullptr); }

std::optional<Int> read_optional_int(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  if (!j.at(key).is_number_integer()) {
    throw std::invalid_argument(std::string("field '") + key + "' must be an integer or null");
  }
  return j.at(key).get<Int>();
}

Int read_int(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_number_integer()) {
    throw std::invalid_argument(std::string("missing integer field '") + key + "'");
  }
  return j.at(key).get<Int>();
}

const Json& read_array(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_array()) {
    throw std::invalid_argument(std::string("missing array field '") + key + "'");
  }
  return j.at(key);
}

Json edge_list(const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

std::vector<Edge> read_edges(const Json& j) {
  std::vector<Edge> edges;
  for (const Json& e : read_array(j, "edges")) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer()) {
      throw std::invalid_argument("each edge must be a pair of integers");
    }
    edges.push_back(Edge::make(e[0].get<Int>(), e[1].get<Int>()));
  }
  std::ranges::sort(edges);
  return edges;
}

}  // namespace

Json to_json(const Factor& f) {
  return Json{{"n", f.n},
              {"index", optional_int(f.index)},
              {"isolated", optional_int(f.isolated)},
              {"edges", edge_list(f.edges)}};
}

Factor factor_from_json(const Json& j) {
  Factor f;
  f.n = read_int(j, "n");
  f.index = read_optional_int(j, "index");
  f.isolated = read_optional_int(j, "isolated");
  f.edges = read_edges(j);
  return f;
}

Json to_json(const Factorization& fz) {
  Json factors = Json::array();
  for (const Factor& f : fz.factors) factors.push_back(to_json(f));
  return Json{{"n", fz.n}, {"factors", factors}};
}

Factorization factorization_from_json(const Json& j) {
  Factorization fz;
  fz.n = read_int(j, "n");
  for (const Json& f : read_array(j, "factors")) fz.factors.push_back(factor_from_json(f));
  return fz;
}

Json to_json(const ProductFactor& pf) {
  Json j = to_json(flatten(pf));
  j["s"] = pf.s;
  j["t"] = pf.t;
  j["k"] = pf.k;
  j["l"] = pf.l;
  j["vertex_encoding"] = "positional";
  return j;
}

ProductFactor product_factor_from_json(const Json& j) {
  if (!j.contains("vertex_encoding") || j.at("vertex_encoding") != "positional") {
    throw std::invalid_argument("product factor must use the positional vertex encoding");
  }
  ProductFactor pf;
  pf.s = read_int(j, "s");
  pf.t = read_int(j, "t");
  pf.k = read_int(j, "k");
  pf.l = read_int(j, "l");
  if (pf.t < 1) throw std::invalid_argument("t must be positive");
  if (auto iso = read_optional_int(j, "isolated")) pf.isolated = unflatten_positional(*iso, pf.t);
  for (const Edge& e : read_edges(j)) {
    pf.edges.push_back({unflatten_positional(e.u, pf.t), unflatten_positional(e.v, pf.t)});
  }
  std::ranges::sort(pf.edges);
  return pf;
}

Json to_json(const EquivalenceReport& r) {
  Json index_map = Json::array();
  for (const IndexTriple& m : r.index_map) index_map.push_back({m.p, m.k, m.l});
  return Json{{"s", r.s},
              {"t", r.t},
              {"n", r.n},
              {"index_map", index_map},
              {"all_edge_sets_equal", r.all_edge_sets_equal},
              {"direct_bound", r.direct_bound},
              {"product_bound", r.product_bound},
              {"bounds_equal", r.bounds_equal},
              {"failures", r.failures}};
}

EquivalenceReport equivalence_report_from_json(const Json& j) {
  EquivalenceReport r;
  r.s = read_int(j, "s");
  r.t = read_int(j, "t");
  r.n = read_int(j, "n");
  for (const Json& m : read_array(j, "index_map")) {
    if (!m.is_array() || m.size() != 3) throw std::invalid_argument("index_map entries are [p,k,l]");
    r.index_map.push_back({m[0].get<Int>(), m[1].get<Int>(), m[2].get<Int>()});
  }
  r.all_edge_sets_equal = j.at("all_edge_sets_equal").get<bool>();
  r.direct_bound = read_int(j, "direct_bound");
  r.product_bound = read_int(j, "product_bound");
  r.bounds_equal = j.at("bounds_equal").get<bool>();
  r.failures = read_array(j, "failures").get<std::vector<Int>>();
  return r;
}

Json to_json(const ExactCResult& r) {
  return Json{{"n", r.n},
              {"exact_c", r.exact_c},
              {"lower_bound", r.lower_bound},
              {"factorizations_seen", r.factorizations_seen}};
}

Json to_json(const UnionWalk& w) {
  return Json{{"start", w.start}, {"vertices", w.vertices}, {"terminal", to_string(w.end)}};
}

std::string dump(const Json& j) { return j.dump(); }

std::string to_dot(const std::vector<Factor>& factors) {
  std::ostringstream os;
  for (const Factor& f : factors) {
    os << "graph F";
    if (f.index) os << '_' << *f.index;
    os << " {\n";
    for (Vertex v = 0; v < f.n; ++v) {
      os << "  " << v;
      if (v == f.isolated) os << " [style=dashed]";
      os << ";\n";
    }
    for (const Edge& e : f.edges) os << "  " << e.u << " -- " << e.v << ";\n";
    os << "}\n";
  }
  return os.str();
}

std::string pair_to_dot(const Factor& f, const Factor& g, const UnionWalk& walk) {
  std::ostringstream os;
  os << "graph pair {\n";
  for (Vertex v = 0; v < f.n; ++v) {
    os << "  " << v;
    if (v == walk.start) os << " [shape=doublecircle]";
    os << ";\n";
  }
  for (const Edge& e : f.edges) os << "  " << e.u << " -- " << e.v << " [color=blue];\n";
  for (const Edge& e : g.edges) os << "  " << e.u << " -- " << e.v << " [color=red];\n";
  os << "}\n";
  return os.str();
}

}  // namespace onefactor
