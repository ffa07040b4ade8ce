#include "io.hpp"

#include <fstream>
#include <sstream>

#include "tropcvx/errors.hpp"

namespace tropcvx::io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw InvalidInput("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw InvalidInput(std::string("missing field \"") + key + "\"");
  return *it;
}

const Json& array_field(const Json& j, const char* key) {
  const Json& a = field(j, key);
  if (!a.is_array()) throw InvalidInput(std::string("field \"") + key + "\" must be an array");
  return a;
}

std::size_t ground_size(const Json& j) {
  const Json& n = field(j, "n");
  if (!n.is_number_integer() || n.get<long long>() < 1 || n.get<long long>() > 31) {
    throw InvalidInput("\"n\" must be an integer between 1 and 31");
  }
  return n.get<std::size_t>();
}

Vec rationals(const Json& j) {
  if (!j.is_array()) throw InvalidInput("expected an array of rationals");
  Vec v;
  for (const auto& e : j) v.push_back(rational_from_json(e));
  return v;
}

// A direction in R^n modulo (1,...,1), in reduced coordinates.
Vec direction_from_json(const Json& j, std::size_t n) {
  Vec v = rationals(j);
  if (v.size() != n) throw InvalidInput("direction has " + std::to_string(v.size()) + " entries, expected " + std::to_string(n));
  Vec r(n - 1);
  for (std::size_t i = 1; i < n; ++i) r[i - 1] = v[i] - v[0];
  return r;
}

Json sets_to_json(const std::vector<ElementSet>& sets) {
  Json out = Json::array();
  for (auto s : sets) out.push_back(to_json(s));
  return out;
}

}  // namespace

Json parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw InvalidInput("expected a rational string such as \"-3/2\", got " + j.dump());
}

Json to_json(const Rational& q) { return to_string(q); }

TropPoint point_from_json(const Json& j) {
  Vec v = rationals(j);
  if (v.empty()) throw InvalidInput("a point needs at least one coordinate");
  return TropPoint::canonicalize(std::move(v));
}

Json to_json(const TropPoint& p) {
  Json out = Json::array();
  for (const auto& q : p.coords()) out.push_back(to_json(q));
  return out;
}

TropPoint parse_point(std::string_view text) {
  Vec v;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    v.push_back(parse_rational(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return TropPoint::canonicalize(std::move(v));
}

Json direction_to_json(const Vec& reduced) {
  Json out = Json::array({"0"});
  for (const auto& q : reduced) out.push_back(to_json(q));
  return out;
}

ElementSet set_from_json(const Json& j, std::size_t n) {
  if (!j.is_array()) throw InvalidInput("expected an array of elements");
  ElementSet s;
  for (const auto& e : j) {
    if (!e.is_number_integer() || e.get<long long>() < 1 || e.get<long long>() > static_cast<long long>(n)) {
      throw InvalidInput("element " + e.dump() + " outside 1.." + std::to_string(n));
    }
    const auto i = e.get<std::size_t>() - 1;
    if (s.contains(i)) throw InvalidInput("element " + e.dump() + " repeated");
    s.insert(i);
  }
  return s;
}

Json to_json(ElementSet s) {
  Json out = Json::array();
  for (int label : s.labels()) out.push_back(label);
  return out;
}

Matroid matroid_from_json(const Json& j) {
  const std::size_t n = ground_size(j);
  std::vector<ElementSet> bases;
  for (const auto& b : array_field(j, "bases")) bases.push_back(set_from_json(b, n));
  return Matroid::from_bases(n, std::move(bases));
}

Json to_json(const Matroid& m) {
  Json out;
  out["n"] = m.size();
  out["bases"] = sets_to_json(m.bases());
  return out;
}

ValuatedMatroid valuated_from_json(const Json& j) {
  Matroid m = matroid_from_json(j);
  auto it = j.find("weights");
  if (it == j.end()) return ValuatedMatroid(std::move(m));
  if (!it->is_object()) throw InvalidInput("\"weights\" must be an object keyed by bases such as \"1,2\"");
  Valuation w;
  for (const auto& [key, value] : it->items()) {
    Json labels = Json::array();
    std::size_t start = 0;
    while (start <= key.size()) {
      const std::size_t comma = std::min(key.find(',', start), key.size());
      const std::string part = key.substr(start, comma - start);
      try {
        std::size_t used = 0;
        const long label = std::stol(part, &used);
        if (used != part.size()) throw InvalidInput("");
        labels.push_back(label);
      } catch (const std::exception&) {
        throw InvalidInput("bad basis key \"" + key + "\"");
      }
      start = comma + 1;
    }
    const ElementSet b = set_from_json(labels, m.size());
    if (w.count(b)) throw InvalidInput("basis " + b.to_string() + " given twice");
    w[b] = rational_from_json(value);
  }
  return ValuatedMatroid(std::move(m), std::move(w));
}

Json to_json(const ValuatedMatroid& v) {
  Json out = to_json(v.matroid());
  Json w = Json::object();
  for (auto b : v.matroid().bases()) {
    std::string key;
    for (int label : b.labels()) key += (key.empty() ? "" : ",") + std::to_string(label);
    w[key] = to_json(v.valuation().at(b));
  }
  out["weights"] = std::move(w);
  return out;
}

WeightedComplex complex_from_json(const Json& j) {
  const std::size_t n = ground_size(j);
  std::vector<Cell> cells;
  std::vector<Weight> weights;
  for (const auto& c : array_field(j, "cells")) {
    linalg::Matrix vertices;
    linalg::Matrix rays;
    linalg::Matrix lineality;
    for (const auto& v : array_field(c, "vertices")) {
      const TropPoint p = point_from_json(v);
      if (p.size() != n) throw InvalidInput("vertex has " + std::to_string(p.size()) + " coordinates, expected " + std::to_string(n));
      vertices.push_back(p.reduced());
    }
    if (vertices.empty()) throw InvalidInput("every cell needs a vertex");
    if (c.contains("rays")) {
      for (const auto& r : array_field(c, "rays")) rays.push_back(direction_from_json(r, n));
    }
    if (c.contains("lineality")) {
      for (const auto& l : array_field(c, "lineality")) lineality.push_back(direction_from_json(l, n));
    }
    const Json& w = field(c, "weight");
    if (!w.is_number_integer()) throw InvalidInput("\"weight\" must be an integer");
    cells.push_back(Cell::from_generators(n - 1, vertices, rays, lineality));
    weights.push_back(w.get<Weight>());
  }
  if (cells.empty()) throw InvalidInput("a complex needs at least one cell");
  return WeightedComplex::from_maximal_cells(n, cells, weights);
}

Json to_json(const WeightedComplex& x) {
  Json out;
  out["n"] = x.n();
  Json cells = Json::array();
  for (auto i : x.maximal()) {
    const Cell& c = x.cell(i);
    Json cell;
    Json vertices = Json::array();
    for (const auto& v : c.vertices()) vertices.push_back(to_json(TropPoint::from_reduced(v)));
    cell["vertices"] = std::move(vertices);
    Json rays = Json::array();
    for (const auto& r : c.rays()) rays.push_back(direction_to_json(r));
    cell["rays"] = std::move(rays);
    if (!c.lineality().empty()) {
      Json lin = Json::array();
      for (const auto& l : c.lineality()) lin.push_back(direction_to_json(l));
      cell["lineality"] = std::move(lin);
    }
    cell["weight"] = x.weight(i);
    cells.push_back(std::move(cell));
  }
  out["cells"] = std::move(cells);
  return out;
}

Json to_json(const Reason& r) {
  Json out;
  out["kind"] = to_string(r.kind);
  out["message"] = r.message;
  if (r.point) out["point"] = to_json(*r.point);
  if (r.kind == ReasonKind::kFlatAxiom) {
    out["axiom"] = r.axiom;
    out["sets"] = sets_to_json(r.sets);
  }
  if (!r.inner.empty()) out["inner"] = to_json(r.inner.front());
  return out;
}

Json to_json(const RecognitionReport& r) {
  Json out;
  out["verdict"] = r.accepted ? "accepted" : "rejected";
  out["matroid"] = r.matroid ? to_json(*r.matroid) : Json(nullptr);
  out["reason"] = r.reason ? to_json(*r.reason) : Json(nullptr);
  out["multiplier"] = r.multiplier;
  out["flats"] = sets_to_json(r.flats);
  out["chain_cones"] = r.chain_cones;
  return out;
}

}  // namespace tropcvx::io
