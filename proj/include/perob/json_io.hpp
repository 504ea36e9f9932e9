#pragma once

// JSON renderings of the library values (nlohmann::json).

#include <json.hpp>

#include <string>
#include <vector>

#include "perob/data_set.hpp"
#include "perob/error.hpp"
#include "perob/fillability.hpp"
#include "perob/gluing.hpp"
#include "perob/monodromy.hpp"
#include "perob/openbook.hpp"
#include "perob/parse.hpp"
#include "perob/realization.hpp"

namespace perob {

using Json = nlohmann::json;

inline Json to_json(const DataSet& d) {
  Json pairs = Json::array();
  for (const auto& p : d.cone_pairs) pairs.push_back({p.residue, p.order});
  return {{"degree", d.degree},
          {"quotient_genus", d.quotient_genus},
          {"rotation", d.rotation},
          {"cone_pairs", pairs}};
}

inline Json to_json(const MarkedDataSet& m) {
  Json j = to_json(m.base);
  j["sign"] = std::string(1, sign_char(m.sign));
  j["marks"] = m.marks;
  return j;
}

namespace detail {

template <typename T>
T json_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw InvalidInput(std::string("field '") + key + "' has the wrong type");
  }
}

}  // namespace detail

/// Reads a DataSet or, when "sign" is present, a MarkedDataSet.
/// Throws InvalidInput on missing or mistyped fields.
inline ParsedDataSet data_set_from_json(const Json& j) {
  DataSet d;
  d.degree = detail::json_field<int>(j, "degree");
  d.quotient_genus = detail::json_field<int>(j, "quotient_genus");
  d.rotation = j.contains("rotation") ? detail::json_field<int>(j, "rotation") : 0;
  const auto pairs = detail::json_field<std::vector<std::vector<int>>>(j, "cone_pairs");
  for (const auto& p : pairs) {
    if (p.size() != 2) throw InvalidInput("cone pair must have two entries");
    d.cone_pairs.push_back({p[0], p[1]});
  }
  if (!j.contains("sign")) {
    if (j.contains("marks")) throw InvalidInput("marks without a sign");
    return d;
  }
  const auto s = detail::json_field<std::string>(j, "sign");
  if (s != "+" && s != "-") throw InvalidInput("sign must be \"+\" or \"-\"");
  MarkedDataSet m{d, s == "+" ? Sign::Positive : Sign::Negative,
                  detail::json_field<std::vector<int>>(j, "marks")};
  return m;
}

inline Json to_json(const ValidationReport& r) {
  Json v = Json::array();
  for (const auto& x : r.violations) v.push_back({{"condition", x.condition}, {"detail", x.detail}});
  return {{"valid", r.valid()}, {"violations", v}};
}

inline Json to_json(const ActionClass& c) {
  return {{"class", c.name()},
          {"kind", c.kind == ActionClass::Kind::Rotational ? "Rotational"
                   : c.kind == ActionClass::Kind::Type1    ? "Type1"
                                                           : "Type2"},
          {"irreducible", c.irreducible}};
}

inline Json slope_json(const Rational& r) { return Json::array({r.num(), r.den()}); }

inline Json to_json(const WordToken& t) {
  struct V {
    Json operator()(const word::Ext& e) const { return {{"kind", "ext"}, {"piece", e.piece}}; }
    Json operator()(const word::Annulus& a) const { return {{"kind", "annulus"}, {"edge", a.edge}}; }
    Json operator()(const word::Twist& t) const {
      Json j = {{"kind", "twist"}, {"curve", t.curve}, {"exponent", t.exponent}};
      j["parallel_to"] = t.parallel_to == 0 ? Json(nullptr) : Json(t.parallel_to);
      return j;
    }
    Json operator()(const word::Rot& r) const {
      return {{"kind", "rot"}, {"boundary", r.boundary}, {"slope", slope_json(r.slope)}};
    }
  };
  return std::visit(V{}, t);
}

inline Json to_json(const MonodromyWord& w) {
  Json a = Json::array();
  for (const auto& t : w.tokens) a.push_back(to_json(t));
  return a;
}

inline Json to_json(const OpenBookDescriptor& d) {
  Json bs = Json::array();
  for (const auto& b : d.boundaries) {
    Json j = {{"id", b.id},
              {"orbit_size", b.orbit_size},
              {"slope", slope_json(b.full_period_slope)},
              {"per_period_slope", slope_json(b.per_period_slope)},
              {"invariant", b.invariant}};
    j["fdtc"] = b.fdtc() ? slope_json(*b.fdtc()) : Json(nullptr);
    if (b.source_mark) j["mark"] = b.source_mark;
    if (b.resolved_from) j["resolved_from"] = b.resolved_from;
    bs.push_back(j);
  }
  return {{"page_genus", d.page_genus},
          {"boundary_circles", d.boundary_circles()},
          {"boundaries", bs},
          {"monodromy", to_json(d.monodromy)},
          {"positive_word", d.positive_word}};
}

inline Json to_json(const SurgeryDescription& s) {
  Json bs = Json::array();
  for (const auto& b : s.boundaries) {
    Json j = {{"boundary", b.boundary},
              {"slope", slope_json(b.slope)},
              {"kind", surgery_kind_name(b.kind)},
              {"legendrian_realizable", b.legendrian_realizable}};
    j["topological"] = b.topological ? Json(b.topological->str()) : Json(nullptr);
    j["contact"] = b.contact ? Json(b.contact->str()) : Json(nullptr);
    bs.push_back(j);
  }
  return {{"boundaries", bs}};
}

inline Json to_json(const FillabilityVerdict& v) {
  Json hs = Json::array();
  for (const auto& h : v.hypotheses) hs.push_back({{"name", h.name}, {"holds", h.holds}});
  Json j = {{"verdict", verdict_name(v.verdict)},
            {"certificate", v.certificate},
            {"hypotheses", hs},
            {"fired", v.fired}};
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

inline Json to_json(const PolygonPresentation& p) {
  Json pairs = Json::array();
  for (int s = 1; s <= p.sides; ++s) {
    const int t = p.partner_of(s);
    if (s < t) pairs.push_back({s, t});
  }
  return {{"sides", p.sides},
          {"pairing", pairs},
          {"rotation_step", p.rotation_step},
          {"q", p.q},
          {"j", p.j},
          {"z_offset", p.z_offset},
          {"pair_order", p.pair_order},
          {"outside_hypotheses", p.outside_hypotheses}};
}

inline Json to_json(const RealizationReport& r) {
  return {{"euler_genus", r.euler_genus},
          {"rh_genus", r.rh_genus},
          {"vertex_classes", r.vertex_classes},
          {"involution_ok", r.involution_ok},
          {"equivariance_ok", r.equivariance_ok}};
}

inline Json to_json(const ConditionReport& r) {
  Json j = {{"contact_ok", r.contact_ok}, {"symplectic_ok", r.symplectic_ok}, {"inconclusive", r.inconclusive}};
  if (r.first_violation)
    j["first_violation"] = {{"r", r.first_violation->r},
                            {"condition", r.first_violation->condition},
                            {"value", r.first_violation->value}};
  else
    j["first_violation"] = nullptr;
  return j;
}

// ---------------------------------------------------------------------------
// Assemblies

inline Json to_json(const Assembly& a) {
  Json pieces = Json::array(), edges = Json::array(), selfs = Json::array();
  for (const auto& m : a.pieces) pieces.push_back(to_json(m));
  for (const auto& e : a.edges)
    edges.push_back({{"left", {e.left.piece, e.left.index}}, {"right", {e.right.piece, e.right.index}}});
  for (const auto& e : a.self_edges) selfs.push_back({e.piece, e.r, e.s});
  Json j = {{"pieces", pieces}, {"edges", edges}, {"self_edges", selfs}};
  if (!a.permutation_additions.empty()) j["permutation_additions"] = a.permutation_additions;
  return j;
}

/// Throws InvalidInput on malformed assembly JSON.
inline Assembly assembly_from_json(const Json& j) try {
  Assembly a;
  if (!j.is_object() || !j.contains("pieces") || !j["pieces"].is_array())
    throw InvalidInput("assembly JSON needs a \"pieces\" array");
  for (const auto& pj : j["pieces"]) {
    ParsedDataSet v = data_set_from_json(pj);
    if (!std::holds_alternative<MarkedDataSet>(v)) throw InvalidInput("assembly pieces must be marked");
    a.pieces.push_back(std::get<MarkedDataSet>(v));
  }
  auto pair2 = [](const Json& x) {
    if (!x.is_array() || x.size() != 2) throw InvalidInput("edge end must be [piece, index]");
    return PieceIndex{x[0].get<int>(), x[1].get<int>()};
  };
  if (j.contains("edges"))
    for (const auto& e : j["edges"]) {
      if (!e.is_object() || !e.contains("left") || !e.contains("right"))
        throw InvalidInput("edge needs \"left\" and \"right\"");
      a.edges.push_back({pair2(e["left"]), pair2(e["right"])});
    }
  if (j.contains("self_edges"))
    for (const auto& e : j["self_edges"]) {
      if (!e.is_array() || e.size() != 3) throw InvalidInput("self edge must be [piece, r, s]");
      a.self_edges.push_back({e[0].get<int>(), e[1].get<int>(), e[2].get<int>()});
    }
  if (j.contains("permutation_additions"))
    a.permutation_additions = j["permutation_additions"].get<std::vector<int>>();
  return a;
} catch (const nlohmann::json::exception& e) {
  throw InvalidInput(std::string("assembly JSON: ") + e.what());
}

inline Json to_json(const AssemblyResult& r) {
  Json led = Json::array();
  for (const auto& l : r.ledger)
    led.push_back({{"piece", l.piece},
                   {"surviving_marks", l.surviving_marks},
                   {"result_marks", l.result_marks},
                   {"glued_indices", l.glued_indices}});
  return {{"result", to_json(r.marked)},
          {"genus", genus(r.marked.base)},
          {"mixed_signs", r.mixed_signs},
          {"monodromy", to_json(r.word)},
          {"word", format(r.word)},
          {"ledger", led}};
}

}  // namespace perob
