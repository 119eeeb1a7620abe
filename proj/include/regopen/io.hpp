#ifndef REGOPEN_IO_HPP
#define REGOPEN_IO_HPP

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "regopen/enumerate.hpp"
#include "regopen/error.hpp"
#include "regopen/lattice.hpp"
#include "regopen/regular_open.hpp"
#include "regopen/symbolic.hpp"
#include "regopen/topology.hpp"

namespace regopen {

using json = nlohmann::json;

inline constexpr int kReportSchema = 1;

/// A space as read from disk: the topology plus optional point labels.
struct SpaceDocument {
  Topology topology;
  std::vector<std::string> labels;
};

inline json to_json(const PointSet& s) { return s.members(); }

/// {"n": 3, "opens": [[], [0], ...], "labels": [...]}
inline json space_to_json(const Topology& t, const std::vector<std::string>& labels = {}) {
  json opens = json::array();
  for (const auto& u : t.opens()) opens.push_back(to_json(u));
  json j = {{"n", t.size()}, {"opens", std::move(opens)}};
  if (!labels.empty()) j["labels"] = labels;
  return j;
}

namespace detail {

[[noreturn]] inline void parse_fail(const std::string& what) { throw Error(Errc::ParseError, what); }

inline std::vector<std::size_t> sorted_unique_indices(const json& arr, const std::string& ctx) {
  if (!arr.is_array()) parse_fail(ctx + ": expected an array of indices");
  std::vector<std::size_t> out;
  for (const auto& v : arr) {
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
      parse_fail(ctx + ": indices must be non-negative integers");
    const auto x = v.get<std::size_t>();
    if (!out.empty() && x <= out.back()) parse_fail(ctx + ": indices must be sorted and unique");
    out.push_back(x);
  }
  return out;
}

inline std::vector<std::pair<std::size_t, std::size_t>> index_pairs(const json& arr, const std::string& ctx) {
  if (!arr.is_array()) parse_fail(ctx + ": expected an array of pairs");
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& p : arr) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer() ||
        p[0].get<long long>() < 0 || p[1].get<long long>() < 0)
      parse_fail(ctx + ": each pair must be [i, j] with non-negative integers");
    out.emplace_back(p[0].get<std::size_t>(), p[1].get<std::size_t>());
  }
  return out;
}

}  // namespace detail

/// Parses and validates a space; validation errors propagate unchanged.
inline SpaceDocument space_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("opens")) detail::parse_fail("space needs \"n\" and \"opens\"");
  if (!j["n"].is_number_integer() || j["n"].get<long long>() < 0) detail::parse_fail("\"n\" must be a non-negative integer");
  const auto n = j["n"].get<std::size_t>();
  if (!j["opens"].is_array()) detail::parse_fail("\"opens\" must be an array");
  std::vector<std::vector<std::size_t>> family;
  for (const auto& o : j["opens"]) family.push_back(detail::sorted_unique_indices(o, "opens"));
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    labels = j["labels"].get<std::vector<std::string>>();
    if (labels.size() != n) detail::parse_fail("one label per point");
  }
  return {Topology::validate(n, family), std::move(labels)};
}

struct LatticeDocument {
  FiniteLattice lattice;
  std::optional<GGRelation> gg;
};

/// {"elements": k, "leq": [[i, j], ...], "gg": [[f, g], ...]?, "payloads": [[...], ...]?}
/// "leq" lists order pairs; reflexive and transitive pairs may be omitted.
inline LatticeDocument lattice_from_json(const json& j) {
  if (!j.is_object() || !j.contains("elements") || !j.contains("leq"))
    detail::parse_fail("lattice needs \"elements\" and \"leq\"");
  const auto count = j["elements"].get<std::size_t>();
  std::vector<PointSet> payloads;
  if (j.contains("payloads")) {
    const auto& p = j["payloads"];
    if (!p.is_array() || p.size() != count) detail::parse_fail("one payload per element");
    std::size_t universe = 0;
    std::vector<std::vector<std::size_t>> raw;
    for (const auto& e : p) {
      raw.push_back(detail::sorted_unique_indices(e, "payloads"));
      if (!raw.back().empty()) universe = std::max(universe, raw.back().back() + 1);
    }
    if (j.contains("n")) universe = j["n"].get<std::size_t>();
    for (const auto& r : raw) payloads.emplace_back(universe, r);
  }
  LatticeDocument doc{FiniteLattice::from_pairs(count, detail::index_pairs(j["leq"], "leq"), std::move(payloads)),
                      std::nullopt};
  if (j.contains("gg")) doc.gg = GGRelation(count, detail::index_pairs(j["gg"], "gg"));
  return doc;
}

/// Writes the strict order pairs (reflexive pairs are implied).
inline json lattice_to_json(const FiniteLattice& l, const GGRelation* gg = nullptr) {
  json leq = json::array();
  for (std::size_t a = 0; a < l.size(); ++a)
    for (std::size_t b = 0; b < l.size(); ++b)
      if (a != b && l.leq(a, b)) leq.push_back({a, b});
  json j = {{"elements", l.size()}, {"leq", std::move(leq)}};
  if (gg) {
    json pairs = json::array();
    for (auto [f, g] : gg->pairs()) pairs.push_back({f, g});
    j["gg"] = std::move(pairs);
  }
  if (l.has_payloads()) {
    json p = json::array();
    for (const auto& s : l.payloads()) p.push_back(to_json(s));
    j["payloads"] = std::move(p);
    j["n"] = l.payloads().front().universe();
  }
  return j;
}

inline json check_to_json(const CheckResult& r) {
  json j = {{"status", r.holds ? "pass" : "fail"}};
  if (!r.holds) j["witness"] = r.witness;
  return j;
}

inline json report_to_json(const RLatticeReport& r) {
  json axioms = json::array();
  for (const auto& a : r.axioms) {
    json e = check_to_json(a.result);
    e["axiom"] = a.number;
    e["name"] = a.name;
    axioms.push_back(std::move(e));
  }
  return {{"schema", kReportSchema},
          {"distributive", check_to_json(r.distributive)},
          {"axioms", std::move(axioms)},
          {"r_lattice", r.all_pass()}};
}

inline json symbolic_to_json(const SymbolicSet& s) {
  return {{"kind", s.is_finite() ? "finite" : "cofinite"}, {"support", s.support()}};
}

inline SymbolicSet symbolic_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.contains("support")) detail::parse_fail("symbolic set needs kind and support");
  const auto kind = j["kind"].get<std::string>();
  auto support = j["support"].get<std::vector<SymbolicSet::Label>>();
  if (kind == "finite") return SymbolicSet::finite(std::move(support));
  if (kind == "cofinite") return SymbolicSet::cofinite(std::move(support));
  detail::parse_fail("kind must be \"finite\" or \"cofinite\"");
}

inline json regular_lattice_to_json(const RegularOpenLattice& r) {
  json elements = json::array();
  for (const auto& e : r.elements()) elements.push_back(to_json(e));
  return {{"schema", kReportSchema},
          {"space", space_to_json(r.source())},
          {"elements", std::move(elements)},
          {"atoms", r.atoms()},
          {"complement", r.complement_table()},
          {"lattice", lattice_to_json(r.lattice())}};
}

inline json stone_to_json(const StoneSpace& s) {
  json clopen = json::array();
  for (const auto& c : s.clopen) clopen.push_back(to_json(c));
  return {{"schema", kReportSchema},
          {"points", s.space.size()},
          {"ultrafilters", s.ultrafilters},
          {"generators", s.generators},
          {"clopen", std::move(clopen)},
          {"iso", s.iso}};
}

inline json counterexample_to_json(const CounterexamplePair& p) {
  auto pairs = [](const GGRelation& g) {
    json a = json::array();
    for (auto [f, h] : g.pairs()) a.push_back({f, h});
    return a;
  };
  return {{"first", space_to_json(p.first)},
          {"second", space_to_json(p.second)},
          {"iso", p.iso},
          {"iso_count", p.iso_count},
          {"gg_first", pairs(p.gg_first)},
          {"gg_second", pairs(p.gg_second)},
          {"gg_differs", p.gg_differs},
          {"gg_differs_under_every_iso", p.gg_differs_under_every_iso}};
}

/// Hasse diagram: covering edges only, atoms drawn doubled.
inline std::string hasse_dot(const FiniteLattice& l, const std::string& name = "lattice") {
  std::ostringstream os;
  os << "digraph \"" << name << "\" {\n  rankdir=BT;\n";
  const auto atoms = l.atoms();
  for (std::size_t i = 0; i < l.size(); ++i) {
    const std::string label = l.has_payloads() ? l.payload(i).to_string() : std::to_string(i);
    os << "  n" << i << " [label=\"" << label << "\"";
    if (std::find(atoms.begin(), atoms.end(), i) != atoms.end()) os << ", peripheries=2, xlabel=\"atom\"";
    os << "];\n";
  }
  for (auto [a, b] : l.covers()) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace regopen

#endif  // REGOPEN_IO_HPP
