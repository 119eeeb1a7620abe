#ifndef REGOPEN_SUITE_HPP
#define REGOPEN_SUITE_HPP

#include <algorithm>
#include <array>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "regopen/density.hpp"
#include "regopen/enumerate.hpp"
#include "regopen/ideals.hpp"
#include "regopen/io.hpp"
#include "regopen/lattice.hpp"
#include "regopen/regular_open.hpp"
#include "regopen/symbolic.hpp"
#include "regopen/topology.hpp"

namespace regopen {

inline constexpr std::array<std::string_view, 10> kSuiteNames = {
    "ux0", "denso", "caracterizacion", "uvw", "recovery", "boolean", "rlattice", "stone", "ideals", "cofinite"};

struct SuiteBounds {
  std::size_t max_n = 3;
  bool allow_n5 = false;
  /// When set, only this many topologies per size are checked, drawn with `seed`.
  std::optional<std::size_t> sample;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  /// Randomized identity checks for the cofinite suite.
  std::size_t random_checks = 10000;
};

struct SuiteFailure {
  json space;
  json inputs;
  json witness;
  std::string message;
};

struct SuiteReport {
  std::string suite;
  std::size_t instances = 0;
  std::size_t skipped = 0;
  std::vector<SuiteFailure> failures;
  double wall_seconds = 0.0;

  bool pass() const noexcept { return failures.empty(); }
};

/// Wall time is left out unless asked for, so that identical runs give
/// byte-identical reports.
inline json report_to_json(const SuiteReport& r, bool include_timing = false) {
  json failures = json::array();
  for (const auto& f : r.failures)
    failures.push_back({{"space", f.space}, {"inputs", f.inputs}, {"witness", f.witness}, {"message", f.message}});
  json j = {{"schema", kReportSchema},
            {"suite", r.suite},
            {"instances", r.instances},
            {"skipped", r.skipped},
            {"status", r.pass() ? "pass" : "fail"},
            {"failures", std::move(failures)}};
  if (include_timing) j["wall_seconds"] = r.wall_seconds;
  return j;
}

namespace detail {

struct Partial {
  std::size_t instances = 0;
  std::size_t skipped = 0;
  std::vector<SuiteFailure> failures;
};

/// Runs `fn` on every index with up to `jobs` threads; results keep index order.
template <typename Fn>
std::vector<Partial> parallel_map(std::size_t count, unsigned jobs, Fn fn) {
  std::vector<Partial> out(count);
  jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::vector<std::jthread> workers;
  for (unsigned w = 0; w < jobs; ++w)
    workers.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += jobs) out[i] = fn(i);
    });
  workers.clear();
  return out;
}

inline SuiteFailure failure_from(const Topology& t, json inputs, const Error& e) {
  return {space_to_json(t), std::move(inputs), {{"sets", e.set_witness()}, {"indices", e.index_witness()}}, e.what()};
}

inline Partial ux0_instance(const Topology& t) {
  Partial p;
  for (const auto& y : enumerate_dense_subsets(t)) {
    ++p.instances;
    try {
      verify_ux0(make_dense_embedding(t, y));
    } catch (const Error& e) {
      p.failures.push_back(failure_from(t, {{"subset", to_json(y)}}, e));
    }
  }
  return p;
}

inline Partial denso_instance(const Topology& t) {
  Partial p;
  for (const auto& y : enumerate_dense_subsets(t))
    for (const auto& u : t.opens()) {
      ++p.instances;
      if (!closure_density_check(t, y, u))
        p.failures.push_back({space_to_json(t), {{"subset", to_json(y)}, {"open", to_json(u)}},
                              {{"closure", to_json(closure(t, u))}, {"closure_of_trace", to_json(closure(t, u & y))}},
                              "cl(U) != cl(U ∩ Y)"});
    }
  return p;
}

/// A regular open  <=>  A open and every open V ⊆ cl(A) lies in A.
inline bool characterization_rhs(const Topology& t, const PointSet& a) {
  if (!t.is_open(a)) return false;
  const PointSet cl = closure(t, a);
  for (const auto& v : t.opens())
    if (v.subset_of(cl) && !v.subset_of(a)) return false;
  return true;
}

inline Partial caracterizacion_instance(const Topology& t) {
  Partial p;
  for (const auto& a : all_subsets(t.size())) {
    ++p.instances;
    const bool lhs = is_regular_open(t, a);
    const bool rhs = characterization_rhs(t, a);
    if (lhs != rhs)
      p.failures.push_back({space_to_json(t), {{"set", to_json(a)}}, {{"regular_open", lhs}, {"characterization", rhs}},
                            "characterization disagrees with int cl A = A"});
  }
  return p;
}

inline Partial uvw_instance(const Topology& t) {
  Partial p;
  const RegularOpenLattice r(t);
  for (const auto& u : r.elements())
    for (const auto& v : r.elements()) {
      if (u.subset_of(v)) continue;
      ++p.instances;
      try {
        const PointSet w = separating_witness(t, u, v);
        std::string problem;
        if (w.empty()) problem = "W is empty";
        else if (!is_regular_open(t, w)) problem = "W is not regular open";
        else if (!w.subset_of(u)) problem = "W is not inside U";
        else if (w.intersects(v)) problem = "W meets V";
        if (!problem.empty())
          p.failures.push_back({space_to_json(t), {{"U", to_json(u)}, {"V", to_json(v)}}, {{"W", to_json(w)}}, problem});
      } catch (const Error& e) {
        p.failures.push_back(failure_from(t, {{"U", to_json(u)}, {"V", to_json(v)}}, e));
      }
    }
  return p;
}

/// Point recovery on the basis isomorphism induced by the dense-subspace
/// map. Instances whose nonempty regular opens do not form bases are
/// skipped. Every recovered point must be sent to itself.
inline Partial recovery_instance(const Topology& t) {
  Partial p;
  const auto bx = regular_open_family(t);
  for (const auto& y : enumerate_dense_subsets(t)) {
    const auto e = make_dense_embedding(t, y);
    if (!is_basis(t, bx)) {
      ++p.skipped;
      continue;
    }
    try {
      const auto w = verify_ux0(e);
      auto [by, iso] = induced_basis_map(w, bx);
      if (!is_basis(e.sub_topology(), by)) {
        ++p.skipped;
        continue;
      }
      ++p.instances;
      const auto ph = point_recovery(t, bx, e.sub_topology(), by, iso);
      for (std::size_t x : ph.x0.members()) {
        const std::size_t tx = *ph.tau[x];
        if (!y.contains(x) || e.index_map()[tx] != x) {
          p.failures.push_back({space_to_json(t), {{"subset", to_json(y)}},
                                {{"point", x}, {"tau", tx}}, "recovered point is not sent to itself"});
          break;
        }
      }
    } catch (const Error& err) {
      p.failures.push_back(failure_from(t, {{"subset", to_json(y)}}, err));
    }
  }
  return p;
}

inline Partial boolean_instance(const Topology& t) {
  Partial p;
  ++p.instances;
  try {
    const RegularOpenLattice r(t);
    if (auto b = check_boolean_algebra(r); !b)
      p.failures.push_back({space_to_json(t), json::object(), b.witness, "not Boolean: " + b.law});
    if (auto d = check_distributive(r.lattice()); !d)
      p.failures.push_back({space_to_json(t), json::object(), d.witness, "not distributive"});
  } catch (const Error& e) {
    p.failures.push_back(failure_from(t, json::object(), e));
  }
  return p;
}

/// With >> taken as >=, all six axioms must hold; the topological >> must
/// be upward monotone in f and downward monotone in g.
inline Partial rlattice_instance(const Topology& t) {
  Partial p;
  ++p.instances;
  const RegularOpenLattice r(t);
  const auto& l = r.lattice();
  const auto rep = check_r_lattice(l, GGRelation::greater_equal(l));
  if (!rep.all_pass()) p.failures.push_back({space_to_json(t), {{"relation", ">="}}, report_to_json(rep), "R-lattice axiom fails"});
  const auto gg = gg_from_topology(r);
  for (std::size_t f = 0; f < l.size(); ++f)
    for (std::size_t g = 0; g < l.size(); ++g) {
      if (!gg.contains(f, g)) continue;
      for (std::size_t h = 0; h < l.size(); ++h) {
        if ((l.leq(f, h) && !gg.contains(h, g)) || (l.leq(h, g) && !gg.contains(f, h))) {
          p.failures.push_back({space_to_json(t), {{"relation", "topological"}}, {f, g, h}, "gg not monotone"});
          return p;
        }
      }
    }
  return p;
}

inline Partial stone_instance(const Topology& t) {
  Partial p;
  ++p.instances;
  try {
    const RegularOpenLattice r(t);
    const auto s = stone_space(r);
    if (s.space.size() != r.atoms().size())
      p.failures.push_back({space_to_json(t), json::object(), {{"points", s.space.size()}, {"atoms", r.atoms().size()}},
                            "point count differs from atom count"});
    const RegularOpenLattice clopens(s.space);
    if (!is_order_isomorphism(r.lattice(), clopens.lattice(), s.iso))
      p.failures.push_back({space_to_json(t), json::object(), s.iso, "not an order isomorphism"});
  } catch (const Error& e) {
    p.failures.push_back(failure_from(t, json::object(), e));
  }
  return p;
}

inline std::vector<Topology> suite_spaces(const SuiteBounds& b) {
  std::vector<Topology> out;
  std::mt19937_64 rng(b.seed);
  for (std::size_t n = 1; n <= b.max_n; ++n) {
    auto batch = enumerate_topologies(EnumerationSpec{n, EnumerationSpec::Mode::All, std::nullopt, b.allow_n5});
    if (b.sample && batch.size() > *b.sample) {
      std::shuffle(batch.begin(), batch.end(), rng);
      batch.erase(batch.begin() + static_cast<std::ptrdiff_t>(*b.sample), batch.end());
      std::sort(batch.begin(), batch.end());
    }
    out.insert(out.end(), batch.begin(), batch.end());
  }
  return out;
}

inline Partial ideals_partial(std::size_t max_n) {
  Partial p;
  for (std::size_t n = 1; n <= std::min(max_n, kMaxPowersetSize); ++n) {
    ++p.instances;
    const auto ufs = ultrafilters(n);
    if (ufs.size() != n)
      p.failures.push_back({json::object(), {{"n", n}}, {{"ultrafilters", ufs.size()}}, "ultrafilter count differs from n"});
    for (const auto& u : ufs)
      if (!principal_point(u))
        p.failures.push_back({json::object(), {{"n", n}}, json::array(), "non-principal ultrafilter"});
    try {
      ideal_open_correspondence(n);
    } catch (const Error& e) {
      p.failures.push_back({json::object(), {{"n", n}}, {{"sets", e.set_witness()}}, e.what()});
    }
  }
  return p;
}

}  // namespace detail

/// Runs `count` randomized Boolean-identity checks on symbolic sets drawn
/// with supports in {0..9}. Returns the name of the first failing identity
/// with its operands, or nothing.
inline std::optional<std::string> check_symbolic_identities(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coin(0, 1), size(0, 4), label(0, 9);
  auto draw = [&] {
    std::vector<SymbolicSet::Label> s;
    for (int k = size(rng); k > 0; --k) s.push_back(static_cast<SymbolicSet::Label>(label(rng)));
    return coin(rng) ? SymbolicSet::finite(s) : SymbolicSet::cofinite(s);
  };
  for (std::size_t i = 0; i < count; ++i) {
    const SymbolicSet a = draw(), b = draw(), c = draw();
    auto fail = [&](const std::string& law) {
      return law + " fails for " + a.to_string() + ", " + b.to_string() + ", " + c.to_string();
    };
    if ((a | b) != (b | a) || (a & b) != (b & a)) return fail("commutativity");
    if (((a | b) | c) != (a | (b | c)) || ((a & b) & c) != (a & (b & c))) return fail("associativity");
    if ((a & (b | c)) != ((a & b) | (a & c))) return fail("distributivity");
    if ((a | b).complement() != (a.complement() & b.complement()) ||
        (a & b).complement() != (a.complement() | b.complement()))
      return fail("de morgan");
    if (a.complement().complement() != a) return fail("double complement");
    if ((a | (a & b)) != a || (a & (a | b)) != a) return fail("absorption");
    if ((a & a.complement()) != SymbolicSet::empty() || (a | a.complement()) != SymbolicSet::full())
      return fail("complement laws");
    if (a.subset_of(b) != ((a & b) == a)) return fail("order agrees with meet");
    for (SymbolicSet::Label x = 0; x < 12; ++x) {
      if ((a | b).contains(x) != (a.contains(x) || b.contains(x)) ||
          (a & b).contains(x) != (a.contains(x) && b.contains(x)) || a.complement().contains(x) == a.contains(x))
        return fail("pointwise membership");
    }
    if (!cof_interior(a).subset_of(a) || !a.subset_of(cof_closure(a))) return fail("interior ⊆ A ⊆ closure");
    if (cof_interior(a) != cof_closure(a.complement()).complement()) return fail("interior/closure duality");
  }
  return std::nullopt;
}

/// Drives one named suite over the enumeration given by `b`.
inline SuiteReport run_suite(std::string_view name, const SuiteBounds& b) {
  if (std::find(kSuiteNames.begin(), kSuiteNames.end(), name) == kSuiteNames.end())
    throw Error(Errc::UnknownSuite, "unknown suite '" + std::string(name) + "'");
  const auto start = std::chrono::steady_clock::now();
  SuiteReport report{std::string(name), 0, 0, {}, 0.0};
  std::vector<detail::Partial> parts;

  if (name == "ideals") {
    parts.push_back(detail::ideals_partial(b.max_n));
  } else if (name == "cofinite") {
    detail::Partial p;
    ++p.instances;
    const auto reg = cof_regular_opens();
    if (reg.regular != std::vector<SymbolicSet>{SymbolicSet::empty(), SymbolicSet::full()})
      p.failures.push_back({json::object(), json::object(), json::array(), "regular opens are not exactly {∅, Z}"});
    p.instances += b.random_checks;
    if (auto bad = check_symbolic_identities(b.random_checks, b.seed))
      p.failures.push_back({json::object(), {{"seed", b.seed}}, json::array(), *bad});
    parts.push_back(std::move(p));
  } else {
    using Check = detail::Partial (*)(const Topology&);
    Check check = nullptr;
    if (name == "ux0") check = detail::ux0_instance;
    else if (name == "denso") check = detail::denso_instance;
    else if (name == "caracterizacion") check = detail::caracterizacion_instance;
    else if (name == "uvw") check = detail::uvw_instance;
    else if (name == "recovery") check = detail::recovery_instance;
    else if (name == "boolean") check = detail::boolean_instance;
    else if (name == "rlattice") check = detail::rlattice_instance;
    else check = detail::stone_instance;
    const auto spaces = detail::suite_spaces(b);
    parts = detail::parallel_map(spaces.size(), b.jobs, [&](std::size_t i) { return check(spaces[i]); });
  }

  for (auto& p : parts) {
    report.instances += p.instances;
    report.skipped += p.skipped;
    for (auto& f : p.failures) report.failures.push_back(std::move(f));
  }
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace regopen

#endif  // REGOPEN_SUITE_HPP
