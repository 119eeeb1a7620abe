// regopen: command-line front end for enumeration, suites and lattice reports.
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "regopen/regopen.hpp"

using namespace regopen;

namespace {

struct Options {
  std::size_t n = 3;
  std::string json_path;
  std::string dot_path;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  bool allow_n5 = false;
  std::optional<std::size_t> sample;
  std::optional<std::size_t> limit;
  bool up_to_homeomorphism = false;
  std::string suite;
  std::string space_path;
  std::string fixture;
  std::string lattice_path;
  std::size_t random_checks = 10000;
  bool cocountable = false;
  std::string query;
  bool timing = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void write_file(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

void emit_json(const Options& o, const json& j) {
  if (!o.json_path.empty()) write_file(o.json_path, j.dump(2) + "\n");
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(Errc::ParseError, path + ": " + e.what());
  }
}

Topology fixture(const std::string& name) {
  if (name == "point") return spaces::point();
  if (name == "sierpinski") return spaces::sierpinski();
  if (name == "x3") return spaces::x3();
  const auto colon = name.find(':');
  if (colon != std::string::npos) {
    const auto kind = name.substr(0, colon);
    std::size_t n = 0;
    try {
      n = std::stoul(name.substr(colon + 1));
    } catch (const std::exception&) {
      throw UsageError("bad fixture size in '" + name + "'");
    }
    if (kind == "discrete") return spaces::discrete(n);
    if (kind == "indiscrete") return spaces::indiscrete(n);
  }
  throw UsageError("unknown fixture '" + name + "' (point, sierpinski, x3, discrete:N, indiscrete:N)");
}

Topology input_space(const Options& o) {
  if (!o.space_path.empty() && !o.fixture.empty()) throw UsageError("give --space or --fixture, not both");
  if (!o.space_path.empty()) return space_from_json(read_json(o.space_path)).topology;
  if (!o.fixture.empty()) return fixture(o.fixture);
  throw UsageError("a space is required (--space <file> or --fixture <name>)");
}

int cmd_enumerate(const Options& o) {
  EnumerationSpec spec{o.n, o.up_to_homeomorphism ? EnumerationSpec::Mode::UpToHomeomorphism : EnumerationSpec::Mode::All,
                       o.limit, o.allow_n5};
  const auto ts = enumerate_topologies(spec);
  json list = json::array();
  for (const auto& t : ts) list.push_back(space_to_json(t));
  std::cout << ts.size() << (o.up_to_homeomorphism ? " topologies up to homeomorphism" : " labeled topologies")
            << " on " << o.n << " points\n";
  emit_json(o, {{"schema", kReportSchema},
                {"n", o.n},
                {"mode", o.up_to_homeomorphism ? "up-to-homeomorphism" : "all"},
                {"count", ts.size()},
                {"topologies", std::move(list)}});
  return 0;
}

int cmd_verify(const Options& o) {
  SuiteBounds b;
  b.max_n = o.n;
  b.allow_n5 = o.allow_n5;
  b.sample = o.sample;
  b.seed = o.seed;
  b.jobs = o.jobs;
  b.random_checks = o.random_checks;
  const auto r = run_suite(o.suite, b);
  std::cout << r.suite << ": " << (r.pass() ? "pass" : "FAIL") << ", " << r.instances << " instances, " << r.skipped
            << " skipped, " << r.failures.size() << " failures\n";
  for (std::size_t i = 0; i < std::min<std::size_t>(r.failures.size(), 5); ++i)
    std::cout << "  " << r.failures[i].message << " on " << r.failures[i].space.dump() << " "
              << r.failures[i].inputs.dump() << "\n";
  emit_json(o, report_to_json(r, o.timing));
  return r.pass() ? 0 : 1;
}

int cmd_counterexamples(const Options& o) {
  const auto pairs = counterexample_search(o.n);
  json list = json::array();
  std::size_t differing = 0;
  for (const auto& p : pairs) {
    list.push_back(counterexample_to_json(p));
    differing += p.gg_differs;
  }
  std::cout << pairs.size() << " non-homeomorphic pairs with isomorphic regular-open algebras (n <= " << o.n << "), "
            << differing << " with differing well-inside relations\n";
  emit_json(o, {{"schema", kReportSchema}, {"max_n", o.n}, {"pairs", std::move(list)}});
  return 0;
}

int cmd_regular_lattice(const Options& o) {
  const auto t = input_space(o);
  const auto r = regular_open_lattice(t);
  const auto gg = gg_from_topology(r);
  const auto report = check_r_lattice(r.lattice(), gg);
  std::cout << r.size() << " regular open sets, " << r.atoms().size() << " atoms\n";
  for (const auto& e : r.elements()) std::cout << "  " << e.to_string() << "\n";
  std::cout << "boolean: " << (check_boolean_algebra(r) ? "yes" : "no")
            << ", r-lattice with topological relation: " << (report.all_pass() ? "yes" : "no") << "\n";
  json j = regular_lattice_to_json(r);
  j["r_lattice"] = report_to_json(report);
  j["gg"] = json::parse(lattice_to_json(r.lattice(), &gg).dump())["gg"];
  emit_json(o, j);
  if (!o.dot_path.empty()) write_file(o.dot_path, hasse_dot(r.lattice(), "R"));
  return 0;
}

int cmd_stone(const Options& o) {
  StoneSpace s = [&] {
    if (!o.lattice_path.empty()) {
      if (!o.space_path.empty() || !o.fixture.empty()) throw UsageError("give a lattice or a space, not both");
      return stone_space(lattice_from_json(read_json(o.lattice_path)).lattice);
    }
    return stone_space(regular_open_lattice(input_space(o)));
  }();
  std::cout << s.space.size() << " ultrafilters, generated by elements";
  for (auto g : s.generators) std::cout << " " << g;
  std::cout << "\n";
  emit_json(o, stone_to_json(s));
  if (!o.dot_path.empty()) write_file(o.dot_path, hasse_dot(regular_open_lattice(s.space).lattice(), "clopen"));
  return 0;
}

int cmd_cofinite(const Options& o) {
  const auto topo = o.cocountable ? CoTopology::Cocountable : CoTopology::Cofinite;
  if (!o.query.empty()) {
    json q;
    try {
      q = json::parse(o.query);
    } catch (const json::parse_error& e) {
      throw Error(Errc::ParseError, e.what());
    }
    const auto step = cof_query(symbolic_from_json(q));
    std::cout << step.open.to_string() << ": closure " << step.closure.to_string() << ", int cl "
              << step.regularization.to_string() << (step.regular ? ", regular" : ", not regular") << "\n";
    emit_json(o, {{"schema", kReportSchema},
                  {"open", symbolic_to_json(step.open)},
                  {"closure", symbolic_to_json(step.closure)},
                  {"regularization", symbolic_to_json(step.regularization)},
                  {"regular", step.regular}});
    return 0;
  }
  const auto r = cof_regular_opens(topo);
  std::cout << to_string(topo) << " topology on an infinite set\n";
  json trace = json::array();
  for (const auto& step : r.trace) {
    std::cout << "  " << step.open.to_string() << " -> int cl = " << step.regularization.to_string()
              << (step.regular ? "  (regular)" : "") << "\n";
    trace.push_back({{"open", symbolic_to_json(step.open)},
                     {"regularization", symbolic_to_json(step.regularization)},
                     {"regular", step.regular}});
  }
  json regular = json::array();
  for (const auto& s : r.regular) regular.push_back(symbolic_to_json(s));
  std::cout << "regular opens: " << r.regular.size() << "\n";
  emit_json(o, {{"schema", kReportSchema}, {"topology", to_string(topo)}, {"regular", regular}, {"trace", trace}});
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regular open algebras of finite spaces"};
  app.require_subcommand(1);
  Options o;

  auto add_output = [&](CLI::App* c, bool dot) {
    c->add_option("--json", o.json_path, "Write a JSON report to this path (- for stdout)");
    if (dot) c->add_option("--dot", o.dot_path, "Write a Hasse diagram in DOT format");
  };
  auto add_space = [&](CLI::App* c) {
    c->add_option("--space", o.space_path, "Space JSON file");
    c->add_option("--fixture", o.fixture, "Named space: point, sierpinski, x3, discrete:N, indiscrete:N");
  };

  auto* en = app.add_subcommand("enumerate", "List topologies on n points");
  en->add_option("--n", o.n, "Number of points")->check(CLI::Range(1, 5));
  en->add_flag("--up-to-homeomorphism", o.up_to_homeomorphism, "One representative per class");
  en->add_option("--limit", o.limit, "Stop after this many");
  en->add_flag("--allow-n5", o.allow_n5, "Permit n = 5");
  add_output(en, false);

  auto* ve = app.add_subcommand("verify", "Run a property suite over all spaces up to n points");
  ve->add_option("--suite", o.suite, "Suite name")->required()->check(CLI::IsMember(
      std::vector<std::string>(kSuiteNames.begin(), kSuiteNames.end())));
  ve->add_option("--n", o.n, "Largest space size")->check(CLI::Range(1, 5));
  ve->add_option("--seed", o.seed, "Seed for sampling and randomized checks");
  ve->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::Range(1, 256));
  ve->add_option("--sample", o.sample, "Check only this many spaces per size");
  ve->add_option("--random-checks", o.random_checks, "Randomized identity checks (cofinite suite)");
  ve->add_flag("--allow-n5", o.allow_n5, "Permit n = 5");
  ve->add_flag("--timing", o.timing, "Include wall time in the JSON report");
  add_output(ve, false);

  auto* ce = app.add_subcommand("counterexamples", "Non-homeomorphic spaces with isomorphic regular-open algebras");
  ce->add_option("--n", o.n, "Largest space size")->check(CLI::Range(1, 4));
  add_output(ce, false);

  auto* st = app.add_subcommand("stone", "Stone space of a finite Boolean algebra");
  add_space(st);
  st->add_option("--lattice", o.lattice_path, "Lattice JSON file");
  add_output(st, true);

  auto* rl = app.add_subcommand("regular-lattice", "Regular open algebra of a space");
  add_space(rl);
  add_output(rl, true);

  auto* co = app.add_subcommand("cofinite-demo", "Regular opens of the cofinite topology");
  co->add_flag("--cocountable", o.cocountable, "Use the cocountable topology");
  co->add_option("--query", o.query, R"(Symbolic open, e.g. {"kind":"cofinite","support":[1,2]})");
  add_output(co, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*en) return cmd_enumerate(o);
    if (*ve) return cmd_verify(o);
    if (*ce) return cmd_counterexamples(o);
    if (*st) return cmd_stone(o);
    if (*rl) return cmd_regular_lattice(o);
    if (*co) return cmd_cofinite(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
