#include <gtest/gtest.h>

#include <regex>

#include "oracles.hpp"
#include "regopen/io.hpp"
#include "regopen/suite.hpp"

using namespace regopen;

TEST(RunSuite, Ux0InstanceCountMatchesDenseSubsets) {
  std::size_t expected = 0;
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& t : enumerate_topologies(n)) {
      std::vector<oracle::Mask> opens;
      for (const auto& u : t.opens()) opens.push_back(u.mask());
      for (oracle::Mask y = 1; y < (oracle::Mask{1} << n); ++y) expected += oracle::dense(opens, y);
    }
  const auto r = run_suite("ux0", SuiteBounds{});
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(r.instances, expected);
}

TEST(RunSuite, EverySuitePassesOnSmallSpaces) {
  for (auto name : kSuiteNames) {
    SuiteBounds b;
    b.max_n = 3;
    b.random_checks = 500;
    const auto r = run_suite(name, b);
    EXPECT_TRUE(r.pass()) << name << ": " << report_to_json(r).dump();
    EXPECT_GT(r.instances, 0u) << name;
  }
}

TEST(RunSuite, UnknownSuite) {
  try {
    run_suite("nope", SuiteBounds{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::UnknownSuite);
  }
}

TEST(RunSuite, DeterministicAcrossRunsAndJobs) {
  SuiteBounds b;
  b.max_n = 4;
  b.sample = 40;
  b.seed = 11;
  const auto one = report_to_json(run_suite("uvw", b)).dump();
  EXPECT_EQ(one, report_to_json(run_suite("uvw", b)).dump());
  b.jobs = 4;
  EXPECT_EQ(one, report_to_json(run_suite("uvw", b)).dump());
  EXPECT_FALSE(json::parse(one).contains("wall_seconds"));
  EXPECT_TRUE(report_to_json(run_suite("uvw", b), true).contains("wall_seconds"));
}

TEST(RunSuite, SampleChangesWithSeed) {
  SuiteBounds a;
  a.max_n = 4;
  a.sample = 10;
  a.seed = 1;
  SuiteBounds b = a;
  b.seed = 2;
  EXPECT_NE(detail::suite_spaces(a), detail::suite_spaces(b));
  EXPECT_EQ(detail::suite_spaces(a), detail::suite_spaces(a));
}

TEST(SpaceJson, RoundTripEverySpace) {
  for (const auto& t : enumerate_up_to(3)) {
    const auto j = space_to_json(t);
    EXPECT_EQ(space_from_json(json::parse(j.dump())).topology, t);
  }
}

TEST(SpaceJson, Labels) {
  const auto doc = space_from_json(json::parse(R"({"n":2,"opens":[[],[0],[0,1]],"labels":["a","b"]})"));
  EXPECT_EQ(doc.topology, spaces::sierpinski());
  EXPECT_EQ(doc.labels, (std::vector<std::string>{"a", "b"}));
}

TEST(SpaceJson, Errors) {
  auto code = [](const char* text) {
    try {
      space_from_json(json::parse(text));
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::InvalidLattice;
  };
  EXPECT_EQ(code(R"({"opens":[]})"), Errc::ParseError);
  EXPECT_EQ(code(R"({"n":2,"opens":[[],[1,0],[0,1]]})"), Errc::ParseError);
  EXPECT_EQ(code(R"({"n":2,"opens":[[],[0,0],[0,1]]})"), Errc::ParseError);
  EXPECT_EQ(code(R"({"n":2,"opens":[[],[-1],[0,1]]})"), Errc::ParseError);
  EXPECT_EQ(code(R"({"n":2,"opens":[[],[0],[0,1]],"labels":["a"]})"), Errc::ParseError);
  EXPECT_EQ(code(R"({"n":2,"opens":[[],[0],[1]]})"), Errc::MissingEmptyOrFull);
  EXPECT_EQ(code(R"({"n":3,"opens":[[],[0],[1],[0,1,2]]})"), Errc::NotClosedUnderUnion);
}

TEST(LatticeJson, RoundTrip) {
  for (const auto& t : enumerate_up_to(3)) {
    const auto r = regular_open_lattice(t);
    const auto gg = gg_from_topology(r);
    const auto doc = lattice_from_json(json::parse(lattice_to_json(r.lattice(), &gg).dump()));
    ASSERT_TRUE(doc.gg);
    EXPECT_EQ(*doc.gg, gg);
    EXPECT_EQ(doc.lattice.payloads(), r.lattice().payloads());
    for (std::size_t a = 0; a < r.size(); ++a)
      for (std::size_t b = 0; b < r.size(); ++b) ASSERT_EQ(doc.lattice.leq(a, b), r.lattice().leq(a, b));
  }
}

TEST(LatticeJson, CoverPairsSuffice) {
  const auto doc = lattice_from_json(json::parse(R"({"elements":3,"leq":[[0,1],[1,2]]})"));
  EXPECT_TRUE(doc.lattice.leq(0, 2));
  EXPECT_FALSE(doc.gg);
  EXPECT_THROW(lattice_from_json(json::parse(R"({"elements":3,"leq":[[0,1],[0,2]]})")), Error);
  EXPECT_THROW(lattice_from_json(json::parse(R"({"elements":3,"leq":[[0]]})")), Error);
}

TEST(SymbolicJson, RoundTrip) {
  for (const auto& s : {SymbolicSet::finite({1, 4}), SymbolicSet::cofinite({}), SymbolicSet::empty()})
    EXPECT_EQ(symbolic_from_json(symbolic_to_json(s)), s);
  EXPECT_THROW(symbolic_from_json(json::parse(R"({"kind":"other","support":[]})")), Error);
}

TEST(HasseDot, CoveringEdgesOnly) {
  const auto dot = hasse_dot(lattices::powerset(2), "p2");
  const std::regex edge("n\\d+ -> n\\d+");
  const auto edges = std::distance(std::sregex_iterator(dot.begin(), dot.end(), edge), std::sregex_iterator());
  EXPECT_EQ(edges, 4);
  EXPECT_EQ(dot.find("n0 -> n3"), std::string::npos);
  std::size_t doubled = 0;
  for (auto p = dot.find("peripheries=2"); p != std::string::npos; p = dot.find("peripheries=2", p + 1)) ++doubled;
  EXPECT_EQ(doubled, 2u);
}

TEST(Reports, StoneAndRegularLatticeJson) {
  const auto r = regular_open_lattice(spaces::x3());
  const auto j = regular_lattice_to_json(r);
  EXPECT_EQ(j["schema"], kReportSchema);
  EXPECT_EQ(j["elements"].size(), 4u);
  EXPECT_EQ(stone_to_json(stone_space(r))["points"], 2);
  const auto rep = report_to_json(check_r_lattice(lattices::chain(2), GGRelation(2)));
  EXPECT_FALSE(rep["r_lattice"].get<bool>());
  EXPECT_EQ(rep["axioms"][4]["status"], "fail");
}
