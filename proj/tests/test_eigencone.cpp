#include <fstream>

#include "doctest.h"
#include "eigenkit/eigencone.hpp"
#include "eigenkit/errors.hpp"
#include "eigenkit/report.hpp"

using namespace eigenkit;

namespace {

std::vector<RatVec> W(std::initializer_list<std::initializer_list<int>> rows) {
  std::vector<RatVec> out;
  for (const auto& r : rows) {
    RatVec v;
    for (int x : r) v.push_back(Rational(x));
    out.push_back(v);
  }
  return out;
}

RatVec RV(std::initializer_list<int> xs) {
  RatVec v;
  for (int x : xs) v.push_back(Rational(x));
  return v;
}

Json read_json(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  return Json::parse(in);
}

}  // namespace

TEST_CASE("A1 triples") {
  const IneqSystem S = generate_inequalities(build_root_system("A1"), 3, Tier::Levi);
  CHECK(S.inequalities.size() == 3);
  for (const auto& q : S.inequalities) CHECK(q.multiplicity == 1);

  CHECK(membership(W({{0}, {0}, {0}}), S).member);
  CHECK(membership(W({{1}, {1}, {2}}), S).member);
  CHECK(membership(W({{1}, {1}, {1}}), S).member);
  const auto bad = membership(W({{1}, {1}, {3}}), S);
  CHECK_FALSE(bad.member);
  CHECK(bad.violated.size() == 1);

  // The cone is a cone: scaling never changes membership.
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b)
      for (int c = 0; c <= 4; ++c) {
        const bool m = membership(W({{a}, {b}, {c}}), S).member;
        CHECK(m == membership(W({{5 * a}, {5 * b}, {5 * c}}), S).member);
        CHECK(m == (c <= a + b && a <= b + c && b <= a + c));
      }
}

TEST_CASE("membership input errors") {
  const IneqSystem S = generate_inequalities(build_root_system("C2"), 3, Tier::Levi);
  CHECK_THROWS_AS(membership(W({{1, 0}, {0, 1}}), S), UsageError);
  CHECK_THROWS_AS(membership(W({{-1, 0}, {0, 1}, {1, 1}}), S), UsageError);
  CHECK_THROWS_AS(membership(W({{1}, {0, 1}, {1, 1}}), S), UsageError);
  CHECK(membership(W({{0, 0}, {0, 0}, {0, 0}}), S).member);
}

TEST_CASE("inequalities are tight at the origin and evaluate linearly") {
  const IneqSystem S = generate_inequalities(build_root_system("G2"), 3, Tier::Levi);
  REQUIRE_FALSE(S.inequalities.empty());
  for (const auto& q : S.inequalities) {
    CHECK(q.evaluate(W({{0, 0}, {0, 0}, {0, 0}})) == 0);
    const auto x = W({{1, 2}, {0, 1}, {3, 0}});
    const auto y = W({{2, 4}, {0, 2}, {6, 0}});
    CHECK(q.evaluate(y) == 2 * q.evaluate(x));
  }
}

TEST_CASE("B and C systems correspond") {
  for (int r = 2; r <= 3; ++r) {
    const IneqSystem C = generate_inequalities(build_root_system(Kind::C, r), 3, Tier::Levi);
    const IneqSystem B = generate_inequalities(build_root_system(Kind::B, r), 3, Tier::Levi);
    CHECK(C.inequalities.size() == B.inequalities.size());
    CHECK(same_inequalities(transport_c_to_b(C), B));
  }
  CHECK_THROWS_AS(transport_c_to_b(generate_inequalities(build_root_system("A1"), 3, Tier::Levi)), UsageError);
}

TEST_CASE("B/C projection of weights") {
  CHECK(project_weight_bc(Kind::C, RV({1, 2, 3}), 2) == RV({1, 5}));
  CHECK(project_weight_bc(Kind::C, RV({1, 2, 3, 4}), 1) == RV({10}));
  for (const Kind k : {Kind::B, Kind::C}) {
    const RatVec mu = RV({2, 1});
    CHECK(project_weight_bc(k, include_weight_bc(k, mu, 4), 2) == mu);
  }
  CHECK_THROWS_AS(project_weight_bc(Kind::C, RV({1, 2}), 2), UsageError);
  CHECK_THROWS_AS(project_weight_bc(Kind::G2, RV({1, 2}), 1), UsageError);
}

TEST_CASE("grid") {
  const auto g = integer_grid(2, 1);
  CHECK(g == std::vector<IntVec>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  CHECK(integer_grid(3, 2).size() == 27);
}

TEST_CASE("tiers define the same region") {
  for (const char* label : {"C2", "G2"}) {
    const RegionReport rep = compare_tiers(build_root_system(label), 3, 2);
    CHECK(rep.samples == 729);
    CHECK(rep.disagreements == 0);
    CHECK(rep.levi_count <= rep.nonzero_count);
  }
}

TEST_CASE("irredundancy witnesses") {
  const IneqSystem S = generate_inequalities(build_root_system("C2"), 3, Tier::Levi);
  const IrredundancyReport rep = irredundancy_witness(S, 3);
  CHECK(rep.inequalities == S.inequalities.size());
  CHECK(rep.witnessed == rep.inequalities);
  CHECK(rep.missing.empty());
}

TEST_CASE("projection and sub-eigencone drivers") {
  CHECK(verify_projection(Kind::C, 3, 2, 3, 2).ok());
  CHECK(verify_subeigencone(EmbeddingCase::CinC, 3, 2, 3).ok());
}

TEST_CASE("JSON round trip") {
  const IneqSystem S = generate_inequalities(build_root_system("C2"), 3, Tier::Levi);
  const IneqSystem T = ineq_system_from_json(ineq_system_json(S));
  CHECK(T.n == S.n);
  CHECK(T.tier == S.tier);
  CHECK(T.group->name() == "C2");
  REQUIRE(T.inequalities.size() == S.inequalities.size());
  for (std::size_t i = 0; i < S.inequalities.size(); ++i) {
    CHECK(T.inequalities[i].normals == S.inequalities[i].normals);
    CHECK(T.inequalities[i].words == S.inequalities[i].words);
    CHECK(T.inequalities[i].scale == S.inequalities[i].scale);
    CHECK(T.inequalities[i].multiplicity == S.inequalities[i].multiplicity);
  }
  CHECK(ineq_system_json(T) == ineq_system_json(S));
}

TEST_CASE("frozen inequality systems") {
  for (const char* label : {"C2", "B2", "G2"}) {
    CAPTURE(label);
    const IneqSystem S = generate_inequalities(build_root_system(label), 3, Tier::Levi);
    const Json expected = read_json(std::string(EIGENKIT_GOLDEN_DIR) + "/" + label + "_n3_levi.json");
    CHECK(ineq_system_json(S) == expected);
  }
}
