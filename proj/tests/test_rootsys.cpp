#include "doctest.h"
#include "eigenkit/errors.hpp"
#include "eigenkit/rootsys.hpp"

using namespace eigenkit;

namespace {

RatVec rv(std::initializer_list<int> xs) {
  RatVec v;
  for (int x : xs) v.push_back(Rational(x));
  return v;
}

// |R+| by type, written out independently of the library table.
std::size_t positive_count(Kind k, int r) {
  switch (k) {
    case Kind::A: return static_cast<std::size_t>(r * (r + 1) / 2);
    case Kind::B:
    case Kind::C: return static_cast<std::size_t>(r * r);
    case Kind::D: return static_cast<std::size_t>(r * (r - 1));
    case Kind::G2: return 6;
    case Kind::F4: return 24;
  }
  return 0;
}

}  // namespace

TEST_CASE("positive root counts up to rank 6") {
  const std::vector<std::pair<Kind, int>> all = {{Kind::G2, 2}, {Kind::F4, 4}};
  for (Kind k : {Kind::A, Kind::B, Kind::C, Kind::D})
    for (int r = (k == Kind::D ? 3 : 1); r <= 6; ++r) {
      if ((k == Kind::B || k == Kind::C) && r < 2) continue;
      const auto R = build_root_system(k, r);
      CHECK(R->num_positive() == positive_count(k, r));
    }
  for (const auto& [k, r] : all) CHECK(build_root_system(k, r)->num_positive() == positive_count(k, r));
}

TEST_CASE("normalization and duality invariants") {
  for (const char* label : {"A1", "A3", "B2", "B3", "C2", "C3", "C4", "D4", "D5", "G2", "F4"}) {
    const auto R = build_root_system(label);
    CAPTURE(label);
    const RatVec theta = to_rational(R->highest_root);
    CHECK(killing_pairing(*R, theta, theta, Basis::Root) == 2);
    for (int i = 0; i < R->rank; ++i)
      for (int j = 0; j < R->rank; ++j) {
        RatVec wi(R->rank, Rational(0)), aj(R->rank, Rational(0));
        wi[i] = 1;
        aj[j] = 1;
        const RatVec ajw = R->root_to_weight(aj);
        CHECK(2 * R->pairing_weights(wi, ajw) / R->pairing_roots(aj, aj) == (i == j ? 1 : 0));
        CHECK(dot(R->simple_roots[j], R->dual_basis[i]) == (i == j ? 1 : 0));
      }
    for (const auto& b : R->positive_roots)
      for (int x : b) CHECK(x >= 0);
  }
}

TEST_CASE("documented examples") {
  const auto C3 = build_root_system("C3");
  CHECK(C3->num_positive() == 9);
  CHECK(C3->highest_root == IntVec{2, 2, 1});
  const auto G2 = build_root_system("G2");
  CHECK(G2->num_positive() == 6);
  CHECK(G2->highest_root == IntVec{3, 2});
  // <α1, α2^∨> = -1 with <α2, α2> = 2 forces <α1, α2> = -1.
  CHECK(killing_pairing(*G2, rv({1, 0}), rv({0, 1}), Basis::Root) == -1);
  CHECK(killing_pairing(*G2, rv({1, 0}), rv({1, 0}), Basis::Root) == Rational(2, 3));
  const auto A1 = build_root_system("A1");
  CHECK(A1->positive_roots == std::vector<IntVec>{{1}});
  CHECK(A1->weight_to_root(rv({1})) == RatVec{Rational(1, 2)});
  CHECK(killing_pairing(*A1, rv({1}), rv({1})) == Rational(1, 2));
  const auto C2 = build_root_system("C2");
  CHECK(killing_pairing(*C2, rv({1, 0}), rv({1, 0}), Basis::Root) == 1);
  CHECK(killing_pairing(*C2, rv({2, 1}), rv({2, 1}), Basis::Root) == 2);
}

TEST_CASE("positive roots are ordered by height then lexicographically") {
  for (const char* label : {"B3", "F4", "G2", "D4"}) {
    const auto R = build_root_system(label);
    for (std::size_t i = 1; i < R->num_positive(); ++i) {
      const int h0 = R->height(static_cast<int>(i - 1)), h1 = R->height(static_cast<int>(i));
      CHECK((h0 < h1 || (h0 == h1 && R->positive_roots[i - 1] < R->positive_roots[i])));
    }
  }
}

TEST_CASE("invalid input") {
  CHECK_THROWS_AS(build_root_system(Kind::G2, 3), ConfigError);
  CHECK_THROWS_AS(build_root_system(Kind::D, 2), ConfigError);
  CHECK_THROWS_AS(build_root_system("E6"), ConfigError);
  const auto C2 = build_root_system("C2");
  CHECK_THROWS_AS(killing_pairing(*C2, rv({1}), rv({1, 0})), UsageError);
}
