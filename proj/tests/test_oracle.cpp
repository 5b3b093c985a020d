#include "doctest.h"
#include "eigenkit/errors.hpp"
#include "eigenkit/oracle.hpp"

using namespace eigenkit;

namespace {

using Decomp = std::map<IntVec, Integer>;

Integer total_dim(const RootSystemPtr& R, const Decomp& d) {
  Integer t = 0;
  for (const auto& [hw, m] : d) t += m * weyl_dimension(*R, hw);
  return t;
}

}  // namespace

TEST_CASE("weight multiplicities") {
  const auto A1 = build_root_system("A1");
  const auto t = weight_multiplicities(A1, {3});
  CHECK(t.dimension == 4);
  CHECK(t.dominant.at({3}) == 1);
  CHECK(t.dominant.at({1}) == 1);

  const auto C2 = build_root_system("C2");
  const auto w2 = weight_multiplicities(C2, {0, 1});
  CHECK(w2.dimension == 5);
  CHECK(w2.dominant.at({0, 0}) == 1);

  const auto G2 = build_root_system("G2");
  CHECK(weight_multiplicities(G2, {1, 0}).dimension == 7);
  CHECK(weight_multiplicities(G2, {0, 1}).dimension == 14);
  // The adjoint representation has the rank as zero-weight multiplicity.
  CHECK(weight_multiplicities(G2, {0, 1}).dominant.at({0, 0}) == 2);

  const auto F4 = build_root_system("F4");
  CHECK(weyl_dimension(*F4, {0, 0, 0, 1}) == 26);
  CHECK(weyl_dimension(*F4, {1, 0, 0, 0}) == 52);

  CHECK_THROWS_AS(weight_multiplicities(C2, {-1, 1}), UsageError);
}

TEST_CASE("Weyl orbits and duals") {
  const auto A1 = build_root_system("A1");
  CHECK(weyl_orbit(*A1, {2}).size() == 2);
  const auto A2 = build_root_system("A2");
  CHECK(dual_weight(*A2, {1, 0}) == IntVec{0, 1});
  const auto C3 = build_root_system("C3");
  CHECK(dual_weight(*C3, {1, 2, 3}) == IntVec{1, 2, 3});
  int refl = 0;
  CHECK(dominant_representative(*A1, {-3}, &refl) == IntVec{3});
  CHECK(refl == 1);
}

TEST_CASE("tensor products") {
  const auto C2 = build_root_system("C2");
  const Decomp trivial = tensor_decompose(C2, {1, 1}, {0, 0});
  CHECK(trivial == Decomp{{{1, 1}, 1}});

  const Decomp sq = tensor_decompose(C2, {1, 0}, {1, 0});
  CHECK(sq == Decomp{{{0, 0}, 1}, {{0, 1}, 1}, {{2, 0}, 1}});

  const auto G2 = build_root_system("G2");
  const Decomp a = tensor_decompose(G2, {1, 0}, {0, 1});
  const Decomp b = tensor_decompose(G2, {0, 1}, {1, 0});
  CHECK(a == b);
  CHECK(total_dim(G2, a) == 7 * 14);

  // (V1 ⊗ V1) ⊗ V2 and V1 ⊗ (V1 ⊗ V2) agree.
  auto product = [&](const Decomp& d, const IntVec& mu) {
    Decomp out;
    for (const auto& [hw, m] : d)
      for (const auto& [nu, c] : tensor_decompose(C2, hw, mu)) out[nu] += m * c;
    return out;
  };
  const Decomp left = product(tensor_decompose(C2, {1, 0}, {1, 0}), {0, 1});
  Decomp right;
  for (const auto& [hw, m] : tensor_decompose(C2, {1, 0}, {0, 1}))
    for (const auto& [nu, c] : tensor_decompose(C2, {1, 0}, hw)) right[nu] += m * c;
  CHECK(left == right);
}

TEST_CASE("invariants") {
  const auto A1 = build_root_system("A1");
  CHECK(invariant_dim(A1, {{1}, {1}, {2}}) == 1);
  CHECK(invariant_dim(A1, {{1}, {1}, {3}}) == 0);
  CHECK(invariant_dim(A1, {{2}, {2}, {2}}) == 1);
  CHECK(invariant_dim(A1, {{1}, {1}, {1}, {1}}) == 2);
  CHECK(saturated_search(A1, {{1}, {1}, {3}}) == std::nullopt);
  CHECK(saturated_search(A1, {{1}, {1}, {1}}) == 2);

  const auto C2 = build_root_system("C2");
  CHECK(invariant_dim(C2, {{1, 0}, {1, 0}, {0, 1}}) == 1);
  CHECK(invariant_dim(C2, {{0, 0}, {0, 0}, {1, 0}}) == 0);
}

TEST_CASE("dimension cap") {
  const auto F4 = build_root_system("F4");
  OracleLimits lim;
  lim.dimension_cap = 30;
  CHECK_THROWS_AS(weight_multiplicities(F4, {1, 0, 0, 0}, lim), ResourceError);
  CHECK_NOTHROW(weight_multiplicities(F4, {0, 0, 0, 1}, lim));
}
