#include <set>

#include "doctest.h"
#include "eigenkit/errors.hpp"
#include "eigenkit/isogr.hpp"

using namespace eigenkit;

namespace {

IndexSet S(int r, std::vector<int> e) { return make_index_set(r, std::move(e)); }

}  // namespace

TEST_CASE("index bijection anchors") {
  const auto F = flag_variety("C3", 2);
  const auto sets = weyl_index_bijection(*F);
  CHECK(sets[F->point_index()] == S(3, {1, 2}));
  CHECK(sets[F->unit_index()] == S(3, {5, 6}));

  const auto A = flag_variety("C1", 1);
  const auto small = weyl_index_bijection(*A);
  REQUIRE(small.size() == 2);
  CHECK(small[0] == S(1, {1}));
  CHECK(small[1] == S(1, {2}));

  CHECK_THROWS_AS(weyl_index_bijection(*flag_variety("B3", 2)), UsageError);
}

TEST_CASE("index bijection is a bijection and matches lengths") {
  for (int r = 1; r <= 5; ++r)
    for (int k = 1; k <= r; ++k) {
      const auto F = flag_variety("C" + std::to_string(r), k);
      const auto sets = weyl_index_bijection(*F);
      std::set<std::vector<int>> seen;
      for (int i = 0; i < static_cast<int>(F->size()); ++i) {
        CHECK(dim_from_index(sets[i]) == F->element(i).length);
        CHECK(element_of_index_set(*F, sets[i]) == i);
        seen.insert(sets[i].elems);
      }
      CHECK(seen.size() == F->size());
      CHECK(F->dim() == dim_isotropic_grassmannian(k, r));
    }
}

TEST_CASE("dim_from_index") {
  CHECK(dim_from_index(S(3, {5, 6})) == 7);
  CHECK(dim_from_index(S(3, {1, 2})) == 0);
  CHECK(dim_from_index(S(2, {2, 4})) == 2);
  CHECK(dim_isotropic_grassmannian(2, 3) == 7);
  CHECK(dim_isotropic_grassmannian(0, 3) == 0);
}

TEST_CASE("derived sets") {
  const IndexSet I = S(3, {2, 4});
  CHECK(bar_set(I) == std::vector<int>{3, 5});
  CHECK(tilde_set(I) == std::vector<int>{1, 6});
  CHECK(count_le(I, 3) == 1);
  CHECK(count_gt(I, 3) == 1);
  CHECK(I.str() == "{2,4}");
}

TEST_CASE("make_index_set rejects bad input") {
  CHECK_THROWS_AS(make_index_set(3, {2, 5}), UsageError);  // 2 + 5 = 2r + 1
  CHECK_THROWS_AS(make_index_set(3, {3, 2}), UsageError);
  CHECK_THROWS_AS(make_index_set(3, {0}), UsageError);
  CHECK_THROWS_AS(make_index_set(3, {7}), UsageError);
  CHECK_THROWS_AS(make_index_set(2, {1, 2, 3}), UsageError);
  CHECK_THROWS_AS(make_index_set(2, {}), UsageError);
}

TEST_CASE("lift_index") {
  CHECK(lift_index(S(2, {2, 4}), 3) == S(3, {2, 6}));
  CHECK(lift_index(S(2, {1, 2}), 3) == S(3, {1, 2}));
  CHECK(lift_index(S(3, {3, 5, 6}), 5) == S(5, {3, 9, 10}));
  // {1,4,6} pairs 1 with 6 = 2s+1-1, so it is not an isotropic cell.
  CHECK_THROWS_AS(make_index_set(3, {1, 4, 6}), UsageError);
}

TEST_CASE("lift agrees with the embedded Weyl element") {
  for (int r = 2; r <= 5; ++r)
    for (int s = 1; s < r; ++s)
      for (int k = 1; k <= s; ++k) {
        const IsotropicPair P(r, s, k);
        const auto sub = weyl_index_bijection(P.sub());
        const auto amb = weyl_index_bijection(P.ambient());
        for (int i = 0; i < static_cast<int>(P.sub().size()); ++i)
          CHECK(lift_index(sub[i], r) == amb[P.image(i)]);
      }
}

TEST_CASE("codim_jump and bc_delta") {
  CHECK(codim_jump(S(2, {2, 4}), 3) == 2);
  CHECK(codim_jump(S(2, {1, 2}), 4) == 8);
  CHECK(codim_jump(S(2, {3, 4}), 5) == 0);
  CHECK(bc_delta(S(2, {2, 4})) == 1);
  CHECK(bc_delta(S(2, {3, 4})) == 0);
  CHECK(bc_delta(S(3, {1, 2, 3})) == 3);
}

TEST_CASE("codim jump three-way agreement") {
  for (int r = 2; r <= 4; ++r)
    for (int s = 1; s < r; ++s)
      for (int k = 1; k <= s; ++k) {
        const IsotropicPair P(r, s, k);
        const auto sub = weyl_index_bijection(P.sub());
        for (int i = 0; i < static_cast<int>(P.sub().size()); ++i) {
          const IndexSet lifted = lift_index(sub[i], r);
          const int codim_sub = P.sub().dim() - dim_from_index(sub[i]);
          const int codim_amb = P.ambient().dim() - dim_from_index(lifted);
          CHECK(codim_amb - codim_sub == codim_jump(sub[i], r));
          CHECK(P.chi_ambient(i) - P.chi_m(i) == codim_jump(sub[i], r));
          CHECK(P.chi_m(i) - P.chi_h(i) == bc_delta(sub[i]));
        }
        for (const auto& row : check_element_identities(P)) CHECK(row.ok());
      }
}

TEST_CASE("expected dimension checks") {
  const IsotropicPair P(3, 2, 2);
  const int e = P.sub().point_index(), top = P.sub().unit_index();
  const auto rep = expected_dim_zero_check(P, {e, top, top});
  CHECK(rep.theta == 0);
  CHECK(rep.theta_m == 0);
  CHECK(rep.theta_h == 0);
  CHECK(rep.ok());

  // θ - θ^M is divisible by 2(r - s) on every tuple.
  const IsotropicPair Q(4, 2, 1);
  const int n = static_cast<int>(Q.sub().size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const auto x = expected_dim_zero_check(Q, {a, b, Q.sub().unit_index()});
      CHECK((x.theta - x.theta_m) % 4 == 0);
      CHECK(x.ok());
    }

  // Levi-movable point triples of IG(1,4) lifted to IG(1,6).
  const IsotropicPair L(3, 2, 1);
  std::size_t count = 0;
  for_each_point_tuple(L.sub(), 3, TupleFilter::Levi, [&](const PointTuple& t) {
    if (t.multiplicity != 1) return;
    const auto x = expected_dim_zero_check(L, t.indices);
    CHECK(x.levi_unit_point);
    CHECK(x.e_ambient == 0);
    CHECK(x.theta == 0);
    ++count;
  });
  CHECK(count > 0);
}

TEST_CASE("orbit dimensions") {
  const OrbitDims d = orbit_dims(2, 3);
  CHECK(d.o1 == 3);
  CHECK(d.o2 == 6);
  CHECK(d.o2p == 4);
  CHECK(d.o3 == 7);
  CHECK_THROWS_AS(orbit_dims(3, 3), UsageError);
  CHECK_THROWS_AS(orbit_dims(0, 3), UsageError);
}

TEST_CASE("Schubert cell orbit dimensions") {
  // I_M = {1,3} over r-1 = 2 lifts to {1,5} over r = 3: 5 > r+1 and 1 < r.
  const IndexSet IM = S(2, {1, 3});
  const auto st = schubert_orbit_dims(IM, 3, FlagTag::Standard);
  CHECK_FALSE(st.o1.empty);
  CHECK(st.o1.dim == dim_from_index(IM));
  CHECK(st.o2.dim == dim_from_index(IM) + 1 + 1);
  CHECK(st.o2p.empty);
  CHECK(st.o3.nonempty_unknown);
  CHECK(st.o3.dim == dim_from_index(S(3, {1, 5})));

  const auto sh = schubert_orbit_dims(IM, 3, FlagTag::Shifted);
  CHECK(sh.o1.empty);
  CHECK(sh.o2.dim == dim_from_index(IM) + 1);
  CHECK(sh.o2p.empty);

  // {1,2} lifts to itself: no element > r+1.
  CHECK_THROWS_AS(schubert_orbit_dims(S(2, {1, 2}), 3, FlagTag::Standard), UsageError);
  // {3,4} lifts to {5,6}: no element < r for the shifted flag.
  CHECK_NOTHROW(schubert_orbit_dims(S(2, {3, 4}), 3, FlagTag::Standard));
  CHECK_THROWS_AS(schubert_orbit_dims(S(2, {3, 4}), 3, FlagTag::Shifted), UsageError);
  // Wrong rank for I_M.
  CHECK_THROWS_AS(schubert_orbit_dims(S(3, {1, 5}), 3, FlagTag::Standard), UsageError);
}

TEST_CASE("properness identity") {
  for (int k = 1; k <= 2; ++k) {
    const IsotropicPair P(3, 2, k);
    std::size_t count = 0;
    for_each_point_tuple(P.sub(), 3, TupleFilter::Levi, [&](const PointTuple& t) {
      const auto res = properness_identity(P, t.indices);
      if (!res.precondition) return;
      CHECK(res.value == 0);
      ++count;
    });
    CHECK(count > 0);
  }
  const IsotropicPair P(3, 2, 1);
  const int top = P.sub().unit_index();
  const auto res = properness_identity(P, {P.sub().point_index(), top, top});
  CHECK(res.precondition);
  CHECK(res.value == 0);
}

TEST_CASE("B/C transfer") {
  const auto rep = bc_transfer(2, 1, 3);
  CHECK(rep.words.size() == 4);
  CHECK(rep.ok());
  CHECK(rep.c_levi_unit == rep.b_levi_unit);

  const auto rep2 = bc_transfer(3, 2, 3);
  CHECK(rep2.ok());
  CHECK(rep2.c_levi_unit > 0);

  const auto rep1 = bc_transfer(1, 1, 3);
  CHECK(rep1.ok());
  CHECK(rep1.words.size() == 2);
}
