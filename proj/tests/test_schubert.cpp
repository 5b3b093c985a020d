#include <filesystem>
#include <fstream>
#include <random>
#include <set>

#include "doctest.h"
#include "eigenkit/errors.hpp"
#include "eigenkit/schubert.hpp"

using namespace eigenkit;

namespace {

int idx(const FlagVariety& F, const std::string& w) {
  const int i = F.index_of_word(w);
  REQUIRE(i >= 0);
  return i;
}

// Classes of a given codimension.
std::vector<int> of_codim(const FlagVariety& F, int c) {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(F.size()); ++i)
    if (F.codim(i) == c) out.push_back(i);
  return out;
}

std::string fresh_dir(const std::string& tag) {
  std::random_device rd;
  const auto p = std::filesystem::temp_directory_path() / ("eigenkit-" + tag + "-" + std::to_string(rd()));
  std::filesystem::remove_all(p);
  return p.string();
}

}  // namespace

TEST_CASE("codimensions") {
  const auto G = flag_variety("G2", 1);
  CHECK(G->dim() == 5);
  CHECK(G->codim(idx(*G, "12121")) == 0);
  CHECK(G->codim(G->point_index()) == 5);
  const auto IG = flag_variety("C3", 2);
  CHECK(IG->dim() == 7);  // k(4r-3k+1)/2 with k=2, r=3
  CHECK(IG->codim(IG->point_index()) == 7);
}

TEST_CASE("projective space IG(1,4)") {
  // IG(1,4) is all of P^3, so σ_a σ_b = σ_{a+b} in terms of hyperplane powers.
  const auto F = flag_variety("C2", 1);
  REQUIRE(F->size() == 4);
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; a + b <= 3; ++b) {
      const int u = of_codim(*F, a).at(0), v = of_codim(*F, b).at(0), w = of_codim(*F, a + b).at(0);
      CHECK(F->cup_product(u, v) == F->basis_class(w));
    }
  const int D = F->divisor_index();
  CHECK(F->chevalley_multiply(1, F->basis_class(D)) == F->basis_class(of_codim(*F, 2).at(0)));
}

TEST_CASE("Grassmannian Gr(2,4)") {
  // D^2 = X + Y, DX = DY = Z, X^2 = Y^2 = pt, XY = 0, DZ = pt.
  const auto F = flag_variety("A3", 2);
  REQUIRE(F->size() == 6);
  const int D = F->divisor_index();
  const auto two = of_codim(*F, 2);
  REQUIRE(two.size() == 2);
  const int X = two[0], Y = two[1], Z = of_codim(*F, 3).at(0), pt = F->point_index();
  CohomClass sum = F->basis_class(X);
  sum.add_term(Y, 1);
  CHECK(F->cup_product(D, D) == sum);
  CHECK(F->chevalley_multiply(2, F->basis_class(D)) == sum);
  CHECK(F->cup_product(D, X) == F->basis_class(Z));
  CHECK(F->cup_product(D, Y) == F->basis_class(Z));
  CHECK(F->cup_product(X, X) == F->basis_class(pt));
  CHECK(F->cup_product(Y, Y) == F->basis_class(pt));
  CHECK(F->cup_product(X, Y).is_zero());
  CHECK(F->cup_product(D, Z) == F->basis_class(pt));
}

TEST_CASE("unit, point and dual pairs") {
  for (const char* g : {"G2", "C3", "F4"}) {
    const auto R = build_root_system(g);
    for (int k = 1; k <= R->rank; ++k) {
      const auto F = flag_variety(g, k);
      CHECK(F->cup_product(F->point_index(), F->unit_index()) == F->point());
      CHECK(F->chevalley_multiply(k, F->unit()) == F->basis_class(F->divisor_index()));
    }
  }
  const auto G = flag_variety("G2", 1);
  CHECK(G->point_coefficient({idx(*G, "1"), idx(*G, "2121")}) == 1);
  CHECK(G->point_coefficient({idx(*G, "1"), idx(*G, "121")}) == 0);
}

TEST_CASE("chi") {
  for (const char* g : {"A2", "B3", "C3", "D4", "G2", "F4"}) {
    const auto R = build_root_system(g);
    for (int k = 1; k <= R->rank; ++k) {
      const auto F = flag_variety(g, k);
      // χ_e: sum of the positive roots outside the Levi.
      IntVec expect(R->rank, 0);
      for (const auto& b : R->positive_roots)
        if (b[k - 1] > 0)
          for (int i = 0; i < R->rank; ++i) expect[i] += b[i];
      CHECK(F->chi(F->point_index()) == expect);
      CHECK(F->chi(F->unit_index()) == IntVec(R->rank, 0));
      for (int i = 0; i < static_cast<int>(F->size()); ++i) CHECK(to_rational(F->chi(i)) == F->chi_from_rho(i));
    }
  }
  const auto A = flag_variety("A2", 1);
  CHECK(A->chi(idx(*A, "1")) == IntVec{1, 1});
}

TEST_CASE("theta and Levi-movability") {
  const auto A1 = flag_variety("A1", 1);
  const LeviResult r1 = is_levi_movable(*A1, {idx(*A1, "e"), idx(*A1, "1"), idx(*A1, "1")});
  CHECK(r1.multiplicity == 1);
  CHECK(r1.theta == 0);
  CHECK(r1.levi_movable);
  const auto A2 = flag_variety("A2", 1);
  const LeviResult r2 = is_levi_movable(*A2, {idx(*A2, "1"), idx(*A2, "1"), idx(*A2, "21")});
  CHECK(r2.multiplicity == 1);
  CHECK(r2.theta == 0);
  CHECK(r2.levi_movable);
  const auto F = flag_variety("F4", 4);
  const LeviResult r3 = is_levi_movable(*F, {F->point_index(), F->unit_index(), F->unit_index()});
  CHECK(r3.levi_movable);
  CHECK(r3.multiplicity == 1);
}

TEST_CASE("point product tuples") {
  const auto A1 = flag_variety("A1", 1);
  const auto t = point_product_tuples(*A1, 3, TupleFilter::Point);
  REQUIRE(t.size() == 3);
  CHECK(t[0].indices == std::vector<int>{0, 1, 1});
  CHECK(t[1].indices == std::vector<int>{1, 0, 1});
  CHECK(t[2].indices == std::vector<int>{1, 1, 0});
  CHECK(point_product_tuples(*A1, 3, TupleFilter::Levi).size() == 3);

  const auto G = flag_variety("G2", 2);
  const auto pairs = point_product_tuples(*G, 2, TupleFilter::Levi);
  REQUIRE(pairs.size() == 6);
  for (const auto& p : pairs) {
    CHECK(p.indices[1] == G->dual(p.indices[0]));
    CHECK(p.multiplicity == 1);
  }
  for (auto f : {TupleFilter::All, TupleFilter::Point, TupleFilter::Levi}) {
    const auto one = point_product_tuples(*G, 1, f);
    REQUIRE(one.size() == 1);
    CHECK(one[0].indices == std::vector<int>{G->point_index()});
  }
  TupleOptions tiny;
  tiny.tuple_cap = 3;
  CHECK_THROWS_AS(point_product_tuples(*G, 3, TupleFilter::Point, tiny), ResourceError);
}

TEST_CASE("structure constants survive the cache") {
  const std::string dir = fresh_dir("cache");
  FlagBuildOptions opt;
  opt.cache_dir = dir;
  const ParabolicSpec P = maximal_parabolic(build_root_system("C3"), 2);
  const auto fresh = FlagVariety::build(P, opt);
  CHECK_FALSE(fresh->loaded_from_cache());
  const auto cached = FlagVariety::build(P, opt);
  CHECK(cached->loaded_from_cache());
  for (int u = 0; u < static_cast<int>(fresh->size()); ++u)
    for (int v = 0; v < static_cast<int>(fresh->size()); ++v) CHECK(fresh->cup_product(u, v) == cached->cup_product(u, v));

  // A file whose header does not match is ignored and rewritten.
  std::filesystem::path file;
  for (const auto& e : std::filesystem::directory_iterator(dir)) file = e.path();
  std::string body;
  {
    std::ifstream in(file);
    std::string header;
    std::getline(in, header);
    body.assign(std::istreambuf_iterator<char>(in), {});
  }
  {
    std::ofstream out(file);
    out << R"({"format":"eigenkit-structure-constants","version":0})" << "\n" << body;
  }
  const auto stale = FlagVariety::build(P, opt);
  CHECK_FALSE(stale->loaded_from_cache());
  CHECK(FlagVariety::build(P, opt)->loaded_from_cache());
  std::filesystem::remove_all(dir);
}

TEST_CASE("tuple filters are nested") {
  const auto F = flag_variety("C3", 2);
  const auto all = point_product_tuples(*F, 3, TupleFilter::All);
  const auto point = point_product_tuples(*F, 3, TupleFilter::Point);
  const auto levi = point_product_tuples(*F, 3, TupleFilter::Levi);
  CHECK(Integer(static_cast<unsigned long>(all.size())) == count_complementary_tuples(*F, 3));
  CHECK(point.size() <= all.size());
  CHECK(levi.size() <= point.size());
  for (const auto& t : point) {
    CHECK(t.multiplicity != 0);
    CHECK(t.theta >= 0);
    CHECK(t.multiplicity == F->point_coefficient(t.indices));
  }
  for (const auto& t : levi) CHECK(t.theta == 0);
}
