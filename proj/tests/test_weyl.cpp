#include <set>

#include "doctest.h"
#include "eigenkit/errors.hpp"
#include "eigenkit/weyl.hpp"

using namespace eigenkit;

namespace {

std::vector<std::string> words_of(const std::vector<WeylElement>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(format_word(x.word));
  return out;
}

bool contains(const std::vector<std::string>& xs, const std::string& w) {
  return std::find(xs.begin(), xs.end(), w) != xs.end();
}

}  // namespace

TEST_CASE("group orders") {
  CHECK(generate_weyl_group(*build_root_system("A1")).size() == 2);
  CHECK(generate_weyl_group(*build_root_system("G2")).size() == 12);
  CHECK(generate_weyl_group(*build_root_system("C3")).size() == 48);
  CHECK(generate_weyl_group(*build_root_system("F4")).size() == 1152);
  WeylLimits small;
  small.max_group_order = 100;
  CHECK_THROWS_AS(generate_weyl_group(*build_root_system("F4"), small), ResourceError);
}

TEST_CASE("length equals inversions and words reproduce the action") {
  const auto R = build_root_system("B3");
  for (const auto& w : generate_weyl_group(*R)) {
    CHECK(inversion_count(*R, w) == w.length);
    CHECK(static_cast<int>(w.word.size()) == w.length);
    CHECK(element_from_word(*R, w.word) == w);
  }
}

TEST_CASE("minimal coset representatives") {
  const auto G2 = build_root_system("G2");
  CHECK(words_of(minimal_coset_reps(maximal_parabolic(G2, 1))) ==
        std::vector<std::string>{"e", "1", "21", "121", "2121", "12121"});
  CHECK(words_of(minimal_coset_reps(maximal_parabolic(G2, 2))) ==
        std::vector<std::string>{"e", "2", "12", "212", "1212", "21212"});
  const auto F4 = build_root_system("F4");
  const auto p1 = words_of(minimal_coset_reps(maximal_parabolic(F4, 1)));
  CHECK(p1.size() == 24);
  CHECK(contains(p1, "2324321"));
  CHECK(contains(p1, "123214321324321"));
  CHECK(words_of(minimal_coset_reps(maximal_parabolic(build_root_system("A1"), 1))) ==
        std::vector<std::string>{"e", "1"});
  for (const char* label : {"C3", "B3", "D4", "F4", "A4"}) {
    const auto R = build_root_system(label);
    const std::size_t order = generate_weyl_group(*R).size();
    for (int k = 1; k <= R->rank; ++k) {
      const ParabolicSpec P = maximal_parabolic(R, k);
      const auto reps = minimal_coset_reps(P);
      std::size_t levi_order = 0;
      for (const auto& w : generate_weyl_group(*R)) {
        bool in_levi = true;
        for (int i : w.word) in_levi = in_levi && P.in_levi(i);
        levi_order += in_levi;
      }
      CHECK(reps.size() * levi_order == order);
      CHECK(poincare_check(P));
      for (const auto& w : reps)
        for (int i : P.levi_simple) CHECK_FALSE(is_right_descent(w, i));
    }
  }
}

TEST_CASE("duals") {
  const auto G2 = build_root_system("G2");
  const ParabolicSpec Q1 = maximal_parabolic(G2, 1);
  CHECK(format_word(dual_rep(Q1, element_from_word(*G2, parse_word("1", 2))).word) == "2121");
  const auto F4 = build_root_system("F4");
  const ParabolicSpec P4 = maximal_parabolic(F4, 4);
  CHECK(format_word(dual_rep(P4, element_from_word(*F4, parse_word("43234", 4))).word) == "1232143234");
  for (const char* label : {"C3", "G2", "F4"}) {
    const auto R = build_root_system(label);
    for (int k = 1; k <= R->rank; ++k) {
      const ParabolicSpec P = maximal_parabolic(R, k);
      const auto reps = minimal_coset_reps(P);
      CHECK(dual_rep(P, reps.front()) == reps.back());
      for (const auto& w : reps) {
        const WeylElement d = dual_rep(P, w);
        CHECK(dual_rep(P, d) == w);
        CHECK(w.length + d.length == flag_dimension(P));
      }
    }
  }
  CHECK_THROWS_AS(dual_rep(Q1, element_from_word(*G2, parse_word("2", 2))), UsageError);
}

TEST_CASE("word format") {
  CHECK(parse_word("43234", 4) == IntVec{3, 2, 1, 2, 3});
  CHECK(parse_word("e", 4).empty());
  CHECK(format_word({}) == "e");
  CHECK_THROWS_AS(parse_word("5", 4), UsageError);
}
