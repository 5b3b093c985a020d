#include "doctest.h"
#include "eigenkit/embedding.hpp"
#include "eigenkit/errors.hpp"

using namespace eigenkit;

namespace {

RatVec rv(std::initializer_list<int> xs) {
  RatVec v;
  for (int x : xs) v.push_back(Rational(x));
  return v;
}

std::string embed_word(const SubsystemEmbedding& E, const std::string& w, int q, int p) {
  const WeylElement x = element_from_word(*E.sub, parse_word(w, E.sub->rank));
  return format_word(embed_coset(E, x, q, p).rep.word);
}

}  // namespace

TEST_CASE("simple images") {
  const auto C = build_embedding(EmbeddingCase::CinC, 3, 2);
  CHECK(C.simple_images == std::vector<RatVec>{rv({1, 0, 0}), rv({0, 2, 1})});
  CHECK(C.complement_images == std::vector<RatVec>{rv({0, 0, 1})});
  CHECK(C.gram_scale == 1);
  const auto S = build_embedding(EmbeddingCase::SL2inG2);
  CHECK(S.simple_images == std::vector<RatVec>{rv({3, 2})});
  const auto G = build_embedding(EmbeddingCase::G2inF4);
  REQUIRE(G.stages.size() >= 1);
  CHECK(G.stages[0].second == std::vector<RatVec>{rv({0, 1, 2, 2}), rv({1, 0, 0, 0}), rv({0, 1, 0, 0}), rv({0, 0, 1, 0})});
  CHECK_THROWS_AS(build_embedding(EmbeddingCase::CinC, 3, 3), ConfigError);
  CHECK_THROWS_AS(build_embedding(EmbeddingCase::DChain, 2), ConfigError);
}

TEST_CASE("image Cartan matrices") {
  const std::vector<std::tuple<EmbeddingCase, int, int>> cases = {
      {EmbeddingCase::CinC, 4, 2}, {EmbeddingCase::BinB, 4, 2}, {EmbeddingCase::DChain, 5, 0},
      {EmbeddingCase::G2inF4, 0, 0}, {EmbeddingCase::SL2inG2, 0, 0}};
  for (const auto& [c, r, s] : cases) {
    const auto E = build_embedding(c, r, s);
    CAPTURE(E.label());
    const RootSystem& A = *E.ambient;
    for (int i = 0; i < E.sub->rank; ++i)
      for (int j = 0; j < E.sub->rank; ++j) {
        const Rational g = A.pairing_roots(E.simple_images[i], E.simple_images[j]);
        CHECK(2 * g / A.pairing_roots(E.simple_images[j], E.simple_images[j]) == E.sub->cartan[i][j]);
      }
  }
}

TEST_CASE("restriction of weights") {
  const auto C = build_embedding(EmbeddingCase::CinC, 4, 2);
  CHECK(restrict_weight(C, rv({1, 2, 3, 4})) == rv({1, 9}));
  const auto S = build_embedding(EmbeddingCase::SL2inG2);
  CHECK(restrict_weight(S, rv({0, 5})) == rv({10}));
  CHECK(restrict_weight(S, rv({7, 0})) == rv({7}));
  const auto G = build_embedding(EmbeddingCase::G2inF4);
  CHECK(restrict_weight(G, rv({2, 5, 0, 0})) == rv({15, 2}));
  // linearity
  const RatVec a = rv({1, 0, 2, 1}), b = rv({0, 3, 1, 0});
  RatVec comb(4);
  for (int i = 0; i < 4; ++i) comb[i] = Rational(2, 3) * a[i] + 5 * b[i];
  const RatVec ra = restrict_weight(G, a), rb = restrict_weight(G, b), rc = restrict_weight(G, comb);
  for (int i = 0; i < 2; ++i) CHECK(rc[i] == Rational(2, 3) * ra[i] + 5 * rb[i]);
}

TEST_CASE("coset images") {
  const auto G = build_embedding(EmbeddingCase::G2inF4);
  CHECK(embed_word(G, "1", 1, 4) == "43234");
  CHECK(embed_word(G, "212", 2, 1) == "12324321");
  const auto S = build_embedding(EmbeddingCase::SL2inG2);
  CHECK(format_word(embed_element(S, simple_reflection(*S.sub, 0)).word) == "21212");
  CHECK(verify_dual_commutes(G, 1, 4).all_commute());
  CHECK(verify_dual_commutes(G, 2, 1).all_commute());
  CHECK_THROWS_AS(embed_coset(G, identity_element(*G.sub), 1, 1), UsageError);
}

TEST_CASE("embedding is a homomorphism") {
  for (const auto& E : {build_embedding(EmbeddingCase::G2inF4), build_embedding(EmbeddingCase::CinC, 4, 2),
                        build_embedding(EmbeddingCase::CinC, 4, 3)}) {
    const auto W = generate_weyl_group(*E.sub);
    for (const auto& a : W)
      for (const auto& b : W) {
        CHECK(embed_element(E, multiply(*E.sub, a, b)) ==
              multiply(*E.ambient, embed_element(E, a), embed_element(E, b)));
      }
  }
}
