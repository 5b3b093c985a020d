#include "eigenkit/embedding.hpp"

#include <algorithm>
#include <cctype>

#include "eigenkit/errors.hpp"

namespace eigenkit {

namespace {

IntVec unit_root(int r, int i) {  // α_{i+1}
  IntVec v(r, 0);
  v[i] = 1;
  return v;
}

RatVec orbit_average(const std::vector<IntVec>& orbit, int r) {
  RatVec v(r);
  for (const auto& b : orbit) v = add(v, to_rational(b));
  return scale(v, Rational(1, static_cast<long>(orbit.size())));
}

void finish_embedding(SubsystemEmbedding& E) {
  const RootSystem& A = *E.ambient;
  const RootSystem& S = *E.sub;
  ensure(static_cast<int>(E.orbits.size()) == S.rank, "orbit count differs from sub rank");
  E.simple_images.clear();
  E.generators.clear();
  for (const auto& orbit : E.orbits) {
    ensure(!orbit.empty(), "empty orbit");
    if (orbit.size() > 1) E.folded = true;
    WeylElement g = identity_element(A);
    for (std::size_t a = 0; a < orbit.size(); ++a) {
      ensure(A.positive_root_index(orbit[a]) >= 0, "orbit member is not a positive root of " + A.name());
      for (std::size_t b = a + 1; b < orbit.size(); ++b) {
        ensure(A.pairing_roots(to_rational(orbit[a]), to_rational(orbit[b])) == 0,
               "orbit members must be orthogonal");
      }
      g = multiply(A, g, root_reflection(A, orbit[a]));
    }
    E.generators.push_back(g);
    E.simple_images.push_back(orbit_average(orbit, A.rank));
  }

  // Gram matrix of the images against the sub's normalized Gram matrix.
  const int n = S.rank;
  E.gram_scale = A.pairing_roots(E.simple_images[0], E.simple_images[0]) / S.gram_roots(0, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Rational g = A.pairing_roots(E.simple_images[i], E.simple_images[j]);
      ensure(g == E.gram_scale * S.gram_roots(i, j), "image Gram matrix is not proportional for " + E.label());
      const Rational gjj = A.pairing_roots(E.simple_images[j], E.simple_images[j]);
      ensure(2 * g / gjj == S.cartan[i][j], "image Cartan matrix differs for " + E.label());
    }
}

std::vector<RatVec> as_rational(const std::vector<IntVec>& v) {
  std::vector<RatVec> out;
  for (const auto& x : v) out.push_back(to_rational(x));
  return out;
}

}  // namespace

std::string case_name(EmbeddingCase c) {
  switch (c) {
    case EmbeddingCase::CinC: return "c-in-c";
    case EmbeddingCase::BinB: return "b-in-b";
    case EmbeddingCase::DChain: return "d-chain";
    case EmbeddingCase::G2inF4: return "g2-in-f4";
    case EmbeddingCase::SL2inG2: return "sl2-in-g2";
  }
  return "?";
}

EmbeddingCase parse_case(const std::string& text) {
  std::string t;
  for (char c : text) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  for (auto c : {EmbeddingCase::CinC, EmbeddingCase::BinB, EmbeddingCase::DChain, EmbeddingCase::G2inF4,
                 EmbeddingCase::SL2inG2}) {
    if (case_name(c) == t) return c;
  }
  throw ConfigError("unknown embedding case '" + text +
                    "' (expected c-in-c, b-in-b, d-chain, g2-in-f4 or sl2-in-g2)");
}

std::string SubsystemEmbedding::label() const {
  return sub->name() + " in " + ambient->name() + " (" + case_name(tag) + ")";
}

int SubsystemEmbedding::matched_ambient(int sub_k) const {
  for (const auto& [q, p] : matched)
    if (q == sub_k) return p;
  return 0;
}

SubsystemEmbedding build_embedding(EmbeddingCase c, int r, int s) {
  SubsystemEmbedding E;
  E.tag = c;
  switch (c) {
    case EmbeddingCase::CinC:
    case EmbeddingCase::BinB: {
      if (s < 1 || s >= r) {
        throw ConfigError(case_name(c) + " requires 1 <= s < r (got r=" + std::to_string(r) +
                          ", s=" + std::to_string(s) + ")");
      }
      const bool typeC = c == EmbeddingCase::CinC;
      E.r = r;
      E.s = s;
      E.ambient = build_root_system(typeC ? Kind::C : Kind::B, r);
      E.sub = build_root_system(typeC ? Kind::C : Kind::B, s);
      for (int i = 0; i + 1 < s; ++i) E.orbits.push_back({unit_root(r, i)});
      // 2α_s + ... + 2α_{r-1} + α_r in type C, α_s + ... + α_r in type B.
      IntVec last(r, 0);
      for (int i = s - 1; i < r; ++i) last[i] = (typeC && i < r - 1) ? 2 : 1;
      E.orbits.push_back({last});
      if (typeC) {
        for (int i = s; i < r; ++i) E.complement_images.push_back(to_rational(unit_root(r, i)));
      } else if (r - s >= 2) {
        for (int i = s; i + 1 < r; ++i) E.complement_images.push_back(to_rational(unit_root(r, i)));
        IntVec d(r, 0);
        d[r - 2] = 1;
        d[r - 1] = 2;
        E.complement_images.push_back(to_rational(d));
      }
      for (int k = 1; k <= s; ++k) E.matched.emplace_back(k, k);
      break;
    }
    case EmbeddingCase::DChain: {
      if (r < 3) throw ConfigError("d-chain requires r >= 3 (got r=" + std::to_string(r) + ")");
      E.r = r;
      E.s = r - 2;
      E.ambient = build_root_system(Kind::D, r);
      E.sub = build_root_system(Kind::B, r - 2);
      for (int i = 0; i + 1 < r - 2; ++i) E.orbits.push_back({unit_root(r, i)});
      IntVec minus(r, 0), plus(r, 0);  // ε_{r-2} - ε_r and ε_{r-2} + ε_r
      minus[r - 3] = 1;
      minus[r - 2] = 1;
      plus[r - 3] = 1;
      plus[r - 1] = 1;
      E.orbits.push_back({minus, plus});
      // D_r, then the fixed points of the diagram automorphism (B_{r-1}).
      std::vector<RatVec> bfold;
      for (int i = 0; i + 2 < r; ++i) bfold.push_back(to_rational(unit_root(r, i)));
      bfold.push_back(orbit_average({unit_root(r, r - 2), unit_root(r, r - 1)}, r));
      std::vector<IntVec> dsimple;
      for (int i = 0; i < r; ++i) dsimple.push_back(unit_root(r, i));
      E.stages.emplace_back(E.ambient->name(), as_rational(dsimple));
      E.stages.emplace_back("B" + std::to_string(r - 1), bfold);
      for (int k = 1; k <= r - 2; ++k) E.matched.emplace_back(k, k);
      break;
    }
    case EmbeddingCase::G2inF4: {
      E.ambient = build_root_system(Kind::F4, 4);
      E.sub = build_root_system(Kind::G2, 2);
      const IntVec b1{0, 1, 2, 2}, b2{1, 0, 0, 0}, b3{0, 1, 0, 0}, b4{0, 0, 1, 0};
      const IntVec d4{0, 1, 2, 0};  // β3 + 2β4
      E.stages.emplace_back("B4", as_rational({b1, b2, b3, b4}));
      E.stages.emplace_back("D4", as_rational({b1, b2, b3, d4}));
      // Triality orbit of the outer nodes gives the short root, the central node the long one.
      E.orbits.push_back({b1, b3, d4});
      E.orbits.push_back({b2});
      E.matched = {{1, 4}, {2, 1}};
      break;
    }
    case EmbeddingCase::SL2inG2: {
      E.ambient = build_root_system(Kind::G2, 2);
      E.sub = build_root_system(Kind::A, 1);
      E.orbits.push_back({IntVec{3, 2}});
      E.complement_images.push_back(RatVec{1, 0});
      E.matched = {{1, 2}};
      break;
    }
  }
  finish_embedding(E);
  return E;
}

RatVec restrict_weight(const SubsystemEmbedding& E, const RatVec& lambda) {
  const RootSystem& A = *E.ambient;
  if (static_cast<int>(lambda.size()) != A.rank) {
    throw UsageError("restrict_weight: expected a weight of " + A.name());
  }
  RatVec out;
  for (const auto& g : E.simple_images) {
    const RatVec gw = A.root_to_weight(g);
    out.push_back(2 * A.pairing_weights(lambda, gw) / A.pairing_roots(g, g));
  }
  return out;
}

WeylElement embed_element(const SubsystemEmbedding& E, const WeylElement& w) {
  if (w.rank != E.sub->rank) throw UsageError("embed_element: element is not in the Weyl group of " + E.sub->name());
  WeylElement x = identity_element(*E.ambient);
  for (int i : w.word) x = multiply(*E.ambient, x, E.generators[i]);
  return x;
}

bool levi_generators_compatible(const SubsystemEmbedding& E, int sub_k, int ambient_k) {
  const ParabolicSpec P = maximal_parabolic(E.ambient, ambient_k);
  for (int j = 0; j < E.sub->rank; ++j) {
    if (j == sub_k - 1) continue;
    if (minimal_rep(P, E.generators[j]).length != 0) return false;
  }
  return true;
}

CosetImage embed_coset(const SubsystemEmbedding& E, const WeylElement& w, int sub_k, int ambient_k) {
  if (E.matched_ambient(sub_k) != ambient_k) {
    throw UsageError("embed_coset: Q" + std::to_string(sub_k) + " and P" + std::to_string(ambient_k) +
                     " are not a matched pair for " + E.label());
  }
  const ParabolicSpec Q = maximal_parabolic(E.sub, sub_k);
  if (!is_minimal_rep(Q, w)) {
    throw UsageError("embed_coset: " + format_word(w.word) + " is not a minimal representative for Q" +
                     std::to_string(sub_k));
  }
  const ParabolicSpec P = maximal_parabolic(E.ambient, ambient_k);
  CosetImage out{embed_element(E, w), {}, false};
  out.raw_minimal = is_minimal_rep(P, out.raw);
  out.rep = minimal_rep(P, out.raw);
  return out;
}

bool DualCommutationReport::all_commute() const {
  return std::all_of(rows.begin(), rows.end(), [](const DualCommutationRow& r) { return r.commutes; });
}

DualCommutationReport verify_dual_commutes(const SubsystemEmbedding& E, int sub_k, int ambient_k) {
  DualCommutationReport rep;
  rep.sub_k = sub_k;
  rep.ambient_k = ambient_k;
  const ParabolicSpec Q = maximal_parabolic(E.sub, sub_k);
  const ParabolicSpec P = maximal_parabolic(E.ambient, ambient_k);
  for (const auto& w : minimal_coset_reps(Q)) {
    const WeylElement wd = dual_rep(Q, w);
    const WeylElement img = embed_coset(E, w, sub_k, ambient_k).rep;
    const WeylElement img_dual = dual_rep(P, img);
    const WeylElement dual_img = embed_coset(E, wd, sub_k, ambient_k).rep;
    rep.rows.push_back({format_word(w.word), format_word(wd.word), format_word(img.word),
                        format_word(img_dual.word), format_word(dual_img.word), img_dual == dual_img});
  }
  return rep;
}

}  // namespace eigenkit
