#include "eigenkit/weyl.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "eigenkit/errors.hpp"

namespace eigenkit {

namespace {

using IntMat = std::vector<int>;

IntMat mat_mul(const IntMat& a, const IntMat& b, int r) {
  IntMat c(r * r, 0);
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < r; ++k) {
      const int x = a[i * r + k];
      if (x == 0) continue;
      for (int j = 0; j < r; ++j) c[i * r + j] += x * b[k * r + j];
    }
  return c;
}

IntMat identity_mat(int r) {
  IntMat m(r * r, 0);
  for (int i = 0; i < r; ++i) m[i * r + i] = 1;
  return m;
}

// s_i on fundamental-weight coordinates: a_j -> a_j - A_ij a_i.
IntMat weight_reflection(const RootSystem& R, int i) {
  const int r = R.rank;
  IntMat m = identity_mat(r);
  for (int j = 0; j < r; ++j) m[j * r + i] -= R.cartan[i][j];
  return m;
}

// s_i on simple-root coordinates: c -> c - <c, α_i^∨> e_i.
IntMat root_reflection_mat(const RootSystem& R, int i) {
  const int r = R.rank;
  IntMat m = identity_mat(r);
  for (int k = 0; k < r; ++k) m[i * r + k] -= R.cartan[k][i];
  return m;
}

IntVec mat_apply(const IntMat& m, const IntVec& v, int r) {
  IntVec out(r, 0);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) out[i] += m[i * r + j] * v[j];
  return out;
}

// Fill rho_image, word and length from the action.
void finish(const RootSystem& R, WeylElement& w) {
  const int r = R.rank;
  w.rho_image = mat_apply(w.action, IntVec(r, 1), r);
  IntVec v = w.rho_image;
  w.word.clear();
  for (;;) {
    int i = 0;
    while (i < r && v[i] >= 0) ++i;
    if (i == r) break;
    w.word.push_back(i);
    const int vi = v[i];
    for (int j = 0; j < r; ++j) v[j] -= R.cartan[i][j] * vi;
  }
  w.length = static_cast<int>(w.word.size());
}

WeylElement from_matrices(const RootSystem& R, IntMat action, IntMat root_action) {
  WeylElement w;
  w.rank = R.rank;
  w.action = std::move(action);
  w.root_action = std::move(root_action);
  finish(R, w);
  return w;
}

WeylElement times_simple(const RootSystem& R, const WeylElement& w, int i) {
  return from_matrices(R, mat_mul(w.action, weight_reflection(R, i), R.rank),
                       mat_mul(w.root_action, root_reflection_mat(R, i), R.rank));
}

WeylElement simple_times(const RootSystem& R, int i, const WeylElement& w) {
  return from_matrices(R, mat_mul(weight_reflection(R, i), w.action, R.rank),
                       mat_mul(root_reflection_mat(R, i), w.root_action, R.rank));
}

}  // namespace

bool canonical_less(const WeylElement& a, const WeylElement& b) {
  if (a.length != b.length) return a.length < b.length;
  return a.word < b.word;
}

WeylElement identity_element(const RootSystem& R) {
  return from_matrices(R, identity_mat(R.rank), identity_mat(R.rank));
}

WeylElement simple_reflection(const RootSystem& R, int i) {
  if (i < 0 || i >= R.rank) throw UsageError("simple reflection index out of range for " + R.name());
  return from_matrices(R, weight_reflection(R, i), root_reflection_mat(R, i));
}

WeylElement element_from_word(const RootSystem& R, const IntVec& word) {
  const int r = R.rank;
  IntMat a = identity_mat(r);
  IntMat b = identity_mat(r);
  for (int i : word) {
    if (i < 0 || i >= r) throw UsageError("word letter out of range for " + R.name());
    a = mat_mul(a, weight_reflection(R, i), r);
    b = mat_mul(b, root_reflection_mat(R, i), r);
  }
  return from_matrices(R, std::move(a), std::move(b));
}

WeylElement element_from_rho_image(const RootSystem& R, const IntVec& v) {
  if (static_cast<int>(v.size()) != R.rank) throw UsageError("rho image has wrong length");
  IntVec u = v;
  IntVec word;
  for (int guard = 0;; ++guard) {
    if (guard > 1000) throw UsageError("vector is not in the Weyl orbit of rho");
    int i = 0;
    while (i < R.rank && u[i] >= 0) ++i;
    if (i == R.rank) break;
    word.push_back(i);
    const int ui = u[i];
    for (int j = 0; j < R.rank; ++j) u[j] -= R.cartan[i][j] * ui;
  }
  if (u != IntVec(R.rank, 1)) throw UsageError("vector is not in the Weyl orbit of rho");
  WeylElement w = element_from_word(R, word);
  ensure(w.rho_image == v, "rho image reconstruction failed");
  return w;
}

WeylElement multiply(const RootSystem& R, const WeylElement& a, const WeylElement& b) {
  return from_matrices(R, mat_mul(a.action, b.action, R.rank), mat_mul(a.root_action, b.root_action, R.rank));
}

WeylElement inverse(const RootSystem& R, const WeylElement& w) {
  IntVec rev(w.word.rbegin(), w.word.rend());
  return element_from_word(R, rev);
}

WeylElement longest_element(const RootSystem& R) {
  return element_from_rho_image(R, IntVec(R.rank, -1));
}

WeylElement root_reflection(const RootSystem& R, const IntVec& beta) {
  const int r = R.rank;
  const RatVec b = to_rational(beta);
  const Rational bb = R.pairing_roots(b, b);
  if (R.positive_root_index(beta) < 0) throw UsageError("not a positive root of " + R.name());
  // s_β(ρ) = ρ - <ρ, β^∨> β, with ρ = Σ ω_i.
  const RatVec rho_w(r, Rational(1));
  const RatVec bw = R.root_to_weight(b);
  const Rational coef = 2 * R.pairing_weights(rho_w, bw) / bb;
  IntVec v(r);
  for (int i = 0; i < r; ++i) v[i] = to_int(1 - coef * bw[i]);
  return element_from_rho_image(R, v);
}

RatVec apply_to_weight(const WeylElement& w, const RatVec& a) {
  const int r = w.rank;
  RatVec out(r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (w.action[i * r + j] != 0) out[i] += w.action[i * r + j] * a[j];
  return out;
}

RatVec apply_to_root(const WeylElement& w, const RatVec& c) {
  const int r = w.rank;
  RatVec out(r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (w.root_action[i * r + j] != 0) out[i] += w.root_action[i * r + j] * c[j];
  return out;
}

IntVec apply_to_root(const WeylElement& w, const IntVec& c) {
  return mat_apply(w.root_action, c, w.rank);
}

bool is_right_descent(const WeylElement& w, int i) {
  const int r = w.rank;
  for (int k = 0; k < r; ++k) {
    if (w.root_action[k * r + i] < 0) return true;
    if (w.root_action[k * r + i] > 0) return false;
  }
  return false;
}

int inversion_count(const RootSystem& R, const WeylElement& w) {
  int n = 0;
  for (const auto& beta : R.positive_roots) {
    IntVec img = apply_to_root(w, beta);
    if (std::any_of(img.begin(), img.end(), [](int x) { return x < 0; })) ++n;
  }
  return n;
}

IntVec parse_word(const std::string& digits, int rank) {
  IntVec word;
  if (digits.empty() || digits == "e") return word;
  if (rank > 9) throw UsageError("digit-string words require rank <= 9");
  for (char c : digits) {
    if (c < '1' || c > '9' || c - '0' > rank) {
      throw UsageError("invalid word '" + digits + "' for rank " + std::to_string(rank));
    }
    word.push_back(c - '1');
  }
  return word;
}

std::string format_word(const IntVec& word) {
  if (word.empty()) return "e";
  std::string s;
  for (int i : word) s.push_back(static_cast<char>('1' + i));
  return s;
}

bool ParabolicSpec::in_levi(int i) const {
  return std::find(levi_simple.begin(), levi_simple.end(), i) != levi_simple.end();
}

std::string ParabolicSpec::label() const {
  std::string s = "P";
  for (std::size_t k = 0; k < excluded.size(); ++k) {
    if (k) s += "+";
    s += std::to_string(excluded[k] + 1);
  }
  return s;
}

ParabolicSpec parabolic_from_excluded(RootSystemPtr R, std::vector<int> excluded) {
  std::sort(excluded.begin(), excluded.end());
  excluded.erase(std::unique(excluded.begin(), excluded.end()), excluded.end());
  if (excluded.empty()) throw ConfigError("a parabolic must exclude at least one simple root");
  for (int i : excluded) {
    if (i < 0 || i >= R->rank) {
      throw ConfigError("parabolic index " + std::to_string(i + 1) + " outside 1.." + std::to_string(R->rank));
    }
  }
  ParabolicSpec P;
  P.root_system = std::move(R);
  P.excluded = excluded;
  for (int i = 0; i < P.root_system->rank; ++i)
    if (!std::binary_search(excluded.begin(), excluded.end(), i)) P.levi_simple.push_back(i);
  return P;
}

ParabolicSpec maximal_parabolic(RootSystemPtr R, int k) {
  return parabolic_from_excluded(std::move(R), {k - 1});
}

std::vector<WeylElement> generate_weyl_group(const RootSystem& R, const WeylLimits& limits) {
  if (R.rank > limits.max_rank) {
    throw ResourceError("Weyl group generation is capped at rank " + std::to_string(limits.max_rank));
  }
  std::vector<WeylElement> all = elements_up_to_length(R, static_cast<int>(R.num_positive()),
                                                       limits.max_group_order);
  return all;
}

std::vector<WeylElement> elements_up_to_length(const RootSystem& R, int max_length, std::size_t cap) {
  std::vector<WeylElement> out{identity_element(R)};
  std::vector<WeylElement> layer = out;
  for (int len = 0; len < max_length && !layer.empty(); ++len) {
    std::map<IntVec, WeylElement> next;
    for (const auto& w : layer)
      for (int i = 0; i < R.rank; ++i) {
        if (is_right_descent(w, i)) continue;
        WeylElement x = times_simple(R, w, i);
        next.emplace(x.rho_image, std::move(x));
      }
    layer.clear();
    for (auto& kv : next) layer.push_back(std::move(kv.second));
    std::sort(layer.begin(), layer.end(), canonical_less);
    out.insert(out.end(), layer.begin(), layer.end());
    if (out.size() > cap) {
      throw ResourceError("Weyl group enumeration for " + R.name() + " exceeds the cap of " +
                          std::to_string(cap) + " elements");
    }
  }
  return out;
}

bool is_minimal_rep(const ParabolicSpec& P, const WeylElement& w) {
  for (int i : P.levi_simple)
    if (is_right_descent(w, i)) return false;
  return true;
}

WeylElement minimal_rep(const ParabolicSpec& P, const WeylElement& w) {
  const RootSystem& R = *P.root_system;
  WeylElement x = w;
  for (;;) {
    int found = -1;
    for (int i : P.levi_simple)
      if (is_right_descent(x, i)) {
        found = i;
        break;
      }
    if (found < 0) return x;
    x = times_simple(R, x, found);
  }
}

std::vector<WeylElement> minimal_coset_reps(const ParabolicSpec& P) {
  const RootSystem& R = *P.root_system;
  std::vector<WeylElement> out{identity_element(R)};
  std::vector<WeylElement> layer = out;
  while (!layer.empty()) {
    std::map<IntVec, WeylElement> next;
    // Deleting the first letter of a reduced word keeps an element in W^P, so each layer
    // is reached from the previous one by left multiplication.
    for (const auto& w : layer)
      for (int i = 0; i < R.rank; ++i) {
        if (w.rho_image[i] < 0) continue;
        WeylElement x = simple_times(R, i, w);
        if (!is_minimal_rep(P, x)) continue;
        next.emplace(x.rho_image, std::move(x));
      }
    layer.clear();
    for (auto& kv : next) layer.push_back(std::move(kv.second));
    std::sort(layer.begin(), layer.end(), canonical_less);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

WeylElement dual_rep(const ParabolicSpec& P, const WeylElement& w) {
  if (!is_minimal_rep(P, w)) {
    throw UsageError("dual_rep: " + format_word(w.word) + " is not a minimal coset representative for " +
                     P.label());
  }
  const RootSystem& R = *P.root_system;
  return minimal_rep(P, multiply(R, longest_element(R), w));
}

int flag_dimension(const ParabolicSpec& P) {
  const RootSystem& R = *P.root_system;
  int n = 0;
  for (const auto& beta : R.positive_roots) {
    bool levi = true;
    for (int i : P.excluded)
      if (beta[i] != 0) levi = false;
    if (!levi) ++n;
  }
  return n;
}

namespace {

using Poly = std::vector<Integer>;

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

std::vector<int> degrees(const RootSystem& R) {
  const int r = R.rank;
  std::vector<int> d;
  switch (R.kind) {
    case Kind::A:
      for (int i = 2; i <= r + 1; ++i) d.push_back(i);
      break;
    case Kind::B:
    case Kind::C:
      for (int i = 1; i <= r; ++i) d.push_back(2 * i);
      break;
    case Kind::D:
      for (int i = 1; i < r; ++i) d.push_back(2 * i);
      d.push_back(r);
      break;
    case Kind::G2: d = {2, 6}; break;
    case Kind::F4: d = {2, 6, 8, 12}; break;
  }
  return d;
}

}  // namespace

bool poincare_check(const ParabolicSpec& P) {
  const RootSystem& R = *P.root_system;
  Poly whole{1};
  for (int d : degrees(R)) whole = poly_mul(whole, Poly(d, 1));

  // Poincaré polynomial of W_P by closure under the Levi reflections.
  std::set<IntVec> seen;
  std::vector<WeylElement> frontier{identity_element(R)};
  seen.insert(frontier[0].rho_image);
  Poly levi(1, 0);
  levi[0] = 1;
  while (!frontier.empty()) {
    std::vector<WeylElement> next;
    for (const auto& w : frontier)
      for (int i : P.levi_simple) {
        WeylElement x = times_simple(R, w, i);
        if (!seen.insert(x.rho_image).second) continue;
        if (static_cast<int>(levi.size()) <= x.length) levi.resize(x.length + 1);
        levi[x.length] += 1;
        next.push_back(std::move(x));
      }
    frontier = std::move(next);
  }

  Poly cosets(1, 0);
  for (const auto& w : minimal_coset_reps(P)) {
    if (static_cast<int>(cosets.size()) <= w.length) cosets.resize(w.length + 1);
    cosets[w.length] += 1;
  }
  return poly_mul(cosets, levi) == whole;
}

}  // namespace eigenkit
