#include "eigenkit/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>

#include "eigenkit/errors.hpp"

namespace eigenkit {

namespace {

RatVec unit(int dim, int i, const Rational& c = 1) {
  RatVec v(dim);
  v[i] = c;
  return v;
}

RatVec eps_diff(int dim, int i, int j) {  // ε_i - ε_j
  RatVec v(dim);
  v[i] = 1;
  v[j] = -1;
  return v;
}

std::vector<RatVec> bourbaki_simple_roots(Kind kind, int r, int& dim) {
  std::vector<RatVec> s;
  switch (kind) {
    case Kind::A:
      dim = r + 1;
      for (int i = 0; i < r; ++i) s.push_back(eps_diff(dim, i, i + 1));
      break;
    case Kind::B:
      dim = r;
      for (int i = 0; i + 1 < r; ++i) s.push_back(eps_diff(dim, i, i + 1));
      s.push_back(unit(dim, r - 1));
      break;
    case Kind::C:
      dim = r;
      for (int i = 0; i + 1 < r; ++i) s.push_back(eps_diff(dim, i, i + 1));
      s.push_back(unit(dim, r - 1, 2));
      break;
    case Kind::D: {
      dim = r;
      for (int i = 0; i + 1 < r; ++i) s.push_back(eps_diff(dim, i, i + 1));
      RatVec last(dim);
      last[r - 2] = 1;
      last[r - 1] = 1;
      s.push_back(last);
      break;
    }
    case Kind::G2:
      dim = 3;
      s.push_back(eps_diff(3, 0, 1));
      s.push_back(RatVec{-2, 1, 1});
      break;
    case Kind::F4: {
      dim = 4;
      s.push_back(eps_diff(4, 1, 2));
      s.push_back(eps_diff(4, 2, 3));
      s.push_back(unit(4, 3));
      const Rational h(1, 2);
      s.push_back(RatVec{h, -h, -h, -h});
      break;
    }
  }
  return s;
}

void check_rank(Kind kind, int rank) {
  bool ok = false;
  switch (kind) {
    case Kind::A:
    case Kind::B:
    case Kind::C: ok = rank >= 1 && rank <= 9; break;
    case Kind::D: ok = rank >= 3 && rank <= 9; break;
    case Kind::G2: ok = rank == 2; break;
    case Kind::F4: ok = rank == 4; break;
  }
  if (!ok) {
    throw ConfigError("unsupported root system " + kind_name(kind) + " of rank " + std::to_string(rank));
  }
}

}  // namespace

std::string kind_name(Kind k) {
  switch (k) {
    case Kind::A: return "A";
    case Kind::B: return "B";
    case Kind::C: return "C";
    case Kind::D: return "D";
    case Kind::G2: return "G2";
    case Kind::F4: return "F4";
  }
  return "?";
}

Kind parse_kind(const std::string& text) {
  std::string t;
  for (char c : text) t.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  if (t == "A") return Kind::A;
  if (t == "B") return Kind::B;
  if (t == "C") return Kind::C;
  if (t == "D") return Kind::D;
  if (t == "G" || t == "G2") return Kind::G2;
  if (t == "F" || t == "F4") return Kind::F4;
  throw ConfigError("unknown Cartan type '" + text + "' (expected A, B, C, D, G2 or F4)");
}

std::string RootSystem::name() const {
  if (kind == Kind::G2 || kind == Kind::F4) return kind_name(kind);
  return kind_name(kind) + std::to_string(rank);
}

Rational RootSystem::pairing_eps(const RatVec& u, const RatVec& v) const {
  return form_scale * dot(u, v);
}

Rational RootSystem::pairing_weights(const RatVec& a, const RatVec& b) const {
  return dot(a, gram_weights * b);
}

Rational RootSystem::pairing_roots(const RatVec& a, const RatVec& b) const {
  return dot(a, gram_roots * b);
}

RatVec RootSystem::weight_to_eps(const RatVec& a) const {
  RatVec v(ambient_dim);
  for (int i = 0; i < rank; ++i)
    if (a[i] != 0) v = add(v, scale(fundamental_weights[i], a[i]));
  return v;
}

RatVec RootSystem::root_to_eps(const RatVec& c) const {
  RatVec v(ambient_dim);
  for (int i = 0; i < rank; ++i)
    if (c[i] != 0) v = add(v, scale(simple_roots[i], c[i]));
  return v;
}

RatVec RootSystem::eps_to_weight(const RatVec& v) const {
  RatVec a(rank);
  for (int i = 0; i < rank; ++i) a[i] = 2 * dot(v, simple_roots[i]) / dot(simple_roots[i], simple_roots[i]);
  return a;
}

RatVec RootSystem::root_to_weight(const RatVec& c) const {
  RatVec a(rank);
  for (int j = 0; j < rank; ++j)
    for (int i = 0; i < rank; ++i) a[j] += c[i] * cartan[i][j];
  return a;
}

RatVec RootSystem::weight_to_root(const RatVec& a) const {
  return to_root_coords_ * a;
}

int RootSystem::positive_root_index(const IntVec& c) const {
  auto it = root_lookup_.find(c);
  return it == root_lookup_.end() ? -1 : it->second;
}

bool RootSystem::is_positive(const RatVec& c) {
  bool nonzero = false;
  for (const auto& x : c) {
    if (x < 0) return false;
    if (x != 0) nonzero = true;
  }
  return nonzero;
}

Rational RootSystem::coroot_coefficient(int root_index, int j) const {
  const RatVec& beta = positive_roots_eps[root_index];
  // <ω_j, β^∨> = 2 <ω_j, β> / <β, β>
  return 2 * dot(fundamental_weights[j], beta) / dot(beta, beta);
}

int RootSystem::height(int root_index) const {
  int h = 0;
  for (int c : positive_roots[root_index]) h += c;
  return h;
}

RootSystemPtr build_root_system(Kind kind, int rank) {
  check_rank(kind, rank);
  auto R = std::make_shared<RootSystem>();
  R->kind = kind;
  R->rank = rank;
  R->simple_roots = bourbaki_simple_roots(kind, rank, R->ambient_dim);
  const int r = rank;

  R->cartan.assign(r, std::vector<int>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      const auto& ai = R->simple_roots[i];
      const auto& aj = R->simple_roots[j];
      R->cartan[i][j] = to_int(2 * dot(ai, aj) / dot(aj, aj));
    }

  // Reflection closure on simple-root coordinates: s_i(c) = c - <c, α_i^∨> e_i.
  std::set<IntVec> roots;
  std::deque<IntVec> queue;
  for (int i = 0; i < r; ++i) {
    IntVec e(r, 0);
    e[i] = 1;
    roots.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    IntVec c = queue.front();
    queue.pop_front();
    for (int i = 0; i < r; ++i) {
      int pair = 0;
      for (int k = 0; k < r; ++k) pair += c[k] * R->cartan[k][i];
      if (pair == 0) continue;
      IntVec d = c;
      d[i] -= pair;
      if (roots.insert(d).second) queue.push_back(d);
    }
  }
  for (const auto& c : roots) {
    bool pos = std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; });
    bool neg = std::all_of(c.begin(), c.end(), [](int x) { return x <= 0; });
    ensure(pos != neg, "root with mixed signs in closure of " + R->name());
    if (pos) R->positive_roots.push_back(c);
  }
  auto height_of = [](const IntVec& c) {
    int h = 0;
    for (int x : c) h += x;
    return h;
  };
  std::sort(R->positive_roots.begin(), R->positive_roots.end(), [&](const IntVec& a, const IntVec& b) {
    int ha = height_of(a), hb = height_of(b);
    if (ha != hb) return ha < hb;
    return a < b;
  });
  ensure(R->positive_roots.size() == expected_positive_count(kind, rank),
         "positive root count mismatch for " + R->name());
  for (std::size_t k = 0; k < R->positive_roots.size(); ++k) {
    R->root_lookup_[R->positive_roots[k]] = static_cast<int>(k);
    R->positive_roots_eps.push_back(R->root_to_eps(to_rational(R->positive_roots[k])));
  }
  R->highest_root = R->positive_roots.back();

  const RatVec theta = R->positive_roots_eps.back();
  R->form_scale = Rational(2) / dot(theta, theta);
  R->killing = RatMatrix(R->ambient_dim, R->ambient_dim);
  for (int i = 0; i < R->ambient_dim; ++i) R->killing(i, i) = R->form_scale;

  // α_i = Σ_j A_ij ω_j, hence ω = A^{-1} α.
  RatMatrix A(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) A(i, j) = R->cartan[i][j];
  RatMatrix Ainv = A.inverse();
  R->to_root_coords_ = A.transpose().inverse();
  for (int i = 0; i < r; ++i) {
    RatVec w(R->ambient_dim);
    for (int k = 0; k < r; ++k)
      if (Ainv(i, k) != 0) w = add(w, scale(R->simple_roots[k], Ainv(i, k)));
    R->fundamental_weights.push_back(w);
    R->dual_basis.push_back(scale(w, Rational(2) / dot(R->simple_roots[i], R->simple_roots[i])));
  }

  R->rho = RatVec(R->ambient_dim);
  for (const auto& b : R->positive_roots_eps) R->rho = add(R->rho, b);
  R->rho = scale(R->rho, Rational(1, 2));

  R->gram_roots = RatMatrix(r, r);
  R->gram_weights = RatMatrix(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      R->gram_roots(i, j) = R->pairing_eps(R->simple_roots[i], R->simple_roots[j]);
      R->gram_weights(i, j) = R->pairing_eps(R->fundamental_weights[i], R->fundamental_weights[j]);
    }
  return R;
}

RootSystemPtr build_root_system(const std::string& label) {
  if (label.empty()) throw ConfigError("empty group label");
  std::size_t pos = 0;
  while (pos < label.size() && std::isalpha(static_cast<unsigned char>(label[pos]))) ++pos;
  const std::string letters = label.substr(0, pos);
  const std::string digits = label.substr(pos);
  if (letters == "G" || letters == "g" || letters == "F" || letters == "f") {
    Kind k = parse_kind(letters);
    int expected = k == Kind::G2 ? 2 : 4;
    if (digits != std::to_string(expected)) throw ConfigError("unsupported group label '" + label + "'");
    return build_root_system(k, expected);
  }
  if (letters.empty() || digits.empty() ||
      !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
      digits.size() > 2) {
    throw ConfigError("cannot parse group label '" + label + "' (expected e.g. C3, G2, F4)");
  }
  return build_root_system(parse_kind(letters), std::stoi(digits));
}

std::size_t expected_positive_count(Kind kind, int r) {
  switch (kind) {
    case Kind::A: return static_cast<std::size_t>(r * (r + 1) / 2);
    case Kind::B:
    case Kind::C: return static_cast<std::size_t>(r * r);
    case Kind::D: return static_cast<std::size_t>(r * (r - 1));
    case Kind::G2: return 6;
    case Kind::F4: return 24;
  }
  return 0;
}

Rational killing_pairing(const RootSystem& R, const RatVec& a, const RatVec& b, Basis basis) {
  const std::size_t want = basis == Basis::Eps ? static_cast<std::size_t>(R.ambient_dim)
                                               : static_cast<std::size_t>(R.rank);
  if (a.size() != want || b.size() != want) {
    throw UsageError("killing_pairing: expected vectors of length " + std::to_string(want) + " for " +
                     R.name());
  }
  switch (basis) {
    case Basis::Weight: return R.pairing_weights(a, b);
    case Basis::Root: return R.pairing_roots(a, b);
    case Basis::Eps: return R.pairing_eps(a, b);
  }
  return 0;
}

}  // namespace eigenkit
