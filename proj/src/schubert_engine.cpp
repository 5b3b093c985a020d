// Structure constants of H*(G/P) in the Schubert basis, computed inside H*(G/B).
//
// H*(G/P) is not generated in degree two, so the Chevalley formula alone does not determine
// the products. In H*(G/B) the divisor classes x_j generate rationally: every Schubert class
// σ^u is a polynomial f_u in the x_j, found by expanding monomials with the G/B Chevalley
// formula and solving one linear system per degree. Then σ^u σ^v is read off by expanding
// f_u f_v. For u, v in W^P the expansion only involves W^P classes (checked).

#include <algorithm>
#include <filesystem>
#include <functional>
#include <fstream>
#include <unordered_map>

#include "json.hpp"

#include "eigenkit/errors.hpp"
#include "eigenkit/schubert.hpp"

namespace eigenkit {

namespace {

constexpr std::uint64_t kPrime = 2147483647ULL;
constexpr int kCacheVersion = 1;

using Sparse = std::vector<std::pair<int, Integer>>;  // sorted by element index

std::uint64_t mod_p(const Integer& x) {
  return mpz_fdiv_ui(x.get_mpz_t(), static_cast<unsigned long>(kPrime));
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  b %= kPrime;
  while (e) {
    if (e & 1) r = r * b % kPrime;
    b = b * b % kPrime;
    e >>= 1;
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a) { return pow_mod(a, kPrime - 2); }

// Row echelon form mod p used to pick spanning monomials cheaply. Independence mod p
// implies independence over Q.
class ModEchelon {
 public:
  explicit ModEchelon(std::size_t n) : n_(n) {}
  bool insert(std::vector<std::uint64_t> v) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const std::uint64_t f = v[pivots_[r]];
      if (f == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) v[j] = (v[j] + (kPrime - f) * rows_[r][j]) % kPrime;
    }
    std::size_t p = 0;
    while (p < n_ && v[p] == 0) ++p;
    if (p == n_) return false;
    const std::uint64_t inv = inv_mod(v[p]);
    for (auto& x : v) x = x * inv % kPrime;
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }
  std::size_t rank() const { return rows_.size(); }

 private:
  std::size_t n_;
  std::vector<std::vector<std::uint64_t>> rows_;
  std::vector<std::size_t> pivots_;
};

// Exact independence test over Q, the fallback when the mod-p pass is unlucky.
class RatEchelon {
 public:
  explicit RatEchelon(std::size_t n) : n_(n) {}
  bool insert(RatVec v) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Rational f = v[pivots_[r]];
      if (f == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) v[j] -= f * rows_[r][j];
    }
    std::size_t p = 0;
    while (p < n_ && v[p] == 0) ++p;
    if (p == n_) return false;
    const Rational inv = 1 / v[p];
    for (auto& x : v) x *= inv;
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }
  std::size_t rank() const { return rows_.size(); }

 private:
  std::size_t n_;
  std::vector<RatVec> rows_;
  std::vector<std::size_t> pivots_;
};

// Solves V X = B for square invertible V (dense, exact).
std::vector<RatVec> solve_columns(std::vector<RatVec> V, std::vector<RatVec> B) {
  const std::size_t n = V.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && V[p][c] == 0) ++p;
    ensure(p < n, "singular monomial matrix");
    std::swap(V[p], V[c]);
    std::swap(B[p], B[c]);
    const Rational inv = 1 / V[c][c];
    for (auto& x : V[c]) x *= inv;
    for (auto& x : B[c]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || V[r][c] == 0) continue;
      const Rational f = V[r][c];
      for (std::size_t j = c; j < n; ++j) V[r][j] -= f * V[c][j];
      for (std::size_t j = 0; j < B[r].size(); ++j) B[r][j] -= f * B[c][j];
    }
  }
  return B;
}

}  // namespace

void FlagVariety::compute_products(const FlagBuildOptions& opt) {
  const RootSystem& R = root_system();
  const int r = R.rank;
  const int D = dim_;

  const std::vector<WeylElement> elems = elements_up_to_length(R, D);
  std::map<IntVec, int> elem_index;
  for (std::size_t i = 0; i < elems.size(); ++i) elem_index[elems[i].rho_image] = static_cast<int>(i);
  std::vector<int> basis_of_elem(elems.size(), -1);
  for (std::size_t i = 0; i < basis_.size(); ++i) basis_of_elem[elem_index.at(basis_[i].rho_image)] = static_cast<int>(i);

  // G/B Chevalley edges w -> w s_β with l(w s_β) = l(w) + 1.
  std::vector<WeylElement> refl;
  for (const auto& b : R.positive_roots) refl.push_back(root_reflection(R, b));
  std::vector<std::vector<Integer>> coroot(R.num_positive(), std::vector<Integer>(r));
  for (std::size_t b = 0; b < R.num_positive(); ++b)
    for (int j = 0; j < r; ++j) {
      const Rational c = R.coroot_coefficient(static_cast<int>(b), j);
      ensure(is_integral(c), "non-integral coroot coefficient");
      coroot[b][j] = c.get_num();
    }
  std::vector<std::vector<std::pair<int, int>>> edges(elems.size());
  for (std::size_t e = 0; e < elems.size(); ++e) {
    if (elems[e].length >= D) continue;
    for (std::size_t b = 0; b < refl.size(); ++b) {
      const WeylElement y = eigenkit::multiply(R, elems[e], refl[b]);
      if (y.length != elems[e].length + 1) continue;
      edges[e].emplace_back(elem_index.at(y.rho_image), static_cast<int>(b));
    }
  }

  // Monomials of degree <= D, graded, each degree in lexicographically decreasing exponent order.
  std::vector<IntVec> monos{IntVec(r, 0)};
  std::vector<int> mono_degree{0};
  std::vector<std::size_t> degree_start{0, 1};
  for (int d = 1; d <= D; ++d) {
    IntVec m(r, 0);
    std::function<void(int, int)> gen = [&](int pos, int left) {
      if (pos == r - 1) {
        m[pos] = left;
        monos.push_back(m);
        mono_degree.push_back(d);
        return;
      }
      for (int a = left; a >= 0; --a) {
        m[pos] = a;
        gen(pos + 1, left - a);
      }
    };
    gen(0, d);
    degree_start.push_back(monos.size());
    if (monos.size() > opt.max_monomials) {
      throw ResourceError(label() + " needs more than " + std::to_string(opt.max_monomials) +
                          " monomials in the divisor classes");
    }
  }
  const auto code = [&](const IntVec& m) {
    std::uint64_t c = 0;
    for (int j = r - 1; j >= 0; --j) c = c * static_cast<std::uint64_t>(D + 1) + static_cast<std::uint64_t>(m[j]);
    return c;
  };
  std::unordered_map<std::uint64_t, int> mono_index;
  for (std::size_t i = 0; i < monos.size(); ++i) mono_index[code(monos[i])] = static_cast<int>(i);

  // Expansion of each monomial in the G/B Schubert basis: x_j σ^w = Σ <ω_j, β^∨> σ^{w s_β}.
  std::vector<Sparse> vec(monos.size());
  vec[0] = {{0, Integer(1)}};
  for (std::size_t i = 1; i < monos.size(); ++i) {
    const IntVec& m = monos[i];
    int j = 0;
    while (m[j] == 0) ++j;
    IntVec parent = m;
    --parent[j];
    std::map<int, Integer> acc;
    for (const auto& [w, c] : vec[mono_index.at(code(parent))])
      for (const auto& [y, b] : edges[w]) {
        if (coroot[b][j] == 0) continue;
        acc[y] += c * coroot[b][j];
      }
    for (auto& [y, c] : acc)
      if (c != 0) vec[i].emplace_back(y, c);
  }

  // f_u for u in W^P: polynomial in the x_j whose expansion is exactly σ^u.
  std::vector<std::vector<std::pair<int, Rational>>> poly(basis_.size());
  for (int d = 0; d <= D; ++d) {
    std::vector<int> targets;
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (basis_[i].length == d) targets.push_back(static_cast<int>(i));
    if (targets.empty()) continue;
    std::vector<int> layer;
    for (std::size_t e = 0; e < elems.size(); ++e)
      if (elems[e].length == d) layer.push_back(static_cast<int>(e));
    const std::size_t n = layer.size();
    std::map<int, std::size_t> pos;
    for (std::size_t a = 0; a < n; ++a) pos[layer[a]] = a;

    std::vector<int> chosen;
    ModEchelon mod(n);
    for (std::size_t i = degree_start[d]; i < degree_start[d + 1] && mod.rank() < n; ++i) {
      std::vector<std::uint64_t> v(n, 0);
      for (const auto& [y, c] : vec[i]) v[pos.at(y)] = mod_p(c);
      if (mod.insert(std::move(v))) chosen.push_back(static_cast<int>(i));
    }
    if (chosen.size() < n) {
      chosen.clear();
      RatEchelon exact(n);
      for (std::size_t i = degree_start[d]; i < degree_start[d + 1] && exact.rank() < n; ++i) {
        RatVec v(n);
        for (const auto& [y, c] : vec[i]) v[pos.at(y)] = c;
        if (exact.insert(std::move(v))) chosen.push_back(static_cast<int>(i));
      }
    }
    ensure(chosen.size() == n, "divisor monomials do not span degree " + std::to_string(d) + " of H*(G/B)");

    std::vector<RatVec> V(n, RatVec(n)), B(n, RatVec(targets.size()));
    for (std::size_t c = 0; c < n; ++c)
      for (const auto& [y, x] : vec[chosen[c]]) V[pos.at(y)][c] = x;
    for (std::size_t t = 0; t < targets.size(); ++t) B[pos.at(elem_index.at(basis_[targets[t]].rho_image))][t] = 1;
    const std::vector<RatVec> X = solve_columns(std::move(V), std::move(B));
    for (std::size_t t = 0; t < targets.size(); ++t)
      for (std::size_t c = 0; c < n; ++c)
        if (X[c][t] != 0) poly[targets[t]].emplace_back(chosen[c], X[c][t]);
  }

  // Products.
  const std::size_t N = basis_.size();
  length_table_.assign(N, std::vector<std::vector<std::pair<int, Integer>>>(N));
  std::vector<std::uint64_t> mono_code(monos.size());
  for (std::size_t i = 0; i < monos.size(); ++i) mono_code[i] = code(monos[i]);
  for (std::size_t u = 0; u < N; ++u)
    for (std::size_t v = u; v < N; ++v) {
      if (basis_[u].length + basis_[v].length > D) continue;
      std::unordered_map<int, Rational> prod;
      for (const auto& [mu, cu] : poly[u])
        for (const auto& [mv, cv] : poly[v]) prod[mono_index.at(mono_code[mu] + mono_code[mv])] += cu * cv;
      std::map<int, Rational> out;
      for (const auto& [m, c] : prod) {
        if (c == 0) continue;
        for (const auto& [y, x] : vec[m]) out[y] += c * x;
      }
      auto& dst = length_table_[u][v];
      for (const auto& [y, c] : out) {
        if (c == 0) continue;
        ensure(basis_of_elem[y] >= 0, "product of " + label() + " classes leaves W^P");
        ensure(is_integral(c) && c > 0, "structure constant is not a positive integer in " + label());
        dst.emplace_back(basis_of_elem[y], c.get_num());
      }
      std::sort(dst.begin(), dst.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      if (v != u) length_table_[v][u] = dst;
    }
}

std::string FlagVariety::cache_file(const std::string& dir) const {
  std::string ex;
  for (int e : parabolic_.excluded) ex += (ex.empty() ? "" : "-") + std::to_string(e + 1);
  return (std::filesystem::path(dir) /
          ("schubert-" + root_system().name() + "-P" + ex + "-length-v" + std::to_string(kCacheVersion) + ".jsonl"))
      .string();
}

namespace {

nlohmann::json cache_header(const FlagVariety& F, const std::vector<int>& excluded) {
  nlohmann::json words = nlohmann::json::array();
  for (std::size_t i = 0; i < F.size(); ++i) words.push_back(F.word(static_cast<int>(i)));
  std::vector<int> ex;
  for (int e : excluded) ex.push_back(e + 1);
  return {{"format", "eigenkit-structure-constants"},
          {"version", kCacheVersion},
          {"kind", kind_name(F.root_system().kind)},
          {"rank", F.root_system().rank},
          {"excluded", ex},
          {"convention", "length"},
          {"basis", words}};
}

}  // namespace

bool FlagVariety::load_cache(const std::string& dir) {
  std::ifstream in(cache_file(dir));
  if (!in) return false;
  std::string line;
  if (!std::getline(in, line)) return false;
  const nlohmann::json expected = cache_header(*this, parabolic_.excluded);
  try {
    if (nlohmann::json::parse(line) != expected) return false;  // stale or foreign file
    const std::size_t N = basis_.size();
    std::vector<std::vector<std::vector<std::pair<int, Integer>>>> table(
        N, std::vector<std::vector<std::pair<int, Integer>>>(N));
    std::vector<std::vector<bool>> seen(N, std::vector<bool>(N, false));
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      const auto rec = nlohmann::json::parse(line);
      const int u = rec.at("u").get<int>(), v = rec.at("v").get<int>();
      if (u < 0 || v < 0 || u >= static_cast<int>(N) || v >= static_cast<int>(N)) return false;
      std::vector<std::pair<int, Integer>> terms;
      for (const auto& t : rec.at("terms")) {
        const int w = t.at(0).get<int>();
        if (w < 0 || w >= static_cast<int>(N)) return false;
        terms.emplace_back(w, Integer(t.at(1).get<std::string>()));
      }
      table[u][v] = terms;
      table[v][u] = terms;
      seen[u][v] = seen[v][u] = true;
    }
    for (std::size_t u = 0; u < N; ++u)
      for (std::size_t v = 0; v < N; ++v)
        if (!seen[u][v] && basis_[u].length + basis_[v].length <= dim_) return false;
    length_table_ = std::move(table);
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

void FlagVariety::save_cache(const std::string& dir) const {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  const std::string path = cache_file(dir);
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw ResourceError("cannot write cache file " + tmp);
    out << cache_header(*this, parabolic_.excluded).dump() << '\n';
    for (std::size_t u = 0; u < basis_.size(); ++u)
      for (std::size_t v = u; v < basis_.size(); ++v) {
        if (basis_[u].length + basis_[v].length > dim_) continue;
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& [w, c] : length_table_[u][v]) terms.push_back({w, c.get_str()});
        out << nlohmann::json{{"u", u}, {"v", v}, {"terms", terms}}.dump() << '\n';
      }
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw ResourceError("cannot move cache file into place: " + path);
}

}  // namespace eigenkit
