#include "eigenkit/oracle.hpp"

#include <algorithm>
#include <mutex>
#include <set>

#include "eigenkit/errors.hpp"
#include "eigenkit/weyl.hpp"

namespace eigenkit {

namespace {

// Killing form on weight coordinates scaled to integers.
struct IntForm {
  std::vector<std::vector<long long>> g;
  long long operator()(const IntVec& a, const IntVec& b) const {
    long long t = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) t += a[i] * g[i][j] * b[j];
    return t;
  }
};

IntForm int_form(const RootSystem& R) {
  Integer den = 1;
  for (int i = 0; i < R.rank; ++i)
    for (int j = 0; j < R.rank; ++j)
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), R.gram_weights(i, j).get_den().get_mpz_t());
  IntForm f;
  f.g.assign(R.rank, std::vector<long long>(R.rank));
  for (int i = 0; i < R.rank; ++i)
    for (int j = 0; j < R.rank; ++j) {
      const Rational x = R.gram_weights(i, j) * den;
      f.g[i][j] = to_int64(x.get_num());
    }
  return f;
}

std::vector<IntVec> positive_roots_in_weights(const RootSystem& R) {
  std::vector<IntVec> out;
  for (const auto& b : R.positive_roots) {
    const RatVec w = R.root_to_weight(to_rational(b));
    IntVec v;
    for (const auto& x : w) v.push_back(to_int(x));
    out.push_back(v);
  }
  return out;
}

void require_dominant(const RootSystem& R, const IntVec& v) {
  if (static_cast<int>(v.size()) != R.rank) {
    throw UsageError("weight has " + std::to_string(v.size()) + " coordinates, expected " + std::to_string(R.rank));
  }
  for (int x : v)
    if (x < 0) throw UsageError("highest weights must be dominant");
}

IntVec plus(const IntVec& a, const IntVec& b, int k = 1) {
  IntVec c = a;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += k * b[i];
  return c;
}

std::mutex memo_mutex;
std::map<std::pair<std::string, IntVec>, CharacterTable>& memo() {
  static std::map<std::pair<std::string, IntVec>, CharacterTable> m;
  return m;
}

}  // namespace

Integer weyl_dimension(const RootSystem& R, const IntVec& lambda) {
  Rational d = 1;
  RatVec lr(R.rank), rho(R.rank, Rational(1));
  for (int i = 0; i < R.rank; ++i) lr[i] = lambda[i] + 1;
  for (const auto& b : R.positive_roots) {
    const RatVec bw = R.root_to_weight(to_rational(b));
    d *= R.pairing_weights(lr, bw) / R.pairing_weights(rho, bw);
  }
  ensure(is_integral(d), "Weyl dimension formula gave a fraction");
  return d.get_num();
}

IntVec dominant_representative(const RootSystem& R, IntVec v, int* reflections) {
  int count = 0;
  while (true) {
    int i = 0;
    while (i < R.rank && v[i] >= 0) ++i;
    if (i == R.rank) break;
    const int c = v[i];
    for (int j = 0; j < R.rank; ++j) v[j] -= c * R.cartan[i][j];
    ++count;
  }
  if (reflections) *reflections = count;
  return v;
}

std::vector<IntVec> weyl_orbit(const RootSystem& R, const IntVec& v) {
  std::set<IntVec> seen{v};
  std::vector<IntVec> out{v};
  for (std::size_t q = 0; q < out.size(); ++q)
    for (int i = 0; i < R.rank; ++i) {
      if (out[q][i] == 0) continue;
      IntVec u = out[q];
      const int c = u[i];
      for (int j = 0; j < R.rank; ++j) u[j] -= c * R.cartan[i][j];
      if (seen.insert(u).second) out.push_back(u);
    }
  std::sort(out.begin(), out.end());
  return out;
}

IntVec dual_weight(const RootSystem& R, const IntVec& lambda) {
  const WeylElement w0 = longest_element(R);
  const RatVec img = apply_to_weight(w0, to_rational(lambda));
  IntVec out;
  for (const auto& x : img) out.push_back(-to_int(x));
  return out;
}

CharacterTable weight_multiplicities(RootSystemPtr Rp, const IntVec& lambda, const OracleLimits& lim) {
  const RootSystem& R = *Rp;
  require_dominant(R, lambda);
  const auto key = std::make_pair(R.name(), lambda);
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = memo().find(key);
    if (it != memo().end()) return it->second;
  }
  const Integer dim = weyl_dimension(R, lambda);
  if (dim > Integer(static_cast<unsigned long>(lim.dimension_cap))) {
    throw ResourceError("representation of dimension " + dim.get_str() + " exceeds the cap of " +
                        std::to_string(lim.dimension_cap));
  }
  const std::vector<IntVec> pos = positive_roots_in_weights(R);
  const IntForm form = int_form(R);

  // Dominant weights below λ, by depth.
  std::map<IntVec, int> depth{{lambda, 0}};
  std::vector<IntVec> order{lambda};
  for (std::size_t q = 0; q < order.size(); ++q)
    for (std::size_t b = 0; b < pos.size(); ++b) {
      const IntVec nu = plus(order[q], pos[b], -1);
      if (std::any_of(nu.begin(), nu.end(), [](int x) { return x < 0; })) continue;
      if (depth.count(nu)) continue;
      depth[nu] = depth[order[q]] + R.height(static_cast<int>(b));
      order.push_back(nu);
    }
  std::stable_sort(order.begin(), order.end(), [&](const IntVec& a, const IntVec& b) { return depth[a] < depth[b]; });

  const IntVec rho(R.rank, 1);
  const long top = form(plus(lambda, rho), plus(lambda, rho));
  CharacterTable table;
  table.root_system = Rp;
  table.highest = lambda;
  table.dominant[lambda] = 1;
  for (std::size_t q = 1; q < order.size(); ++q) {
    const IntVec& mu = order[q];
    Integer acc = 0;
    for (const auto& a : pos)
      for (int k = 1;; ++k) {
        const IntVec nu = plus(mu, a, k);
        const auto it = table.dominant.find(dominant_representative(R, nu));
        if (it == table.dominant.end()) {
          if (!depth.count(dominant_representative(R, nu))) break;
          continue;  // a weight of V_λ whose multiplicity is zero cannot occur
        }
        acc += it->second * static_cast<long>(form(nu, a));
      }
    const long gap = top - form(plus(mu, rho), plus(mu, rho));
    ensure(gap > 0, "Freudenthal denominator vanished");
    Integer m = 2 * acc;
    ensure(m % gap == 0, "Freudenthal recursion gave a fraction");
    m /= gap;
    if (m != 0) table.dominant[mu] = m;
  }

  Integer total = 0;
  for (const auto& [mu, m] : table.dominant) total += m * static_cast<unsigned long>(weyl_orbit(R, mu).size());
  ensure(total == dim, "weight multiplicities do not add up to the Weyl dimension");
  table.dimension = dim;
  std::lock_guard<std::mutex> lock(memo_mutex);
  memo().emplace(key, table);
  return table;
}

std::map<IntVec, Integer> tensor_decompose(RootSystemPtr Rp, const IntVec& lambda, const IntVec& mu,
                                           const OracleLimits& lim) {
  const RootSystem& R = *Rp;
  require_dominant(R, lambda);
  require_dominant(R, mu);
  IntVec big = lambda, small = mu;
  if (weyl_dimension(R, big) < weyl_dimension(R, small)) std::swap(big, small);
  const CharacterTable ch = weight_multiplicities(Rp, small, lim);
  std::map<IntVec, Integer> out;
  const IntVec rho(R.rank, 1);
  for (const auto& [dom, m] : ch.dominant)
    for (const auto& nu : weyl_orbit(R, dom)) {
      int refl = 0;
      const IntVec d = dominant_representative(R, plus(plus(big, nu), rho), &refl);
      if (std::any_of(d.begin(), d.end(), [](int x) { return x == 0; })) continue;  // on a wall
      const IntVec hw = plus(d, rho, -1);
      if (refl % 2 == 0) {
        out[hw] += m;
      } else {
        out[hw] -= m;
      }
    }
  Integer check = 0;
  for (auto it = out.begin(); it != out.end();) {
    ensure(it->second >= 0, "negative multiplicity in a tensor product");
    if (it->second == 0) {
      it = out.erase(it);
    } else {
      check += it->second * weyl_dimension(R, it->first);
      ++it;
    }
  }
  ensure(check == weyl_dimension(R, lambda) * weyl_dimension(R, mu), "tensor product dimensions do not match");
  return out;
}

Integer invariant_dim(RootSystemPtr Rp, const std::vector<IntVec>& lambdas, const OracleLimits& lim) {
  const RootSystem& R = *Rp;
  for (const auto& l : lambdas) require_dominant(R, l);
  if (lambdas.empty()) return 1;
  if (lambdas.size() == 1) {
    return std::all_of(lambdas[0].begin(), lambdas[0].end(), [](int x) { return x == 0; }) ? 1 : 0;
  }
  std::map<IntVec, Integer> cur{{lambdas[0], Integer(1)}};
  for (std::size_t i = 1; i + 1 < lambdas.size(); ++i) {
    std::map<IntVec, Integer> next;
    for (const auto& [nu, m] : cur)
      for (const auto& [hw, c] : tensor_decompose(Rp, nu, lambdas[i], lim)) next[hw] += m * c;
    cur = std::move(next);
  }
  const IntVec target = dual_weight(R, lambdas.back());
  Integer total = 0;
  for (const auto& [nu, m] : cur) {
    if (nu == target) {
      total += m;  // V_ν ⊗ V_{λ_n} contains the trivial module once iff ν = λ_n^*
    }
  }
  return total;
}

std::optional<int> saturated_search(RootSystemPtr R, const std::vector<IntVec>& lambdas, int nmax,
                                    const OracleLimits& lim) {
  for (int N = 1; N <= nmax; ++N) {
    std::vector<IntVec> scaled = lambdas;
    for (auto& l : scaled)
      for (auto& x : l) x *= N;
    if (invariant_dim(R, scaled, lim) > 0) return N;
  }
  return std::nullopt;
}

}  // namespace eigenkit
