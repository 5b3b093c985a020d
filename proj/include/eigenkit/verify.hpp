#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eigenkit/eigencone.hpp"
#include "eigenkit/isogr.hpp"
#include "eigenkit/oracle.hpp"
#include "eigenkit/report.hpp"

namespace eigenkit {

/// Outcome of one verification driver: a verdict, a short summary, per-item lines, and
/// structured data for JSON reports.
struct CheckResult {
  std::string name;
  bool ok = true;
  std::string summary;
  std::vector<std::string> lines;
  std::vector<std::string> failures;
  Json data = Json::object();

  void fail(const std::string& what);
};

struct CheckOptions {
  IneqOptions ineq;
  std::uint64_t seed = 20240601;
  int nmax = 6;
  OracleLimits oracle;
};

/// Sp(2s) x Sp(2(r-s)) in Sp(2r) with matched parabolic k.
struct IsoCase {
  int r, s, k;
};

/// Tables of G2 in F4 and the dual commutation behind them.
CheckResult check_tables(const CheckOptions& opt = {});

/// Every Levi-movable 1·[pt] tuple over IG(k,2s) gives an ambient IG(k,2r) product that is a
/// nonzero point multiple and Levi-movable.
CheckResult check_lifted_products(const std::vector<IsoCase>& cases, int n, const CheckOptions& opt = {});

/// verify_subeigencone for one embedding case.
CheckResult check_subeigencone(EmbeddingCase c, int r, int s, int n, const CheckOptions& opt = {});

/// bc_transfer for r in 1..rmax, every k, every n in ns.
CheckResult check_bc_duality(int rmax, const std::vector<int>& ns, const CheckOptions& opt = {});

/// Element identities on every w, the two θ lemmas on every n-tuple (exhaustively for
/// `exhaustive`, `random_tuples` random tuples for `sampled`), and the zero check on the
/// Levi-movable unit point tuples of `zero_cases`.
CheckResult check_identities(const std::vector<IsoCase>& exhaustive, const std::vector<IsoCase>& sampled,
                             std::size_t random_tuples, const std::vector<IsoCase>& zero_cases, int n,
                             const CheckOptions& opt = {});

/// k - Σ|I_j^M <= r-1| = 0 on every Levi-movable unit point tuple (s = r - 1).
CheckResult check_properness(const std::vector<IsoCase>& cases, int n, const CheckOptions& opt = {});

/// verify_projection for the given kinds.
CheckResult check_projection(const std::vector<Kind>& kinds, int r, int s, int n, int grid_max,
                             const CheckOptions& opt = {});

/// A1: membership equals the saturated oracle on {0..a1_max}^3. `group`: every oracle-positive
/// tuple of {0..max}^{rank n} is a member and every strict violator is oracle-negative up to nmax.
CheckResult check_oracle(int a1_max, const std::string& group, int group_max, int n, const CheckOptions& opt = {});

/// Poincaré duality, grading, unit, associativity on random triples and θ >= 0 on every nonzero
/// point product of three classes, for each flag variety label ("C2/P1", ...).
CheckResult check_ring(const std::vector<std::string>& varieties, int triples, const CheckOptions& opt = {});

/// "G2/P1" -> (G2, 1).
std::pair<RootSystemPtr, int> parse_variety_label(const std::string& label);

}  // namespace eigenkit
