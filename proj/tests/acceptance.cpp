// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "eigenkit/verify.hpp"

using namespace eigenkit;

namespace {

using Rows = std::vector<std::array<std::string, 4>>;

// Reference coset tables for G2 in F4, entered by hand.
const Rows kTable1 = {{"e", "12121", "e", "21212"},   {"1", "2121", "2", "1212"}, {"21", "121", "12", "212"},
                      {"121", "21", "212", "12"},     {"2121", "1", "1212", "2"}, {"12121", "e", "21212", "e"}};
const Rows kTable2 = {{"e", "e", "e", "e"},
                      {"1", "43234", "2", "1"},
                      {"21", "143234", "12", "2324321"},
                      {"121", "232143234", "212", "12324321"},
                      {"2121", "1232143234", "1212", "23214321324321"},
                      {"12121", "432132343213234", "21212", "123214321324321"}};
const Rows kTable3 = {{"e", "432132343213234", "e", "123214321324321"},
                      {"43234", "1232143234", "1", "23214321324321"},
                      {"143234", "232143234", "2324321", "12324321"},
                      {"232143234", "143234", "12324321", "2324321"},
                      {"1232143234", "43234", "23214321324321", "1"},
                      {"432132343213234", "e", "123214321324321", "e"}};

// Clebsch-Gordan: V_a ⊗ V_b ⊗ V_c has an invariant iff a, b, c satisfy the triangle
// inequalities and a + b + c is even.
bool cg_invariant(int a, int b, int c) {
  return c <= a + b && a <= b + c && b <= a + c && (a + b + c) % 2 == 0;
}

struct Outcome {
  bool ok;
  std::string detail;
};

int failures = 0;

void run(int number, const std::string& title, double limit_seconds, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome out{false, ""};
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("error: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_seconds > 0 && secs > limit_seconds) {
    out.ok = false;
    out.detail += " [over the " + std::to_string(static_cast<int>(limit_seconds)) + " s budget]";
  }
  if (!out.ok) ++failures;
  std::printf("criterion %d %-22s %s  %s (%.1f s)\n", number, title.c_str(), out.ok ? "PASS" : "FAIL",
              out.detail.c_str(), secs);
  std::fflush(stdout);
}

Outcome from(const CheckResult& r) {
  std::string d = r.summary;
  for (std::size_t i = 0; i < r.failures.size() && i < 3; ++i) d += "; " + r.failures[i];
  return {r.ok, d};
}

}  // namespace

int main() {
  const std::vector<IsoCase> lifted = {{3, 2, 1}, {3, 2, 2}, {4, 3, 1}, {4, 3, 2}, {4, 3, 3}};
  CheckOptions opt;
  opt.ineq.tuples.tuple_cap = 1000000;

  run(1, "tables-g2f4", 10, [&] {
    const CheckResult r = check_tables(opt);
    const G2F4Tables t = g2f4_tables();
    const bool same = t.cells == kTable1 && t.images == kTable2 && t.f4 == kTable3;
    return Outcome{r.ok && same, std::string(same ? "all three tables match" : "tables differ from the reference") + ", " + r.summary};
  });

  run(2, "lifted-products", 300, [&] { return from(check_lifted_products(lifted, 3, opt)); });

  run(3, "bc-duality", 0, [&] { return from(check_bc_duality(3, {2, 3}, opt)); });

  run(4, "identities", 0, [&] {
    const std::vector<IsoCase> small = {{2, 1, 1}, {3, 1, 1}, {3, 2, 1}, {3, 2, 2}};
    const std::vector<IsoCase> r4 = {{4, 1, 1}, {4, 2, 1}, {4, 2, 2}, {4, 3, 1}, {4, 3, 2}, {4, 3, 3}};
    return from(check_identities(small, r4, 10000, lifted, 3, opt));
  });

  run(5, "properness", 0, [&] { return from(check_properness(lifted, 3, opt)); });

  run(6, "projection", 0, [&] { return from(check_projection({Kind::C, Kind::B}, 3, 2, 3, 3, opt)); });

  run(7, "oracle", 600, [&] {
    CheckResult r = check_oracle(6, "C2", 2, 3, opt);
    // The closed-form rule must agree with membership on the scaled tuples as well.
    const IneqSystem S = generate_inequalities(build_root_system("A1"), 3, Tier::Levi);
    int disagree = 0;
    for (int a = 0; a <= 6; ++a)
      for (int b = 0; b <= 6; ++b)
        for (int c = 0; c <= 6; ++c) {
          bool cg = false;
          for (int N = 1; N <= opt.nmax; ++N) cg = cg || cg_invariant(N * a, N * b, N * c);
          if (cg != membership({{Rational(a)}, {Rational(b)}, {Rational(c)}}, S).member) ++disagree;
        }
    if (disagree) r.fail(std::to_string(disagree) + " disagreements with Clebsch-Gordan");
    r.summary += ", Clebsch-Gordan disagreements " + std::to_string(disagree);
    return from(r);
  });

  run(8, "ring-sanity", 0, [&] {
    return from(check_ring({"C2/P1", "C2/P2", "C3/P1", "C3/P2", "C3/P3", "B2/P1", "B2/P2", "B3/P1", "B3/P2", "B3/P3",
                            "G2/P1", "G2/P2", "F4/P1", "F4/P4"},
                           200, opt));
  });

  std::printf("%d of 8 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
