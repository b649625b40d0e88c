// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails or runs over its time limit. Reference values are either
// published constants or computed here independently of the library.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "hypersimplex/cli.hpp"
#include "hypersimplex/ehrhart.hpp"
#include "hypersimplex/general_order.hpp"
#include "hypersimplex/hstar.hpp"
#include "hypersimplex/shelling.hpp"
#include "hypersimplex/triangulation.hpp"

using namespace hypersimplex;
using Clock = std::chrono::steady_clock;

namespace {

using Coeffs = std::vector<BigInt>;

// Trailing zeros dropped.
Coeffs trim(Coeffs c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

Coeffs coeffs(const IntPolynomial& p) { return trim(p.coeffs()); }

BigInt binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt c = 1;
  for (int i = 0; i < k; ++i) c = c * (n - i) / (i + 1);
  return c;
}

Coeffs add(const Coeffs& a, const Coeffs& b) {
  Coeffs out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return trim(out);
}

// L_0 = 2, L_1 = 1, L_m = L_{m-1} + x L_{m-2}.
Coeffs lucas(int m) {
  Coeffs a{2}, b{1};
  if (m == 0) return a;
  for (int i = 2; i <= m; ++i) {
    Coeffs shifted{0};
    shifted.insert(shifted.end(), a.begin(), a.end());
    a = std::exchange(b, add(b, shifted));
  }
  return b;
}

// Independent sets of the n-cycle counted by size, over all 2^n subsets.
Coeffs cycle_independence(int n) {
  Coeffs c(n + 1, 0);
  for (unsigned s = 0; s < (1u << n); ++s) {
    const unsigned rot = ((s << 1) | (s >> (n - 1))) & ((1u << n) - 1);
    if ((s & rot) == 0) c[__builtin_popcount(s)] += 1;
  }
  return trim(c);
}

bool unimodal(const Coeffs& c) {
  std::size_t i = 0;
  while (i + 1 < c.size() && c[i] <= c[i + 1]) ++i;
  while (i + 1 < c.size() && c[i] >= c[i + 1]) ++i;
  return i + 1 >= c.size();
}

std::vector<int> full_rs(int n) {
  std::vector<int> out;
  for (int r = 1; r <= n / 2; ++r)
    if (is_full_dimensional(n, 2, r)) out.push_back(r);
  return out;
}

std::string show(const Coeffs& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + c[i].str();
  return s + ")";
}

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& what) {
    if (pass) detail = what;
    pass = false;
  }
};

Outcome table() {
  Outcome o;
  const std::vector<std::tuple<int, int, Coeffs>> rows{
      {7, 1, {1, 14, 35, 7}},      {9, 2, {1, 18, 81, 84, 9}}, {9, 3, {1, 9, 27, 30, 9}},
      {11, 3, {1, 22, 143, 297, 165, 11}}, {6, 2, {1, 3, 3, 1}}, {7, 2, {1, 7, 14, 7}},
      {8, 2, {1, 12, 38, 28, 1}}};
  for (const auto& [n, r, want] : rows) {
    const auto got = coeffs(hstar_via_shelling(n, r).poly);
    if (got != want) o.fail("(" + std::to_string(n) + ",2," + std::to_string(r) + ") gave " + show(got));
  }
  return o;
}

Outcome katzman() {
  Outcome o;
  for (int n = 5; n <= 12; ++n) {
    Coeffs want;
    for (int i = 0; 2 * i <= n; ++i) want.push_back(binom(n, 2 * i));
    want[1] -= n;
    const auto got = coeffs(hstar_via_shelling(n, 1).poly);
    if (got != trim(want)) o.fail("n=" + std::to_string(n) + " gave " + show(got));
  }
  return o;
}

Outcome lucas_case() {
  Outcome o;
  for (int n = 5; n <= 13; n += 2) {
    const int r = n / 2 - 1;
    const auto got = coeffs(hstar_via_shelling(n, r).poly);
    const auto formula = coeffs(compute_hstar(n, r, HStarMethod::independence_formula).poly);
    if (got != lucas(n) || got != cycle_independence(n) || got != formula)
      o.fail("n=" + std::to_string(n) + " gave " + show(got) + ", Lucas " + show(lucas(n)));
  }
  return o;
}

Outcome even_gorenstein() {
  Outcome o;
  for (int n = 4; n <= 12; n += 2) {
    const int r = n / 2 - 1;
    Coeffs want;
    for (int i = 0; i <= r + 1; ++i) want.push_back(binom(r + 1, i));
    const auto got = coeffs(hstar_via_shelling(n, r).poly);
    if (got != want) o.fail("n=" + std::to_string(n) + " gave " + show(got));
  }
  return o;
}

Outcome oracle() {
  Outcome o;
  for (int n = 3; n <= 9; ++n)
    for (int r : full_rs(n)) {
      const auto e = coeffs(ehrhart_hstar(n, 2, r).hstar);
      const auto s = coeffs(hstar_via_shelling(n, r).poly);
      if (e != s) o.fail("(" + std::to_string(n) + ",2," + std::to_string(r) + ") oracle " + show(e) + " shelling " + show(s));
    }
  return o;
}

Outcome shelling_validity() {
  Outcome o;
  auto key = [](const std::vector<CharVec>& f) {
    std::vector<std::uint64_t> k;
    for (const auto& v : f) k.push_back(v.bits());
    std::sort(k.begin(), k.end());
    return k;
  };
  for (int n = 3; n <= 11; ++n)
    for (int r : full_rs(n)) {
      const auto steps = shelling_order(n, r);
      const auto v = verify_shelling(simplices_of(steps));
      const std::string at = "(" + std::to_string(n) + ",2," + std::to_string(r) + ")";
      if (!v.ok || !v.complete) {
        o.fail(at + " not a shelling");
        continue;
      }
      for (std::size_t i = 0; i < steps.size(); ++i)
        if (key(v.restriction_faces[i]) != key(steps[i].restriction_face)) {
          o.fail(at + " restriction face of step " + std::to_string(i) + " is not the minimal new face");
          break;
        }
    }
  return o;
}

Outcome degree_leading() {
  Outcome o;
  for (int n = 4; n <= 13; ++n)
    for (int r : full_rs(n)) {
      if (r >= n / 2) continue;
      const auto c = coeffs(hstar_via_shelling(n, r).poly);
      if (static_cast<int>(c.size()) - 1 != n / 2 || c.back() != (n % 2 ? n : 1))
        o.fail("(" + std::to_string(n) + ",2," + std::to_string(r) + ") gave " + show(c));
    }
  return o;
}

Outcome interior_identity() {
  Outcome o;
  for (int n = 5; n <= 13; n += 2) {
    // Interior series from the shelling h* by reversal: x^n h*(1/x).
    const auto h = hstar_via_shelling(n, n / 2 - 1).poly;
    Coeffs interior(n + 1, 0);
    for (int i = 0; i <= h.degree(); ++i) interior[n - i] = h[i];
    interior[n] += 1;
    const auto lhs = coeffs(dangelo_p(n / 2).at_y_equals_x());
    Coeffs lib = coeffs(hstar_interior(n, n / 2 - 1));
    lib.resize(n + 1, 0);
    lib[n] += 1;
    if (lhs != trim(interior) || trim(lib) != trim(interior)) o.fail("n=" + std::to_string(n) + " gave " + show(lhs));
  }
  return o;
}

Outcome unimodality() {
  Outcome o;
  for (int n = 4; n <= 13; ++n) {
    std::vector<int> rs{n / 2 - 1};
    if (n % 2 && n >= 5) rs.push_back(2);
    for (int r : rs)
      if (r >= 1 && !unimodal(coeffs(hstar_via_shelling(n, r).poly)))
        o.fail("(" + std::to_string(n) + ",2," + std::to_string(r) + ") is not unimodal");
  }
  int scanned = 0, violations = 0;
  for (int n = 3; n <= 13; ++n)
    for (int r : full_rs(n)) {
      ++scanned;
      violations += unimodal(coeffs(hstar_via_shelling(n, r).poly)) ? 0 : 1;
    }
  if (o.pass)
    o.detail = "scan of " + std::to_string(scanned) + " instances, " + std::to_string(violations) + " violations";
  return o;
}

Outcome discrepancy_flag() {
  Outcome o;
  const auto rep = cli::run_report(9, nullptr, {}, {10});
  const auto body = cli::to_json(rep);
  bool flagged = false;
  for (const auto& d : body["discrepancies"])
    flagged = flagged || (d["method"] == "stab3_closed" && d["n"] == 9 && d["degree"] == 2 && d["closed_form"] == 43 &&
                          d["reference"] == 27);
  if (!flagged) o.fail("report mode did not flag stab3_closed at n=9");
  else o.detail = "stab3_closed(9) h2 = 43, shelling h2 = 27";
  return o;
}

Outcome conjecture_harness(Clock::time_point deadline) {
  Outcome o;
  for (int n = 3; n <= 9; ++n)
    for (int r : full_rs(n)) {
      const auto rep = check_general_conjecture(n, 2, r, deadline);
      if (!rep.shelling_ok) o.fail("(" + std::to_string(n) + ",2," + std::to_string(r) + ") not a shelling");
    }
  std::string verdicts;
  for (int n : {7, 8, 9}) {
    const auto rep = check_general_conjecture(n, 3, 2, deadline);
    if (!rep.complete) {
      o.fail("(" + std::to_string(n) + ",3,2) did not complete");
      continue;
    }
    verdicts += (verdicts.empty() ? "" : ", ") + std::string("(") + std::to_string(n) + ",3,2) " +
                (rep.shelling_ok ? "shelling" : "violation at " + std::to_string(rep.violation->index));
  }
  if (o.pass) o.detail = verdicts;
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    double limit_seconds;
    std::function<Outcome()> run;
  };
  const auto start = Clock::now();
  const std::vector<Criterion> criteria{
      {1, "h* table values", 10, table},
      {2, "r = 1 binomial values", 60, katzman},
      {3, "odd Lucas case", 60, lucas_case},
      {4, "even Gorenstein case", 60, even_gorenstein},
      {5, "lattice-point oracle agrees with the shelling, n <= 9", 600, oracle},
      {6, "shelling validity and restriction faces, n <= 11", 900, shelling_validity},
      {7, "degree and leading coefficient, n <= 13", 600, degree_leading},
      {8, "interior h* identity", 600, interior_identity},
      {9, "unimodality", 600, unimodality},
      {10, "stab3 discrepancy flagged in report mode", 600, discrepancy_flag},
      {11, "general order harness", 1200,
       [] { return conjecture_harness(Clock::now() + std::chrono::minutes(20)); }},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (o.pass && secs > c.limit_seconds) o.fail("over the " + std::to_string(c.limit_seconds) + " s limit");
    failed += o.pass ? 0 : 1;
    std::printf("%s criterion %d: %s (%.2f s)%s%s\n", o.pass ? "PASS" : "FAIL", c.id, c.name.c_str(), secs,
                o.detail.empty() ? "" : " - ", o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed in %.1f s\n", static_cast<int>(criteria.size()) - failed, criteria.size(),
              std::chrono::duration<double>(Clock::now() - start).count());
  return failed == 0 ? 0 : 1;
}
