#include "doctest.h"

#include "hypersimplex/combinatorics.hpp"
#include "hypersimplex/ehrhart.hpp"
#include "hypersimplex/error.hpp"
#include "hypersimplex/hstar.hpp"
#include "hypersimplex/triangulation.hpp"
#include "test_support.hpp"

using namespace hypersimplex;

namespace {

BigInt choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt c = 1;
  for (int i = 0; i < k; ++i) c = c * (n - i) / (i + 1);
  return c;
}

// Direct enumeration of integer vectors in [0,t]^n with sum tk.
std::uint64_t brute_candidates(int n, int k, int t) {
  std::uint64_t c = 0;
  std::vector<int> x(n, 0);
  while (true) {
    int s = 0;
    for (int v : x) s += v;
    if (s == t * k) ++c;
    int i = 0;
    while (i < n && x[i] == t) x[i++] = 0;
    if (i == n) break;
    ++x[i];
  }
  return c;
}

BigRational eval(const std::vector<BigRational>& p, int t) {
  BigRational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * t + *it;
  return acc;
}

}  // namespace

TEST_CASE("candidate counts") {
  for (int n = 3; n <= 6; ++n)
    for (int k = 1; k < n; ++k)
      for (int t = 0; t <= 4; ++t) CHECK(candidate_count(n, k, t) == brute_candidates(n, k, t));
}

TEST_CASE("lattice point counts") {
  for (int t = 0; t <= 5; ++t) CHECK(count_lattice_points(5, 2, 2, t) == choose(t + 4, 4));
  CHECK(count_lattice_points(5, 2, 1, 1) == 10);
  // The 2-stable pairs of [7]: C(7,2) - 7.
  CHECK(count_lattice_points(7, 2, 2, 1) == 14);
  CHECK(count_lattice_points(7, 2, 3, 1) == 7);
  // r = 1 is the whole hypersimplex: every candidate is inside.
  for (int n = 4; n <= 7; ++n)
    for (int k = 2; k <= n - 2; ++k)
      for (int t = 1; t <= 3; ++t) CHECK(count_lattice_points(n, k, 1, t) == candidate_count(n, k, t));
  CHECK_THROWS_AS(count_lattice_points(5, 2, 2, -1), Error);
  CHECK_THROWS_AS(count_lattice_points(8, 2, 4, 1), Error);
  try {
    count_lattice_points(9, 2, 1, 8, 1000);
    FAIL("expected a resource error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::resource);
  }
}

TEST_CASE("ehrhart h* examples") {
  CHECK(ehrhart_hstar(5, 2, 1).hstar == IntPolynomial{1, 5, 5});
  CHECK(ehrhart_hstar(5, 2, 2).hstar == IntPolynomial{1});
  CHECK(ehrhart_hstar(7, 2, 2).hstar == IntPolynomial{1, 7, 14, 7});
  const auto e = ehrhart_hstar(5, 2, 2);
  // C(t+4,4) = (t^4 + 10t^3 + 35t^2 + 50t + 24)/24
  const std::vector<BigRational> expect{1, BigRational(50, 24), BigRational(35, 24), BigRational(10, 24),
                                        BigRational(1, 24)};
  CHECK(e.ehrhart == expect);
}

TEST_CASE("oracle agrees with the shelling for k = 2") {
  for (int n = 4; n <= 8; ++n)
    for (int r = 1; r <= n / 2; ++r) {
      if (!is_full_dimensional(n, 2, r)) continue;
      const auto e = ehrhart_hstar(n, 2, r);
      CHECK_MESSAGE(e.hstar == hstar_via_shelling(n, r).poly, "n=", n, " r=", r);
      CHECK(e.counts[0] == 1);
      CHECK(e.counts[1] == enumerate_r_stable(n, 2, r).members.size());
      for (int t = 0; t < n; ++t) {
        CHECK(eval(e.ehrhart, t) == BigRational(e.counts[t]));
        CHECK(ehrhart_from_hstar(e.hstar, n - 1, t) == e.counts[t]);
      }
      // One dilate beyond the interpolation range.
      CHECK(eval(e.ehrhart, n) == BigRational(count_lattice_points(n, 2, r, n)));
    }
}

TEST_CASE("oracle for k = 3") {
  for (auto [n, r] : {std::pair{7, 2}, std::pair{6, 1}, std::pair{7, 1}}) {
    const auto e = ehrhart_hstar(n, 3, r);
    CHECK(e.hstar.sum() == enumerate_triangulation(n, 3, r).simplices.size());
    CHECK(e.counts[1] == enumerate_r_stable(n, 3, r).members.size());
  }
}
