#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "hypersimplex/error.hpp"
#include "hypersimplex/triangulation.hpp"

using namespace hypersimplex;

namespace {

// A(m, j) by the usual descent recurrence.
long long eulerian(int m, int j) {
  std::vector<std::vector<long long>> a(m + 1, std::vector<long long>(m + 2, 0));
  a[0][0] = 1;
  for (int i = 1; i <= m; ++i)
    for (int d = 0; d < i; ++d) a[i][d] = (d + 1) * a[i - 1][d] + (d > 0 ? (i - d) * a[i - 1][d - 1] : 0);
  return a[m][j];
}

Permutation digits(const std::string& s) {
  Permutation p;
  for (char c : s) p.push_back(c - '0');
  return p;
}

std::vector<std::string> vertex_strings(const std::vector<CharVec>& vs) {
  std::vector<std::string> out;
  for (const auto& v : vs) out.push_back(v.to_string());
  return out;
}

}  // namespace

TEST_CASE("circuit permutations") {
  CHECK(permutation_is_circuit(5, 2, digits("31425")));
  CHECK_FALSE(permutation_is_circuit(5, 2, digits("12345")));
  CHECK(permutation_is_circuit(9, 2, digits("456123789")));
  CHECK_THROWS_AS(permutation_is_circuit(5, 2, digits("11345")), Error);
}

TEST_CASE("circuit vertices") {
  CHECK(vertex_strings(circuit_vertices(5, 2, digits("31425"))) ==
        std::vector<std::string>{"10100", "10010", "01010", "01001", "00101"});
  const auto vs = circuit_vertices(9, 2, digits("456123789"));
  std::set<std::string> supports;
  for (const auto& v : vs) supports.insert(v.support().to_string());
  CHECK(supports.contains("{1,7}"));
  CHECK(supports.contains("{4,7}"));
  CHECK(supports.contains("{1,4}"));
  CHECK_THROWS_AS(circuit_vertices(5, 2, digits("12345")), Error);
}

TEST_CASE("enumeration counts") {
  CHECK(enumerate_triangulation(5, 2, 1).simplices.size() == 11);
  CHECK(enumerate_triangulation(5, 2, 2).simplices.size() == 1);
  CHECK(enumerate_triangulation(6, 2, 2).simplices.size() == 8);
  CHECK(enumerate_triangulation(4, 3, 1).simplices.size() == 1);
  for (int n = 3; n <= 9; ++n)
    for (int k = 1; k < n; ++k)
      CHECK(enumerate_triangulation(n, k, 1).simplices.size() == static_cast<std::size_t>(eulerian(n - 1, k - 1)));
  for (int n = 4; n <= 13; ++n)
    CHECK(enumerate_triangulation(n, 2, 1).simplices.size() == (std::size_t{1} << (n - 1)) - n);
}

TEST_CASE("dimension support rule") {
  CHECK(is_full_dimensional(9, 2, 4));
  CHECK_FALSE(is_full_dimensional(8, 2, 4));
  CHECK(is_full_dimensional(8, 2, 3));
  CHECK(is_full_dimensional(7, 3, 2));
  CHECK(is_full_dimensional(8, 3, 2));
  CHECK(is_full_dimensional(9, 3, 2));
  CHECK_FALSE(is_full_dimensional(9, 3, 3));
  try {
    enumerate_triangulation(8, 2, 4);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::unsupported_parameters);
  }
  CHECK_THROWS_AS(enumerate_triangulation(7, 5, 9), Error);
}

TEST_CASE("simplex invariants for small n") {
  for (int n = 3; n <= 8; ++n)
    for (int k = 1; k < n; ++k)
      for (int r = 1; r <= n / k; ++r) {
        if (!is_full_dimensional(n, k, r)) continue;
        const auto tri = enumerate_triangulation(n, k, r);
        CHECK(std::is_sorted(tri.simplices.begin(), tri.simplices.end(),
                             [](const Simplex& a, const Simplex& b) { return a.omega < b.omega; }));
        for (const auto& s : tri.simplices) {
          CHECK(simplex_is_unimodular(s));
          CHECK(stability_level(s) >= r);
          CHECK(s.omega.back() == n);
          for (std::size_t i = 1; i < s.vertices.size(); ++i) CHECK(lex_compare(s.vertices[i - 1], s.vertices[i]) > 0);
          for (const auto& a : s.vertices)
            for (const auto& b : s.vertices) {
              // The larger 0/1 vector is the lexicographically smaller subset and comes first.
              if (lex_compare(a, b) < 0) continue;
              CHECK(sort_pair(a.support(), b.support()).sorted);
            }
        }
        if (r > 1) {
          const auto wider = enumerate_triangulation(n, k, r - 1);
          std::set<Permutation> all;
          for (const auto& s : wider.simplices) all.insert(s.omega);
          for (const auto& s : tri.simplices) CHECK(all.contains(s.omega));
        }
      }
}

TEST_CASE("unimodular base simplex") {
  const auto tri = enumerate_triangulation(9, 2, 4);
  REQUIRE(tri.simplices.size() == 1);
  CHECK(simplex_is_unimodular(tri.simplices.front()));
  Simplex bad = tri.simplices.front();
  bad.vertices[1] = bad.vertices[0];
  CHECK_FALSE(simplex_is_unimodular(bad));
}
