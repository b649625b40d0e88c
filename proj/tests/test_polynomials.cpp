#include "test_support.hpp"

#include <random>

#include "hypersimplex/error.hpp"
#include "hypersimplex/polynomials.hpp"

using namespace hypersimplex;

namespace {

IntPolynomial brute_independence(const SimpleGraph& g) {
  std::vector<BigInt> counts(g.num_vertices + 1, 0);
  for (std::uint32_t m = 0; m < (1u << g.num_vertices); ++m) {
    bool ok = true;
    for (auto [u, v] : g.edges)
      if ((m >> u & 1) && (m >> v & 1)) ok = false;
    if (ok) counts[std::popcount(m)] += 1;
  }
  return IntPolynomial(counts);
}

SimpleGraph random_graph(int nv, double p, std::mt19937& rng) {
  SimpleGraph g{nv, {}, {}};
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < nv; ++u)
    for (int v = u + 1; v < nv; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

// x^m L_m(y / x^2) written out term by term.
BivariatePoly homogenized_lucas(int m) {
  const auto l = lucas_poly(m);
  BivariatePoly out;
  for (int i = 0; i <= l.degree(); ++i)
    if (l[i] != 0) out += BivariatePoly::term(l[i], m - 2 * i, i);
  return out;
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  const IntPolynomial a{1, 2};
  const IntPolynomial b{0, 0, 3};
  CHECK((a * b) == IntPolynomial{0, 0, 3, 6});
  CHECK((a - a).is_zero());
  CHECK((a + b).to_string() == "1+2x+3x^2");
  CHECK(IntPolynomial{0, -1, 0}.degree() == 1);
  CHECK(IntPolynomial{1, 1}.pow(4) == IntPolynomial{1, 4, 6, 4, 1});
  CHECK(IntPolynomial{1, 5, 5}.padded(5).size() == 5);
  CHECK_THROWS_AS((IntPolynomial{1, 5, 5}.padded(2)), Error);
  // Coefficients well past 128 bits stay exact.
  const auto big = IntPolynomial{1, 1}.pow(200);
  CHECK(big.evaluate(1) == BigInt(1) << 200);
}

TEST_CASE("Fibonacci and Lucas polynomials") {
  CHECK(fibonacci_poly(0) == IntPolynomial{1});
  CHECK(fibonacci_poly(1) == IntPolynomial{1});
  CHECK(fibonacci_poly(4) == IntPolynomial{1, 3, 1});
  CHECK(lucas_poly(0) == IntPolynomial{2});
  CHECK(lucas_poly(5) == IntPolynomial{1, 5, 5});
  CHECK(lucas_poly(9) == IntPolynomial{1, 9, 27, 30, 9});
  BigInt f0 = 1, f1 = 1;
  for (int m = 2; m <= 40; ++m) {
    const BigInt f2 = f0 + f1;
    CHECK(fibonacci_poly(m).evaluate(1) == f2);
    f0 = f1;
    f1 = f2;
  }
  for (int m = 2; m <= 30; ++m) CHECK(lucas_poly(m) == fibonacci_poly(m) + fibonacci_poly(m - 2).shifted(1));
}

TEST_CASE("independence polynomials") {
  CHECK(independence_poly(path_graph(3)) == IntPolynomial{1, 3, 1});
  CHECK(independence_poly(path_graph(3)) == fibonacci_poly(4));
  CHECK(independence_poly(edgeless_graph(6)) == one_plus_x_pow(6));
  CHECK(independence_poly(cycle_graph(5)) == IntPolynomial{1, 5, 5});
  CHECK(brute_independence(cycle_graph(5)) == IntPolynomial{1, 5, 5});
  CHECK(independence_poly(edgeless_graph(0)) == IntPolynomial{1});
  for (int m = 3; m <= 20; ++m) {
    CHECK(independence_poly(path_graph(m)) == fibonacci_poly(m + 1));
    CHECK(independence_poly(cycle_graph(m)) == fibonacci_poly(m - 1) + BigInt(2) * fibonacci_poly(m - 2).shifted(1));
    CHECK(independence_poly(cycle_graph(m)) == lucas_poly(m));
  }
  CHECK(independence_poly(path_graph(64)) == fibonacci_poly(65));
  CHECK_THROWS_AS(independence_poly(path_graph(65)), Error);
  CHECK_THROWS_AS(independence_poly(path_graph(20), 10), Error);

  std::mt19937 rng(12345);
  for (int trial = 0; trial < 60; ++trial) {
    const int nv = 1 + trial % 16;
    const auto g = random_graph(nv, 0.1 + 0.05 * (trial % 10), rng);
    CHECK(independence_poly(g) == brute_independence(g));
    const auto h = random_graph(1 + trial % 7, 0.4, rng);
    CHECK(independence_poly(disjoint_union(g, h)) == independence_poly(g) * independence_poly(h));
  }
}

TEST_CASE("D'Angelo polynomials") {
  CHECK(dangelo_p(0) == BivariatePoly::term(1, 1, 0) + BivariatePoly::term(1, 0, 1));
  CHECK(dangelo_p(1) == BivariatePoly::term(1, 3, 0) + BivariatePoly::term(3, 1, 1) + BivariatePoly::term(1, 0, 3));
  CHECK(dangelo_p(2).at_y_equals_x() == IntPolynomial{0, 0, 0, 5, 5, 2});
  for (int t = 0; t <= 8; ++t) {
    CHECK(bivariate_lucas(2 * t + 1) == dangelo_g(t));
    CHECK(bivariate_lucas(2 * t + 1) == homogenized_lucas(2 * t + 1));
  }
  for (int m = 0; m <= 12; ++m) CHECK(bivariate_lucas(m) == homogenized_lucas(m));
}

TEST_CASE("interior h* reversal") {
  CHECK(interior_hstar(IntPolynomial{1}, 0) == IntPolynomial{0, 1});
  CHECK(interior_hstar(IntPolynomial{1}, 6) == IntPolynomial::monomial(1, 7));
  CHECK(interior_hstar(IntPolynomial{1, 5, 5}, 4) == IntPolynomial{0, 0, 0, 5, 5, 1});
  CHECK(interior_hstar(IntPolynomial{1, 5, 5}, 4) + IntPolynomial::monomial(1, 5) == dangelo_p(2).at_y_equals_x());
  CHECK_THROWS_AS((interior_hstar(IntPolynomial{1, 5, 5}, 1)), Error);
  CHECK_THROWS_AS((interior_hstar(IntPolynomial{2, 5}, 3)), Error);
}

TEST_CASE("shape predicates") {
  CHECK(is_unimodal(IntPolynomial{1, 12, 38, 28, 1}));
  CHECK_FALSE(is_unimodal(IntPolynomial{1, 2, 1, 2}));
  CHECK(is_log_concave(IntPolynomial{1, 5, 5}));
  CHECK_FALSE(is_log_concave(IntPolynomial{1, 0, 1}));
  CHECK(is_log_concave(IntPolynomial{0, 0, 1, 2, 1}));
  CHECK_FALSE(is_log_concave(IntPolynomial{1, 1, 4}));
  CHECK(is_real_rooted(IntPolynomial{1, 3, 3, 1}));
  CHECK(is_real_rooted(IntPolynomial{-6, 11, -6, 1}));  // (x-1)(x-2)(x-3)
  CHECK_FALSE(is_real_rooted(IntPolynomial{1, 0, 1}));
  CHECK(is_real_rooted(IntPolynomial{0, 0, 1}));
  CHECK(is_real_rooted(IntPolynomial{7}));
  CHECK_FALSE(is_real_rooted(IntPolynomial{1, 1, 1}));
  // (x^2 + 1)^2 has repeated nonreal roots.
  CHECK_FALSE(is_real_rooted(IntPolynomial{1, 0, 2, 0, 1}));
  // Katzman vectors and Lucas polynomials: real-rooted implies log-concave implies unimodal.
  for (int m = 2; m <= 25; ++m) {
    for (const auto& p : {lucas_poly(m), fibonacci_poly(m), one_plus_x_pow(m), IntPolynomial{1, m, 1, m}}) {
      const auto s = shape_predicates(p);
      if (s.real_rooted) CHECK(s.log_concave);
      if (s.log_concave) CHECK(s.unimodal);
    }
    CHECK(is_real_rooted(lucas_poly(m)));
  }
}
