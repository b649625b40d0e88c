#pragma once

// Exact univariate and bivariate integer polynomials, the Fibonacci/Lucas
// families (F_0 = F_1 = 1, L_0 = 2, L_1 = 1, X_m = X_{m-1} + x X_{m-2}),
// D'Angelo's g_m / p_m, independence polynomials of small graphs and shape
// predicates on coefficient sequences.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace hypersimplex {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Dense, little-endian; trailing zeros trimmed, the zero polynomial is empty.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  IntPolynomial(std::initializer_list<long long> coeffs);

  static IntPolynomial monomial(const BigInt& c, int degree);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  // Coefficient of x^i, zero outside the stored range.
  BigInt operator[](int i) const;

  // Coefficients padded with zeros (or checked to fit) to the given length.
  std::vector<BigInt> padded(int length) const;
  BigInt evaluate(const BigInt& x) const;
  BigInt sum() const;
  std::string to_string() const;

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const BigInt& c, const IntPolynomial& p);
  // Multiply by x^m.
  IntPolynomial shifted(int m) const;
  IntPolynomial pow(int e) const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

IntPolynomial x_poly();                 // x
IntPolynomial one_plus_x_pow(int m);    // (1 + x)^m
IntPolynomial fibonacci_poly(int m);
IntPolynomial lucas_poly(int m);

// Sparse sum of c x^a y^b.
class BivariatePoly {
 public:
  BivariatePoly() = default;
  static BivariatePoly term(const BigInt& c, int a, int b);

  const std::map<std::pair<int, int>, BigInt>& terms() const noexcept { return terms_; }
  BigInt coeff(int a, int b) const;
  // The univariate polynomial obtained by setting y = x.
  IntPolynomial at_y_equals_x() const;
  std::string to_string() const;

  BivariatePoly& operator+=(const BivariatePoly& o);
  BivariatePoly& operator-=(const BivariatePoly& o);
  friend BivariatePoly operator+(BivariatePoly a, const BivariatePoly& b) { return a += b; }
  friend BivariatePoly operator-(BivariatePoly a, const BivariatePoly& b) { return a -= b; }
  friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b);

  friend bool operator==(const BivariatePoly&, const BivariatePoly&) = default;

 private:
  void add(std::pair<int, int> key, const BigInt& c);
  std::map<std::pair<int, int>, BigInt> terms_;
};

// g_0 = x, g_1 = x^3 + 3xy, g_m = (x^2 + 2y) g_{m-1} - y^2 g_{m-2}.
BivariatePoly dangelo_g(int m);
// p_m = g_m + y^{2m+1}.
BivariatePoly dangelo_p(int m);
// L_0 = 2, L_1 = x, L_m = x L_{m-1} + y L_{m-2}.
BivariatePoly bivariate_lucas(int m);

struct SimpleGraph {
  int num_vertices = 0;
  std::vector<std::string> labels;  // optional, empty or one per vertex
  std::vector<std::pair<int, int>> edges;  // 0-based, u < v, sorted, unique

  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;
};

SimpleGraph path_graph(int m);
SimpleGraph cycle_graph(int m);
SimpleGraph edgeless_graph(int m);
SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b);

inline constexpr int kIndependenceVertexBudget = 64;

// I(G; x) by the deletion recursion I(G) = I(G - v) + x I(G - N[v]),
// memoised on the remaining vertex set.
IntPolynomial independence_poly(const SimpleGraph& g, int vertex_budget = kIndependenceVertexBudget);

// x^{d+1} h(1/x): requires deg h <= d and h(0) = 1.
IntPolynomial interior_hstar(const IntPolynomial& h, int d);

struct ShapeReport {
  bool unimodal = false;
  bool log_concave = false;
  bool real_rooted = false;
};

bool is_unimodal(const IntPolynomial& p);
bool is_log_concave(const IntPolynomial& p);
bool is_real_rooted(const IntPolynomial& p);
ShapeReport shape_predicates(const IntPolynomial& p);

}  // namespace hypersimplex
