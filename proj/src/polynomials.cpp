#include "hypersimplex/polynomials.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <unordered_map>

#include "hypersimplex/error.hpp"

namespace hypersimplex {

// ---------------------------------------------------------------- IntPolynomial

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long long> coeffs) {
  for (long long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::monomial(const BigInt& c, int degree) {
  require(degree >= 0, ErrorKind::parameter, "negative monomial degree");
  std::vector<BigInt> v(degree + 1, 0);
  v[degree] = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::operator[](int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[i];
}

std::vector<BigInt> IntPolynomial::padded(int length) const {
  require(static_cast<int>(coeffs_.size()) <= length, ErrorKind::parameter,
          "polynomial of degree " + std::to_string(degree()) + " does not fit " + std::to_string(length) +
              " coefficients");
  std::vector<BigInt> out(coeffs_);
  out.resize(length, 0);
  return out;
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

BigInt IntPolynomial::sum() const { return evaluate(1); }

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    if (!first) os << (c < 0 ? "-" : "+");
    else if (c < 0) os << "-";
    const BigInt a = c < 0 ? BigInt(-c) : c;
    if (a != 1 || i == 0) os << a;
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
    first = false;
  }
  return os.str();
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPolynomial(std::move(out));
}

IntPolynomial operator*(const BigInt& c, const IntPolynomial& p) {
  std::vector<BigInt> out(p.coeffs_);
  for (auto& x : out) x *= c;
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::shifted(int m) const {
  require(m >= 0, ErrorKind::parameter, "negative shift");
  if (is_zero()) return {};
  std::vector<BigInt> out(m, 0);
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::pow(int e) const {
  require(e >= 0, ErrorKind::parameter, "negative exponent");
  IntPolynomial result{1};
  IntPolynomial base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

IntPolynomial x_poly() { return IntPolynomial{0, 1}; }

IntPolynomial one_plus_x_pow(int m) { return IntPolynomial{1, 1}.pow(m); }

namespace {

IntPolynomial three_term(int m, IntPolynomial x0, IntPolynomial x1) {
  require(m >= 0, ErrorKind::parameter, "index must be nonnegative");
  if (m == 0) return x0;
  for (int i = 2; i <= m; ++i) {
    IntPolynomial next = x1 + x0.shifted(1);
    x0 = std::move(x1);
    x1 = std::move(next);
  }
  return x1;
}

}  // namespace

IntPolynomial fibonacci_poly(int m) { return three_term(m, IntPolynomial{1}, IntPolynomial{1}); }

IntPolynomial lucas_poly(int m) { return three_term(m, IntPolynomial{2}, IntPolynomial{1}); }

// ---------------------------------------------------------------- BivariatePoly

BivariatePoly BivariatePoly::term(const BigInt& c, int a, int b) {
  require(a >= 0 && b >= 0, ErrorKind::parameter, "negative exponent");
  BivariatePoly p;
  p.add({a, b}, c);
  return p;
}

void BivariatePoly::add(std::pair<int, int> key, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt BivariatePoly::coeff(int a, int b) const {
  const auto it = terms_.find({a, b});
  return it == terms_.end() ? BigInt(0) : it->second;
}

IntPolynomial BivariatePoly::at_y_equals_x() const {
  std::vector<BigInt> out;
  for (const auto& [key, c] : terms_) {
    const int d = key.first + key.second;
    if (static_cast<int>(out.size()) <= d) out.resize(d + 1, 0);
    out[d] += c;
  }
  return IntPolynomial(std::move(out));
}

std::string BivariatePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    const auto [a, b] = key;
    if (!first) os << (c < 0 ? "-" : "+");
    else if (c < 0) os << "-";
    const BigInt m = c < 0 ? BigInt(-c) : c;
    if (m != 1 || (a == 0 && b == 0)) os << m;
    if (a >= 1) os << "x" << (a > 1 ? "^" + std::to_string(a) : "");
    if (b >= 1) os << "y" << (b > 1 ? "^" + std::to_string(b) : "");
    first = false;
  }
  return os.str();
}

BivariatePoly& BivariatePoly::operator+=(const BivariatePoly& o) {
  for (const auto& [key, c] : o.terms_) add(key, c);
  return *this;
}

BivariatePoly& BivariatePoly::operator-=(const BivariatePoly& o) {
  for (const auto& [key, c] : o.terms_) add(key, -c);
  return *this;
}

BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
  BivariatePoly out;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) out.add({ka.first + kb.first, ka.second + kb.second}, ca * cb);
  return out;
}

BivariatePoly dangelo_g(int m) {
  require(m >= 0, ErrorKind::parameter, "index must be nonnegative");
  BivariatePoly g0 = BivariatePoly::term(1, 1, 0);
  if (m == 0) return g0;
  BivariatePoly g1 = BivariatePoly::term(1, 3, 0) + BivariatePoly::term(3, 1, 1);
  const BivariatePoly mult = BivariatePoly::term(1, 2, 0) + BivariatePoly::term(2, 0, 1);
  const BivariatePoly y2 = BivariatePoly::term(1, 0, 2);
  for (int i = 2; i <= m; ++i) {
    BivariatePoly next = mult * g1 - y2 * g0;
    g0 = std::move(g1);
    g1 = std::move(next);
  }
  return g1;
}

BivariatePoly dangelo_p(int m) { return dangelo_g(m) + BivariatePoly::term(1, 0, 2 * m + 1); }

BivariatePoly bivariate_lucas(int m) {
  require(m >= 0, ErrorKind::parameter, "index must be nonnegative");
  BivariatePoly l0 = BivariatePoly::term(2, 0, 0);
  if (m == 0) return l0;
  BivariatePoly l1 = BivariatePoly::term(1, 1, 0);
  const BivariatePoly x = BivariatePoly::term(1, 1, 0);
  const BivariatePoly y = BivariatePoly::term(1, 0, 1);
  for (int i = 2; i <= m; ++i) {
    BivariatePoly next = x * l1 + y * l0;
    l0 = std::move(l1);
    l1 = std::move(next);
  }
  return l1;
}

// ---------------------------------------------------------------- graphs

void SimpleGraph::add_edge(int u, int v) {
  require(u >= 0 && v >= 0 && u < num_vertices && v < num_vertices, ErrorKind::parameter, "edge endpoint out of range");
  require(u != v, ErrorKind::parameter, "loops are not allowed");
  if (u > v) std::swap(u, v);
  const auto e = std::make_pair(u, v);
  const auto it = std::lower_bound(edges.begin(), edges.end(), e);
  if (it == edges.end() || *it != e) edges.insert(it, e);
}

bool SimpleGraph::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

SimpleGraph path_graph(int m) {
  require(m >= 0, ErrorKind::parameter, "negative vertex count");
  SimpleGraph g{m, {}, {}};
  for (int i = 0; i + 1 < m; ++i) g.add_edge(i, i + 1);
  return g;
}

SimpleGraph cycle_graph(int m) {
  require(m >= 3, ErrorKind::parameter, "a simple cycle needs at least 3 vertices");
  SimpleGraph g = path_graph(m);
  g.add_edge(0, m - 1);
  return g;
}

SimpleGraph edgeless_graph(int m) {
  require(m >= 0, ErrorKind::parameter, "negative vertex count");
  return SimpleGraph{m, {}, {}};
}

SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b) {
  SimpleGraph g{a.num_vertices + b.num_vertices, {}, a.edges};
  if (!a.labels.empty() || !b.labels.empty()) {
    g.labels = a.labels;
    g.labels.resize(a.num_vertices);
    for (int i = 0; i < b.num_vertices; ++i)
      g.labels.push_back(i < static_cast<int>(b.labels.size()) ? b.labels[i] : std::string());
  }
  for (auto [u, v] : b.edges) g.add_edge(u + a.num_vertices, v + a.num_vertices);
  return g;
}

IntPolynomial independence_poly(const SimpleGraph& g, int vertex_budget) {
  const int nv = g.num_vertices;
  require(nv <= std::min(vertex_budget, 64), ErrorKind::resource,
          "graph with " + std::to_string(nv) + " vertices exceeds the budget of " + std::to_string(vertex_budget));
  std::vector<std::uint64_t> nbr(nv, 0);
  for (auto [u, v] : g.edges) {
    nbr[u] |= std::uint64_t{1} << v;
    nbr[v] |= std::uint64_t{1} << u;
  }
  std::unordered_map<std::uint64_t, IntPolynomial> memo;
  auto rec = [&](auto&& self, std::uint64_t mask) -> IntPolynomial {
    if (mask == 0) return IntPolynomial{1};
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    // Split off the component of the lowest vertex; I is multiplicative over components.
    std::uint64_t comp = mask & (~mask + 1);
    for (std::uint64_t frontier = comp; frontier;) {
      std::uint64_t grow = 0;
      for (std::uint64_t m = frontier; m; m &= m - 1) grow |= nbr[std::countr_zero(m)];
      frontier = grow & mask & ~comp;
      comp |= frontier;
    }
    if (comp != mask) {
      IntPolynomial result = self(self, comp) * self(self, mask & ~comp);
      memo.emplace(mask, result);
      return result;
    }
    // Branch on a vertex of maximum degree.
    int best = -1;
    int best_deg = -1;
    for (std::uint64_t m = mask; m; m &= m - 1) {
      const int v = std::countr_zero(m);
      const int deg = std::popcount(nbr[v] & mask);
      if (deg > best_deg) {
        best = v;
        best_deg = deg;
      }
    }
    IntPolynomial result;
    if (best_deg == 0) {
      result = one_plus_x_pow(std::popcount(mask));
    } else {
      const std::uint64_t bit = std::uint64_t{1} << best;
      result = self(self, mask & ~bit) + self(self, mask & ~(bit | nbr[best])).shifted(1);
    }
    memo.emplace(mask, result);
    return result;
  };
  const std::uint64_t all = nv == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << nv) - 1;
  return rec(rec, all);
}

IntPolynomial interior_hstar(const IntPolynomial& h, int d) {
  require(d >= 0, ErrorKind::parameter, "dimension must be nonnegative");
  require(h.degree() <= d, ErrorKind::parameter,
          "degree " + std::to_string(h.degree()) + " exceeds dimension " + std::to_string(d));
  require(h[0] == 1, ErrorKind::parameter, "h*-polynomial must have constant term 1");
  std::vector<BigInt> out(d + 2, 0);
  for (int i = 0; i <= h.degree(); ++i) out[d + 1 - i] = h[i];
  return IntPolynomial(std::move(out));
}

// ---------------------------------------------------------------- shape

bool is_unimodal(const IntPolynomial& p) {
  const auto& c = p.coeffs();
  std::size_t i = 0;
  while (i + 1 < c.size() && c[i] <= c[i + 1]) ++i;
  while (i + 1 < c.size() && c[i] >= c[i + 1]) ++i;
  return i + 1 >= c.size();
}

bool is_log_concave(const IntPolynomial& p) {
  const auto& c = p.coeffs();
  std::size_t lo = 0;
  while (lo < c.size() && c[lo] == 0) ++lo;
  if (lo == c.size()) return true;
  for (std::size_t i = lo; i < c.size(); ++i)
    if (c[i] <= 0) return false;  // negative entry or internal zero
  for (std::size_t i = lo + 1; i + 1 < c.size(); ++i)
    if (c[i] * c[i] < c[i - 1] * c[i + 1]) return false;
  return true;
}

namespace {

using RatPoly = std::vector<BigRational>;  // little-endian, trimmed

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly rat_remainder(RatPoly a, const RatPoly& b) {
  while (a.size() >= b.size() && !a.empty()) {
    const BigRational f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

RatPoly rat_quotient(RatPoly a, const RatPoly& b) {
  RatPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  while (a.size() >= b.size() && !a.empty()) {
    const BigRational f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return q;
}

RatPoly derivative(const RatPoly& p) {
  RatPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<int>(i));
  trim(d);
  return d;
}

RatPoly rat_gcd(RatPoly a, RatPoly b) {
  while (!b.empty()) {
    RatPoly r = rat_remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

int sign_changes(const std::vector<int>& signs) {
  int changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

bool is_real_rooted(const IntPolynomial& p) {
  if (p.is_zero()) return false;
  if (p.degree() == 0) return true;
  RatPoly f;
  for (const auto& c : p.coeffs()) f.emplace_back(c);
  const RatPoly g = rat_gcd(f, derivative(f));
  const RatPoly sq = rat_quotient(f, g);
  const int deg = static_cast<int>(sq.size()) - 1;
  if (deg == 0) return true;

  std::vector<RatPoly> chain{sq, derivative(sq)};
  while (true) {
    RatPoly r = rat_remainder(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  std::vector<int> at_neg, at_pos;
  for (const auto& q : chain) {
    const int lead = q.back() > 0 ? 1 : -1;
    const int d = static_cast<int>(q.size()) - 1;
    at_pos.push_back(lead);
    at_neg.push_back(d % 2 ? -lead : lead);
  }
  const int distinct_real_roots = sign_changes(at_neg) - sign_changes(at_pos);
  return distinct_real_roots == deg;
}

ShapeReport shape_predicates(const IntPolynomial& p) {
  return {is_unimodal(p), is_log_concave(p), is_real_rooted(p)};
}

}  // namespace hypersimplex
