#include "hypersimplex/ehrhart.hpp"

#include <algorithm>
#include <map>

#include "hypersimplex/error.hpp"
#include "hypersimplex/exact_linalg.hpp"
#include "hypersimplex/triangulation.hpp"

namespace hypersimplex {

namespace {

using Row = std::vector<std::int64_t>;

BigInt binomial(const BigInt& n, int k) {
  if (k < 0 || n < k) return 0;
  BigInt b = 1;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

std::int64_t dot(const Row& w, const std::vector<int>& p) {
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < w.size(); ++i) acc += w[i] * p[i];
  return acc;
}

// Barycentric data of every simplex plus the facets of the triangulation that
// lie in only one simplex. For a convex polytope those lie on its boundary, so
// a point strictly on the wrong side of one is outside.
class MembershipOracle {
 public:
  MembershipOracle(int n, int k, int r) {
    const auto tri = enumerate_triangulation(n, k, r);
    // Facet (sorted vertex masks) -> inequality row and number of simplices containing it.
    std::map<std::vector<std::uint64_t>, std::pair<Row, int>> facets;
    for (const auto& s : tri.simplices) {
      IntMatrix v(n, std::vector<std::int64_t>(n));
      for (int col = 0; col < n; ++col)
        for (int row = 0; row < n; ++row) v[row][col] = s.vertices[col][row + 1];
      auto inv = scaled_inverse(v);
      const std::int64_t sign = inv.denominator > 0 ? 1 : -1;
      std::vector<Row> rows(n);
      for (int i = 0; i < n; ++i) {
        rows[i] = inv.numerator[i];
        for (auto& x : rows[i]) x *= sign;
      }
      for (int i = 0; i < n; ++i) {
        std::vector<std::uint64_t> f;
        for (int j = 0; j < n; ++j)
          if (j != i) f.push_back(s.vertices[j].bits());
        std::sort(f.begin(), f.end());
        auto [it, inserted] = facets.try_emplace(std::move(f), rows[i], 0);
        ++it->second.second;
      }
      simplices_.push_back(std::move(rows));
    }
    for (auto& [f, entry] : facets) {
      require(entry.second <= 2, ErrorKind::internal_inconsistency, "a facet lies in more than two simplices");
      if (entry.second == 1) boundary_.push_back(std::move(entry.first));
    }
  }

  bool contains(const std::vector<int>& p) {
    for (std::size_t i = 0; i < boundary_.size(); ++i)
      if (dot(boundary_[i], p) < 0) {
        if (i > 0) std::swap(boundary_[i], boundary_[i / 2]);
        return false;
      }
    for (std::size_t s = 0; s < simplices_.size(); ++s) {
      bool inside = true;
      for (const auto& w : simplices_[s])
        if (dot(w, p) < 0) {
          inside = false;
          break;
        }
      if (inside) {
        if (s > 0) std::swap(simplices_[s], simplices_[0]);
        return true;
      }
    }
    fail(ErrorKind::internal_inconsistency,
         "a point satisfies every boundary facet inequality but lies in no simplex");
  }

 private:
  std::vector<std::vector<Row>> simplices_;
  std::vector<Row> boundary_;
};

std::uint64_t count_with(MembershipOracle& oracle, int n, int k, int t, std::uint64_t budget) {
  const BigInt candidates = candidate_count(n, k, t);
  require(candidates <= budget, ErrorKind::resource,
          "t=" + std::to_string(t) + " needs " + candidates.str() + " candidate points, over the budget of " +
              std::to_string(budget) + "; use a smaller t");
  std::vector<int> p(n, 0);
  std::uint64_t found = 0;
  // Fill coordinates left to right; the remaining sum must fit in the remaining slots.
  auto rec = [&](auto&& self, int i, int remaining) -> void {
    if (i == n - 1) {
      if (remaining > t) return;
      p[i] = remaining;
      if (oracle.contains(p)) ++found;
      return;
    }
    const int slots_after = n - 1 - i;
    const int lo = std::max(0, remaining - slots_after * t);
    const int hi = std::min(t, remaining);
    for (int x = lo; x <= hi; ++x) {
      p[i] = x;
      self(self, i + 1, remaining - x);
    }
  };
  rec(rec, 0, t * k);
  return found;
}

}  // namespace

BigInt candidate_count(int n, int k, int t) {
  // Inclusion-exclusion over coordinates exceeding t.
  const int total = t * k;
  BigInt acc = 0;
  for (int j = 0; j <= n && j * (t + 1) <= total; ++j) {
    const BigInt term = binomial(n, j) * binomial(total - j * (t + 1) + n - 1, n - 1);
    acc += j % 2 ? BigInt(-term) : term;
  }
  return acc;
}

std::uint64_t count_lattice_points(int n, int k, int r, int t, std::uint64_t candidate_budget) {
  require(t >= 0, ErrorKind::parameter, "dilation factor must be nonnegative");
  require_supported(n, k, r);
  if (t == 0) return 1;
  MembershipOracle oracle(n, k, r);
  return count_with(oracle, n, k, t, candidate_budget);
}

BigInt ehrhart_from_hstar(const IntPolynomial& h, int d, int t) {
  BigInt acc = 0;
  for (int i = 0; i <= h.degree(); ++i) acc += h[i] * binomial(BigInt(t + d - i), d);
  return acc;
}

EhrhartData ehrhart_hstar(int n, int k, int r, std::uint64_t candidate_budget) {
  require_supported(n, k, r);
  for (int t = 1; t < n; ++t)
    require(candidate_count(n, k, t) <= candidate_budget, ErrorKind::resource,
            "t=" + std::to_string(t) + " exceeds the candidate budget of " + std::to_string(candidate_budget));
  EhrhartData out{n, k, r, {}, {}, {}};
  MembershipOracle oracle(n, k, r);
  out.counts.push_back(1);
  for (int t = 1; t < n; ++t) out.counts.push_back(count_with(oracle, n, k, t, candidate_budget));

  // Back-substitution in the basis C(t + d - i, d), triangular since C(t + d - i, d) = 0 for i > t.
  const int d = n - 1;
  std::vector<BigInt> h(n, 0);
  for (int t = 0; t < n; ++t) {
    BigInt v = out.counts[t];
    for (int i = 0; i < t; ++i) v -= h[i] * binomial(BigInt(t + d - i), d);
    require(v >= 0, ErrorKind::internal_inconsistency,
            "negative h*_" + std::to_string(t) + " = " + v.str() + " from the lattice-point counts");
    h[t] = v;
  }
  out.hstar = IntPolynomial(h);

  // L(t) = sum_i h_i prod_{m=1-i}^{d-i} (t + m) / d!
  std::vector<BigRational> poly(n, 0);
  BigInt fact = 1;
  for (int i = 2; i <= d; ++i) fact *= i;
  for (int i = 0; i < n; ++i) {
    if (h[i] == 0) continue;
    std::vector<BigInt> prod{1};
    for (int m = 1 - i; m <= d - i; ++m) {
      std::vector<BigInt> next(prod.size() + 1, 0);
      for (std::size_t a = 0; a < prod.size(); ++a) {
        next[a] += prod[a] * m;
        next[a + 1] += prod[a];
      }
      prod = std::move(next);
    }
    for (std::size_t a = 0; a < prod.size() && a < poly.size(); ++a) poly[a] += BigRational(h[i] * prod[a], fact);
  }
  out.ehrhart = std::move(poly);
  return out;
}

}  // namespace hypersimplex
