#include "hypersimplex/triangulation.hpp"

#include <algorithm>
#include <sstream>

#include "hypersimplex/error.hpp"
#include "hypersimplex/exact_linalg.hpp"

namespace hypersimplex {

bool is_permutation(const Permutation& p) {
  const int n = static_cast<int>(p.size());
  std::vector<bool> seen(n + 1, false);
  for (int v : p) {
    if (v < 1 || v > n || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

void require_permutation(const Permutation& p) {
  require(!p.empty() && is_permutation(p), ErrorKind::parameter, to_string(p) + " is not a permutation");
}

Permutation inverse(const Permutation& p) {
  Permutation q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[p[i] - 1] = static_cast<int>(i) + 1;
  return q;
}

int descent_count(const Permutation& p) {
  int d = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) d += p[i] > p[i + 1];
  return d;
}

std::string to_string(const Permutation& p) {
  std::ostringstream os;
  const bool compact = p.size() < 10;
  for (std::size_t i = 0; i < p.size(); ++i) os << (compact || i == 0 ? "" : ",") << p[i];
  return os.str();
}

bool permutation_is_circuit(int n, int k, const Permutation& omega) {
  require(static_cast<int>(omega.size()) == n, ErrorKind::parameter, "permutation length differs from n");
  require_permutation(omega);
  require(k > 0 && k < n, ErrorKind::parameter, "need 0 < k < n");
  return omega[n - 1] == n && descent_count(inverse(omega)) == k - 1;
}

std::vector<CharVec> circuit_vertices(int n, int k, const Permutation& omega) {
  require(permutation_is_circuit(n, k, omega), ErrorKind::parameter,
          to_string(omega) + " does not name a simplex of the (" + std::to_string(n) + "," +
              std::to_string(k) + ") circuit triangulation");
  const Permutation pos = inverse(omega);
  // Position p starts with a 1 iff its own move comes before the move of p-1.
  std::uint64_t bits = 0;
  for (int p = 1; p <= n; ++p)
    if (pos[p - 1] < pos[wrap(p - 1, n) - 1]) bits |= std::uint64_t{1} << (p - 1);
  std::vector<CharVec> out;
  out.reserve(n);
  out.emplace_back(n, bits);
  require(out.front().weight() == k, ErrorKind::internal_inconsistency, "initial vertex has the wrong weight");
  for (int i = 0; i + 1 < n; ++i) out.push_back(out.back().shifted(omega[i]));
  require(out.back().shifted(omega[n - 1]) == out.front(), ErrorKind::internal_inconsistency,
          "circuit does not close");
  return out;
}

Simplex make_simplex(int n, int k, const Permutation& omega) {
  return Simplex{n, k, omega, circuit_vertices(n, k, omega)};
}

namespace {

int vertex_min_distance(const CharVec& v) {
  const auto entries = v.support();
  return min_circular_distance(v.n(), entries.elements());
}

}  // namespace

int stability_level(const Simplex& s) {
  int level = s.n;
  for (const auto& v : s.vertices) level = std::min(level, vertex_min_distance(v));
  return level;
}

bool is_full_dimensional(int n, int k, int r) {
  const auto family = enumerate_r_stable(n, k, r);
  const auto& m = family.members;
  if (static_cast<int>(m.size()) < n) return false;
  IntMatrix diffs;
  const auto base = m.front().char_vec();
  for (std::size_t i = 1; i < m.size(); ++i) {
    const auto v = m[i].char_vec();
    std::vector<std::int64_t> row(n);
    for (int c = 1; c <= n; ++c) row[c - 1] = v[c] - base[c];
    diffs.push_back(std::move(row));
  }
  return integer_rank(std::move(diffs)) == n - 1;
}

void require_supported(int n, int k, int r) {
  require(n >= 2 && n <= kMaxN, ErrorKind::parameter, "n must lie in [2, " + std::to_string(kMaxN) + "]");
  require(k > 0 && k < n, ErrorKind::parameter, "need 0 < k < n");
  require(r >= 1 && r <= n / k, ErrorKind::parameter,
          "r must satisfy 1 <= r <= floor(n/k) = " + std::to_string(n / k));
  require(is_full_dimensional(n, k, r), ErrorKind::unsupported_parameters,
          "the " + std::to_string(r) + "-stable (" + std::to_string(n) + "," + std::to_string(k) +
              ")-hypersimplex is not (n-1)-dimensional");
}

Triangulation enumerate_triangulation(int n, int k, int r) {
  require_supported(n, k, r);
  Triangulation tri{n, k, r, {}};
  // Build pos = omega^{-1} with pos[n] = n, pruning once the descent count
  // passes k-1; every leaf with exactly k-1 descents is a simplex.
  const int m = n - 1;
  Permutation pos(n, 0);
  pos[n - 1] = n;
  std::uint64_t used = 0;
  std::vector<Permutation> omegas;
  auto dfs = [&](auto&& self, int depth, int descents) -> void {
    if (depth == m) {
      if (descents == k - 1) omegas.push_back(inverse(pos));
      return;
    }
    for (int v = 1; v <= m; ++v) {
      if (used >> v & 1) continue;
      const int d = descents + (depth > 0 && pos[depth - 1] > v);
      if (d > k - 1) continue;
      // Remaining positions can add at most (m - depth - 1) descents.
      if (d + (m - depth - 1) < k - 1) continue;
      used |= std::uint64_t{1} << v;
      pos[depth] = v;
      self(self, depth + 1, d);
      used &= ~(std::uint64_t{1} << v);
    }
  };
  dfs(dfs, 0, 0);
  std::sort(omegas.begin(), omegas.end());
  for (auto& omega : omegas) {
    Simplex s = make_simplex(n, k, omega);
    if (stability_level(s) >= r) tri.simplices.push_back(std::move(s));
  }
  return tri;
}

bool simplex_is_unimodular(const Simplex& s) {
  const int n = s.n;
  if (static_cast<int>(s.vertices.size()) != n) return false;
  IntMatrix m(n - 1, std::vector<std::int64_t>(n - 1));
  for (int i = 1; i < n; ++i)
    for (int c = 1; c < n; ++c) m[i - 1][c - 1] = s.vertices[i][c] - s.vertices[0][c];
  const auto det = bareiss_determinant(std::move(m));
  return det == 1 || det == -1;
}

}  // namespace hypersimplex
