#include "hypersimplex/general_order.hpp"

#include <algorithm>

#include "hypersimplex/error.hpp"

namespace hypersimplex {

std::set<int> extended_descents(const Permutation& p) {
  require_permutation(p);
  const int n = static_cast<int>(p.size());
  std::set<int> out;
  for (int i = 1; i < n; ++i)
    if (p[i - 1] > p[i]) out.insert(i);
  if (p[n - 1] > p[0]) out.insert(n);
  return out;
}

std::set<std::pair<int, int>> r_adjacent_descents(const Permutation& p, int r) {
  require(r >= 1, ErrorKind::parameter, "r must be positive");
  const int n = static_cast<int>(p.size());
  const auto des = extended_descents(p);
  std::set<std::pair<int, int>> out;
  for (int i : des) {
    const int j = wrap(i + r, n);
    if (j != i && des.contains(j)) out.emplace(i, j);
  }
  return out;
}

CircuitTuple circuit_tuple(const Simplex& s) {
  const int n = s.n;
  require(static_cast<int>(s.omega.size()) == n && static_cast<int>(s.vertices.size()) == n, ErrorKind::parameter,
          "malformed simplex");
  CircuitTuple t{n, s.k, {}, {}};
  for (int i = 1; i <= n; ++i) {
    Permutation pi(n);
    for (int j = 1; j <= n; ++j) pi[j - 1] = s.omega[wrap(j + n - i, n) - 1];
    t.perms.push_back(inverse(pi));
    t.initial_vertices.push_back(s.vertices[(n - i) % n]);
  }
  return t;
}

std::vector<int> phi(const CircuitTuple& t, int r) {
  std::vector<int> out;
  for (const auto& p : t.perms) out.push_back(static_cast<int>(r_adjacent_descents(p, r).size()));
  return out;
}

std::vector<int> adjacent_anchors(const CharVec& v, int r) {
  std::vector<int> out;
  const int n = v.n();
  for (int a = 1; a <= n; ++a)
    if (v[a] && v[wrap(a + r, n)] && wrap(a + r, n) != a) out.push_back(a);
  return out;
}

std::strong_ordering compare_adjacent_vertices(const CharVec& a, const CharVec& b, int r) {
  const auto aa = adjacent_anchors(a, r);
  const auto bb = adjacent_anchors(b, r);
  const int ma = aa.empty() ? 0 : aa.back();
  const int mb = bb.empty() ? 0 : bb.back();
  if (ma != mb) return ma <=> mb;
  return lex_compare(a, b);
}

OrderKey order_key(const CircuitTuple& t, int r) {
  OrderKey key;
  key.phi = phi(t, r);
  for (int i = 0; i < t.n; ++i) {
    key.grade += key.phi[i];
    if (key.phi[i] == 0) continue;
    if (key.coordinate == 0 || compare_adjacent_vertices(t.initial_vertices[i], key.top, r) > 0) {
      key.coordinate = i + 1;
      key.top = t.initial_vertices[i];
    }
  }
  return key;
}

namespace {

// Entries p_{from}, ..., p_{to} with indices read cyclically; to >= from.
std::vector<int> cyclic_subword(const Permutation& p, int from, int to) {
  const int n = static_cast<int>(p.size());
  std::vector<int> out;
  for (int i = from; i <= to; ++i) out.push_back(p[wrap(i, n) - 1]);
  return out;
}

// Gaps between consecutive 1s of the initial vertex, as position ranges
// (d + 1 .. next descent); r-adjacent gaps first, each group scanned from the
// largest starting descent down.
std::vector<std::pair<int, int>> gap_ranges(const Permutation& p, int r) {
  const int n = static_cast<int>(p.size());
  const auto des = extended_descents(p);
  const auto pairs = r_adjacent_descents(p, r);
  std::set<int> starts;
  for (auto [i, j] : pairs) starts.insert(i);
  std::vector<std::pair<int, int>> adjacent, rest;
  const std::vector<int> d(des.begin(), des.end());
  for (std::size_t a = 0; a < d.size(); ++a) {
    const int next = a + 1 < d.size() ? d[a + 1] : d[0] + n;
    if (starts.contains(d[a])) adjacent.emplace_back(d[a] + 1, d[a] + r);
    else rest.emplace_back(d[a] + 1, next);
  }
  std::reverse(adjacent.begin(), adjacent.end());
  std::reverse(rest.begin(), rest.end());
  adjacent.insert(adjacent.end(), rest.begin(), rest.end());
  return adjacent;
}

std::strong_ordering compare_with_keys(const CircuitTuple& a, const OrderKey& ka, const CircuitTuple& b,
                                       const OrderKey& kb, int r, std::size_t* fallbacks) {
  if (ka.grade != kb.grade) return ka.grade <=> kb.grade;
  if (auto c = compare_adjacent_vertices(ka.top, kb.top, r); c != 0) return c;
  const Permutation& pa = a.perms[ka.coordinate - 1];
  const Permutation& pb = b.perms[kb.coordinate - 1];
  // Same initial vertex, hence the same descent set and the same gaps.
  for (auto [from, to] : gap_ranges(pa, r)) {
    const auto sa = cyclic_subword(pa, from, to);
    const auto sb = cyclic_subword(pb, from, to);
    if (auto c = colex_compare(sa, sb); c != 0) return c;
  }
  if (a.perms.back() == b.perms.back()) return std::strong_ordering::equal;
  if (fallbacks) ++*fallbacks;
  return std::lexicographical_compare_three_way(a.perms.back().begin(), a.perms.back().end(),
                                                b.perms.back().begin(), b.perms.back().end());
}

}  // namespace

std::strong_ordering general_compare(const CircuitTuple& a, const CircuitTuple& b, int r, std::size_t* fallbacks) {
  require(a.n == b.n && a.k == b.k, ErrorKind::parameter, "tuples come from different (n, k)");
  const auto ka = order_key(a, r);
  const auto kb = order_key(b, r);
  require(ka.grade > 0 && kb.grade > 0, ErrorKind::parameter, "a circuit uses no r-adjacent vertex");
  return compare_with_keys(a, ka, b, kb, r, fallbacks);
}

GeneralOrder general_order(int n, int k, int r) {
  require_supported(n, k, r);
  int r_max = r;
  while (r_max + 1 <= n / k && is_full_dimensional(n, k, r_max + 1)) ++r_max;

  auto tri = enumerate_triangulation(n, k, r);
  std::vector<std::vector<Simplex>> by_layer(r_max + 1);
  for (auto& s : tri.simplices) by_layer[std::min(stability_level(s), r_max)].push_back(std::move(s));

  GeneralOrder out{n, k, r, {}, {}, 0};
  auto sort_layer = [&](std::vector<Simplex>& layer, int j) {
    struct Item {
      CircuitTuple tuple;
      OrderKey key;
      Simplex simplex;
    };
    std::vector<Item> items;
    for (auto& s : layer) {
      auto t = circuit_tuple(s);
      auto key = order_key(t, j);
      require(key.grade > 0, ErrorKind::internal_inconsistency,
              "simplex " + to_string(s.omega) + " of layer " + std::to_string(j) + " uses no adjacent vertex");
      items.push_back({std::move(t), std::move(key), std::move(s)});
    }
    std::sort(items.begin(), items.end(), [&](const Item& x, const Item& y) {
      return compare_with_keys(x.tuple, x.key, y.tuple, y.key, j, &out.tiebreak_fallbacks) < 0;
    });
    for (auto& it : items) {
      out.simplices.push_back(std::move(it.simplex));
      out.layers.push_back(j);
    }
  };

  if (k == 2) {
    // The proven base: the single simplex for odd n, the even-n order otherwise.
    for (auto& st : shelling_order(n, r_max)) {
      out.simplices.push_back(std::move(st.simplex));
      out.layers.push_back(r_max);
    }
  } else if (by_layer[r_max].size() == 1) {
    out.simplices.push_back(std::move(by_layer[r_max].front()));
    out.layers.push_back(r_max);
  } else {
    sort_layer(by_layer[r_max], r_max);
  }
  for (int j = r_max - 1; j >= r; --j) sort_layer(by_layer[j], j);
  return out;
}

ConjectureReport check_general_conjecture(int n, int k, int r,
                                          std::optional<std::chrono::steady_clock::time_point> deadline) {
  auto order = general_order(n, k, r);
  const auto verdict = verify_shelling(order.simplices, deadline);
  ConjectureReport rep;
  rep.n = n;
  rep.k = k;
  rep.r = r;
  rep.simplices = order.simplices.size();
  rep.shelling_ok = verdict.ok && verdict.complete;
  rep.complete = verdict.complete;
  rep.checked = verdict.checked;
  rep.violation = verdict.violation;
  rep.tiebreak_fallbacks = order.tiebreak_fallbacks;
  return rep;
}

}  // namespace hypersimplex
