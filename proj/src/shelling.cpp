#include "hypersimplex/shelling.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "hypersimplex/error.hpp"

namespace hypersimplex {

std::strong_ordering colex_compare(std::span<const int> a, std::span<const int> b) {
  require(a.size() == b.size(), ErrorKind::parameter, "colex comparison of tuples of different length");
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] <=> b[i];
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------- compositions

bool composition_is_valid(int n, int r, const Composition& lambda) {
  const int m = n - r - 1;
  if (lambda.r != r || r < 1 || m < 1 || static_cast<int>(lambda.parts.size()) != m) return false;
  int prefix = 0;
  for (int i = 1; i <= m; ++i) {
    const int part = lambda.parts[i - 1];
    if (part < 0) return false;
    prefix += part;
    if (prefix > i || prefix < i + 1 + 2 * r - n) return false;
  }
  return prefix == r;
}

namespace {

void require_composition(int n, int r, const Composition& lambda) {
  if (composition_is_valid(n, r, lambda)) return;
  std::string parts;
  for (int p : lambda.parts) parts += (parts.empty() ? "" : ",") + std::to_string(p);
  fail(ErrorKind::invalid_composition, "(" + parts + ") is not a composition of " + std::to_string(r) + " into " +
                                           std::to_string(n - r - 1) + " parts within the prefix bounds");
}

void require_k2(int n, int r) {
  require(n >= 3 && n <= kMaxN, ErrorKind::parameter, "n must lie in [3, " + std::to_string(kMaxN) + "]");
  require(r >= 1 && r <= n / 2, ErrorKind::parameter, "r must satisfy 1 <= r <= floor(n/2)");
}

void sort_descending(std::vector<CharVec>& vs) {
  std::sort(vs.begin(), vs.end(), [](const CharVec& a, const CharVec& b) { return lex_compare(a, b) > 0; });
}

}  // namespace

Composition lambda_star(int n, int r) {
  require_k2(n, r);
  require(n >= 2 * r + 2, ErrorKind::unsupported_parameters, "lambda* needs n >= 2r + 2");
  Composition c{r, std::vector<int>(n - r - 1, 0)};
  for (int i = 1; i <= r; ++i) c.parts[i] = 1;
  return c;
}

// ---------------------------------------------------------------- labels

int adjacent_anchor(const CharVec& v, int r) {
  if (v.weight() != 2) return 0;
  const auto sup = v.support();
  const int a = sup[0];
  const int b = sup[1];
  if (b - a == r) return a;
  if (v.n() - (b - a) == r) return b;
  return 0;
}

CharVec adjacent_vertex(int n, int r, int ell) { return lattice_point_vertex(n, r, ell, 0, 0); }

CharVec lattice_point_vertex(int n, int r, int ell, int a, int b) {
  const int left = wrap(ell + b, n);
  const int right = wrap(ell + r + a, n);
  require(left != right, ErrorKind::parameter, "lattice point collapses both 1s onto one position");
  return CharVec(n, (std::uint64_t{1} << (left - 1)) | (std::uint64_t{1} << (right - 1)));
}

SimplexLabel label_simplex(int n, int r, const Simplex& s) {
  require_k2(n, r);
  require(s.n == n && s.k == 2, ErrorKind::parameter, "label_simplex needs a simplex of the (n,2) triangulation");
  require(stability_level(s) >= r, ErrorKind::parameter,
          "simplex " + to_string(s.omega) + " uses vertices that are not " + std::to_string(r) + "-stable");
  int ell = 0;
  int start = -1;
  int count = 0;
  for (int i = 0; i < n; ++i) {
    const int a = adjacent_anchor(s.vertices[i], r);
    if (a == 0) continue;
    ++count;
    if (a > ell) {
      ell = a;
      start = i;
    }
  }
  require(count > 0, ErrorKind::not_labelable,
          "simplex " + to_string(s.omega) + " uses no " + std::to_string(r) + "-adjacent vertex");

  int left = ell;
  int right = wrap(ell + r, n);
  std::vector<bool> is_right;
  is_right.reserve(n);
  for (int t = 0; t < n; ++t) {
    const int p = s.omega[(start + t) % n];
    if (p == right) {
      is_right.push_back(true);
      right = wrap(right + 1, n);
    } else if (p == left) {
      is_right.push_back(false);
      left = wrap(left + 1, n);
    } else {
      fail(ErrorKind::internal_inconsistency, "move does not belong to either 1");
    }
  }
  require(is_right.front() && is_right.back(), ErrorKind::internal_inconsistency,
          "circuit from the maximal adjacent vertex does not start and end with a right move");

  Composition lambda{r, std::vector<int>(n - r - 1, 0)};
  int rights = 0;
  for (bool mv : is_right) {
    if (mv) {
      ++rights;
    } else {
      ++lambda.parts[rights - 1];
    }
  }
  require(composition_is_valid(n, r, lambda), ErrorKind::internal_inconsistency, "label violates prefix bounds");
  return {ell, std::move(lambda), count};
}

Simplex simplex_from_composition(int n, int r, int ell, const Composition& lambda) {
  require_k2(n, r);
  require(ell >= 1 && ell <= n, ErrorKind::parameter, "anchor must lie in [1..n]");
  require_composition(n, r, lambda);
  int left = ell;
  int right = wrap(ell + r, n);
  std::vector<int> moves;
  moves.reserve(n);
  auto move_right = [&] {
    moves.push_back(right);
    right = wrap(right + 1, n);
  };
  move_right();
  for (int part : lambda.parts) {
    for (int j = 0; j < part; ++j) {
      moves.push_back(left);
      left = wrap(left + 1, n);
    }
    move_right();
  }
  const auto last = std::find(moves.begin(), moves.end(), n);
  std::rotate(moves.begin(), last + 1, moves.end());
  return make_simplex(n, 2, moves);
}

// ---------------------------------------------------------------- lattice paths

std::vector<std::pair<int, int>> LatticePath::points() const {
  std::vector<std::pair<int, int>> pts{{0, 0}};
  pts.reserve(steps.size() + 1);
  for (PathStep st : steps) {
    auto [a, b] = pts.back();
    pts.emplace_back(st == PathStep::E ? a + 1 : a, st == PathStep::N ? b + 1 : b);
  }
  return pts;
}

std::string LatticePath::to_string() const {
  std::string s;
  for (PathStep st : steps) s.push_back(static_cast<char>(st));
  return s;
}

LatticePath lattice_path(int n, int r, const Composition& lambda) {
  require_k2(n, r);
  require_composition(n, r, lambda);
  LatticePath path;
  path.steps.push_back(PathStep::E);
  for (int part : lambda.parts) {
    path.steps.insert(path.steps.end(), part, PathStep::N);
    path.steps.push_back(PathStep::E);
  }
  return path;
}

std::vector<CharVec> minimal_new_face(int n, int r, const SimplexLabel& label) {
  require_k2(n, r);
  require(label.ell >= 1 && label.ell <= n, ErrorKind::parameter, "anchor must lie in [1..n]");
  const auto path = lattice_path(n, r, label.lambda);
  const auto pts = path.points();
  std::vector<CharVec> face;

  if (n % 2 == 0 && n == 2 * r + 2) {
    if (label.ell == r + 1 && label.lambda == lambda_star(n, r)) return face;
    for (int j = 0; j < n; ++j)
      if (pts[j].first == pts[j].second) face.push_back(lattice_point_vertex(n, r, label.ell, pts[j].first, pts[j].second));
    sort_descending(face);
    return face;
  }

  require(2 * r + 2 <= n, ErrorKind::unsupported_parameters,
          "no new-face rule for r = " + std::to_string(r) + " at n = " + std::to_string(n) +
              " (single base simplex)");
  const auto star_pts = lattice_path(n, r, lambda_star(n, r)).points();
  const std::set<std::pair<int, int>> star(star_pts.begin(), star_pts.end());
  face.push_back(adjacent_vertex(n, r, label.ell));
  for (int j = 1; j < n; ++j) {
    const auto [a, b] = pts[j];
    const bool diagonal = a == b;
    const bool corner = path.steps[j - 1] == PathStep::E && path.steps[j] == PathStep::N && !star.contains(pts[j]);
    if (diagonal || corner) face.push_back(lattice_point_vertex(n, r, label.ell, a, b));
  }
  sort_descending(face);
  return face;
}

// ---------------------------------------------------------------- shelling order

std::vector<ShellingStep> shelling_order(int n, int r_target) {
  require_supported(n, 2, r_target);
  const int base = n % 2 ? n / 2 : n / 2 - 1;
  require(r_target <= base, ErrorKind::unsupported_parameters, "r exceeds the full-dimensional range");
  auto tri = enumerate_triangulation(n, 2, r_target);

  std::vector<std::vector<Simplex>> by_level(base + 1);
  for (auto& s : tri.simplices) by_level[std::min(stability_level(s), base)].push_back(std::move(s));

  std::vector<ShellingStep> steps;
  steps.reserve(tri.simplices.size());

  using Labelled = std::pair<SimplexLabel, Simplex>;
  auto labelled_layer = [&](int r) {
    std::vector<Labelled> layer;
    for (auto& s : by_level[r]) {
      auto lab = label_simplex(n, r, s);
      layer.emplace_back(std::move(lab), std::move(s));
    }
    return layer;
  };
  auto finish = [&](std::vector<Labelled>& layer, int r) {
    for (auto& [lab, s] : layer) {
      ShellingStep st;
      st.restriction_face = minimal_new_face(n, r, lab);
      st.shelling_number = static_cast<int>(st.restriction_face.size());
      st.label = std::move(lab);
      st.simplex = std::move(s);
      st.layer = r;
      steps.push_back(std::move(st));
    }
  };

  if (n % 2) {
    require(by_level[base].size() == 1, ErrorKind::internal_inconsistency, "odd base layer is not a single simplex");
    ShellingStep st;
    st.simplex = std::move(by_level[base].front());
    st.layer = base;
    steps.push_back(std::move(st));
  } else {
    auto layer = labelled_layer(base);
    std::sort(layer.begin(), layer.end(), [](const Labelled& x, const Labelled& y) {
      if (x.first.ell != y.first.ell) return x.first.ell < y.first.ell;
      return colex_compare(x.first.lambda.parts, y.first.lambda.parts) > 0;
    });
    finish(layer, base);
  }

  for (int r = base - 1; r >= r_target; --r) {
    auto layer = labelled_layer(r);
    std::sort(layer.begin(), layer.end(), [](const Labelled& x, const Labelled& y) {
      if (x.first.s != y.first.s) return x.first.s < y.first.s;
      if (x.first.ell != y.first.ell) return x.first.ell < y.first.ell;
      return colex_compare(x.first.lambda.parts, y.first.lambda.parts) < 0;
    });
    finish(layer, r);
  }
  return steps;
}

std::vector<Simplex> simplices_of(const std::vector<ShellingStep>& steps) {
  std::vector<Simplex> out;
  out.reserve(steps.size());
  for (const auto& st : steps) out.push_back(st.simplex);
  return out;
}

// ---------------------------------------------------------------- generic faces

namespace {

struct IdVectorHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : v) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

// Dense ids for the distinct vertices of a simplex list.
struct VertexIds {
  std::unordered_map<std::uint64_t, std::uint32_t> id;
  std::vector<std::vector<std::uint32_t>> local;  // per simplex, in vertex order

  explicit VertexIds(const std::vector<Simplex>& ordered) {
    local.reserve(ordered.size());
    for (const auto& s : ordered) {
      std::vector<std::uint32_t> ids;
      ids.reserve(s.vertices.size());
      for (const auto& v : s.vertices) {
        auto [it, inserted] = id.try_emplace(v.bits(), static_cast<std::uint32_t>(id.size()));
        ids.push_back(it->second);
      }
      local.push_back(std::move(ids));
    }
  }
  std::size_t size() const { return id.size(); }
};

void require_uniform(const std::vector<Simplex>& ordered) {
  if (ordered.empty()) return;
  const auto& first = ordered.front();
  for (const auto& s : ordered)
    require(s.n == first.n && s.vertices.size() == first.vertices.size(), ErrorKind::parameter,
            "simplices of different dimension");
}

std::vector<std::vector<CharVec>> restriction_prefix(const std::vector<Simplex>& ordered, std::size_t upto) {
  require_uniform(ordered);
  VertexIds ids(ordered);
  std::unordered_set<std::vector<std::uint32_t>, IdVectorHash> seen;
  std::vector<std::vector<CharVec>> faces;
  for (std::size_t i = 0; i < upto; ++i) {
    const auto& loc = ids.local[i];
    std::vector<CharVec> face;
    std::vector<std::vector<std::uint32_t>> facets;
    for (std::size_t u = 0; u < loc.size(); ++u) {
      std::vector<std::uint32_t> facet;
      for (std::size_t w = 0; w < loc.size(); ++w)
        if (w != u) facet.push_back(loc[w]);
      std::sort(facet.begin(), facet.end());
      if (seen.contains(facet)) face.push_back(ordered[i].vertices[u]);
      facets.push_back(std::move(facet));
    }
    for (auto& f : facets) seen.insert(std::move(f));
    sort_descending(face);
    faces.push_back(std::move(face));
  }
  return faces;
}

}  // namespace

std::vector<CharVec> restriction_face(const std::vector<Simplex>& ordered, std::size_t i) {
  require(i < ordered.size(), ErrorKind::parameter, "index beyond the ordered list");
  return std::move(restriction_prefix(ordered, i + 1).back());
}

std::vector<std::vector<CharVec>> restriction_faces(const std::vector<Simplex>& ordered) {
  return restriction_prefix(ordered, ordered.size());
}

// ---------------------------------------------------------------- verifier

ShellingVerdict verify_shelling(const std::vector<Simplex>& ordered,
                                std::optional<std::chrono::steady_clock::time_point> deadline) {
  ShellingVerdict verdict;
  verdict.count = ordered.size();
  if (ordered.empty()) return verdict;
  require_uniform(ordered);
  const int d = static_cast<int>(ordered.front().vertices.size());
  require(d <= 24, ErrorKind::resource, "face sweep over 2^" + std::to_string(d) + " subsets is beyond budget");

  VertexIds ids(ordered);
  std::vector<std::vector<std::uint32_t>> incidence(ids.size());
  std::vector<std::uint64_t> masks(ordered.size(), 0);
  std::vector<std::size_t> touched;
  const std::uint64_t full = (std::uint64_t{1} << d) - 1;
  std::vector<char> old(std::size_t{1} << d);

  for (std::size_t i = 0; i < ordered.size(); ++i) {
    if (deadline && std::chrono::steady_clock::now() > *deadline) {
      verdict.complete = false;
      return verdict;
    }
    const auto& loc = ids.local[i];
    touched.clear();
    for (int u = 0; u < d; ++u)
      for (auto j : incidence[loc[u]]) {
        if (masks[j] == 0) touched.push_back(j);
        masks[j] |= std::uint64_t{1} << u;
      }
    std::fill(old.begin(), old.end(), 0);
    if (i > 0) old[0] = 1;
    for (auto j : touched) {
      require(masks[j] != full, ErrorKind::parameter,
              "duplicate simplex at positions " + std::to_string(j) + " and " + std::to_string(i));
      old[masks[j]] = 1;
      masks[j] = 0;
    }
    // Close downward: a face is old iff it lies inside some earlier intersection.
    for (int b = 0; b < d; ++b)
      for (std::uint64_t f = 0; f <= full; ++f)
        if ((f >> b & 1) && old[f]) old[f ^ (std::uint64_t{1} << b)] = 1;

    std::uint64_t rmask = 0;
    for (int u = 0; u < d; ++u)
      if (old[full ^ (std::uint64_t{1} << u)]) rmask |= std::uint64_t{1} << u;
    std::vector<CharVec> face;
    for (int u = 0; u < d; ++u)
      if (rmask >> u & 1) face.push_back(ordered[i].vertices[u]);
    sort_descending(face);
    verdict.restriction_faces.push_back(std::move(face));

    for (std::uint64_t f = 0; f <= full; ++f) {
      const bool expect_old = (f & rmask) != rmask;
      if (static_cast<bool>(old[f]) == expect_old) continue;
      ShellingViolation v;
      v.index = i;
      v.witness_is_new = !old[f];
      for (int u = 0; u < d; ++u)
        if (f >> u & 1) v.witness_face.push_back(ordered[i].vertices[u]);
      sort_descending(v.witness_face);
      verdict.ok = false;
      verdict.violation = std::move(v);
      verdict.checked = i;
      return verdict;
    }
    for (int u = 0; u < d; ++u) incidence[loc[u]].push_back(static_cast<std::uint32_t>(i));
    verdict.checked = i + 1;
  }
  return verdict;
}

}  // namespace hypersimplex
