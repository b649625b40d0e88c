#include "hypersimplex/hstar.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hypersimplex/error.hpp"
#include "hypersimplex/shelling.hpp"
#include "hypersimplex/triangulation.hpp"

namespace hypersimplex {

namespace {

struct MethodName {
  HStarMethod method;
  std::string_view name;
};

constexpr MethodName kMethods[] = {
    {HStarMethod::shelling, "shelling"},
    {HStarMethod::katzman, "katzman"},
    {HStarMethod::lucas_case, "lucas_case"},
    {HStarMethod::even_gorenstein, "even_gorenstein"},
    {HStarMethod::independence_formula, "independence_formula"},
    {HStarMethod::stab2_closed, "stab2_closed"},
    {HStarMethod::stab3_closed, "stab3_closed"},
};

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt b = 1;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

std::string nm(int n, int r) { return "(n=" + std::to_string(n) + ", r=" + std::to_string(r) + ")"; }

// h_i = C(n, 2i) with the low coefficients replaced.
IntPolynomial even_binomials(int n, const std::vector<BigInt>& low) {
  std::vector<BigInt> c;
  for (int i = 0; 2 * i <= n; ++i) c.push_back(i < static_cast<int>(low.size()) ? low[i] : binomial(n, 2 * i));
  return IntPolynomial(std::move(c));
}

}  // namespace

std::string_view to_string(HStarMethod m) {
  for (const auto& e : kMethods)
    if (e.method == m) return e.name;
  return "unknown";
}

HStarMethod parse_hstar_method(std::string_view name) {
  for (const auto& e : kMethods)
    if (e.name == name) return e.method;
  fail(ErrorKind::parameter, "unknown h* method '" + std::string(name) + "'");
}

const std::vector<HStarMethod>& all_hstar_methods() {
  static const std::vector<HStarMethod> all = [] {
    std::vector<HStarMethod> v;
    for (const auto& e : kMethods) v.push_back(e.method);
    return v;
  }();
  return all;
}

bool is_advisory(HStarMethod m) { return m == HStarMethod::stab3_closed; }

HStarResult hstar_via_shelling(int n, int r) {
  HStarResult res{n, 2, r, HStarMethod::shelling, {}};
  std::vector<BigInt> c(n, 0);
  for (const auto& st : shelling_order(n, r)) c[st.shelling_number] += 1;
  res.poly = IntPolynomial(std::move(c));
  return res;
}

HStarResult hstar_closed_form(int n, int r, HStarMethod method) {
  HStarResult res{n, 2, r, method, {}};
  const bool odd = n % 2 == 1;
  switch (method) {
    case HStarMethod::shelling:
      return hstar_via_shelling(n, r);
    case HStarMethod::katzman:
      require(r == 1 && n >= 3, ErrorKind::parameter, "katzman needs r = 1 and n >= 3, got " + nm(n, r));
      res.poly = even_binomials(n, {1, binomial(n, 2) - n});
      break;
    case HStarMethod::lucas_case:
      require(odd && n >= 5 && r == n / 2 - 1, ErrorKind::parameter,
              "lucas_case needs odd n >= 5 and r = floor(n/2) - 1, got " + nm(n, r));
      res.poly = lucas_poly(n);
      break;
    case HStarMethod::even_gorenstein:
      require(!odd && n >= 4 && n == 2 * r + 2, ErrorKind::parameter,
              "even_gorenstein needs n = 2r + 2 with r >= 1, got " + nm(n, r));
      res.poly = one_plus_x_pow(r + 1);
      break;
    case HStarMethod::stab2_closed:
      require(odd && r == 2 && n >= 5, ErrorKind::parameter, "stab2_closed needs odd n >= 5 and r = 2, got " + nm(n, r));
      res.poly = even_binomials(n, {1, binomial(n, 2) - 2 * n, binomial(n, 4) - n * (n - 4)});
      break;
    case HStarMethod::stab3_closed: {
      require(odd && r == 3 && n >= 7, ErrorKind::parameter, "stab3_closed needs odd n >= 7 and r = 3, got " + nm(n, r));
      const BigInt N = n;
      res.poly = even_binomials(n, {1, binomial(n, 2) - 3 * n, binomial(n, 4) - (N * (7 * N - 55) + 94) / 2,
                                    binomial(n, 6) - (N * N * N - 13 * N * N + 40 * N + 16) / 2});
      break;
    }
    case HStarMethod::independence_formula: {
      require_supported(n, 2, r);
      IntPolynomial sum;
      for (int j = r; j <= n / 2 - 1; ++j)
        for (const auto& d : inhibition_diagrams(n, j)) sum += region_polynomial(d);
      res.poly = IntPolynomial{1} + sum.shifted(1);
      break;
    }
  }
  return res;
}

HStarResult compute_hstar(int n, int r, HStarMethod method) {
  return method == HStarMethod::shelling ? hstar_via_shelling(n, r) : hstar_closed_form(n, r, method);
}

IntPolynomial hstar_interior(int n, int r) { return interior_hstar(hstar_via_shelling(n, r).poly, n - 1); }

std::string inhibition_label(const CharVec& v, int j) {
  if (const int a = adjacent_anchor(v, j)) return std::to_string(a);
  const auto s = v.support();
  std::string out;
  for (int e : s.elements()) out += (out.empty() ? "" : ",") + std::to_string(e);
  return out;
}

InhibitionDiagram inhibition_diagram_closed(int n, int ell) {
  require(n % 2 == 1 && n >= 5, ErrorKind::parameter, "closed inhibition diagrams need odd n >= 5");
  require(ell >= 1 && ell <= n, ErrorKind::parameter, "ell out of range");
  const int r = n / 2 - 1;
  // Spots along the line: (1,1), far point 0, (2,2), far point 1, ...; a
  // spot is filled when its label is below ell.
  std::vector<int> spots;
  for (int i = 1; i <= r; ++i) {
    spots.push_back(wrap(ell + i, n));
    spots.push_back(wrap(ell + i - 1 - r, n));
  }
  InhibitionDiagram d{n, r, ell, false, {}};
  int prev = -1;
  for (int label : spots) {
    if (label >= ell) {
      prev = -1;
      continue;
    }
    const int v = d.graph.num_vertices++;
    d.graph.labels.push_back(std::to_string(label));
    if (prev >= 0) d.graph.add_edge(prev, v);
    prev = v;
  }
  return d;
}

std::vector<InhibitionDiagram> inhibition_diagrams_recovered(int n, int j) {
  require(n >= 4 && j >= 1 && j <= n / 2 - 1, ErrorKind::parameter,
          "inhibition diagrams need 1 <= j <= floor(n/2) - 1, got " + nm(n, j));
  // Faces without their anchor, per ell.
  std::vector<std::set<std::vector<CharVec>>> faces(n + 1);
  for (const auto& st : shelling_order(n, j)) {
    if (st.layer != j || !st.label) continue;
    const int ell = st.label->ell;
    if (st.restriction_face.empty()) continue;  // even base simplex, the constant term
    const CharVec anchor = adjacent_vertex(n, j, ell);
    std::vector<CharVec> rest;
    bool has_anchor = false;
    for (const auto& v : st.restriction_face) {
      if (v == anchor) has_anchor = true;
      else rest.push_back(v);
    }
    require(has_anchor, ErrorKind::structural,
            "minimal new face of " + to_string(st.simplex.omega) + " misses its anchor adj(" + std::to_string(ell) + ")");
    require(faces[ell].insert(std::move(rest)).second, ErrorKind::structural,
            "two simplices of the " + std::to_string(ell) + "-region share a minimal new face");
  }

  std::vector<InhibitionDiagram> out;
  for (int ell = 1; ell <= n; ++ell) {
    std::set<CharVec, std::greater<>> ground;
    for (const auto& f : faces[ell]) ground.insert(f.begin(), f.end());
    const std::vector<CharVec> verts(ground.begin(), ground.end());
    std::map<CharVec, int> index;
    for (std::size_t i = 0; i < verts.size(); ++i) index[verts[i]] = static_cast<int>(i);

    const int m = static_cast<int>(verts.size());
    std::vector<std::vector<bool>> together(m, std::vector<bool>(m, false));
    for (const auto& f : faces[ell])
      for (const auto& a : f)
        for (const auto& b : f) together[index[a]][index[b]] = true;

    InhibitionDiagram d{n, j, ell, faces[ell].empty(), {}};
    d.graph.num_vertices = m;
    for (const auto& v : verts) d.graph.labels.push_back(inhibition_label(v, j));
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b)
        if (!together[a][b]) d.graph.add_edge(a, b);

    // Every face is independent by construction and faces are distinct, so
    // the families agree iff the counts do.
    if (d.empty_region) {
      out.push_back(std::move(d));
      continue;
    }
    const BigInt independent = independence_poly(d.graph).sum();
    require(independent == faces[ell].size(), ErrorKind::structural,
            "faces of the " + std::to_string(ell) + "-region in layer " + std::to_string(j) + " of n=" +
                std::to_string(n) + " are not a flag complex: " + std::to_string(faces[ell].size()) +
                " faces vs " + independent.str() + " independent sets");
    out.push_back(std::move(d));
  }
  return out;
}

std::vector<InhibitionDiagram> inhibition_diagrams(int n, int j) {
  if (n % 2 == 1 && n >= 5 && j == n / 2 - 1) {
    std::vector<InhibitionDiagram> out;
    for (int ell = 1; ell <= n; ++ell) out.push_back(inhibition_diagram_closed(n, ell));
    return out;
  }
  return inhibition_diagrams_recovered(n, j);
}

InhibitionDiagram inhibition_diagram(int n, int j, int ell) {
  require(ell >= 1 && ell <= n, ErrorKind::parameter, "ell out of range");
  if (n % 2 == 1 && n >= 5 && j == n / 2 - 1) return inhibition_diagram_closed(n, ell);
  return inhibition_diagrams_recovered(n, j)[ell - 1];
}

IntPolynomial region_polynomial(const InhibitionDiagram& d) {
  return d.empty_region ? IntPolynomial{} : independence_poly(d.graph);
}

bool same_labelled_graph(const SimpleGraph& a, const SimpleGraph& b) {
  if (a.num_vertices != b.num_vertices) return false;
  if (std::set<std::string>(a.labels.begin(), a.labels.end()) !=
      std::set<std::string>(b.labels.begin(), b.labels.end()))
    return false;
  auto labelled_edges = [](const SimpleGraph& g) {
    std::set<std::pair<std::string, std::string>> e;
    for (auto [u, v] : g.edges) e.insert(std::minmax(g.labels.at(u), g.labels.at(v)));
    return e;
  };
  return labelled_edges(a) == labelled_edges(b);
}

}  // namespace hypersimplex
