#pragma once

// h*-polynomials of the r-stable second hypersimplex: from the shelling, from
// the closed forms known for particular (n, r), and as sums of independence
// polynomials of inhibition diagrams.

#include <string>
#include <string_view>
#include <vector>

#include "hypersimplex/combinatorics.hpp"
#include "hypersimplex/polynomials.hpp"

namespace hypersimplex {

enum class HStarMethod {
  shelling,
  katzman,
  lucas_case,
  even_gorenstein,
  independence_formula,
  stab2_closed,
  stab3_closed,
};

std::string_view to_string(HStarMethod m);
HStarMethod parse_hstar_method(std::string_view name);
const std::vector<HStarMethod>& all_hstar_methods();

// stab3_closed is reproduced as printed and is known to disagree with the
// shelling at small n; it is never treated as ground truth.
bool is_advisory(HStarMethod m);

struct HStarResult {
  int n = 0;
  int k = 2;
  int r = 0;
  HStarMethod method = HStarMethod::shelling;
  IntPolynomial poly;
};

HStarResult hstar_via_shelling(int n, int r);
HStarResult hstar_closed_form(int n, int r, HStarMethod method);
HStarResult compute_hstar(int n, int r, HStarMethod method);

// Interior h*: x^n h*(1/x) for the (n-1)-dimensional polytope.
IntPolynomial hstar_interior(int n, int r);

// Graph on the accessible lattice points of the ell-region of layer j. Its
// independent sets, each together with adj_j(ell), are the minimal new faces
// of the layer-j simplices whose largest j-adjacent vertex is adj_j(ell).
struct InhibitionDiagram {
  int n = 0;
  int r = 0;  // the layer j
  int ell = 0;
  // No simplex of the region has a nonempty minimal new face, so it adds
  // nothing to the sum (unlike an edgeless graph on zero vertices, which adds 1).
  bool empty_region = false;
  SimpleGraph graph;
};

// I(graph), or 0 for an empty region.
IntPolynomial region_polynomial(const InhibitionDiagram& d);

// Vertex label: the anchor of a j-adjacent vertex, otherwise "a,b" for its support.
std::string inhibition_label(const CharVec& v, int j);

InhibitionDiagram inhibition_diagram(int n, int j, int ell);
// All ell = 1..n at once, recovered from one enumeration of layer j.
std::vector<InhibitionDiagram> inhibition_diagrams(int n, int j);
// The path-subgraph construction for odd n and j = floor(n/2) - 1.
InhibitionDiagram inhibition_diagram_closed(int n, int ell);
// Recovery from enumerated minimal new faces; throws a structural error if the
// faces are not the independent sets of a graph.
std::vector<InhibitionDiagram> inhibition_diagrams_recovered(int n, int j);

// Same labels and same labelled edges.
bool same_labelled_graph(const SimpleGraph& a, const SimpleGraph& b);

}  // namespace hypersimplex
