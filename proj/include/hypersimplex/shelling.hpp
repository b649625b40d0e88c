#pragma once

// Shelling of the circuit triangulation of the r-stable second hypersimplex
// (k = 2), the composition / lattice-path labels of its simplices, and an
// order-agnostic shelling verifier that works for any k.

#include <chrono>
#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hypersimplex/combinatorics.hpp"
#include "hypersimplex/triangulation.hpp"

namespace hypersimplex {

// Rightmost differing entry decides.
std::strong_ordering colex_compare(std::span<const int> a, std::span<const int> b);

// Parts lambda_1..lambda_{n-r-1} counting left moves between consecutive
// right moves of the circuit started at adj_r(ell).
struct Composition {
  int r = 0;
  std::vector<int> parts;

  friend bool operator==(const Composition&, const Composition&) = default;
};

bool composition_is_valid(int n, int r, const Composition& lambda);
// (0, 1, ..., 1, 0, ..., 0) with r ones in parts 2..r+1.
Composition lambda_star(int n, int r);

struct SimplexLabel {
  int ell = 0;
  Composition lambda;
  int s = 0;  // number of r-adjacent vertices used

  friend bool operator==(const SimplexLabel&, const SimplexLabel&) = default;
};

// Anchor of an r-adjacent vertex {ell, ell + r}, or 0 if v is not one.
int adjacent_anchor(const CharVec& v, int r);
CharVec adjacent_vertex(int n, int r, int ell);

SimplexLabel label_simplex(int n, int r, const Simplex& s);
Simplex simplex_from_composition(int n, int r, int ell, const Composition& lambda);

enum class PathStep : char { E = 'E', N = 'N' };

struct LatticePath {
  std::vector<PathStep> steps;

  // Lattice points visited, starting at (0,0); one per step plus the origin.
  std::vector<std::pair<int, int>> points() const;
  std::string to_string() const;
};

LatticePath lattice_path(int n, int r, const Composition& lambda);

// Vertex of the circuit started at adj_r(ell) after a right moves and b left moves.
CharVec lattice_point_vertex(int n, int r, int ell, int a, int b);

// Closed-form minimal new face of the labeled simplex: the general rule for
// r < floor(n/2) - (n even), and the y = x rule for the even base n = 2r + 2.
std::vector<CharVec> minimal_new_face(int n, int r, const SimplexLabel& label);

struct ShellingStep {
  Simplex simplex;
  std::optional<SimplexLabel> label;  // empty for the single base simplex of odd n
  int layer = 0;                      // stability level of the simplex
  std::vector<CharVec> restriction_face;
  int shelling_number = 0;
};

std::vector<ShellingStep> shelling_order(int n, int r_target);
std::vector<Simplex> simplices_of(const std::vector<ShellingStep>& steps);

// Vertices v of simplex i whose opposite facet lies in an earlier simplex.
std::vector<CharVec> restriction_face(const std::vector<Simplex>& ordered, std::size_t i);
std::vector<std::vector<CharVec>> restriction_faces(const std::vector<Simplex>& ordered);

struct ShellingViolation {
  std::size_t index = 0;
  std::vector<CharVec> witness_face;
  // True when the witness is a new face missing the restriction face; false
  // when it is an already present face containing it.
  bool witness_is_new = true;
};

struct ShellingVerdict {
  bool ok = true;
  bool complete = true;  // false when a deadline stopped the sweep
  std::size_t count = 0;
  std::size_t checked = 0;
  std::optional<ShellingViolation> violation;
  std::vector<std::vector<CharVec>> restriction_faces;
};

// For every i checks that the faces of simplex i already present in earlier
// simplices are exactly those not containing its restriction face.
ShellingVerdict verify_shelling(const std::vector<Simplex>& ordered,
                                std::optional<std::chrono::steady_clock::time_point> deadline = {});

}  // namespace hypersimplex
