#include "doctest.h"

#include <map>
#include <set>

#include "hypersimplex/error.hpp"
#include "hypersimplex/shelling.hpp"

using namespace hypersimplex;

namespace {

Permutation seq(std::initializer_list<int> xs) { return Permutation(xs); }

std::set<std::string> support_strings(const std::vector<CharVec>& vs) {
  std::set<std::string> out;
  for (const auto& v : vs) out.insert(v.support().to_string());
  return out;
}

std::map<int, int> shelling_multiset(const std::vector<ShellingStep>& steps) {
  std::map<int, int> m;
  for (const auto& st : steps) ++m[st.shelling_number];
  return m;
}

// Brute-force restriction face: vertices whose opposite facet is a subset of
// some earlier simplex, via plain set inclusion.
std::vector<std::set<std::uint64_t>> brute_restriction_faces(const std::vector<Simplex>& ordered) {
  std::vector<std::set<std::uint64_t>> out;
  for (std::size_t i = 0; i < ordered.size(); ++i) {
    std::set<std::uint64_t> face;
    for (const auto& v : ordered[i].vertices) {
      for (std::size_t j = 0; j < i; ++j) {
        std::set<std::uint64_t> other;
        for (const auto& w : ordered[j].vertices) other.insert(w.bits());
        bool inside = true;
        for (const auto& w : ordered[i].vertices)
          if (w != v && !other.contains(w.bits())) inside = false;
        if (inside) {
          face.insert(v.bits());
          break;
        }
      }
    }
    out.push_back(face);
  }
  return out;
}

std::set<std::uint64_t> bit_set(const std::vector<CharVec>& vs) {
  std::set<std::uint64_t> out;
  for (const auto& v : vs) out.insert(v.bits());
  return out;
}

}  // namespace

TEST_CASE("colex comparison") {
  CHECK(colex_compare(std::vector<int>{1, 0, 0}, std::vector<int>{0, 1, 0}) < 0);
  CHECK(colex_compare(std::vector<int>{0, 0, 1}, std::vector<int>{5, 5, 0}) > 0);
  CHECK(colex_compare(std::vector<int>{2, 3}, std::vector<int>{2, 3}) == 0);
}

TEST_CASE("labels of the worked circuits") {
  const auto s15 = make_simplex(15, 2, seq({5, 6, 7, 1, 8, 9, 2, 10, 11, 12, 13, 3, 14, 4, 15}));
  const auto l15 = label_simplex(15, 4, s15);
  CHECK(l15.ell == 15);
  CHECK(l15.lambda.parts == std::vector<int>{1, 0, 0, 1, 0, 1, 0, 0, 0, 1});
  CHECK(l15.s == 3);
  CHECK(simplex_from_composition(15, 4, 15, l15.lambda).omega == s15.omega);

  const auto s9 = make_simplex(9, 2, seq({4, 5, 6, 1, 2, 3, 7, 8, 9}));
  const auto l9 = label_simplex(9, 3, s9);
  CHECK(l9.ell == 7);
  CHECK(l9.lambda.parts == std::vector<int>{0, 0, 3, 0, 0});
  CHECK(l9.s == 3);

  CHECK(lattice_path(15, 4, l15.lambda).to_string() == "ENEEENEENEEEEN" "E");
  const auto star = lambda_star(15, 4);
  CHECK(star.parts == std::vector<int>{0, 1, 1, 1, 1, 0, 0, 0, 0, 0});
  CHECK(lattice_path(15, 4, star).points().back() == std::pair<int, int>{11, 4});
}

TEST_CASE("label errors") {
  const auto base = enumerate_triangulation(9, 2, 4).simplices.front();
  try {
    label_simplex(9, 3, base);
    FAIL("expected not_labelable");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::not_labelable);
  }
  try {
    simplex_from_composition(9, 3, 1, Composition{3, {2, 0, 0, 1, 0}});
    FAIL("expected invalid_composition");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::invalid_composition);
  }
}

TEST_CASE("label round trip") {
  for (int n = 5; n <= 11; ++n)
    for (int r = 1; 2 * r + 2 <= n; ++r) {
      const auto tri = enumerate_triangulation(n, 2, r);
      for (const auto& s : tri.simplices) {
        if (stability_level(s) != r) continue;
        const auto lab = label_simplex(n, r, s);
        CHECK(simplex_from_composition(n, r, lab.ell, lab.lambda).omega == s.omega);
      }
      if (n == 2 * r + 2) continue;
      for (int ell = 1; ell <= n; ++ell) {
        const auto s = simplex_from_composition(n, r, ell, lambda_star(n, r));
        int adj = 0;
        for (const auto& v : s.vertices) adj += adjacent_anchor(v, r) != 0;
        CHECK(adj == 1);
        CHECK(label_simplex(n, r, s) == SimplexLabel{ell, lambda_star(n, r), 1});
        CHECK(minimal_new_face(n, r, SimplexLabel{ell, lambda_star(n, r), 1}).size() == 1);
      }
    }
}

TEST_CASE("minimal new face of the n = 15 example") {
  const SimplexLabel lab{15, Composition{4, {1, 0, 0, 1, 0, 1, 0, 0, 0, 1}}, 3};
  CHECK(support_strings(minimal_new_face(15, 4, lab)) ==
        std::set<std::string>{"{4,15}", "{1,5}", "{1,8}", "{2,10}", "{3,14}"});
  CHECK_THROWS_AS(minimal_new_face(9, 4, SimplexLabel{1, Composition{4, {1, 1, 1, 1}}, 1}), Error);
}

TEST_CASE("shelling orders on small cases") {
  const auto s51 = shelling_order(5, 1);
  CHECK(s51.size() == 11);
  CHECK(shelling_multiset(s51) == std::map<int, int>{{0, 1}, {1, 5}, {2, 5}});
  const auto s62 = shelling_order(6, 2);
  CHECK(s62.size() == 8);
  CHECK(shelling_multiset(s62) == std::map<int, int>{{0, 1}, {1, 3}, {2, 3}, {3, 1}});
  CHECK(s51.front().restriction_face.empty());
  CHECK(s62.front().restriction_face.empty());
  CHECK_THROWS_AS(shelling_order(8, 4), Error);
}

TEST_CASE("shelling order matches the generic restriction faces") {
  for (int n = 3; n <= 10; ++n) {
    const int base = n % 2 ? n / 2 : n / 2 - 1;
    for (int r = 1; r <= base; ++r) {
      const auto steps = shelling_order(n, r);
      const auto simplices = simplices_of(steps);
      const auto verdict = verify_shelling(simplices);
      CHECK_MESSAGE(verdict.ok, "n=" << n << " r=" << r);
      const auto brute = brute_restriction_faces(simplices);
      const auto generic = restriction_faces(simplices);
      REQUIRE(verdict.restriction_faces.size() == steps.size());
      for (std::size_t i = 0; i < steps.size(); ++i) {
        CHECK(bit_set(steps[i].restriction_face) == brute[i]);
        CHECK(bit_set(generic[i]) == brute[i]);
        CHECK(bit_set(verdict.restriction_faces[i]) == brute[i]);
      }
      for (std::size_t i = 1; i < steps.size(); ++i) CHECK(steps[i - 1].layer >= steps[i].layer);
    }
  }
}

TEST_CASE("verifier rejects broken orders") {
  const auto steps = shelling_order(9, 1);
  auto simplices = simplices_of(steps);
  // Steps 1 and 2 each meet the base simplex in a facet, so swapping them
  // keeps a shelling.
  auto swapped = simplices;
  std::swap(swapped[1], swapped[2]);
  CHECK(verify_shelling(swapped).ok);

  // The last simplex meets the base simplex in less than a facet.
  auto moved = simplices;
  std::rotate(moved.begin() + 1, moved.end() - 1, moved.end());
  const auto verdict = verify_shelling(moved);
  CHECK_FALSE(verdict.ok);
  REQUIRE(verdict.violation.has_value());
  CHECK(verdict.violation->index == 1);

  CHECK(verify_shelling({simplices.front()}).ok);
  auto dup = simplices_of(shelling_order(5, 1));
  dup.push_back(dup.front());
  CHECK_THROWS_AS(verify_shelling(dup), Error);

  // A reversed order is generally not a shelling either.
  auto rev = simplices_of(shelling_order(7, 1));
  std::reverse(rev.begin(), rev.end());
  CHECK(restriction_face(rev, 0).empty());
}
