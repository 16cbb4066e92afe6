#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "segal/polygeom.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace segal;

TEST_CASE("catalan numbers") {
  long long want[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430};
  for (int k = 0; k <= 8; ++k) CHECK(catalan(k) == want[k]);
}

TEST_CASE("triangulation counts are Catalan") {
  for (int n = 2; n <= 9; ++n) {
    auto all = enumerate_triangulations(n);
    CHECK(static_cast<long long>(all.size()) == catalan(n - 1));
    // duplicate-free and lexicographically ordered
    for (size_t i = 0; i + 1 < all.size(); ++i)
      CHECK(all[i].triangles < all[i + 1].triangles);
    for (auto& T : all) CHECK(validate_triangulation(T).empty());
  }
}

TEST_CASE("the square has its two triangulations") {
  auto all = enumerate_triangulations(3);
  REQUIRE(all.size() == 2);
  std::vector<std::array<int, 3>> left{{0, 1, 2}, {0, 2, 3}};
  std::vector<std::array<int, 3>> right{{0, 1, 3}, {1, 2, 3}};
  CHECK(all[0].triangles == left);
  CHECK(all[1].triangles == right);
}

TEST_CASE("fan triangulations validate at every apex") {
  for (int n = 2; n <= 7; ++n)
    for (int apex = 0; apex <= n; ++apex) {
      auto F = fan_triangulation(n, apex);
      CHECK(validate_triangulation(F).empty());
      CHECK(static_cast<int>(F.triangles.size()) == n - 1);
    }
}

TEST_CASE("validate_triangulation rejects junk") {
  Triangulation T;
  T.n = 4;
  T.triangles = {{0, 1, 2}, {0, 1, 3}, {0, 3, 4}};  // edges cross
  CHECK(!validate_triangulation(T).empty());
}

TEST_CASE("boundary pair collections") {
  auto I = boundary_pair_collection(4, 0, 2);
  REQUIRE(I.members.size() == 2);
  CHECK(I.members[0] == Subset{0, 1, 2});
  CHECK(I.members[1] == Subset{0, 2, 3, 4});
}

TEST_CASE("collection of a triangulation lists its triangles") {
  auto F = fan_triangulation(4, 0);
  auto I = collection_of(F);
  CHECK(I.n == 4);
  CHECK(I.members.size() == 3);
  for (auto& S : I.members) CHECK(S.size() == 3);
}

TEST_CASE("dual trees biject with triangulations") {
  for (int n = 3; n <= 6; ++n) {
    std::set<std::string> seen;
    for (auto& T : enumerate_triangulations(n)) {
      PlaneTree t = dual_tree(T);
      CHECK(t.leaves() == n);
      seen.insert(t.to_string());
    }
    CHECK(static_cast<long long>(seen.size()) == catalan(n - 1));
  }
}

TEST_CASE("subdivision counts are the little Schroeder numbers") {
  long long want[] = {0, 0, 1, 3, 11, 45, 197};  // indexed by n
  for (int n = 2; n <= 6; ++n) {
    auto all = enumerate_subdivisions(n);
    CHECK(static_cast<long long>(all.size()) == want[n]);
    for (auto& P : all) CHECK(validate_subdivision(P).empty());
  }
}

TEST_CASE("triangulations refine the trivial subdivision") {
  PolygonalSubdivision trivial{5, {{0, 1, 2, 3, 4, 5}}};
  for (auto& T : enumerate_triangulations(5)) {
    PolygonalSubdivision fine{5, {}};
    for (auto& tri : T.triangles)
      fine.cells.push_back({tri[0], tri[1], tri[2]});
    CHECK(refines(fine, trivial));
    CHECK(refines(fine, fine));
    if (T.triangles.size() > 1) CHECK(!refines(trivial, fine));
  }
}

TEST_CASE("refinement respects cell boundaries") {
  // {012,0234} is refined by {012,023,034} but not by {013,0134 pieces}
  PolygonalSubdivision coarse{4, {{0, 1, 2}, {0, 2, 3, 4}}};
  PolygonalSubdivision fine{4, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}}};
  PolygonalSubdivision other{4, {{0, 1, 3}, {1, 2, 3}, {0, 3, 4}}};
  CHECK(refines(fine, coarse));
  CHECK(!refines(other, coarse));
}
