#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "segal/constructions.hpp"
#include "segal/group.hpp"
#include "segal/io.hpp"
#include "segal/sset.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace segal;

TEST_CASE("standard simplex levels count monotone maps") {
  SSet X = standard_simplex(2, 3);
  CHECK(validate(X).empty());
  CHECK(X.size(0) == 3);
  CHECK(X.size(1) == 6);
  CHECK(X.size(2) == 10);
  CHECK(X.size(3) == 15);

  SSet pt = standard_simplex(0, 4);
  for (int n = 0; n <= 4; ++n) CHECK(pt.size(n) == 1);
}

TEST_CASE("validate rejects broken face identities") {
  SSet X = standard_simplex(1, 2);
  REQUIRE(validate(X).empty());
  X.face[2][0][0] = (X.face[2][0][0] + 1) % X.size(1);
  CHECK(!validate(X).empty());
}

TEST_CASE("restrict_simplex picks out vertices and edges") {
  SSet X = standard_simplex(2, 2);
  // the top nondegenerate 2-simplex is the identity map [2] -> [2]
  int top = X.index_of(2, "0.1.2");
  REQUIRE(top >= 0);
  CHECK(X.id(0, restrict_simplex(X, 2, top, {0})) == "0");
  CHECK(X.id(0, restrict_simplex(X, 2, top, {2})) == "2");
  CHECK(X.id(1, restrict_simplex(X, 2, top, {0, 2})) == "0.2");
  CHECK(X.id(2, restrict_simplex(X, 2, top, {0, 1, 2})) == "0.1.2");
}

TEST_CASE("membrane set agrees with the brute-force oracle") {
  auto corpus = {nerve(category_of_group(group_by_name("z3")), 3),
                 nerve(category_of_group(group_by_name("s3")), 3),
                 standard_simplex(2, 3)};
  for (const SSet& X : corpus) {
    for (int n = 2; n <= 3; ++n) {
      IndexCollection I = interval_collection(n);
      auto direct = membrane_set(X, I);
      auto oracle = membrane_set_oracle(X, I);
      std::set<Membrane> a(direct.begin(), direct.end());
      std::set<Membrane> b(oracle.begin(), oracle.end());
      CHECK(a == b);
      CHECK(membrane_count(X, I) == static_cast<long long>(direct.size()));
    }
  }
}

TEST_CASE("membrane count matches enumeration on triangulation collections") {
  SSet X = nerve(category_of_group(group_by_name("z2xz2")), 4);
  IndexCollection I(4, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}});
  CHECK(membrane_count(X, I) == static_cast<long long>(membrane_set(X, I).size()));
  // fan membranes of a 2-Segal set biject with top simplices
  CHECK(membrane_count(X, I) == X.size(4));
}

TEST_CASE("segal map on a simplex is bijective") {
  SSet X = standard_simplex(3, 4);
  auto r = segal_map(X, interval_collection(3));
  CHECK(r.bijective());
}

TEST_CASE("segal map reports witnesses") {
  // two vertices, one edge: the 2-level membrane (f,f) has no filler
  std::vector<GraphEdge> edges{{"f", "a", "a"}};
  SSet X = oriented_graph({"a"}, edges, 2);
  auto r = segal_map(X, interval_collection(2));
  CHECK(!r.surjective);
  REQUIRE(!r.witnesses.empty());
  CHECK(r.witnesses.front().find("no filler") != std::string::npos);
}

TEST_CASE("json round trip is bit exact") {
  for (const SSet& X : {standard_simplex(2, 3),
                        nerve(category_of_group(group_by_name("s3")), 3)}) {
    json j = sset_to_json(X);
    std::string text = j.dump(1);
    SSet Y = sset_from_json(json::parse(text));
    CHECK(X == Y);
    CHECK(sset_to_json(Y).dump(1) == text);
  }
}

TEST_CASE("json parser rejects malformed input") {
  json j = sset_to_json(standard_simplex(1, 1));
  j["faces"][0][0][0] = 99;
  CHECK_THROWS(sset_from_json(j));
  json k = sset_to_json(standard_simplex(1, 1));
  k["kind"] = "semisimplicial";  // still carries degeneracies
  CHECK_THROWS(sset_from_json(k));
}

TEST_CASE("file round trip") {
  SSet X = nerve(category_of_group(group_by_name("z4")), 3);
  write_sset("roundtrip_tmp.json", X);
  SSet Y = read_sset("roundtrip_tmp.json");
  CHECK(X == Y);
}

TEST_CASE("product multiplies level sizes") {
  SSet A = nerve(category_of_group(group_by_name("z2")), 3);
  SSet B = nerve(category_of_group(group_by_name("z3")), 3);
  SSet P = product(A, B);
  CHECK(validate(P).empty());
  for (int n = 0; n <= 3; ++n) CHECK(P.size(n) == A.size(n) * B.size(n));
}

TEST_CASE("disjoint union adds level sizes") {
  SSet A = standard_simplex(1, 2);
  SSet B = standard_simplex(2, 2);
  SSet U = disjoint_union(A, B);
  CHECK(validate(U).empty());
  for (int n = 0; n <= 2; ++n) CHECK(U.size(n) == A.size(n) + B.size(n));
}

TEST_CASE("quotient by a free action rejects fixed points") {
  // trivial action of z2 on a point is not free
  SSet X = standard_simplex(0, 1);
  auto G = group_by_name("z2");
  std::vector<std::vector<std::vector<int>>> act(
      2, {{0}, {0}});
  CHECK_THROWS(quotient_by_free_action(X, G, act));
}
