#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "segal/constructions.hpp"
#include "segal/group.hpp"
#include "segal/operadic.hpp"
#include "segal/pentagon.hpp"

#include <doctest.h>

using namespace segal;

TEST_CASE("extraction requires a single vertex") {
  SSet two_points = standard_simplex(1, 2);
  CHECK_THROWS(extract_cooperad(two_points));
  SSet pt = standard_simplex(0, 3);
  auto D = extract_cooperad(pt);
  CHECK(D.colors.size() == 1);
}

TEST_CASE("cooperad of a monoid nerve has Q(n) = M^n") {
  auto C = category_of_group(group_by_name("z3"));
  SSet X = nerve(C, 4);
  auto D = extract_cooperad(X);
  CHECK(D.colors.size() == 3);
  for (int n = 1; n <= 4; ++n) {
    int want = 1;
    for (int i = 0; i < n; ++i) want *= 3;
    CHECK(D.arity_count(n) == want);
  }
  // color projections: input colors are the consecutive letters
  for (int q = 0; q < D.arity_count(2); ++q) {
    int out = D.output_color(2, q);
    // output = product of the two inputs in the group
    auto G = group_by_name("z3");
    CHECK(out == G.mul[D.input_color(2, 2, q)][D.input_color(2, 1, q)]);
  }
}

TEST_CASE("cocomposition collections are subdivisions with intervals") {
  auto I = cocomposition_collection({2, 1});
  REQUIRE(I.members.size() == 3);
  CHECK(I.members[0] == Subset{0, 1, 2});
  CHECK(I.members[1] == Subset{0, 2, 3});
  CHECK(I.members[2] == Subset{2, 3});
  CHECK(I.n == 3);
  CHECK_THROWS(cocomposition_collection({2, 0}));
}

TEST_CASE("invertibility matches 2-Segal on nerves") {
  for (const char* nm : {"z2", "z3", "z2xz2"}) {
    SSet X = nerve(category_of_group(group_by_name(nm)), 4);
    auto D = extract_cooperad(X);
    auto iv = check_invertibility(D, 4);
    CHECK(iv.holds);
    CHECK(iv.holds == is_2segal(X, 4).holds);
  }
}

TEST_CASE("invertibility matches 2-Segal on pentagon nerves") {
  for (auto& sol : enumerate_solutions(2, true)) {
    SSet X = nerve_of_solution(sol, 4);
    auto D = extract_cooperad(X);
    CHECK(check_invertibility(D, 4).holds);
  }
}

TEST_CASE("a corrupted one-vertex instance fails both checks") {
  SSet X = nerve(category_of_group(group_by_name("z2")), 3);
  X.ids[3].push_back("dup");
  for (int i = 0; i <= 3; ++i) X.face[3][i].push_back(X.face[3][i][0]);
  REQUIRE(validate(X).empty());
  auto D = extract_cooperad(X);
  auto iv = check_invertibility(D, 3);
  CHECK(!iv.holds);
  CHECK(!iv.witness.empty());
  CHECK(iv.holds == is_2segal(X, 3).holds);
}

TEST_CASE("counit failure is detected") {
  // one vertex, two loops, no composites: Q(1) has two colors but the
  // counit conditions hold; corrupting the face tables breaks them
  std::vector<GraphEdge> edges{{"x", "v", "v"}};
  SSet X = oriented_graph({"v"}, edges, 2);
  auto D = extract_cooperad(X);
  auto iv = check_invertibility(D, 2);
  CHECK(iv.holds);  // counits are singletons by construction
}

TEST_CASE("truncation errors propagate") {
  SSet X = nerve(category_of_group(group_by_name("z2")), 2);
  auto D = extract_cooperad(X);
  CHECK_THROWS_AS(check_invertibility(D, 3), InsufficientTruncation);
  CHECK_THROWS_AS(cocomposition(D, {2, 1}), InsufficientTruncation);
}
