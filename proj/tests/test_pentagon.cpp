#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "segal/group.hpp"
#include "segal/pentagon.hpp"
#include "segal/segal_check.hpp"

#include <doctest.h>

#include <random>

using namespace segal;

TEST_CASE("group solutions satisfy the pentagon identity") {
  for (const char* nm : {"z2", "z3", "z4", "z2xz2", "s3", "q8"}) {
    auto sol = group_solution(group_by_name(nm));
    auto v = verify_pentagon(sol);
    CHECK(v.bijective);
    CHECK(v.holds);
    CHECK(derived_operations(sol).all());
  }
  CHECK(verify_pentagon(identity_solution(3)).holds);
}

TEST_CASE("a perturbed solution fails with a witness") {
  auto sol = group_solution(group_by_name("z3"));
  std::swap(sol.alpha[0][1], sol.alpha[0][2]);
  auto v = verify_pentagon(sol);
  CHECK((!v.bijective || !v.holds));
  CHECK(!v.witness.empty());
}

TEST_CASE("exhaustive enumeration at small carrier sizes") {
  CHECK(enumerate_solutions(1, false).size() == 1);
  auto raw2 = enumerate_solutions(2, false);
  CHECK(raw2.size() == 5);
  auto dedup2 = enumerate_solutions(2, true);
  CHECK(dedup2.size() == 3);
  auto dedup3 = enumerate_solutions(3, true);
  CHECK(dedup3.size() == 3);
  for (auto& sol : raw2) CHECK(verify_pentagon(sol).holds);
  for (auto& sol : dedup3) CHECK(verify_pentagon(sol).holds);
}

TEST_CASE("nerve of a solution has |C|^(n-1) simplices and is 2-Segal") {
  auto sol = group_solution(group_by_name("z2"));
  SSet X = nerve_of_solution(sol, 4);
  CHECK(validate(X).empty());
  int want[] = {1, 1, 2, 4, 8};
  for (int n = 0; n <= 4; ++n) CHECK(X.size(n) == want[n]);
  CHECK(X.kind == SSet::Kind::semisimplicial);
  CHECK(is_2segal(X, 4).holds);
}

TEST_CASE("extract after nerve is the identity") {
  for (auto& sol : enumerate_solutions(3, true)) {
    SSet X = nerve_of_solution(sol, 4);
    auto back = extract_solution(X);
    CHECK(back.alpha == sol.alpha);
  }
  auto g = group_solution(group_by_name("z4"));
  CHECK(extract_solution(nerve_of_solution(g, 4)).alpha == g.alpha);
}

TEST_CASE("extract refuses non-2-Segal input") {
  auto sol = group_solution(group_by_name("z2"));
  SSet X = nerve_of_solution(sol, 4);
  // duplicating a top simplex breaks injectivity of the Segal maps
  SSet Y = X;
  Y.ids[4].push_back("dup");
  for (int i = 0; i <= 4; ++i) Y.face[4][i].push_back(Y.face[4][i][0]);
  REQUIRE(validate(Y).empty());
  CHECK(!is_2segal(Y, 4).holds);
  CHECK_THROWS(extract_solution(Y));
}

TEST_CASE("derived operations satisfy the compatibility identities") {
  for (auto& sol : enumerate_solutions(2, false)) {
    auto ops = derived_operations(sol);
    CHECK(ops.dot_associative);
    CHECK(ops.mixed_identity);
    CHECK(ops.star_identity);
  }
}

TEST_CASE("cluster transformation sample value") {
  ClusterPoint lam{1, 1}, mu{1, 1};
  auto [lam2, mu2] = cluster_alpha(lam, mu);
  CHECK(lam2 == ClusterPoint{Rational(1, 2), Rational(1, 2)});
  CHECK(mu2 == ClusterPoint{Rational(1), Rational(2)});
}

TEST_CASE("cluster pentagon identity on seeded rational tuples") {
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<int> num(1, 12), den(1, 12);
  auto rnd = [&] { return ClusterPoint{Rational(num(rng), den(rng)),
                                       Rational(num(rng), den(rng))}; };
  for (int t = 0; t < 50; ++t) CHECK(cluster_pentagon_check(rnd(), rnd(), rnd()));
}

TEST_CASE("cluster map rejects non-positive input") {
  CHECK_THROWS(cluster_alpha({Rational(0), Rational(1)}, {Rational(1), Rational(1)}));
}
