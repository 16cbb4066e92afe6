#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "segal/constructions.hpp"
#include "segal/group.hpp"
#include "segal/hall.hpp"

#include <doctest.h>

#include <sstream>

using namespace segal;

namespace {

long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("verify_algebra accepts a group algebra and flags corruption") {
  auto G = group_by_name("s3");
  AlgebraTable T;
  T.basis = G.names;
  for (int a = 0; a < G.order(); ++a)
    for (int b = 0; b < G.order(); ++b) T.c[{a, b, G.mul[a][b]}] = 1;
  T.unit.assign(G.order(), Rational(0));
  T.unit[G.unit] = 1;
  CHECK(verify_algebra(T).ok());
  T.c[{1, 2, G.mul[1][2]}] = 2;
  auto rep = verify_algebra(T);
  CHECK(!rep.ok());
  CHECK(!rep.witness.empty());
}

TEST_CASE("hall category of the nerve of a group recovers the group algebra") {
  auto G = group_by_name("z4");
  SSet X = nerve(category_of_group(G), 4);
  auto H = hall_category(X);
  CHECK(H.basis.size() == 4);
  // c_{b b'}^{b''} counts 2-simplices with d_0 = b, d_2 = b', d_1 = b''
  long long entries = 0;
  for (auto& [key, val] : H.c) {
    CHECK(val == 1);
    ++entries;
  }
  CHECK(entries == 16);
  CHECK(verify_algebra(H.table()).ok());
}

TEST_CASE("hall category rejects non-2-Segal input") {
  SSet X = nerve(category_of_group(group_by_name("z2")), 3);
  X.ids[3].push_back("dup");
  for (int i = 0; i <= 3; ++i) X.face[3][i].push_back(X.face[3][i][0]);
  REQUIRE(validate(X).empty());
  CHECK_THROWS(hall_category(X));
}

TEST_CASE("hall category of a graph kills nondegenerate products") {
  std::vector<GraphEdge> edges{{"f", "a", "b"}, {"g", "b", "c"}};
  SSet X = oriented_graph({"a", "b", "c"}, edges, 3);
  auto H = hall_category(X);  // graphs are unital 2-Segal
  int f = -1, g = -1;
  for (size_t b = 0; b < H.basis.size(); ++b) {
    if (H.basis[b] == "f") f = static_cast<int>(b);
    if (H.basis[b] == "g") g = static_cast<int>(b);
  }
  REQUIRE(f >= 0);
  REQUIRE(g >= 0);
  for (size_t k = 0; k < H.basis.size(); ++k)
    CHECK(H.table().coeff(g, f, static_cast<int>(k)) == 0);
}

TEST_CASE("factorization algebra of z2 matches brute force") {
  auto M = monoid_of_group(group_by_name("z2"));
  auto T = factorization_algebra(M, 1);
  // pairs (A,B) with AB = BA = g: (e,g) and (g,e)
  REQUIRE(T.basis.size() == 2);
  CHECK(verify_algebra(T).ok());
  // brute force the product rule
  std::vector<std::pair<int, int>> pairs{{0, 1}, {1, 0}};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      std::map<int, long long> want;
      auto [a, b] = pairs[i];
      auto [c, d] = pairs[j];
      for (int e = 0; e < 2; ++e)
        if (M.op(e, d) == a && M.op(b, e) == c)
          for (int k = 0; k < 2; ++k)
            if (pairs[k] == std::make_pair(e, M.op(d, b))) ++want[k];
      for (int k = 0; k < 2; ++k)
        CHECK(T.coeff(i, j, k) == Rational(want.count(k) ? want[k] : 0));
    }
}

TEST_CASE("pointed set oracle gives binomial coefficients") {
  auto O = oracle_pointed_sets(12);
  for (int a = 0; a <= 6; ++a)
    for (int b = 0; b <= 6; ++b) CHECK(O.count(a, b, a + b) == binom(a + b, a));
  CHECK(O.count(1, 1, 3) == 0);  // sizes must add up
}

TEST_CASE("subspace oracle gives Gaussian binomials") {
  for (int q : {2, 3}) {
    auto O = oracle_fq_vector_spaces(q, 4);
    CHECK(O.count(1, 1, 2) == q + 1);
    CHECK(O.count(1, 2, 3) == q * q + q + 1);
    CHECK(O.count(2, 2, 4) == (q * q + 1) * (q * q + q + 1));
    CHECK(O.count(0, 2, 2) == 1);
  }
}

TEST_CASE("oracle hall tables are associative within the bound") {
  auto R = hall_from_oracle(oracle_pointed_sets(12), 6);
  CHECK(R.table.basis.size() == 7);
  CHECK(!R.fully_verified);  // some triples exceed the bound
  CHECK(R.table.coeff(1, 1, 2) == 2);
  auto Rq = hall_from_oracle(oracle_fq_vector_spaces(2, 4), 3);
  CHECK(Rq.table.coeff(1, 1, 2) == 3);
}

TEST_CASE("csv export is sorted and complete") {
  auto R = hall_from_oracle(oracle_pointed_sets(4), 2);
  std::string csv = algebra_to_csv(R.table);
  CHECK(csv.find("left,right,result,coefficient") == 0);
  CHECK(csv.find("e_1,e_1,e_2,2") != std::string::npos);
}

TEST_CASE("hecke algebra of (S3, S2)") {
  auto G = group_by_name("s3");
  int t = -1;
  for (int g = 1; g < G.order(); ++g)
    if (G.mul[g][g] == G.unit && t < 0) t = g;
  REQUIRE(t > 0);
  auto R = hecke_algebra(G, generated_subgroup(G, {t}));
  REQUIRE(R.basis.size() == 2);
  CHECK(R.transfer.c == R.convolution.c);
  CHECK(verify_algebra(R.convolution).ok());
  // the big double coset squares to 2*(small) + 1*(big)
  int big = -1, small = -1;
  for (auto& [key, val] : R.convolution.c)
    if (key[0] == key[1] && key[0] != key[2] && val == 2) {
      big = key[0];
      small = key[2];
    }
  REQUIRE(big >= 0);
  CHECK(R.convolution.coeff(big, big, big) == 1);
  CHECK(R.convolution.coeff(small, small, small) == 1);
  CHECK(R.convolution.coeff(small, big, big) == 1);
}

TEST_CASE("hecke algebra of the whole group and of the trivial subgroup") {
  auto G = group_by_name("z4");
  auto whole = hecke_algebra(G, {0, 1, 2, 3});
  CHECK(whole.basis.size() == 1);
  CHECK(whole.convolution.coeff(0, 0, 0) == 1);
  auto triv = hecke_algebra(G, {0});
  CHECK(triv.basis.size() == 4);  // the group algebra
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      CHECK(triv.convolution.coeff(a, b, G.mul[a][b]) == 1);
}
