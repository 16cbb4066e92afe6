#pragma once
#include "segal/category.hpp"
#include "segal/groupoid.hpp"
#include "segal/rational.hpp"
#include "segal/sset.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace segal {

// Structure constants over exact rationals; c[{i,j,k}] = coefficient of
// basis[k] in basis[i] * basis[j]. Missing entries are zero.
struct AlgebraTable {
  std::vector<std::string> basis;
  std::map<std::array<int, 3>, Rational> c;
  std::vector<Rational> unit;  // expansion of the unit, empty if undeclared

  Rational coeff(int i, int j, int k) const {
    auto it = c.find({i, j, k});
    return it == c.end() ? Rational(0) : it->second;
  }
};

struct AlgebraReport {
  bool associative = true;
  bool unital = true;  // vacuously true when no unit is declared
  std::string witness;
  bool ok() const { return associative && unital; }
};

AlgebraReport verify_algebra(const AlgebraTable& T);

std::string algebra_to_csv(const AlgebraTable& T);

// Hall category of a unital 2-Segal simplicial set: basis X_1, structure
// constants by triangle counting, units 1_{s_0(a)}.
struct HallCategory {
  std::vector<std::string> objects;
  std::vector<std::string> basis;
  std::vector<int> bsrc, btgt;          // d_1 / d_0 endpoints of basis edges
  std::vector<int> unit_of_object;      // index of s_0(a) in the basis
  std::map<std::array<int, 3>, long long> c;
  AlgebraTable table() const;
};

HallCategory hall_category(const SSet& X);

// Algebra of factorizations of w in a finite monoid: basis pairs (A,B) with
// AB = BA = w, product 1_{A,B} * 1_{C,D} = sum over E with ED = A, BE = C of
// 1_{E,DB}; unit 1_{e,w}.
AlgebraTable factorization_algebra(const MonoidTable& M, int w);

// Iso classes with a size grading and exact subobject counts g(A,B;C).
struct FinitaryHallOracle {
  std::vector<std::string> classes;
  std::vector<int> size;
  std::map<std::array<int, 3>, long long> g;
  long long count(int a, int b, int c) const {
    auto it = g.find({a, b, c});
    return it == g.end() ? 0 : it->second;
  }
};

FinitaryHallOracle oracle_pointed_sets(int max_size = 12);
FinitaryHallOracle oracle_fq_vector_spaces(int q, int max_dim);

struct OracleHallResult {
  AlgebraTable table;
  bool fully_verified = true;  // associativity beyond the bound is unchecked
  std::string note;
};
OracleHallResult hall_from_oracle(const FinitaryHallOracle& O, int bound);

// Hecke algebra on K-double cosets, by two independent methods that must
// agree: orbifold transfer along S_1 x S_1 <- S_2 -> S_1, and direct
// convolution normalized by 1/|K|.
struct HeckeResult {
  std::vector<std::string> basis;          // double coset names "KgK"
  AlgebraTable transfer, convolution;      // identical tables
};
HeckeResult hecke_algebra(const GroupTable& G, const std::vector<int>& K_elements);

}  // namespace segal
