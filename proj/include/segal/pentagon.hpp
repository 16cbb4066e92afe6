#pragma once
#include "segal/group.hpp"
#include "segal/rational.hpp"
#include "segal/sset.hpp"

#include <string>
#include <utility>
#include <vector>

namespace segal {

// A set-theoretic pentagon solution: a bijection alpha of C x C, stored as
// alpha[x][y] = (x . y, x * y).
struct PentagonSolution {
  std::vector<std::string> carrier;
  std::vector<std::vector<std::pair<int, int>>> alpha;
  int size() const { return static_cast<int>(carrier.size()); }
  bool operator==(const PentagonSolution&) const = default;
};

struct PentagonVerdict {
  bool bijective = true;
  bool holds = true;
  std::string witness;  // first failing pair/triple
};

// Exact check of a_23 o a_13 o a_12 = a_12 o a_23 on C^3 (composition applies
// the rightmost map first); bijectivity is checked before the identity.
PentagonVerdict verify_pentagon(const PentagonSolution& sol);

// alpha(x,y) = (xy, y).
PentagonSolution group_solution(const GroupTable& G);
PentagonSolution identity_solution(int size);

// Semi-simplicial nerve: X_0 = X_1 = pt, X_n = C^{n-1} realized as cocycle
// systems (x_ijk) with (x_ijl, x_jkl) = alpha(x_ijk, x_ikl).
SSet nerve_of_solution(const PentagonSolution& sol, int N,
                       long long max_simplices = 100000);

// Inverse of the nerve: C = X_2, alpha from the unique 3-simplex with
// prescribed faces d_3 = x, d_1 = y. Requires X_0, X_1 singletons and
// 2-Segality.
PentagonSolution extract_solution(const SSet& X);

struct DerivedOps {
  std::vector<std::vector<int>> dot, star;
  bool dot_associative = true;
  bool mixed_identity = true;  // (x*y).((x.y)*z) = x*(y.z)
  bool star_identity = true;   // (x*y)*((x.y)*z) = y*z
  std::string witness;
  bool all() const { return dot_associative && mixed_identity && star_identity; }
};
DerivedOps derived_operations(const PentagonSolution& sol);

// Exhaustive over bijections of C^2 via backtracking; |C| <= 4. With dedup,
// one representative per relabeling orbit (lexicographically minimal table).
std::vector<PentagonSolution> enumerate_solutions(int size, bool dedup);

// The exact-rational cluster transformation on pairs of positive coordinates.
struct ClusterPoint {
  Rational c0, c2;
  bool operator==(const ClusterPoint&) const = default;
};
std::pair<ClusterPoint, ClusterPoint> cluster_alpha(const ClusterPoint& lam,
                                                    const ClusterPoint& mu);

// Pentagon identity for the cluster map, in the reading it satisfies:
// a_12 o a_13 o a_23 = a_23 o a_12 (rightmost applied first).
bool cluster_pentagon_check(const ClusterPoint& p, const ClusterPoint& q,
                            const ClusterPoint& r);

}  // namespace segal
