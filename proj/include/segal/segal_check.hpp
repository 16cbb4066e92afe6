#pragma once
#include "segal/polygeom.hpp"
#include "segal/sset.hpp"

#include <string>
#include <vector>

namespace segal {

enum class SegalProperty { one_segal, two_segal, unital };

struct SegalWitness {
  int level = 0;
  std::string where;   // collection or degeneracy square, printed canonically
  std::string detail;  // failing element(s)
  bool operator==(const SegalWitness&) const = default;
};

struct SegalVerdict {
  SegalProperty property = SegalProperty::one_segal;
  int up_to_level = 0;
  bool holds = true;
  std::vector<SegalWitness> witnesses;
};

enum class TwoSegalStrategy { all_triangulations, boundary_pairs };

// f_n : X_n -> X_1 x_{X_0} ... x_{X_0} X_1 bijective for 2 <= n <= up_to.
SegalVerdict is_1segal(const SSet& X, int up_to);

// f_T bijective for every triangulation T of P_n, 3 <= n <= up_to (n=2 is
// vacuous), or only for the boundary pairs (0,j) / (i,n).
SegalVerdict is_2segal(const SSet& X, int up_to,
                       TwoSegalStrategy strategy = TwoSegalStrategy::all_triangulations);

// The degeneracy squares over X_{{i}} -> X_{{i,i+1}} are pullbacks,
// 2 <= n <= up_to, 0 <= i < n. Requires degeneracies.
SegalVerdict is_unital(const SSet& X, int up_to);

// Decalage: (PX)_n = X_{n+1}; initial keeps faces d_{i+1}, final keeps d_i.
// Truncation drops by one.
SSet path_space_initial(const SSet& X);
SSet path_space_final(const SSet& X);

// Semi-simplicial suspensions: level 0 = {*}, level n = X_{n-1}; the left
// version repeats the 0th face, the right version the last. Truncation +1.
SSet suspension_left(const SSet& X);
SSet suspension_right(const SSet& X);

// Drop degeneracies, reinterpreting X as semi-simplicial.
SSet forget_degeneracies(const SSet& X);

struct PathCriterionReport {
  int up_to = 0;
  SegalVerdict two_segal;       // is_2segal(X, up_to)
  SegalVerdict left_1segal;     // is_1segal(P^< X, up_to - 1)
  SegalVerdict right_1segal;    // is_1segal(P^> X, up_to - 1)
  bool consistent = false;      // two_segal.holds == (left && right)
};

// Requires truncation >= up_to so that P X still reaches level up_to - 1.
PathCriterionReport path_criterion_crosscheck(const SSet& X, int up_to);

std::string to_string(SegalProperty p);
std::string to_string(TwoSegalStrategy s);

}  // namespace segal
