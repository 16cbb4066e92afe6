#pragma once
#include "segal/group.hpp"
#include "segal/rational.hpp"

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace segal {

struct FiniteGroupoid {
  std::vector<std::string> objects;
  std::vector<std::string> mor_names;
  std::vector<int> src, tgt, inv;
  std::vector<int> identity;
  std::map<std::pair<int, int>, int> comp;  // (g,f) -> g o f, tgt f = src g

  int num_objects() const { return static_cast<int>(objects.size()); }
  int num_morphisms() const { return static_cast<int>(mor_names.size()); }
  int compose(int g, int f) const;
};

std::vector<std::string> validate_groupoid(const FiniteGroupoid& X);

struct GroupoidFunctor {
  std::vector<int> obj, mor;
};

std::vector<std::string> validate_functor(const FiniteGroupoid& A,
                                          const FiniteGroupoid& B,
                                          const GroupoidFunctor& F);
GroupoidFunctor identity_functor(const FiniteGroupoid& X);
GroupoidFunctor compose_functors(const GroupoidFunctor& G, const GroupoidFunctor& F);

// One object with automorphism group G.
FiniteGroupoid delooping(const GroupTable& G);
FiniteGroupoid discrete_groupoid(const std::vector<std::string>& objects);

// Objects E, morphisms G x E with s(g,x) = x, t(g,x) = gx.
FiniteGroupoid action_groupoid(const GroupTable& G,
                               const std::vector<std::string>& elem_names,
                               const std::vector<std::vector<int>>& act);

struct Pi0 {
  std::vector<int> comp;  // object -> component index
  std::vector<int> reps;  // component -> representative object
  int count() const { return static_cast<int>(reps.size()); }
};
Pi0 pi0(const FiniteGroupoid& X);

long long aut_size(const FiniteGroupoid& X, int obj);

// Homotopy cardinality: sum over components of 1/|Aut|.
Rational cardinality(const FiniteGroupoid& X);

// Orbifold integral of a pi0-function.
Rational orbifold_integral(const FiniteGroupoid& X, const std::vector<Rational>& phi);

// The projective 2-limit A x_C B: objects (a, b, phi: F a -> G b), morphisms
// commuting pairs. Guarded against blowup.
struct FiberProductResult {
  FiniteGroupoid P;
  GroupoidFunctor to_A, to_B;
  std::vector<std::array<int, 3>> obj_data;  // (a, b, phi in C)
  std::vector<std::array<int, 2>> mor_data;  // (u in A, v in B)
  std::map<std::array<int, 3>, int> obj_index;
  std::map<std::array<int, 3>, int> mor_index;  // (u, v, src obj) -> id
};
FiberProductResult two_fiber_product(const FiniteGroupoid& A, const FiniteGroupoid& B,
                                     const FiniteGroupoid& C, const GroupoidFunctor& F,
                                     const GroupoidFunctor& G,
                                     long long guard = 100000);

struct SkeletonResult {
  FiniteGroupoid S;
  GroupoidFunctor incl;       // S -> X
  std::vector<int> rep_of;    // X object -> its representative X object
  std::vector<int> theta;     // X object x -> X morphism x -> rep_of[x]
  std::vector<int> skel_obj;  // X rep object -> S object index (-1 otherwise)
  std::vector<int> skel_mor;  // X morphism between reps -> S morphism (-1)
};
SkeletonResult skeletonize(const FiniteGroupoid& X);

struct EquivalenceVerdict {
  bool holds = true;
  std::string witness;
};
// Essential surjectivity plus full faithfulness, decided by enumeration.
EquivalenceVerdict equivalence_check(const FiniteGroupoid& A, const FiniteGroupoid& B,
                                     const GroupoidFunctor& F);

// Orbifold direct image of phi (indexed by pi0(A)) along F, valued on pi0(B).
std::vector<Rational> pushforward(const FiniteGroupoid& A, const FiniteGroupoid& B,
                                  const GroupoidFunctor& F,
                                  const std::vector<Rational>& phi);
// Pullback is composition with pi0(F).
std::vector<Rational> pullback(const FiniteGroupoid& A, const FiniteGroupoid& B,
                               const GroupoidFunctor& F,
                               const std::vector<Rational>& psi);

// Cartesian product of groupoids, with the pairing of two functors into the
// factors.
struct GroupoidProductResult {
  FiniteGroupoid P;
  std::map<std::pair<int, int>, int> obj_index, mor_index;
};
GroupoidProductResult product_groupoid(const FiniteGroupoid& A,
                                       const FiniteGroupoid& B);
GroupoidFunctor pair_functor(const GroupoidProductResult& P,
                             const GroupoidFunctor& F, const GroupoidFunctor& G);

struct SimplicialGroupoid {
  int truncation = 0;
  std::vector<FiniteGroupoid> level;
  std::vector<std::vector<GroupoidFunctor>> face;   // face[n][i]: n -> n-1
  std::vector<std::vector<GroupoidFunctor>> degen;  // degen[n][i]: n -> n+1
};

std::vector<std::string> validate_simplicial_groupoid(const SimplicialGroupoid& S);

// Level n = G\(G/K)^{n+1}; faces delete, degeneracies repeat coordinates.
SimplicialGroupoid hecke_waldhausen(const GroupTable& G,
                                    const std::vector<int>& K_elements, int N);

struct GroupoidSegalVerdict {
  bool holds = true;
  int level = 0;
  std::string witness;
};
// Builds the comparison functor phi_n : S_n -> S_1 x_{S_0} ... x_{S_0} S_1
// (on skeletons) and decides equivalence for 2 <= n <= up_to.
GroupoidSegalVerdict check_1segal_groupoid(const SimplicialGroupoid& S, int up_to,
                                           long long guard = 100000);

}  // namespace segal
