#pragma once
#include "segal/group.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace segal {

// A finite category: composition comp[(g,f)] = g o f is defined exactly when
// tgt[f] == src[g].
struct FiniteCategory {
  std::vector<std::string> objects;
  std::vector<std::string> mor_names;
  std::vector<int> src, tgt;
  std::vector<int> identity;  // identity[x] = id morphism of object x
  std::map<std::pair<int, int>, int> comp;

  int num_objects() const { return static_cast<int>(objects.size()); }
  int num_morphisms() const { return static_cast<int>(mor_names.size()); }
  int compose(int g, int f) const;  // throws if undefined
};

std::vector<std::string> validate_category(const FiniteCategory& C);

struct FiniteSemicategory {
  std::vector<std::string> objects;
  std::vector<std::string> mor_names;
  std::vector<int> src, tgt;
  std::map<std::pair<int, int>, int> comp;

  int num_objects() const { return static_cast<int>(objects.size()); }
  int num_morphisms() const { return static_cast<int>(mor_names.size()); }
  int compose(int g, int f) const;
};

std::vector<std::string> validate_semicategory(const FiniteSemicategory& C);

// A finite monoid as a multiplication table.
struct MonoidTable {
  std::vector<std::string> names;
  std::vector<std::vector<int>> mul;
  int unit = 0;
  int order() const { return static_cast<int>(names.size()); }
  int op(int a, int b) const { return mul[a][b]; }
};

std::vector<std::string> validate_monoid(const MonoidTable& M);
MonoidTable monoid_of_group(const GroupTable& G);
// g*h = h on the given carrier (left divisible, not a group for order >= 2).
MonoidTable right_projection_monoid(int order);

FiniteCategory category_of_monoid(const MonoidTable& M);
FiniteCategory category_of_group(const GroupTable& G);
FiniteCategory discrete_category(const std::vector<std::string>& objects);

// Poset as a category: one morphism a->b whenever a <= b.
FiniteCategory poset_category(const std::vector<std::string>& names,
                              const std::vector<std::vector<char>>& leq);

struct Endofunctor {
  std::vector<int> obj;  // object map
  std::vector<int> mor;  // morphism map
};

std::vector<std::string> validate_endofunctor(const FiniteCategory& C,
                                              const Endofunctor& F);
Endofunctor identity_endofunctor(const FiniteCategory& C);
// Endofunctor of a one-object category from a monoid endomorphism table.
Endofunctor monoid_endofunctor(const FiniteCategory& C, const std::vector<int>& f);

// A poset with a monotone endomap, the input datum for buildings.
struct ZPlusOrderedPoset {
  std::vector<std::string> names;
  std::vector<std::vector<char>> leq;
  std::vector<int> F;
  int size() const { return static_cast<int>(names.size()); }
};

std::vector<std::string> validate_zporder(const ZPlusOrderedPoset& P);
FiniteCategory poset_category(const ZPlusOrderedPoset& P);
// The endofunctor of poset_category(P) induced by P.F.
Endofunctor poset_endofunctor(const ZPlusOrderedPoset& P, const FiniteCategory& C);

// Chain poset 0 < 1 < ... < size-1 with a given endomap.
ZPlusOrderedPoset chain_zporder(int size, const std::vector<int>& F);

// Seeded generators for corpus sweeps.
MonoidTable random_monoid(int carrier, int max_order, unsigned seed);
ZPlusOrderedPoset random_zporder(int size, unsigned seed);

bool categories_isomorphic(const FiniteCategory& C, const FiniteCategory& D);

}  // namespace segal
