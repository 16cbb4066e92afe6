#pragma once
#include "segal/category.hpp"
#include "segal/sset.hpp"

namespace segal {

inline constexpr long long kDefaultSizeCap = 100000;

// Nerve: X_n = composable n-chains; faces compose/drop, degeneracies insert
// identities.
SSet nerve(const FiniteCategory& C, int N, long long max_simplices = kDefaultSizeCap);

SSet nerve_semicategory(const FiniteSemicategory& C, int N,
                        long long max_simplices = kDefaultSizeCap);

// X_n = chains x_0 -> ... -> x_n -> F(x_0); the 0th face rotates the closing
// arrow through F.
SSet twisted_cyclic_nerve(const FiniteCategory& C, const Endofunctor& F, int N,
                          long long max_simplices = kDefaultSizeCap);

// X_n = chains a_0 <= ... <= a_n <= F(a_0).
SSet building(const ZPlusOrderedPoset& P, int N,
              long long max_simplices = kDefaultSizeCap);

struct GraphEdge {
  std::string name, src, tgt;
};

// 1-skeletal simplicial set: everything above level 1 is degenerate.
SSet oriented_graph(const std::vector<std::string>& vertices,
                    const std::vector<GraphEdge>& edges, int N);

// Free category on a 2-truncated complex: objects = D_0, morphisms = edge
// paths modulo the relations d_1 t = d_0 t o d_2 t. Throws "possibly
// infinite" when the bounded closure exceeds the cap.
FiniteCategory free_category(const SSet& D, int cap = 10000);

// Existence of a levelwise bijection commuting with all structure maps.
bool ssets_isomorphic(const SSet& X, const SSet& Y);

}  // namespace segal
