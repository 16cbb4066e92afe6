#pragma once
#include "segal/sset.hpp"

#include <array>
#include <string>
#include <vector>

namespace segal {

// A triangulation of the convex (n+1)-gon P_n with vertices 0..n.
struct Triangulation {
  int n = 0;
  std::vector<std::array<int, 3>> triangles;  // sorted triples, sorted list
  bool operator==(const Triangulation&) const = default;
};

std::vector<std::string> validate_triangulation(const Triangulation& T);

// Exhaustive, duplicate-free, ordered lexicographically by sorted triangle
// list; |result| = Catalan(n-1). Recursion splits on the unique triangle
// {0,i,n}.
std::vector<Triangulation> enumerate_triangulations(int n);

Triangulation fan_triangulation(int n, int apex);

// {{0..i} u {j..n}, {i..j}} for 0 <= i < j <= n, (i,j) != (0,n).
IndexCollection boundary_pair_collection(int n, int i, int j);

IndexCollection collection_of(const Triangulation& T);

// Rooted plane binary tree; leaves correspond to the boundary edges
// {0,1},...,{n-1,n}, the root to the long edge {0,n}.
struct PlaneTree {
  std::vector<PlaneTree> children;  // empty = leaf; otherwise exactly 2
  bool operator==(const PlaneTree&) const = default;
  int leaves() const;
  std::string to_string() const;  // leaf = "*", node = "(LR)"
};
PlaneTree dual_tree(const Triangulation& T);

// A polygonal subdivision of P_n: cells of size >= 3 (or the trivial {[n]}).
struct PolygonalSubdivision {
  int n = 0;
  std::vector<Subset> cells;
  bool operator==(const PolygonalSubdivision&) const = default;
};
std::vector<std::string> validate_subdivision(const PolygonalSubdivision& P);
// true iff every cell of coarse is tiled by cells of fine.
bool refines(const PolygonalSubdivision& fine, const PolygonalSubdivision& coarse);
// all polygonal subdivisions of P_n; capped at n <= 8.
std::vector<PolygonalSubdivision> enumerate_subdivisions(int n);
IndexCollection collection_of(const PolygonalSubdivision& P);

long long catalan(int k);

}  // namespace segal
