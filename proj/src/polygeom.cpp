#include "segal/polygeom.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace segal {

long long catalan(int k) {
  std::vector<long long> c(k + 1, 0);
  c[0] = 1;
  for (int m = 1; m <= k; ++m)
    for (int i = 0; i < m; ++i) c[m] += c[i] * c[m - 1 - i];
  return c[k];
}

namespace {

// triangulations of the polygon on an arbitrary ascending vertex list
std::vector<std::vector<std::array<int, 3>>> tri_rec(const std::vector<int>& vs) {
  if (vs.size() == 2) return {{}};
  std::vector<std::vector<std::array<int, 3>>> out;
  for (size_t i = 1; i + 1 < vs.size(); ++i) {
    std::vector<int> left(vs.begin(), vs.begin() + i + 1);
    std::vector<int> right(vs.begin() + i, vs.end());
    for (auto& L : tri_rec(left))
      for (auto& R : tri_rec(right)) {
        auto t = L;
        t.push_back({vs.front(), vs[i], vs.back()});
        t.insert(t.end(), R.begin(), R.end());
        out.push_back(std::move(t));
      }
  }
  return out;
}

}  // namespace

std::vector<Triangulation> enumerate_triangulations(int n) {
  if (n < 2) throw SSetError("enumerate_triangulations: n >= 2 required");
  std::vector<int> vs(n + 1);
  for (int i = 0; i <= n; ++i) vs[i] = i;
  std::vector<Triangulation> out;
  for (auto t : tri_rec(vs)) {
    std::sort(t.begin(), t.end());
    out.push_back(Triangulation{n, std::move(t)});
  }
  std::sort(out.begin(), out.end(),
            [](const Triangulation& a, const Triangulation& b) {
              return a.triangles < b.triangles;
            });
  return out;
}

Triangulation fan_triangulation(int n, int apex) {
  if (apex < 0 || apex > n) throw SSetError("fan_triangulation: apex out of range");
  Triangulation T{n, {}};
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 <= n; ++i) edges.push_back({i, i + 1});
  edges.push_back({0, n});
  for (auto [u, v] : edges) {
    if (u == apex || v == apex) continue;
    std::array<int, 3> t{apex, u, v};
    std::sort(t.begin(), t.end());
    T.triangles.push_back(t);
  }
  std::sort(T.triangles.begin(), T.triangles.end());
  return T;
}

std::vector<std::string> validate_triangulation(const Triangulation& T) {
  std::vector<std::string> rep;
  if (static_cast<int>(T.triangles.size()) != T.n - 1)
    rep.push_back("expected n-1 triangles");
  auto all = enumerate_triangulations(T.n);
  Triangulation copy = T;
  std::sort(copy.triangles.begin(), copy.triangles.end());
  if (std::find(all.begin(), all.end(), copy) == all.end())
    rep.push_back("not a triangulation of P_n");
  return rep;
}

IndexCollection boundary_pair_collection(int n, int i, int j) {
  if (!(0 <= i && i < j && j <= n) || (i == 0 && j == n))
    throw SSetError("boundary_pair_collection: invalid pair");
  Subset outer, inner;
  for (int v = 0; v <= i; ++v) outer.push_back(v);
  for (int v = j; v <= n; ++v) outer.push_back(v);
  for (int v = i; v <= j; ++v) inner.push_back(v);
  return IndexCollection(n, {outer, inner});
}

IndexCollection collection_of(const Triangulation& T) {
  std::vector<Subset> mem;
  for (auto& t : T.triangles) mem.push_back({t[0], t[1], t[2]});
  return IndexCollection(T.n, mem);
}

int PlaneTree::leaves() const {
  if (children.empty()) return 1;
  int s = 0;
  for (auto& c : children) s += c.leaves();
  return s;
}

std::string PlaneTree::to_string() const {
  if (children.empty()) return "*";
  std::string s = "(";
  for (auto& c : children) s += c.to_string();
  return s + ")";
}

namespace {

PlaneTree dual_rec(const Triangulation& T, const std::vector<int>& vs) {
  if (vs.size() == 2) return PlaneTree{};
  int mid = -1;
  for (auto& t : T.triangles)
    if (t[0] == vs.front() && t[2] == vs.back() &&
        std::binary_search(vs.begin(), vs.end(), t[1])) {
      mid = t[1];
      break;
    }
  if (mid < 0) throw SSetError("dual_tree: invalid triangulation");
  auto cut = std::lower_bound(vs.begin(), vs.end(), mid);
  std::vector<int> left(vs.begin(), cut + 1), right(cut, vs.end());
  PlaneTree node;
  node.children.push_back(dual_rec(T, left));
  node.children.push_back(dual_rec(T, right));
  return node;
}

}  // namespace

PlaneTree dual_tree(const Triangulation& T) {
  std::vector<int> vs(T.n + 1);
  for (int i = 0; i <= T.n; ++i) vs[i] = i;
  return dual_rec(T, vs);
}

namespace {

std::vector<std::vector<Subset>> subdiv_rec(const std::vector<int>& vs) {
  if (vs.size() == 2) return {{}};
  std::vector<std::vector<Subset>> out;
  const int m = static_cast<int>(vs.size());
  // the cell containing the long edge {vs[0], vs[m-1]} may use any subset of
  // the interior vertices; iterate those via bitmask (m <= 9 at n <= 8)
  for (int mask = 0; mask < (1 << (m - 2)); ++mask) {
    Subset cell{vs.front()};
    for (int b = 0; b < m - 2; ++b)
      if (mask & (1 << b)) cell.push_back(vs[b + 1]);
    cell.push_back(vs.back());
    if (cell.size() < 3) continue;
    // remaining intervals between consecutive cell vertices
    std::vector<std::vector<std::vector<Subset>>> parts;
    bool ok = true;
    for (size_t t = 0; t + 1 < cell.size(); ++t) {
      auto lo = std::lower_bound(vs.begin(), vs.end(), cell[t]);
      auto hi = std::lower_bound(vs.begin(), vs.end(), cell[t + 1]);
      std::vector<int> interval(lo, hi + 1);
      parts.push_back(subdiv_rec(interval));
      if (parts.back().empty()) ok = false;
    }
    if (!ok) continue;
    std::vector<std::vector<Subset>> combos{{cell}};
    for (auto& p : parts) {
      std::vector<std::vector<Subset>> next;
      for (auto& c : combos)
        for (auto& q : p) {
          auto merged = c;
          merged.insert(merged.end(), q.begin(), q.end());
          next.push_back(std::move(merged));
        }
      combos = std::move(next);
    }
    for (auto& c : combos) out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

std::vector<PolygonalSubdivision> enumerate_subdivisions(int n) {
  if (n < 2) throw SSetError("enumerate_subdivisions: n >= 2 required");
  if (n > 8) throw SizeCapExceeded("enumerate_subdivisions capped at n <= 8");
  std::vector<int> vs(n + 1);
  for (int i = 0; i <= n; ++i) vs[i] = i;
  std::vector<PolygonalSubdivision> out;
  for (auto cells : subdiv_rec(vs)) {
    std::sort(cells.begin(), cells.end());
    out.push_back(PolygonalSubdivision{n, std::move(cells)});
  }
  std::sort(out.begin(), out.end(),
            [](const PolygonalSubdivision& a, const PolygonalSubdivision& b) {
              return a.cells < b.cells;
            });
  return out;
}

std::vector<std::string> validate_subdivision(const PolygonalSubdivision& P) {
  std::vector<std::string> rep;
  std::function<bool(const std::vector<int>&, std::vector<Subset>)> tile =
      [&](const std::vector<int>& vs, std::vector<Subset> cells) -> bool {
    if (vs.size() == 2) return cells.empty();
    // the unique cell containing both ends
    auto root = cells.end();
    for (auto it = cells.begin(); it != cells.end(); ++it)
      if (std::binary_search(it->begin(), it->end(), vs.front()) &&
          std::binary_search(it->begin(), it->end(), vs.back())) {
        if (root != cells.end()) return false;
        root = it;
      }
    if (root == cells.end()) return false;
    Subset cell = *root;
    if (cell.size() < 3) return false;
    for (int v : cell)
      if (!std::binary_search(vs.begin(), vs.end(), v)) return false;
    cells.erase(root);
    // distribute remaining cells to the intervals of the root cell
    bool ok = true;
    for (size_t t = 0; t + 1 < cell.size() && ok; ++t) {
      auto lo = std::lower_bound(vs.begin(), vs.end(), cell[t]);
      auto hi = std::lower_bound(vs.begin(), vs.end(), cell[t + 1]);
      std::vector<int> interval(lo, hi + 1);
      std::vector<Subset> inside;
      for (auto it = cells.begin(); it != cells.end();) {
        if (it->front() >= cell[t] && it->back() <= cell[t + 1]) {
          inside.push_back(*it);
          it = cells.erase(it);
        } else
          ++it;
      }
      ok = tile(interval, inside);
    }
    return ok && cells.empty();
  };
  std::vector<int> vs(P.n + 1);
  for (int i = 0; i <= P.n; ++i) vs[i] = i;
  if (!tile(vs, P.cells)) rep.push_back("cells do not tile P_n");
  return rep;
}

bool refines(const PolygonalSubdivision& fine, const PolygonalSubdivision& coarse) {
  if (fine.n != coarse.n) return false;
  // every fine cell must lie inside some coarse cell, and the fine cells inside
  // one coarse cell must tile it
  for (auto& big : coarse.cells) {
    std::vector<Subset> inside;
    for (auto& small : fine.cells) {
      bool in = std::includes(big.begin(), big.end(), small.begin(), small.end());
      if (in) inside.push_back(small);
    }
    // re-index big as a polygon in its own right
    std::vector<Subset> reind;
    for (auto& c : inside) {
      Subset r;
      for (int v : c)
        r.push_back(static_cast<int>(
            std::lower_bound(big.begin(), big.end(), v) - big.begin()));
      reind.push_back(r);
    }
    PolygonalSubdivision sub{static_cast<int>(big.size()) - 1, reind};
    std::sort(sub.cells.begin(), sub.cells.end());
    if (!validate_subdivision(sub).empty()) return false;
  }
  // and every fine cell must be accounted for
  size_t counted = 0;
  for (auto& small : fine.cells)
    for (auto& big : coarse.cells)
      if (std::includes(big.begin(), big.end(), small.begin(), small.end())) {
        ++counted;
        break;
      }
  return counted == fine.cells.size();
}

IndexCollection collection_of(const PolygonalSubdivision& P) {
  return IndexCollection(P.n, P.cells);
}

}  // namespace segal
