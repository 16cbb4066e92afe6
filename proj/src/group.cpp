#include "segal/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace segal {

std::vector<std::string> validate_group(const GroupTable& G) {
  std::vector<std::string> rep;
  const int n = G.order();
  if (static_cast<int>(G.mul.size()) != n || static_cast<int>(G.inv.size()) != n) {
    rep.push_back("structural: table sizes do not match order");
    return rep;
  }
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(G.mul[a].size()) != n) {
      rep.push_back("structural: row " + std::to_string(a) + " not total");
      return rep;
    }
    if (G.mul[G.unit][a] != a || G.mul[a][G.unit] != a)
      rep.push_back("unit law fails at " + G.names[a]);
    if (G.mul[a][G.inv[a]] != G.unit || G.mul[G.inv[a]][a] != G.unit)
      rep.push_back("inverse law fails at " + G.names[a]);
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (G.mul[G.mul[a][b]][c] != G.mul[a][G.mul[b][c]]) {
          rep.push_back("associativity fails at (" + G.names[a] + "," +
                        G.names[b] + "," + G.names[c] + ")");
          return rep;
        }
  return rep;
}

namespace {

GroupTable finish(GroupTable G) {
  const int n = G.order();
  G.inv.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (G.mul[a][b] == G.unit) G.inv[a] = b;
  auto rep = validate_group(G);
  if (!rep.empty()) throw std::runtime_error("invalid group table: " + rep.front());
  return G;
}

using Perm = std::vector<int>;

Perm compose(const Perm& a, const Perm& b) {  // a after b
  Perm c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
  return c;
}

GroupTable from_permutations(const std::vector<Perm>& gens, int deg) {
  Perm id(deg);
  std::iota(id.begin(), id.end(), 0);
  std::map<Perm, int> index;
  std::vector<Perm> elems{id};
  index[id] = 0;
  for (size_t i = 0; i < elems.size(); ++i)
    for (auto& g : gens) {
      Perm p = compose(g, elems[i]);
      if (index.emplace(p, static_cast<int>(elems.size())).second)
        elems.push_back(p);
    }
  GroupTable G;
  for (size_t i = 0; i < elems.size(); ++i) {
    std::string nm = "p";
    for (int v : elems[i]) nm += std::to_string(v);
    G.names.push_back(nm);
  }
  G.unit = 0;
  G.mul.assign(elems.size(), std::vector<int>(elems.size()));
  for (size_t a = 0; a < elems.size(); ++a)
    for (size_t b = 0; b < elems.size(); ++b)
      G.mul[a][b] = index.at(compose(elems[a], elems[b]));
  return finish(G);
}

}  // namespace

GroupTable cyclic_group(int n) {
  GroupTable G;
  for (int i = 0; i < n; ++i) G.names.push_back(std::to_string(i));
  G.unit = 0;
  G.mul.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) G.mul[a][b] = (a + b) % n;
  return finish(G);
}

GroupTable dihedral_group(int n) {
  // elements r^i s^j, j in {0,1}; s r s = r^{-1}
  const int ord = 2 * n;
  GroupTable G;
  auto idx = [&](int i, int j) { return i + n * j; };
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < n; ++i)
      G.names.push_back("r" + std::to_string(i) + (j ? "s" : ""));
  G.unit = idx(0, 0);
  G.mul.assign(ord, std::vector<int>(ord));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < 2; ++l) {
          // (r^i s^j)(r^k s^l) = r^{i + k*(-1)^j} s^{j^l}
          int e = ((i + (j ? n - k : k)) % n + n) % n;
          G.mul[idx(i, j)][idx(k, l)] = idx(e, j ^ l);
        }
  return finish(G);
}

GroupTable dicyclic_group(int n) {
  // <a,b | a^{2n}=1, b^2=a^n, b a b^{-1} = a^{-1}>, elements a^i b^j,
  // 0<=i<2n, j in {0,1}
  const int m = 2 * n, ord = 4 * n;
  GroupTable G;
  auto idx = [&](int i, int j) { return i + m * j; };
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < m; ++i)
      G.names.push_back("a" + std::to_string(i) + (j ? "b" : ""));
  G.unit = idx(0, 0);
  G.mul.assign(ord, std::vector<int>(ord));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < 2; ++l) {
          // (a^i b^j)(a^k b^l): b a^k = a^{-k} b, b^2 = a^n
          int e = j ? (i - k % m + m) % m : (i + k) % m;
          int jj = j ^ l;
          if (j && l) e = (e + n) % m;  // b*b = a^n
          G.mul[idx(i, j)][idx(k, l)] = idx(e, jj);
        }
  return finish(G);
}

GroupTable symmetric_group(int n) {
  if (n <= 1) return cyclic_group(1);
  std::vector<Perm> gens;
  Perm cyc(n), tr(n);
  std::iota(tr.begin(), tr.end(), 0);
  std::swap(tr[0], tr[1]);
  for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
  gens.push_back(tr);
  gens.push_back(cyc);
  return from_permutations(gens, n);
}

GroupTable alternating_group(int n) {
  if (n <= 2) return cyclic_group(1);
  std::vector<Perm> gens;
  for (int i = 0; i + 2 < n + 0; ++i) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    // 3-cycle (i, i+1, i+2)
    p[i] = i + 1;
    p[i + 1] = i + 2;
    p[i + 2] = i;
    gens.push_back(p);
  }
  return from_permutations(gens, n);
}

GroupTable direct_product(const GroupTable& A, const GroupTable& B) {
  GroupTable G;
  const int na = A.order(), nb = B.order();
  auto idx = [&](int a, int b) { return a * nb + b; };
  for (int a = 0; a < na; ++a)
    for (int b = 0; b < nb; ++b)
      G.names.push_back("(" + A.names[a] + "," + B.names[b] + ")");
  G.unit = idx(A.unit, B.unit);
  G.mul.assign(na * nb, std::vector<int>(na * nb));
  for (int a = 0; a < na; ++a)
    for (int b = 0; b < nb; ++b)
      for (int c = 0; c < na; ++c)
        for (int d = 0; d < nb; ++d)
          G.mul[idx(a, b)][idx(c, d)] = idx(A.mul[a][c], B.mul[b][d]);
  return finish(G);
}

std::vector<int> generated_subgroup(const GroupTable& G, const std::vector<int>& gens) {
  std::set<int> closed{G.unit};
  std::vector<int> queue{G.unit};
  for (int g : gens)
    if (closed.insert(g).second) queue.push_back(g);
  for (size_t i = 0; i < queue.size(); ++i)
    for (int g : gens) {
      int v = G.mul[queue[i]][g];
      if (closed.insert(v).second) queue.push_back(v);
      v = G.mul[g][queue[i]];
      if (closed.insert(v).second) queue.push_back(v);
    }
  return std::vector<int>(closed.begin(), closed.end());
}

GroupTable subgroup_table(const GroupTable& G, const std::vector<int>& elements) {
  std::map<int, int> pos;
  for (size_t i = 0; i < elements.size(); ++i) pos[elements[i]] = static_cast<int>(i);
  GroupTable H;
  for (int e : elements) H.names.push_back(G.names[e]);
  H.unit = pos.at(G.unit);
  H.mul.assign(elements.size(), std::vector<int>(elements.size()));
  for (size_t a = 0; a < elements.size(); ++a)
    for (size_t b = 0; b < elements.size(); ++b) {
      auto it = pos.find(G.mul[elements[a]][elements[b]]);
      if (it == pos.end()) throw std::runtime_error("subgroup_table: set not closed");
      H.mul[a][b] = it->second;
    }
  return finish(H);
}

std::vector<std::pair<std::string, GroupTable>> groups_up_to_order(int max_order) {
  std::vector<std::pair<std::string, GroupTable>> out;
  auto add = [&](const std::string& nm, GroupTable g) {
    if (g.order() <= max_order) out.emplace_back(nm, std::move(g));
  };
  for (int n = 1; n <= std::min(max_order, 12); ++n)
    add("z" + std::to_string(n), cyclic_group(n));
  add("z2xz2", direct_product(cyclic_group(2), cyclic_group(2)));
  add("s3", symmetric_group(3));
  add("z2xz4", direct_product(cyclic_group(2), cyclic_group(4)));
  add("z2xz2xz2", direct_product(cyclic_group(2),
                                 direct_product(cyclic_group(2), cyclic_group(2))));
  add("d4", dihedral_group(4));
  add("q8", dicyclic_group(2));
  add("z3xz3", direct_product(cyclic_group(3), cyclic_group(3)));
  add("d5", dihedral_group(5));
  add("z2xz6", direct_product(cyclic_group(2), cyclic_group(6)));
  add("d6", dihedral_group(6));
  add("a4", alternating_group(4));
  add("dic3", dicyclic_group(3));
  return out;
}

GroupTable group_by_name(const std::string& name) {
  for (auto& [nm, g] : groups_up_to_order(12))
    if (nm == name) return g;
  if (name == "s4") return symmetric_group(4);
  if (name == "s5") return symmetric_group(5);
  if (name == "a5") return alternating_group(5);
  throw std::runtime_error("unknown group name: " + name);
}

std::vector<std::string> known_group_names() {
  std::vector<std::string> out;
  for (auto& [nm, g] : groups_up_to_order(12)) out.push_back(nm);
  out.push_back("s4");
  out.push_back("s5");
  out.push_back("a5");
  return out;
}

}  // namespace segal
