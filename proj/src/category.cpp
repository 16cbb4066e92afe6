#include "segal/category.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <stdexcept>

namespace segal {

int FiniteCategory::compose(int g, int f) const {
  auto it = comp.find({g, f});
  if (it == comp.end())
    throw std::runtime_error("composition undefined: " + mor_names[g] + " o " +
                             mor_names[f]);
  return it->second;
}

int FiniteSemicategory::compose(int g, int f) const {
  auto it = comp.find({g, f});
  if (it == comp.end())
    throw std::runtime_error("composition undefined: " + mor_names[g] + " o " +
                             mor_names[f]);
  return it->second;
}

namespace {

template <class Cat>
std::vector<std::string> validate_comp(const Cat& C) {
  std::vector<std::string> rep;
  const int m = C.num_morphisms();
  for (int f = 0; f < m; ++f) {
    if (C.src[f] < 0 || C.src[f] >= C.num_objects() || C.tgt[f] < 0 ||
        C.tgt[f] >= C.num_objects())
      rep.push_back("morphism " + C.mor_names[f] + " has bad endpoints");
  }
  for (int f = 0; f < m; ++f)
    for (int g = 0; g < m; ++g) {
      bool composable = C.tgt[f] == C.src[g];
      auto it = C.comp.find({g, f});
      if (composable != (it != C.comp.end())) {
        rep.push_back("composition partiality wrong at (" + C.mor_names[g] + "," +
                      C.mor_names[f] + ")");
        continue;
      }
      if (!composable) continue;
      int gf = it->second;
      if (C.src[gf] != C.src[f] || C.tgt[gf] != C.tgt[g])
        rep.push_back("composite endpoints wrong at (" + C.mor_names[g] + "," +
                      C.mor_names[f] + ")");
    }
  for (int f = 0; f < m && rep.empty(); ++f)
    for (int g = 0; g < m; ++g) {
      if (C.tgt[f] != C.src[g]) continue;
      for (int h = 0; h < m; ++h) {
        if (C.tgt[g] != C.src[h]) continue;
        if (C.comp.at({h, C.comp.at({g, f})}) != C.comp.at({C.comp.at({h, g}), f})) {
          rep.push_back("associativity fails at (" + C.mor_names[h] + "," +
                        C.mor_names[g] + "," + C.mor_names[f] + ")");
          return rep;
        }
      }
    }
  return rep;
}

}  // namespace

std::vector<std::string> validate_category(const FiniteCategory& C) {
  std::vector<std::string> rep;
  if (static_cast<int>(C.identity.size()) != C.num_objects())
    rep.push_back("missing identity table");
  else
    for (int x = 0; x < C.num_objects(); ++x) {
      int i = C.identity[x];
      if (C.src[i] != x || C.tgt[i] != x)
        rep.push_back("identity of " + C.objects[x] + " has wrong endpoints");
    }
  auto base = validate_comp(C);
  rep.insert(rep.end(), base.begin(), base.end());
  if (!rep.empty()) return rep;
  for (int f = 0; f < C.num_morphisms(); ++f) {
    if (C.comp.at({f, C.identity[C.src[f]]}) != f ||
        C.comp.at({C.identity[C.tgt[f]], f}) != f)
      rep.push_back("unit law fails at " + C.mor_names[f]);
  }
  return rep;
}

std::vector<std::string> validate_semicategory(const FiniteSemicategory& C) {
  return validate_comp(C);
}

std::vector<std::string> validate_monoid(const MonoidTable& M) {
  std::vector<std::string> rep;
  const int n = M.order();
  if (static_cast<int>(M.mul.size()) != n) {
    rep.push_back("table size mismatch");
    return rep;
  }
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(M.mul[a].size()) != n) {
      rep.push_back("row size mismatch");
      return rep;
    }
    if (M.mul[M.unit][a] != a || M.mul[a][M.unit] != a)
      rep.push_back("unit law fails at " + M.names[a]);
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (M.mul[M.mul[a][b]][c] != M.mul[a][M.mul[b][c]]) {
          rep.push_back("associativity fails at (" + M.names[a] + "," +
                        M.names[b] + "," + M.names[c] + ")");
          return rep;
        }
  return rep;
}

MonoidTable monoid_of_group(const GroupTable& G) {
  return MonoidTable{G.names, G.mul, G.unit};
}

MonoidTable right_projection_monoid(int order) {
  // not unital for order >= 2, so wrap with a fresh unit
  MonoidTable M;
  M.names.push_back("1");
  for (int i = 0; i < order; ++i) M.names.push_back("g" + std::to_string(i));
  const int n = order + 1;
  M.unit = 0;
  M.mul.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) M.mul[a][b] = b == 0 ? a : b;
  return M;
}

FiniteCategory category_of_monoid(const MonoidTable& M) {
  auto rep = validate_monoid(M);
  if (!rep.empty()) throw std::runtime_error("invalid monoid: " + rep.front());
  FiniteCategory C;
  C.objects = {"*"};
  C.mor_names = M.names;
  C.src.assign(M.order(), 0);
  C.tgt.assign(M.order(), 0);
  C.identity = {M.unit};
  for (int a = 0; a < M.order(); ++a)
    for (int b = 0; b < M.order(); ++b) C.comp[{a, b}] = M.mul[a][b];
  return C;
}

FiniteCategory category_of_group(const GroupTable& G) {
  return category_of_monoid(monoid_of_group(G));
}

FiniteCategory discrete_category(const std::vector<std::string>& objects) {
  FiniteCategory C;
  C.objects = objects;
  for (size_t x = 0; x < objects.size(); ++x) {
    C.mor_names.push_back("id_" + objects[x]);
    C.src.push_back(static_cast<int>(x));
    C.tgt.push_back(static_cast<int>(x));
    C.identity.push_back(static_cast<int>(x));
    C.comp[{static_cast<int>(x), static_cast<int>(x)}] = static_cast<int>(x);
  }
  return C;
}

FiniteCategory poset_category(const std::vector<std::string>& names,
                              const std::vector<std::vector<char>>& leq) {
  const int n = static_cast<int>(names.size());
  FiniteCategory C;
  C.objects = names;
  std::vector<std::vector<int>> mor(n, std::vector<int>(n, -1));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (leq[a][b]) {
        mor[a][b] = C.num_morphisms();
        C.mor_names.push_back(names[a] + "<=" + names[b]);
        C.src.push_back(a);
        C.tgt.push_back(b);
      }
  C.identity.resize(n);
  for (int a = 0; a < n; ++a) {
    if (mor[a][a] < 0) throw std::runtime_error("poset not reflexive at " + names[a]);
    C.identity[a] = mor[a][a];
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (leq[a][b] && leq[b][c]) {
          if (!leq[a][c]) throw std::runtime_error("poset not transitive");
          C.comp[{mor[b][c], mor[a][b]}] = mor[a][c];
        }
  auto rep = validate_category(C);
  if (!rep.empty()) throw std::runtime_error("invalid poset category: " + rep.front());
  return C;
}

std::vector<std::string> validate_endofunctor(const FiniteCategory& C,
                                              const Endofunctor& F) {
  std::vector<std::string> rep;
  if (static_cast<int>(F.obj.size()) != C.num_objects() ||
      static_cast<int>(F.mor.size()) != C.num_morphisms()) {
    rep.push_back("size mismatch");
    return rep;
  }
  for (int f = 0; f < C.num_morphisms(); ++f)
    if (C.src[F.mor[f]] != F.obj[C.src[f]] || C.tgt[F.mor[f]] != F.obj[C.tgt[f]]) {
      rep.push_back("endpoints not preserved at " + C.mor_names[f]);
      return rep;
    }
  for (int x = 0; x < C.num_objects(); ++x)
    if (F.mor[C.identity[x]] != C.identity[F.obj[x]])
      rep.push_back("identity not preserved at " + C.objects[x]);
  for (auto& [gf, h] : C.comp)
    if (C.comp.at({F.mor[gf.first], F.mor[gf.second]}) != F.mor[h]) {
      rep.push_back("composition not preserved");
      return rep;
    }
  return rep;
}

Endofunctor identity_endofunctor(const FiniteCategory& C) {
  Endofunctor F;
  F.obj.resize(C.num_objects());
  F.mor.resize(C.num_morphisms());
  for (int x = 0; x < C.num_objects(); ++x) F.obj[x] = x;
  for (int f = 0; f < C.num_morphisms(); ++f) F.mor[f] = f;
  return F;
}

Endofunctor monoid_endofunctor(const FiniteCategory& C, const std::vector<int>& f) {
  if (C.num_objects() != 1) throw std::runtime_error("not a one-object category");
  Endofunctor F;
  F.obj = {0};
  F.mor = f;
  auto rep = validate_endofunctor(C, F);
  if (!rep.empty()) throw std::runtime_error("not an endofunctor: " + rep.front());
  return F;
}

std::vector<std::string> validate_zporder(const ZPlusOrderedPoset& P) {
  std::vector<std::string> rep;
  const int n = P.size();
  for (int a = 0; a < n; ++a)
    if (!P.leq[a][a]) rep.push_back("not reflexive at " + P.names[a]);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a != b && P.leq[a][b] && P.leq[b][a])
        rep.push_back("not antisymmetric at (" + P.names[a] + "," + P.names[b] + ")");
      for (int c = 0; c < n; ++c)
        if (P.leq[a][b] && P.leq[b][c] && !P.leq[a][c]) {
          rep.push_back("not transitive");
          return rep;
        }
    }
  if (static_cast<int>(P.F.size()) != n) {
    rep.push_back("endomap size mismatch");
    return rep;
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (P.leq[a][b] && !P.leq[P.F[a]][P.F[b]]) {
        rep.push_back("endomap not monotone at (" + P.names[a] + "," + P.names[b] + ")");
        return rep;
      }
  return rep;
}

FiniteCategory poset_category(const ZPlusOrderedPoset& P) {
  return poset_category(P.names, P.leq);
}

Endofunctor poset_endofunctor(const ZPlusOrderedPoset& P, const FiniteCategory& C) {
  Endofunctor F;
  F.obj = P.F;
  F.mor.resize(C.num_morphisms());
  for (int f = 0; f < C.num_morphisms(); ++f) {
    int a = P.F[C.src[f]], b = P.F[C.tgt[f]];
    int img = -1;
    for (int g = 0; g < C.num_morphisms(); ++g)
      if (C.src[g] == a && C.tgt[g] == b) img = g;
    if (img < 0) throw std::runtime_error("endomap not monotone");
    F.mor[f] = img;
  }
  auto rep = validate_endofunctor(C, F);
  if (!rep.empty()) throw std::runtime_error("not an endofunctor: " + rep.front());
  return F;
}

ZPlusOrderedPoset chain_zporder(int size, const std::vector<int>& F) {
  ZPlusOrderedPoset P;
  for (int i = 0; i < size; ++i) P.names.push_back(std::to_string(i));
  P.leq.assign(size, std::vector<char>(size, 0));
  for (int a = 0; a < size; ++a)
    for (int b = a; b < size; ++b) P.leq[a][b] = 1;
  P.F = F;
  auto rep = validate_zporder(P);
  if (!rep.empty()) throw std::runtime_error("invalid chain order: " + rep.front());
  return P;
}

MonoidTable random_monoid(int carrier, int max_order, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> pick(0, carrier - 1);
  for (int attempt = 0; attempt < 200; ++attempt) {
    // transformation monoid generated by two random self-maps of {0..carrier-1}
    std::vector<std::vector<int>> gens(2, std::vector<int>(carrier));
    for (auto& g : gens)
      for (int& v : g) v = pick(rng);
    std::vector<int> id(carrier);
    for (int i = 0; i < carrier; ++i) id[i] = i;
    std::map<std::vector<int>, int> index;
    std::vector<std::vector<int>> elems{id};
    index[id] = 0;
    for (size_t i = 0; i < elems.size() && elems.size() <= size_t(max_order); ++i)
      for (auto& g : gens) {
        std::vector<int> h(carrier);
        for (int v = 0; v < carrier; ++v) h[v] = g[elems[i][v]];
        if (index.emplace(h, static_cast<int>(elems.size())).second)
          elems.push_back(h);
      }
    if (elems.size() > size_t(max_order)) continue;
    MonoidTable M;
    for (auto& e : elems) {
      std::string nm = "t";
      for (int v : e) nm += std::to_string(v);
      M.names.push_back(nm);
    }
    M.unit = 0;
    M.mul.assign(elems.size(), std::vector<int>(elems.size()));
    for (size_t a = 0; a < elems.size(); ++a)
      for (size_t b = 0; b < elems.size(); ++b) {
        std::vector<int> h(carrier);
        for (int v = 0; v < carrier; ++v) h[v] = elems[a][elems[b][v]];
        M.mul[a][b] = index.at(h);
      }
    if (validate_monoid(M).empty()) return M;
  }
  throw std::runtime_error("random_monoid: generation failed");
}

ZPlusOrderedPoset random_zporder(int size, unsigned seed) {
  std::mt19937 rng(seed);
  std::bernoulli_distribution coin(0.4);
  ZPlusOrderedPoset P;
  for (int i = 0; i < size; ++i) P.names.push_back("p" + std::to_string(i));
  P.leq.assign(size, std::vector<char>(size, 0));
  for (int a = 0; a < size; ++a) {
    P.leq[a][a] = 1;
    for (int b = a + 1; b < size; ++b) P.leq[a][b] = coin(rng);
  }
  for (int c = 0; c < size; ++c)  // transitive closure
    for (int a = 0; a < size; ++a)
      for (int b = 0; b < size; ++b)
        if (P.leq[a][c] && P.leq[c][b]) P.leq[a][b] = 1;
  std::uniform_int_distribution<int> pick(0, size - 1);
  for (int attempt = 0; attempt < 500; ++attempt) {
    P.F.assign(size, 0);
    for (int& v : P.F) v = pick(rng);
    if (validate_zporder(P).empty()) return P;
  }
  for (int i = 0; i < size; ++i) P.F[i] = i;  // identity always works
  return P;
}

namespace {

bool iso_search(const FiniteCategory& C, const FiniteCategory& D,
                std::vector<int>& omap, std::vector<int>& mmap, int next_obj) {
  const int no = C.num_objects();
  if (next_obj < no) {
    std::vector<char> used(no, 0);
    for (int x = 0; x < next_obj; ++x) used[omap[x]] = 1;
    for (int y = 0; y < no; ++y) {
      if (used[y]) continue;
      omap[next_obj] = y;
      if (iso_search(C, D, omap, mmap, next_obj + 1)) return true;
    }
    omap[next_obj] = -1;
    return false;
  }
  // objects fixed: match morphisms hom-set by hom-set with backtracking
  const int nm = C.num_morphisms();
  mmap.assign(nm, -1);
  std::vector<char> used(nm, 0);
  std::function<bool(int)> place = [&](int f) -> bool {
    if (f == nm) {
      for (int x = 0; x < no; ++x)
        if (mmap[C.identity[x]] != D.identity[omap[x]]) return false;
      for (auto& [gf, h] : C.comp)
        if (D.comp.at({mmap[gf.first], mmap[gf.second]}) != mmap[h]) return false;
      return true;
    }
    for (int g = 0; g < nm; ++g) {
      if (used[g] || D.src[g] != omap[C.src[f]] || D.tgt[g] != omap[C.tgt[f]])
        continue;
      // incremental consistency: all compositions among placed morphisms
      mmap[f] = g;
      used[g] = 1;
      bool ok = true;
      for (int e = 0; e <= f && ok; ++e) {
        if (mmap[e] < 0) continue;
        auto chk = [&](int a, int b) {
          if (C.tgt[b] != C.src[a]) return true;
          int c = C.comp.at({a, b});
          if (c > f || mmap[c] < 0) return true;
          return D.comp.at({mmap[a], mmap[b]}) == mmap[c];
        };
        if (!chk(f, e) || !chk(e, f)) ok = false;
      }
      if (ok && place(f + 1)) return true;
      used[g] = 0;
      mmap[f] = -1;
    }
    return false;
  };
  return place(0);
}

}  // namespace

bool categories_isomorphic(const FiniteCategory& C, const FiniteCategory& D) {
  if (C.num_objects() != D.num_objects() || C.num_morphisms() != D.num_morphisms())
    return false;
  std::vector<int> omap(C.num_objects(), -1), mmap;
  return iso_search(C, D, omap, mmap, 0);
}

}  // namespace segal
