#include "segal/groupoid.hpp"

#include "segal/sset.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace segal {

int FiniteGroupoid::compose(int g, int f) const {
  auto it = comp.find({g, f});
  if (it == comp.end())
    throw std::runtime_error("groupoid composition undefined: " + mor_names[g] +
                             " o " + mor_names[f]);
  return it->second;
}

std::vector<std::string> validate_groupoid(const FiniteGroupoid& X) {
  std::vector<std::string> rep;
  const int m = X.num_morphisms();
  if (static_cast<int>(X.identity.size()) != X.num_objects() ||
      static_cast<int>(X.inv.size()) != m) {
    rep.push_back("structural tables missing");
    return rep;
  }
  for (int x = 0; x < X.num_objects(); ++x) {
    int i = X.identity[x];
    if (X.src[i] != x || X.tgt[i] != x)
      rep.push_back("identity endpoints wrong at " + X.objects[x]);
  }
  std::vector<std::vector<int>> out(X.num_objects()), in(X.num_objects());
  for (int f = 0; f < m; ++f) {
    out[X.src[f]].push_back(f);
    in[X.tgt[f]].push_back(f);
  }
  long long composable = 0;
  for (int x = 0; x < X.num_objects(); ++x)
    composable += static_cast<long long>(in[x].size()) * out[x].size();
  if (composable != static_cast<long long>(X.comp.size())) {
    rep.push_back("composition partiality wrong");
    return rep;
  }
  for (auto& [gf, h] : X.comp) {
    auto [g, f] = gf;
    if (X.tgt[f] != X.src[g]) {
      rep.push_back("composition defined on non-composable pair");
      return rep;
    }
    if (X.src[h] != X.src[f] || X.tgt[h] != X.tgt[g]) {
      rep.push_back("composite endpoints wrong");
      return rep;
    }
  }
  for (int f = 0; f < m; ++f) {
    if (X.comp.at({f, X.identity[X.src[f]]}) != f ||
        X.comp.at({X.identity[X.tgt[f]], f}) != f)
      rep.push_back("unit law fails at " + X.mor_names[f]);
    if (X.src[X.inv[f]] != X.tgt[f] || X.tgt[X.inv[f]] != X.src[f] ||
        X.comp.at({X.inv[f], f}) != X.identity[X.src[f]] ||
        X.comp.at({f, X.inv[f]}) != X.identity[X.tgt[f]])
      rep.push_back("inverse law fails at " + X.mor_names[f]);
  }
  if (!rep.empty()) return rep;
  for (auto& [gf, c] : X.comp) {
    auto [g, f] = gf;
    for (int h : out[X.tgt[g]])
      if (X.comp.at({h, c}) != X.comp.at({X.comp.at({h, g}), f})) {
        rep.push_back("associativity fails");
        return rep;
      }
  }
  return rep;
}

std::vector<std::string> validate_functor(const FiniteGroupoid& A,
                                          const FiniteGroupoid& B,
                                          const GroupoidFunctor& F) {
  std::vector<std::string> rep;
  if (static_cast<int>(F.obj.size()) != A.num_objects() ||
      static_cast<int>(F.mor.size()) != A.num_morphisms()) {
    rep.push_back("size mismatch");
    return rep;
  }
  for (int f = 0; f < A.num_morphisms(); ++f)
    if (B.src[F.mor[f]] != F.obj[A.src[f]] || B.tgt[F.mor[f]] != F.obj[A.tgt[f]]) {
      rep.push_back("endpoints not preserved at " + A.mor_names[f]);
      return rep;
    }
  for (int x = 0; x < A.num_objects(); ++x)
    if (F.mor[A.identity[x]] != B.identity[F.obj[x]])
      rep.push_back("identities not preserved at " + A.objects[x]);
  for (auto& [gf, h] : A.comp)
    if (B.comp.at({F.mor[gf.first], F.mor[gf.second]}) != F.mor[h]) {
      rep.push_back("composition not preserved");
      return rep;
    }
  return rep;
}

GroupoidFunctor identity_functor(const FiniteGroupoid& X) {
  GroupoidFunctor F;
  F.obj.resize(X.num_objects());
  F.mor.resize(X.num_morphisms());
  std::iota(F.obj.begin(), F.obj.end(), 0);
  std::iota(F.mor.begin(), F.mor.end(), 0);
  return F;
}

GroupoidFunctor compose_functors(const GroupoidFunctor& G, const GroupoidFunctor& F) {
  GroupoidFunctor H;
  for (int x : F.obj) H.obj.push_back(G.obj[x]);
  for (int f : F.mor) H.mor.push_back(G.mor[f]);
  return H;
}

FiniteGroupoid delooping(const GroupTable& G) {
  FiniteGroupoid X;
  X.objects = {"*"};
  X.mor_names = G.names;
  X.src.assign(G.order(), 0);
  X.tgt.assign(G.order(), 0);
  X.inv = G.inv;
  X.identity = {G.unit};
  for (int a = 0; a < G.order(); ++a)
    for (int b = 0; b < G.order(); ++b) X.comp[{a, b}] = G.mul[a][b];
  return X;
}

FiniteGroupoid discrete_groupoid(const std::vector<std::string>& objects) {
  FiniteGroupoid X;
  X.objects = objects;
  for (size_t i = 0; i < objects.size(); ++i) {
    X.mor_names.push_back("id_" + objects[i]);
    X.src.push_back(static_cast<int>(i));
    X.tgt.push_back(static_cast<int>(i));
    X.inv.push_back(static_cast<int>(i));
    X.identity.push_back(static_cast<int>(i));
    X.comp[{static_cast<int>(i), static_cast<int>(i)}] = static_cast<int>(i);
  }
  return X;
}

FiniteGroupoid action_groupoid(const GroupTable& G,
                               const std::vector<std::string>& elem_names,
                               const std::vector<std::vector<int>>& act) {
  const int n = static_cast<int>(elem_names.size());
  if (static_cast<int>(act.size()) != G.order())
    throw std::runtime_error("action table size mismatch");
  for (int x = 0; x < n; ++x)
    if (act[G.unit][x] != x) throw std::runtime_error("unit does not act trivially");
  for (int g = 0; g < G.order(); ++g)
    for (int h = 0; h < G.order(); ++h)
      for (int x = 0; x < n; ++x)
        if (act[G.mul[g][h]][x] != act[g][act[h][x]])
          throw std::runtime_error("not a group action");
  FiniteGroupoid X;
  X.objects = elem_names;
  auto midx = [&](int g, int x) { return g * n + x; };
  for (int g = 0; g < G.order(); ++g)
    for (int x = 0; x < n; ++x) {
      X.mor_names.push_back("(" + G.names[g] + "," + elem_names[x] + ")");
      X.src.push_back(x);
      X.tgt.push_back(act[g][x]);
    }
  X.inv.resize(X.num_morphisms());
  X.identity.resize(n);
  for (int x = 0; x < n; ++x) X.identity[x] = midx(G.unit, x);
  for (int g = 0; g < G.order(); ++g)
    for (int x = 0; x < n; ++x)
      X.inv[midx(g, x)] = midx(G.inv[g], act[g][x]);
  for (int g = 0; g < G.order(); ++g)
    for (int h = 0; h < G.order(); ++h)
      for (int x = 0; x < n; ++x)
        X.comp[{midx(g, act[h][x]), midx(h, x)}] = midx(G.mul[g][h], x);
  return X;
}

Pi0 pi0(const FiniteGroupoid& X) {
  std::vector<int> parent(X.num_objects());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (int f = 0; f < X.num_morphisms(); ++f) {
    int a = find(X.src[f]), b = find(X.tgt[f]);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  Pi0 p;
  p.comp.assign(X.num_objects(), -1);
  for (int x = 0; x < X.num_objects(); ++x) {
    int r = find(x);
    if (p.comp[r] < 0) {
      p.comp[r] = static_cast<int>(p.reps.size());
      p.reps.push_back(r);
    }
    p.comp[x] = p.comp[r];
  }
  return p;
}

long long aut_size(const FiniteGroupoid& X, int obj) {
  long long c = 0;
  for (int f = 0; f < X.num_morphisms(); ++f)
    if (X.src[f] == obj && X.tgt[f] == obj) ++c;
  return c;
}

Rational cardinality(const FiniteGroupoid& X) {
  Rational total = 0;
  auto p = pi0(X);
  for (int r : p.reps) total += Rational(1) / aut_size(X, r);
  return total;
}

Rational orbifold_integral(const FiniteGroupoid& X, const std::vector<Rational>& phi) {
  auto p = pi0(X);
  if (phi.size() != p.reps.size())
    throw std::runtime_error("orbifold_integral: function size mismatch");
  Rational total = 0;
  for (size_t c = 0; c < p.reps.size(); ++c)
    total += phi[c] / aut_size(X, p.reps[c]);
  return total;
}

FiberProductResult two_fiber_product(const FiniteGroupoid& A, const FiniteGroupoid& B,
                                     const FiniteGroupoid& C, const GroupoidFunctor& F,
                                     const GroupoidFunctor& G, long long guard) {
  FiberProductResult R;
  auto& P = R.P;
  for (int a = 0; a < A.num_objects(); ++a)
    for (int b = 0; b < B.num_objects(); ++b)
      for (int phi = 0; phi < C.num_morphisms(); ++phi) {
        if (C.src[phi] != F.obj[a] || C.tgt[phi] != G.obj[b]) continue;
        if (static_cast<long long>(R.obj_data.size()) >= guard)
          throw SizeCapExceeded("two_fiber_product: object guard exceeded");
        R.obj_index[{a, b, phi}] = static_cast<int>(R.obj_data.size());
        R.obj_data.push_back({a, b, phi});
        P.objects.push_back("(" + A.objects[a] + ";" + B.objects[b] + ";" +
                            C.mor_names[phi] + ")");
      }
  long long mcount = 0;
  for (size_t o = 0; o < R.obj_data.size(); ++o) {
    auto [a, b, phi] = R.obj_data[o];
    for (int u = 0; u < A.num_morphisms(); ++u) {
      if (A.src[u] != a) continue;
      for (int v = 0; v < B.num_morphisms(); ++v) {
        if (B.src[v] != b) continue;
        // target connecting iso phi' = G(v) o phi o F(u)^{-1}
        int phi2 = C.compose(C.compose(G.mor[v], phi), C.inv[F.mor[u]]);
        if (++mcount > guard)
          throw SizeCapExceeded("two_fiber_product: morphism guard exceeded");
        int t = R.obj_index.at({A.tgt[u], B.tgt[v], phi2});
        R.mor_index[{u, v, static_cast<int>(o)}] =
            static_cast<int>(R.mor_data.size());
        R.mor_data.push_back({u, v});
        P.mor_names.push_back("(" + A.mor_names[u] + ";" + B.mor_names[v] + ")@" +
                              std::to_string(o));
        P.src.push_back(static_cast<int>(o));
        P.tgt.push_back(t);
      }
    }
  }
  const int M = static_cast<int>(R.mor_data.size());
  P.inv.resize(M);
  P.identity.resize(P.num_objects());
  for (int o = 0; o < P.num_objects(); ++o) {
    auto [a, b, phi] = R.obj_data[o];
    P.identity[o] = R.mor_index.at({A.identity[a], B.identity[b], o});
  }
  for (int m = 0; m < M; ++m) {
    auto [u, v] = R.mor_data[m];
    P.inv[m] = R.mor_index.at({A.inv[u], B.inv[v], P.tgt[m]});
  }
  std::vector<std::vector<int>> in_at(P.num_objects()), out_at(P.num_objects());
  for (int m = 0; m < M; ++m) {
    in_at[P.tgt[m]].push_back(m);
    out_at[P.src[m]].push_back(m);
  }
  for (int o = 0; o < P.num_objects(); ++o)
    for (int m1 : in_at[o])
      for (int m2 : out_at[o]) {
        auto [u1, v1] = R.mor_data[m1];
        auto [u2, v2] = R.mor_data[m2];
        P.comp[{m2, m1}] =
            R.mor_index.at({A.comp.at({u2, u1}), B.comp.at({v2, v1}), P.src[m1]});
      }
  R.to_A.obj.resize(P.num_objects());
  R.to_B.obj.resize(P.num_objects());
  for (int o = 0; o < P.num_objects(); ++o) {
    R.to_A.obj[o] = R.obj_data[o][0];
    R.to_B.obj[o] = R.obj_data[o][1];
  }
  for (int m = 0; m < M; ++m) {
    R.to_A.mor.push_back(R.mor_data[m][0]);
    R.to_B.mor.push_back(R.mor_data[m][1]);
  }
  return R;
}

SkeletonResult skeletonize(const FiniteGroupoid& X) {
  SkeletonResult R;
  auto p = pi0(X);
  R.rep_of.resize(X.num_objects());
  R.theta.assign(X.num_objects(), -1);
  for (int x = 0; x < X.num_objects(); ++x) R.rep_of[x] = p.reps[p.comp[x]];
  // BFS from reps along morphisms to pick theta[x]: x -> rep
  for (int r : p.reps) R.theta[r] = X.identity[r];
  bool changed = true;
  while (changed) {
    changed = false;
    for (int f = 0; f < X.num_morphisms(); ++f) {
      // f : s -> t; if theta[t] known and theta[s] not: theta[s] = theta[t] o f
      int s = X.src[f], t = X.tgt[f];
      if (R.theta[t] >= 0 && R.theta[s] < 0) {
        R.theta[s] = X.compose(R.theta[t], f);
        changed = true;
      }
      if (R.theta[s] >= 0 && R.theta[t] < 0) {
        R.theta[t] = X.compose(R.theta[s], X.inv[f]);
        changed = true;
      }
    }
  }
  R.skel_obj.assign(X.num_objects(), -1);
  R.skel_mor.assign(X.num_morphisms(), -1);
  std::vector<char> is_rep(X.num_objects(), 0);
  for (int r : p.reps) is_rep[r] = 1;
  auto& S = R.S;
  for (int r : p.reps) {
    R.skel_obj[r] = S.num_objects();
    S.objects.push_back(X.objects[r]);
    R.incl.obj.push_back(r);
  }
  std::vector<int> back;  // S morphism -> X morphism
  for (int f = 0; f < X.num_morphisms(); ++f) {
    if (!is_rep[X.src[f]] || !is_rep[X.tgt[f]]) continue;
    R.skel_mor[f] = S.num_morphisms();
    back.push_back(f);
    S.mor_names.push_back(X.mor_names[f]);
    S.src.push_back(R.skel_obj[X.src[f]]);
    S.tgt.push_back(R.skel_obj[X.tgt[f]]);
    R.incl.mor.push_back(f);
  }
  S.identity.resize(S.num_objects());
  for (int r : p.reps) S.identity[R.skel_obj[r]] = R.skel_mor[X.identity[r]];
  S.inv.resize(S.num_morphisms());
  for (int m = 0; m < S.num_morphisms(); ++m) S.inv[m] = R.skel_mor[X.inv[back[m]]];
  for (int m1 = 0; m1 < S.num_morphisms(); ++m1)
    for (int m2 = 0; m2 < S.num_morphisms(); ++m2) {
      if (S.tgt[m1] != S.src[m2]) continue;
      S.comp[{m2, m1}] = R.skel_mor[X.compose(back[m2], back[m1])];
    }
  return R;
}

EquivalenceVerdict equivalence_check(const FiniteGroupoid& A, const FiniteGroupoid& B,
                                     const GroupoidFunctor& F) {
  EquivalenceVerdict v;
  auto frep = validate_functor(A, B, F);
  if (!frep.empty()) {
    v.holds = false;
    v.witness = "not a functor: " + frep.front();
    return v;
  }
  auto pb = pi0(B);
  std::vector<char> hit(pb.count(), 0);
  for (int x : F.obj) hit[pb.comp[x]] = 1;
  for (int c = 0; c < pb.count(); ++c)
    if (!hit[c]) {
      v.holds = false;
      v.witness = "not essentially surjective at " + B.objects[pb.reps[c]];
      return v;
    }
  std::map<std::pair<int, int>, std::vector<int>> homA;
  for (int f = 0; f < A.num_morphisms(); ++f)
    homA[{A.src[f], A.tgt[f]}].push_back(f);
  std::map<std::pair<int, int>, long long> homB;
  for (int g = 0; g < B.num_morphisms(); ++g) ++homB[{B.src[g], B.tgt[g]}];
  for (int a = 0; a < A.num_objects(); ++a)
    for (int a2 = 0; a2 < A.num_objects(); ++a2) {
      auto ha = homA.find({a, a2});
      long long asize = ha == homA.end() ? 0 : static_cast<long long>(ha->second.size());
      auto hb = homB.find({F.obj[a], F.obj[a2]});
      long long bsize = hb == homB.end() ? 0 : hb->second;
      bool inj = true;
      if (ha != homA.end()) {
        std::vector<int> images;
        for (int f : ha->second) images.push_back(F.mor[f]);
        std::sort(images.begin(), images.end());
        inj = std::adjacent_find(images.begin(), images.end()) == images.end();
      }
      if (!inj || asize != bsize) {
        v.holds = false;
        v.witness = "not fully faithful on Hom(" + A.objects[a] + "," +
                    A.objects[a2] + "): " + std::to_string(asize) + " vs " +
                    std::to_string(bsize) + (inj ? "" : " (not injective)");
        return v;
      }
    }
  return v;
}

GroupoidProductResult product_groupoid(const FiniteGroupoid& A,
                                       const FiniteGroupoid& B) {
  GroupoidProductResult R;
  auto& P = R.P;
  for (int a = 0; a < A.num_objects(); ++a)
    for (int b = 0; b < B.num_objects(); ++b) {
      R.obj_index[{a, b}] = P.num_objects();
      P.objects.push_back("(" + A.objects[a] + "," + B.objects[b] + ")");
    }
  for (int u = 0; u < A.num_morphisms(); ++u)
    for (int v = 0; v < B.num_morphisms(); ++v) {
      R.mor_index[{u, v}] = P.num_morphisms();
      P.mor_names.push_back("(" + A.mor_names[u] + "," + B.mor_names[v] + ")");
      P.src.push_back(R.obj_index.at({A.src[u], B.src[v]}));
      P.tgt.push_back(R.obj_index.at({A.tgt[u], B.tgt[v]}));
      P.inv.push_back(-1);
    }
  for (int u = 0; u < A.num_morphisms(); ++u)
    for (int v = 0; v < B.num_morphisms(); ++v)
      P.inv[R.mor_index.at({u, v})] = R.mor_index.at({A.inv[u], B.inv[v]});
  P.identity.resize(P.num_objects());
  for (int a = 0; a < A.num_objects(); ++a)
    for (int b = 0; b < B.num_objects(); ++b)
      P.identity[R.obj_index.at({a, b})] =
          R.mor_index.at({A.identity[a], B.identity[b]});
  for (auto& [uf, uc] : A.comp)
    for (auto& [vf, vc] : B.comp)
      P.comp[{R.mor_index.at({uf.first, vf.first}),
              R.mor_index.at({uf.second, vf.second})}] = R.mor_index.at({uc, vc});
  return R;
}

GroupoidFunctor pair_functor(const GroupoidProductResult& P,
                             const GroupoidFunctor& F, const GroupoidFunctor& G) {
  GroupoidFunctor H;
  for (size_t x = 0; x < F.obj.size(); ++x)
    H.obj.push_back(P.obj_index.at({F.obj[x], G.obj[x]}));
  for (size_t f = 0; f < F.mor.size(); ++f)
    H.mor.push_back(P.mor_index.at({F.mor[f], G.mor[f]}));
  return H;
}

std::vector<Rational> pushforward(const FiniteGroupoid& A, const FiniteGroupoid& B,
                                  const GroupoidFunctor& F,
                                  const std::vector<Rational>& phi) {
  auto pa = pi0(A);
  auto pb = pi0(B);
  if (phi.size() != pa.reps.size())
    throw std::runtime_error("pushforward: function size mismatch");
  std::vector<Rational> out(pb.count(), Rational(0));
  for (int c = 0; c < pb.count(); ++c) {
    int y = pb.reps[c];
    // homotopy fiber over y: A x_B pt_y
    FiniteGroupoid pt = discrete_groupoid({B.objects[y]});
    GroupoidFunctor at_y{{y}, {B.identity[y]}};
    auto fib = two_fiber_product(A, pt, B, F, at_y);
    std::vector<Rational> lifted;
    auto pf = pi0(fib.P);
    for (int r : pf.reps) lifted.push_back(phi[pa.comp[fib.to_A.obj[r]]]);
    out[c] = orbifold_integral(fib.P, lifted);
  }
  return out;
}

std::vector<Rational> pullback(const FiniteGroupoid& A, const FiniteGroupoid& B,
                               const GroupoidFunctor& F,
                               const std::vector<Rational>& psi) {
  auto pa = pi0(A);
  auto pb = pi0(B);
  if (psi.size() != pb.reps.size())
    throw std::runtime_error("pullback: function size mismatch");
  std::vector<Rational> out;
  for (int r : pa.reps) out.push_back(psi[pb.comp[F.obj[r]]]);
  return out;
}

}  // namespace segal
