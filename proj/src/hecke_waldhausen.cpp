#include "segal/groupoid.hpp"
#include "segal/sset.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace segal {

std::vector<std::string> validate_simplicial_groupoid(const SimplicialGroupoid& S) {
  std::vector<std::string> rep;
  const int N = S.truncation;
  if (static_cast<int>(S.level.size()) != N + 1) {
    rep.push_back("level count mismatch");
    return rep;
  }
  for (int n = 0; n <= N; ++n) {
    auto r = validate_groupoid(S.level[n]);
    if (!r.empty()) {
      rep.push_back("level " + std::to_string(n) + ": " + r.front());
      return rep;
    }
  }
  for (int n = 1; n <= N; ++n)
    for (int i = 0; i <= n; ++i) {
      auto r = validate_functor(S.level[n], S.level[n - 1], S.face[n][i]);
      if (!r.empty()) rep.push_back("face functor invalid");
    }
  for (int n = 0; n < N; ++n)
    for (int i = 0; i <= n; ++i) {
      auto r = validate_functor(S.level[n], S.level[n + 1], S.degen[n][i]);
      if (!r.empty()) rep.push_back("degeneracy functor invalid");
    }
  if (!rep.empty()) return rep;
  // simplicial identities on object and morphism maps
  auto eq = [](const GroupoidFunctor& F, const GroupoidFunctor& G) {
    return F.obj == G.obj && F.mor == G.mor;
  };
  for (int n = 2; n <= N; ++n)
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j <= n; ++j)
        if (!eq(compose_functors(S.face[n - 1][i], S.face[n][j]),
                compose_functors(S.face[n - 1][j - 1], S.face[n][i]))) {
          rep.push_back("face identity fails at level " + std::to_string(n));
          return rep;
        }
  for (int n = 0; n <= N - 2; ++n)
    for (int i = 0; i <= n; ++i)
      for (int j = i; j <= n; ++j)
        if (!eq(compose_functors(S.degen[n + 1][i], S.degen[n][j]),
                compose_functors(S.degen[n + 1][j + 1], S.degen[n][i]))) {
          rep.push_back("degeneracy identity fails at level " + std::to_string(n));
          return rep;
        }
  for (int n = 1; n <= N - 1; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= n + 1; ++i) {
        // d_i s_j identities
        const auto& s_j = S.degen[n][j];
        const auto& d_i = S.face[n + 1][i];
        GroupoidFunctor lhs = compose_functors(d_i, s_j);
        GroupoidFunctor rhs;
        if (i == j || i == j + 1)
          rhs = identity_functor(S.level[n]);
        else if (i < j)
          rhs = compose_functors(S.degen[n - 1][j - 1], S.face[n][i]);
        else
          rhs = compose_functors(S.degen[n - 1][j], S.face[n][i - 1]);
        if (!eq(lhs, rhs)) {
          rep.push_back("mixed identity fails at level " + std::to_string(n));
          return rep;
        }
      }
  return rep;
}

SimplicialGroupoid hecke_waldhausen(const GroupTable& G,
                                    const std::vector<int>& K_elements, int N) {
  auto grep = validate_group(G);
  if (!grep.empty()) throw std::runtime_error("invalid group: " + grep.front());
  std::set<int> K(K_elements.begin(), K_elements.end());
  if (!K.count(G.unit)) throw std::runtime_error("subgroup must contain the unit");
  for (int a : K)
    for (int b : K)
      if (!K.count(G.mul[a][G.inv[b]]))
        throw std::runtime_error("not a subgroup: " + G.names[a] + "," + G.names[b]);
  // cosets gK
  std::vector<int> coset_of(G.order(), -1);
  std::vector<int> coset_reps;
  for (int g = 0; g < G.order(); ++g) {
    if (coset_of[g] >= 0) continue;
    int c = static_cast<int>(coset_reps.size());
    coset_reps.push_back(g);
    for (int k : K) coset_of[G.mul[g][k]] = c;
  }
  const int nc = static_cast<int>(coset_reps.size());
  // g . (hK) = (gh)K
  std::vector<std::vector<int>> coset_act(G.order(), std::vector<int>(nc));
  for (int g = 0; g < G.order(); ++g)
    for (int c = 0; c < nc; ++c)
      coset_act[g][c] = coset_of[G.mul[g][coset_reps[c]]];

  SimplicialGroupoid S;
  S.truncation = N;
  std::vector<std::vector<std::vector<int>>> tuples(N + 1);
  std::vector<std::map<std::vector<int>, int>> index(N + 1);
  for (int n = 0; n <= N; ++n) {
    std::vector<int> t(n + 1, 0);
    while (true) {
      index[n][t] = static_cast<int>(tuples[n].size());
      tuples[n].push_back(t);
      int p = n;
      while (p >= 0 && t[p] == nc - 1) t[p--] = 0;
      if (p < 0) break;
      ++t[p];
    }
    std::vector<std::string> names;
    std::vector<std::vector<int>> act(G.order(), std::vector<int>(tuples[n].size()));
    for (size_t e = 0; e < tuples[n].size(); ++e) {
      std::string nm;
      for (int c : tuples[n][e])
        nm += (nm.empty() ? "" : "|") + G.names[coset_reps[c]] + "K";
      names.push_back(nm);
      for (int g = 0; g < G.order(); ++g) {
        std::vector<int> gt(n + 1);
        for (int i = 0; i <= n; ++i) gt[i] = coset_act[g][tuples[n][e][i]];
        act[g][e] = index[n].at(gt);
      }
    }
    S.level.push_back(action_groupoid(G, names, act));
  }
  S.face.resize(N + 1);
  S.degen.resize(N + 1);
  auto morph = [&](int n, int g, int e) {
    // morphism index in action_groupoid at level n
    return g * static_cast<int>(tuples[n].size()) + e;
  };
  for (int n = 1; n <= N; ++n) {
    S.face[n].resize(n + 1);
    for (int i = 0; i <= n; ++i) {
      GroupoidFunctor F;
      F.obj.resize(tuples[n].size());
      for (size_t e = 0; e < tuples[n].size(); ++e) {
        std::vector<int> t = tuples[n][e];
        t.erase(t.begin() + i);
        F.obj[e] = index[n - 1].at(t);
      }
      for (int g = 0; g < G.order(); ++g)
        for (size_t e = 0; e < tuples[n].size(); ++e)
          F.mor.push_back(morph(n - 1, g, F.obj[e]));
      S.face[n][i] = std::move(F);
    }
  }
  for (int n = 0; n < N; ++n) {
    S.degen[n].resize(n + 1);
    for (int i = 0; i <= n; ++i) {
      GroupoidFunctor F;
      F.obj.resize(tuples[n].size());
      for (size_t e = 0; e < tuples[n].size(); ++e) {
        std::vector<int> t = tuples[n][e];
        t.insert(t.begin() + i, t[i]);
        F.obj[e] = index[n + 1].at(t);
      }
      for (int g = 0; g < G.order(); ++g)
        for (size_t e = 0; e < tuples[n].size(); ++e)
          F.mor.push_back(morph(n + 1, g, F.obj[e]));
      S.degen[n][i] = std::move(F);
    }
  }
  auto rep = validate_simplicial_groupoid(S);
  if (!rep.empty())
    throw std::runtime_error("hecke_waldhausen invalid: " + rep.front());
  return S;
}

namespace {

// restriction of a level-n object/morphism to the edge {i-1, i}
GroupoidFunctor edge_functor(const SimplicialGroupoid& S, int n, int i) {
  GroupoidFunctor F = identity_functor(S.level[n]);
  int lvl = n;
  for (int j = n; j >= 0; --j) {
    if (j == i - 1 || j == i) continue;
    F = compose_functors(S.face[lvl][j], F);
    --lvl;
  }
  return F;
}

}  // namespace

GroupoidSegalVerdict check_1segal_groupoid(const SimplicialGroupoid& S, int up_to,
                                           long long guard) {
  GroupoidSegalVerdict v;
  if (up_to > S.truncation)
    throw InsufficientTruncation("check_1segal_groupoid: up_to exceeds truncation");
  auto sk0 = skeletonize(S.level[0]);
  auto sk1 = skeletonize(S.level[1]);
  // legs D_i : sk1 -> sk0 (face, then conjugate into the skeleton)
  auto make_leg = [&](int i) {
    const auto& d = S.face[1][i];
    const auto& X0 = S.level[0];
    GroupoidFunctor L;
    for (int o = 0; o < sk1.S.num_objects(); ++o) {
      int a = d.obj[sk1.incl.obj[o]];
      L.obj.push_back(sk0.skel_obj[sk0.rep_of[a]]);
    }
    for (int m = 0; m < sk1.S.num_morphisms(); ++m) {
      int f = d.mor[sk1.incl.mor[m]];  // in X0
      int conj = X0.compose(sk0.theta[X0.tgt[f]],
                            X0.compose(f, X0.inv[sk0.theta[X0.src[f]]]));
      L.mor.push_back(sk0.skel_mor[conj]);
    }
    return L;
  };
  GroupoidFunctor D0 = make_leg(0), D1 = make_leg(1);
  {
    auto r0 = validate_functor(sk1.S, sk0.S, D0);
    auto r1 = validate_functor(sk1.S, sk0.S, D1);
    if (!r0.empty() || !r1.empty())
      throw std::runtime_error("skeleton legs not functorial");
  }
  // NOTE on edge orientation: an object (x_0, x_1) of S_1 restricts to
  // vertex 0 via face d_1 and to vertex 1 via d_0; the edge from vertex i-1
  // to vertex i therefore uses D1 on the left and D0 on the right.
  for (int n = 2; n <= up_to; ++n) {
    // iterated product P_n = sk1 x_{sk0} ... x_{sk0} sk1 (n factors)
    std::vector<FiberProductResult> steps;
    steps.push_back(two_fiber_product(sk1.S, sk1.S, sk0.S, D0, D1, guard));
    for (int k = 3; k <= n; ++k) {
      // leg from the previous product: D0 o (projection to last factor)
      GroupoidFunctor leg = compose_functors(D0, steps.back().to_B);
      steps.push_back(
          two_fiber_product(steps.back().P, sk1.S, sk0.S, leg, D1, guard));
    }
    const auto& Pn = steps.back().P;
    // comparison functor phi_n : S_n -> P_n
    const auto& Sn = S.level[n];
    const auto& X1 = S.level[1];
    const auto& X0 = S.level[0];
    std::vector<GroupoidFunctor> edges;
    for (int i = 1; i <= n; ++i) edges.push_back(edge_functor(S, n, i));
    GroupoidFunctor phi;
    phi.obj.resize(Sn.num_objects());
    for (int o = 0; o < Sn.num_objects(); ++o) {
      std::vector<int> xs, phis;
      for (int i = 0; i < n; ++i) {
        int sig = edges[i].obj[o];  // in X1
        xs.push_back(sk1.skel_obj[sk1.rep_of[sig]]);
      }
      for (int i = 0; i + 1 < n; ++i) {
        int si = edges[i].obj[o], si1 = edges[i + 1].obj[o];
        int u_i = sk1.theta[si], u_i1 = sk1.theta[si1];
        // chi : d_0(rep si) -> d_1(rep si1) in X0
        int chi = X0.compose(S.face[1][1].mor[u_i1],
                             X0.inv[S.face[1][0].mor[u_i]]);
        int conj = X0.compose(sk0.theta[X0.tgt[chi]],
                              X0.compose(chi, X0.inv[sk0.theta[X0.src[chi]]]));
        phis.push_back(sk0.skel_mor[conj]);
      }
      // assemble nested object index
      int cur = steps[0].obj_index.at({xs[0], xs[1], phis[0]});
      for (int k = 3; k <= n; ++k)
        cur = steps[k - 2].obj_index.at({cur, xs[k - 1], phis[k - 2]});
      phi.obj[o] = cur;
    }
    phi.mor.resize(Sn.num_morphisms());
    for (int m = 0; m < Sn.num_morphisms(); ++m) {
      std::vector<int> us;
      for (int i = 0; i < n; ++i) {
        int em = edges[i].mor[m];  // sigma_i -> tau_i in X1
        int rho = X1.compose(sk1.theta[X1.tgt[em]],
                             X1.compose(em, X1.inv[sk1.theta[X1.src[em]]]));
        us.push_back(sk1.skel_mor[rho]);
      }
      // nested morphism lookup needs nested source objects
      int src_obj = phi.obj[Sn.src[m]];
      // recover intermediate source objects from obj_data chains
      std::vector<int> nested_src(n - 1);
      {
        int cur = src_obj;
        for (int k = n; k >= 3; --k) {
          nested_src[k - 2] = cur;
          cur = steps[k - 2].obj_data[cur][0];
        }
        nested_src[0] = cur;
      }
      int cur = steps[0].mor_index.at({us[0], us[1], nested_src[0]});
      for (int k = 3; k <= n; ++k)
        cur = steps[k - 2].mor_index.at({cur, us[k - 1], nested_src[k - 2]});
      phi.mor[m] = cur;
    }
    auto frep = validate_functor(Sn, Pn, phi);
    if (!frep.empty())
      throw std::runtime_error("comparison functor invalid at n=" +
                               std::to_string(n) + ": " + frep.front());
    auto eq = equivalence_check(Sn, Pn, phi);
    if (!eq.holds) {
      v.holds = false;
      v.level = n;
      v.witness = eq.witness;
      return v;
    }
  }
  return v;
}

}  // namespace segal
