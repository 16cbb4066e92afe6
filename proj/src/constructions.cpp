#include "segal/constructions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace segal {

namespace {

std::string chain_id(const std::vector<std::string>& parts) {
  if (parts.empty()) return "()";
  std::string s = parts[0];
  for (size_t i = 1; i < parts.size(); ++i) s += "|" + parts[i];
  return s;
}

// Shared scaffolding for nerve-like constructions: levels are tuples of
// morphism indices; the caller provides the tuple enumeration and the
// face/degeneracy recursions on tuples.
struct TupleLevels {
  std::vector<std::vector<std::vector<int>>> tuples;  // per level
  std::vector<std::map<std::vector<int>, int>> index;

  int add_level(std::vector<std::vector<int>> t) {
    std::sort(t.begin(), t.end());
    index.emplace_back();
    for (size_t i = 0; i < t.size(); ++i) index.back()[t[i]] = static_cast<int>(i);
    tuples.push_back(std::move(t));
    return static_cast<int>(tuples.size()) - 1;
  }
  int at(int n, const std::vector<int>& t) const { return index[n].at(t); }
};

void check_cap(long long total, long long cap) {
  if (total > cap) throw SizeCapExceeded("size cap exceeded: " + std::to_string(total) +
                                         " > " + std::to_string(cap));
}

}  // namespace

SSet nerve(const FiniteCategory& C, int N, long long max_simplices) {
  auto rep = validate_category(C);
  if (!rep.empty()) throw std::runtime_error("invalid category: " + rep.front());
  SSet X;
  X.kind = SSet::Kind::simplicial;
  X.truncation = N;
  TupleLevels L;
  // level 0: objects, encoded as 1-tuples (object index)
  std::vector<std::vector<int>> t0;
  for (int x = 0; x < C.num_objects(); ++x) t0.push_back({x});
  L.add_level(t0);
  long long total = C.num_objects();
  for (int n = 1; n <= N; ++n) {
    std::vector<std::vector<int>> tn;
    for (auto& prev : L.tuples[n - 1]) {
      for (int f = 0; f < C.num_morphisms(); ++f) {
        if (n == 1) {
          if (C.src[f] == prev[0]) tn.push_back({f});
        } else if (C.src[f] == C.tgt[prev.back()]) {
          auto t = prev;
          t.push_back(f);
          tn.push_back(std::move(t));
        }
      }
    }
    total += static_cast<long long>(tn.size());
    check_cap(total, max_simplices);
    L.add_level(std::move(tn));
  }
  X.ids.resize(N + 1);
  for (int x = 0; x < C.num_objects(); ++x) X.ids[0].push_back(C.objects[x]);
  for (int n = 1; n <= N; ++n)
    for (auto& t : L.tuples[n]) {
      std::vector<std::string> parts;
      for (int f : t) parts.push_back(C.mor_names[f]);
      X.ids[n].push_back(chain_id(parts));
    }
  X.face.resize(N + 1);
  X.degen.resize(N + 1);
  for (int n = 1; n <= N; ++n) {
    X.face[n].assign(n + 1, std::vector<int>(L.tuples[n].size()));
    for (size_t e = 0; e < L.tuples[n].size(); ++e) {
      const auto& t = L.tuples[n][e];
      for (int i = 0; i <= n; ++i) {
        if (n == 1) {
          X.face[1][i][e] = L.at(0, {i == 0 ? C.tgt[t[0]] : C.src[t[0]]});
          continue;
        }
        std::vector<int> ft;
        if (i == 0)
          ft.assign(t.begin() + 1, t.end());
        else if (i == n)
          ft.assign(t.begin(), t.end() - 1);
        else {
          ft.assign(t.begin(), t.begin() + (i - 1));
          ft.push_back(C.compose(t[i], t[i - 1]));
          ft.insert(ft.end(), t.begin() + i + 1, t.end());
        }
        X.face[n][i][e] = L.at(n - 1, ft);
      }
    }
  }
  for (int n = 0; n < N; ++n) {
    X.degen[n].assign(n + 1, std::vector<int>(L.tuples[n].size()));
    for (size_t e = 0; e < L.tuples[n].size(); ++e) {
      const auto& t = L.tuples[n][e];
      for (int i = 0; i <= n; ++i) {
        std::vector<int> st;
        if (n == 0) {
          st = {C.identity[t[0]]};
        } else {
          // insert identity at vertex i of the chain
          int obj = i == 0 ? C.src[t[0]] : C.tgt[t[i - 1]];
          st.assign(t.begin(), t.begin() + i);
          st.push_back(C.identity[obj]);
          st.insert(st.end(), t.begin() + i, t.end());
        }
        X.degen[n][i][e] = L.at(n + 1, st);
      }
    }
  }
  auto vrep = validate(X);
  if (!vrep.empty()) throw std::runtime_error("nerve invalid: " + vrep.front());
  return X;
}

SSet nerve_semicategory(const FiniteSemicategory& S, int N, long long max_simplices) {
  auto rep = validate_semicategory(S);
  if (!rep.empty()) throw std::runtime_error("invalid semicategory: " + rep.front());
  // reuse the nerve recursion through a category-shaped view, then strip
  FiniteCategory C;
  C.objects = S.objects;
  C.mor_names = S.mor_names;
  C.src = S.src;
  C.tgt = S.tgt;
  C.comp = S.comp;
  SSet X;
  X.kind = SSet::Kind::semisimplicial;
  X.truncation = N;
  TupleLevels L;
  std::vector<std::vector<int>> t0;
  for (int x = 0; x < C.num_objects(); ++x) t0.push_back({x});
  L.add_level(t0);
  long long total = C.num_objects();
  for (int n = 1; n <= N; ++n) {
    std::vector<std::vector<int>> tn;
    for (auto& prev : L.tuples[n - 1])
      for (int f = 0; f < C.num_morphisms(); ++f) {
        if (n == 1) {
          if (C.src[f] == prev[0]) tn.push_back({f});
        } else if (C.src[f] == C.tgt[prev.back()]) {
          auto t = prev;
          t.push_back(f);
          tn.push_back(std::move(t));
        }
      }
    total += static_cast<long long>(tn.size());
    check_cap(total, max_simplices);
    L.add_level(std::move(tn));
  }
  X.ids.resize(N + 1);
  for (int x = 0; x < C.num_objects(); ++x) X.ids[0].push_back(C.objects[x]);
  for (int n = 1; n <= N; ++n)
    for (auto& t : L.tuples[n]) {
      std::vector<std::string> parts;
      for (int f : t) parts.push_back(C.mor_names[f]);
      X.ids[n].push_back(chain_id(parts));
    }
  X.face.resize(N + 1);
  for (int n = 1; n <= N; ++n) {
    X.face[n].assign(n + 1, std::vector<int>(L.tuples[n].size()));
    for (size_t e = 0; e < L.tuples[n].size(); ++e) {
      const auto& t = L.tuples[n][e];
      for (int i = 0; i <= n; ++i) {
        if (n == 1) {
          X.face[1][i][e] = L.at(0, {i == 0 ? C.tgt[t[0]] : C.src[t[0]]});
          continue;
        }
        std::vector<int> ft;
        if (i == 0)
          ft.assign(t.begin() + 1, t.end());
        else if (i == n)
          ft.assign(t.begin(), t.end() - 1);
        else {
          ft.assign(t.begin(), t.begin() + (i - 1));
          ft.push_back(C.compose(t[i], t[i - 1]));
          ft.insert(ft.end(), t.begin() + i + 1, t.end());
        }
        X.face[n][i][e] = L.at(n - 1, ft);
      }
    }
  }
  auto vrep = validate(X);
  if (!vrep.empty()) throw std::runtime_error("nerve invalid: " + vrep.front());
  return X;
}

SSet twisted_cyclic_nerve(const FiniteCategory& C, const Endofunctor& F, int N,
                          long long max_simplices) {
  auto crep = validate_category(C);
  if (!crep.empty()) throw std::runtime_error("invalid category: " + crep.front());
  auto frep = validate_endofunctor(C, F);
  if (!frep.empty()) throw std::runtime_error("invalid endofunctor: " + frep.front());
  // level n tuples (u_0,...,u_n): x_0 -> ... -> x_n -> F(x_0)
  SSet X;
  X.kind = SSet::Kind::simplicial;
  X.truncation = N;
  TupleLevels L;
  std::vector<std::vector<int>> t0;
  for (int u = 0; u < C.num_morphisms(); ++u)
    if (C.tgt[u] == F.obj[C.src[u]]) t0.push_back({u});
  L.add_level(t0);
  long long total = static_cast<long long>(t0.size());
  for (int n = 1; n <= N; ++n) {
    std::vector<std::vector<int>> tn;
    // enumerate composable chains (u_0..u_{n-1}), then all closings
    // u_n : x_n -> F(x_0)
    std::vector<std::vector<int>> open;
    std::function<void(std::vector<int>&)> grow = [&](std::vector<int>& acc) {
      if (static_cast<int>(acc.size()) == n) {
        open.push_back(acc);
        return;
      }
      for (int u = 0; u < C.num_morphisms(); ++u)
        if (acc.empty() || C.src[u] == C.tgt[acc.back()]) {
          acc.push_back(u);
          grow(acc);
          acc.pop_back();
        }
    };
    std::vector<int> acc;
    grow(acc);
    for (auto& body : open)
      for (int w = 0; w < C.num_morphisms(); ++w)
        if (C.src[w] == C.tgt[body.back()] && C.tgt[w] == F.obj[C.src[body[0]]]) {
          auto t = body;
          t.push_back(w);
          tn.push_back(std::move(t));
        }
    total += static_cast<long long>(tn.size());
    check_cap(total, max_simplices);
    L.add_level(std::move(tn));
  }
  X.ids.resize(N + 1);
  for (int n = 0; n <= N; ++n)
    for (auto& t : L.tuples[n]) {
      std::vector<std::string> parts;
      for (int u : t) parts.push_back(C.mor_names[u]);
      X.ids[n].push_back(chain_id(parts));
    }
  X.face.resize(N + 1);
  X.degen.resize(N + 1);
  for (int n = 1; n <= N; ++n) {
    X.face[n].assign(n + 1, std::vector<int>(L.tuples[n].size()));
    for (size_t e = 0; e < L.tuples[n].size(); ++e) {
      const auto& t = L.tuples[n][e];
      for (int i = 0; i <= n; ++i) {
        std::vector<int> ft;
        if (i == 0) {
          // drop x_0: chain (u_1,...,u_{n-1}), closing F(u_0) o u_n
          ft.assign(t.begin() + 1, t.end() - 1);
          ft.push_back(C.compose(F.mor[t[0]], t[n]));
        } else {
          // drop x_i: compose u_i o u_{i-1}
          ft.assign(t.begin(), t.begin() + (i - 1));
          ft.push_back(C.compose(t[i], t[i - 1]));
          ft.insert(ft.end(), t.begin() + i + 1, t.end());
        }
        X.face[n][i][e] = L.at(n - 1, ft);
      }
    }
  }
  for (int n = 0; n < N; ++n) {
    X.degen[n].assign(n + 1, std::vector<int>(L.tuples[n].size()));
    for (size_t e = 0; e < L.tuples[n].size(); ++e) {
      const auto& t = L.tuples[n][e];
      for (int i = 0; i <= n; ++i) {
        std::vector<int> st(t.begin(), t.begin() + i);
        st.push_back(C.identity[C.src[t[i]]]);
        st.insert(st.end(), t.begin() + i, t.end());
        X.degen[n][i][e] = L.at(n + 1, st);
      }
    }
  }
  auto vrep = validate(X);
  if (!vrep.empty())
    throw std::runtime_error("twisted cyclic nerve invalid: " + vrep.front());
  return X;
}

SSet building(const ZPlusOrderedPoset& P, int N, long long max_simplices) {
  auto rep = validate_zporder(P);
  if (!rep.empty()) throw std::runtime_error("invalid order: " + rep.front());
  SSet X;
  X.kind = SSet::Kind::simplicial;
  X.truncation = N;
  TupleLevels L;
  std::vector<std::vector<int>> t0;
  for (int a = 0; a < P.size(); ++a)
    if (P.leq[a][P.F[a]]) t0.push_back({a});
  L.add_level(t0);
  long long total = static_cast<long long>(t0.size());
  for (int n = 1; n <= N; ++n) {
    std::vector<std::vector<int>> tn;
    std::function<void(std::vector<int>&)> grow = [&](std::vector<int>& acc) {
      if (static_cast<int>(acc.size()) == n + 1) {
        if (P.leq[acc.back()][P.F[acc[0]]]) tn.push_back(acc);
        return;
      }
      for (int a = 0; a < P.size(); ++a)
        if (acc.empty() || P.leq[acc.back()][a]) {
          acc.push_back(a);
          grow(acc);
          acc.pop_back();
        }
    };
    std::vector<int> acc;
    grow(acc);
    total += static_cast<long long>(tn.size());
    check_cap(total, max_simplices);
    L.add_level(std::move(tn));
  }
  X.ids.resize(N + 1);
  for (int n = 0; n <= N; ++n)
    for (auto& t : L.tuples[n]) {
      std::vector<std::string> parts;
      for (int a : t) parts.push_back(P.names[a]);
      X.ids[n].push_back(chain_id(parts));
    }
  X.face.resize(N + 1);
  X.degen.resize(N + 1);
  for (int n = 1; n <= N; ++n) {
    X.face[n].assign(n + 1, std::vector<int>(L.tuples[n].size()));
    for (size_t e = 0; e < L.tuples[n].size(); ++e) {
      const auto& t = L.tuples[n][e];
      for (int i = 0; i <= n; ++i) {
        std::vector<int> ft = t;
        ft.erase(ft.begin() + i);
        X.face[n][i][e] = L.at(n - 1, ft);
      }
    }
  }
  for (int n = 0; n < N; ++n) {
    X.degen[n].assign(n + 1, std::vector<int>(L.tuples[n].size()));
    for (size_t e = 0; e < L.tuples[n].size(); ++e) {
      const auto& t = L.tuples[n][e];
      for (int i = 0; i <= n; ++i) {
        std::vector<int> st = t;
        st.insert(st.begin() + i, t[i]);
        X.degen[n][i][e] = L.at(n + 1, st);
      }
    }
  }
  auto vrep = validate(X);
  if (!vrep.empty()) throw std::runtime_error("building invalid: " + vrep.front());
  return X;
}

SSet oriented_graph(const std::vector<std::string>& vertices,
                    const std::vector<GraphEdge>& edges, int N) {
  std::map<std::string, int> vidx;
  for (size_t i = 0; i < vertices.size(); ++i) vidx[vertices[i]] = static_cast<int>(i);
  const int V = static_cast<int>(vertices.size());
  const int E = static_cast<int>(edges.size());
  for (auto& e : edges)
    if (!vidx.count(e.src) || !vidx.count(e.tgt))
      throw std::runtime_error("edge endpoint not a vertex: " + e.name);
  SSet X;
  X.kind = SSet::Kind::simplicial;
  X.truncation = N;
  X.ids.resize(N + 1);
  X.face.resize(N + 1);
  X.degen.resize(N + 1);
  // level n: V degenerate vertices, then n copies of each edge (step at j)
  auto enc = [&](int n, int kind_vertex, int e, int j) {
    return kind_vertex ? e : V + e * n + j;
  };
  for (int n = 0; n <= N; ++n) {
    for (auto& v : vertices) X.ids[n].push_back(v);
    for (int e = 0; e < E; ++e)
      for (int j = 0; j < n; ++j)
        X.ids[n].push_back(n == 1 ? edges[e].name
                                  : edges[e].name + "@" + std::to_string(j));
  }
  for (int n = 1; n <= N; ++n) {
    const int sz = V + E * n;
    X.face[n].assign(n + 1, std::vector<int>(sz));
    for (int i = 0; i <= n; ++i) {
      for (int v = 0; v < V; ++v) X.face[n][i][v] = v;
      for (int e = 0; e < E; ++e)
        for (int j = 0; j < n; ++j) {
          // vertices 0..j map to src, j+1..n to tgt; delete vertex i
          int zeros = j + 1 - (i <= j ? 1 : 0);
          int ones = n - j - (i > j ? 1 : 0);
          int& out = X.face[n][i][enc(n, 0, e, j)];
          if (ones == 0)
            out = vidx[edges[e].src];
          else if (zeros == 0)
            out = vidx[edges[e].tgt];
          else
            out = enc(n - 1, 0, e, zeros - 1);
        }
    }
  }
  for (int n = 0; n < N; ++n) {
    const int sz = V + E * n;
    X.degen[n].assign(n + 1, std::vector<int>(sz));
    for (int i = 0; i <= n; ++i) {
      for (int v = 0; v < V; ++v) X.degen[n][i][v] = v;
      for (int e = 0; e < E; ++e)
        for (int j = 0; j < n; ++j)
          X.degen[n][i][enc(n, 0, e, j)] = enc(n + 1, 0, e, j + (i <= j ? 1 : 0));
    }
  }
  auto vrep = validate(X);
  if (!vrep.empty()) throw std::runtime_error("graph invalid: " + vrep.front());
  return X;
}

namespace {

using Path = std::vector<int>;  // edge indices, composable left to right

}  // namespace

FiniteCategory free_category(const SSet& D, int cap) {
  if (D.truncation < 1) throw InsufficientTruncation("free_category: need level 1");
  // generators: nondegenerate edges
  std::vector<char> degenerate_edge(D.size(1), 0);
  if (D.simplicial())
    for (int v = 0; v < D.size(0); ++v) degenerate_edge[D.s(0, 0, v)] = 1;
  std::vector<int> gens;
  for (int e = 0; e < D.size(1); ++e)
    if (!degenerate_edge[e]) gens.push_back(e);
  // rewriting rules from 2-simplices: (d2 t, d0 t) -> d1 t
  std::map<std::pair<int, int>, int> rule;
  if (D.truncation >= 2)
    for (int t = 0; t < D.size(2); ++t)
      rule[{D.d(2, 2, t), D.d(2, 0, t)}] = D.d(2, 1, t);
  auto esrc = [&](int e) { return D.d(1, 1, e); };
  auto etgt = [&](int e) { return D.d(1, 0, e); };
  auto reduce = [&](Path p) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t i = 0; i + 1 < p.size(); ++i) {
        auto it = rule.find({p[i], p[i + 1]});
        if (it == rule.end()) continue;
        int r = it->second;
        p.erase(p.begin() + i, p.begin() + i + 2);
        if (!degenerate_edge[r]) p.insert(p.begin() + i, r);
        changed = true;
        break;
      }
    }
    return p;
  };
  // morphisms: closure of identities and generators under composition
  struct Mor {
    Path path;
    int s, t;
  };
  std::map<std::pair<int, Path>, int> index;  // (source, path) -> morphism id
  std::vector<Mor> mors;
  auto intern = [&](int s, Path p) {
    p = reduce(std::move(p));
    int t = p.empty() ? s : etgt(p.back());
    auto [it, fresh] = index.emplace(std::make_pair(s, p), static_cast<int>(mors.size()));
    if (fresh) mors.push_back({p, s, t});
    return it->second;
  };
  for (int v = 0; v < D.size(0); ++v) intern(v, {});
  for (int g : gens) intern(esrc(g), {g});
  for (size_t i = 0; i < mors.size(); ++i) {
    if (static_cast<int>(mors.size()) > cap)
      throw SizeCapExceeded("free_category: possibly infinite (cap exceeded)");
    for (int g : gens) {
      Mor m = mors[i];
      if (m.t != esrc(g)) continue;
      Path p = m.path;
      p.push_back(g);
      intern(m.s, std::move(p));
    }
  }
  FiniteCategory C;
  for (int v = 0; v < D.size(0); ++v) C.objects.push_back(D.id(0, v));
  C.identity.assign(D.size(0), -1);
  for (size_t i = 0; i < mors.size(); ++i) {
    std::vector<std::string> parts;
    for (int e : mors[i].path) parts.push_back(D.id(1, e));
    C.mor_names.push_back(parts.empty() ? "id_" + D.id(0, mors[i].s)
                                        : chain_id(parts));
    C.src.push_back(mors[i].s);
    C.tgt.push_back(mors[i].t);
    if (mors[i].path.empty()) C.identity[mors[i].s] = static_cast<int>(i);
  }
  for (size_t f = 0; f < mors.size(); ++f)
    for (size_t g = 0; g < mors.size(); ++g) {
      if (mors[f].t != mors[g].s) continue;
      Path p = mors[f].path;
      p.insert(p.end(), mors[g].path.begin(), mors[g].path.end());
      p = reduce(std::move(p));
      auto it = index.find({mors[f].s, p});
      if (it == index.end())
        throw SizeCapExceeded("free_category: closure incomplete (cap exceeded)");
      C.comp[{static_cast<int>(g), static_cast<int>(f)}] = it->second;
    }
  auto rep = validate_category(C);
  if (!rep.empty())
    throw std::runtime_error("free_category: relations not confluent: " + rep.front());
  return C;
}

namespace {

struct SSetIso {
  const SSet &X, &Y;
  std::vector<std::vector<int>> map;  // per level, X index -> Y index or -1
  std::vector<std::vector<char>> used;

  SSetIso(const SSet& x, const SSet& y) : X(x), Y(y) {
    for (int n = 0; n <= X.truncation; ++n) {
      map.emplace_back(X.size(n), -1);
      used.emplace_back(Y.size(n), 0);
    }
  }

  bool consistent(int n, int x, int y) const {
    if (n >= 1)
      for (int i = 0; i <= n; ++i) {
        int fx = map[n - 1][X.d(n, i, x)];
        if (fx >= 0 && fx != Y.d(n, i, y)) return false;
      }
    if (X.simplicial() && n < X.truncation)
      for (int i = 0; i <= n; ++i) {
        int sx = map[n + 1][X.s(n, i, x)];
        if (sx >= 0 && sx != Y.s(n, i, y)) return false;
      }
    return true;
  }

  bool assign(int n, int x, int y);
  bool search(int n, int x);

  bool run() { return search(0, 0); }
};

bool SSetIso::assign(int n, int x, int y) {
  if (map[n][x] == y) return true;
  if (map[n][x] >= 0 || used[n][y]) return false;
  if (!consistent(n, x, y)) return false;
  map[n][x] = y;
  used[n][y] = 1;
  // propagate degeneracies immediately (forced assignments)
  if (X.simplicial() && n < X.truncation)
    for (int i = 0; i <= n; ++i)
      if (!assign(n + 1, X.s(n, i, x), Y.s(n, i, y))) return false;
  return true;
}

bool SSetIso::search(int n, int x) {
  while (n <= X.truncation && x >= X.size(n)) {
    ++n;
    x = 0;
  }
  if (n > X.truncation) return true;
  if (map[n][x] >= 0) return search(n, x + 1);
  for (int y = 0; y < Y.size(n); ++y) {
    if (used[n][y] || !consistent(n, x, y)) continue;
    auto save_map = map;
    auto save_used = used;
    if (assign(n, x, y) && search(n, x + 1)) return true;
    map = std::move(save_map);
    used = std::move(save_used);
  }
  return false;
}

}  // namespace

bool ssets_isomorphic(const SSet& X, const SSet& Y) {
  if (X.kind != Y.kind || X.truncation != Y.truncation) return false;
  for (int n = 0; n <= X.truncation; ++n)
    if (X.size(n) != Y.size(n)) return false;
  SSetIso iso(X, Y);
  return iso.run();
}

}  // namespace segal
