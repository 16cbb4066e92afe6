#include "segal/sset.hpp"
#include "segal/group.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace segal {

int SSet::index_of(int n, const std::string& name) const {
  auto& lvl = ids[n];
  for (int e = 0; e < static_cast<int>(lvl.size()); ++e)
    if (lvl[e] == name) return e;
  return -1;
}

IndexCollection::IndexCollection(int n_, std::vector<Subset> members_) : n(n_) {
  for (auto& m : members_) std::sort(m.begin(), m.end());
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (auto& m : members_) {
    if (m.empty()) throw SSetError("IndexCollection: empty member");
    if (m.front() < 0 || m.back() > n)
      throw SSetError("IndexCollection: member out of range of [n]");
    if (std::adjacent_find(m.begin(), m.end()) != m.end())
      throw SSetError("IndexCollection: repeated vertex in member");
  }
  members = std::move(members_);
}

int IndexCollection::max_member_size() const {
  int m = 0;
  for (auto& s : members) m = std::max<int>(m, static_cast<int>(s.size()));
  return m;
}

IndexCollection interval_collection(int n) {
  std::vector<Subset> mem;
  for (int i = 0; i + 1 <= n; ++i) mem.push_back({i, i + 1});
  return IndexCollection(n, mem);
}

namespace {

std::string idx_str(int v) { return std::to_string(v); }

// level/element pair naming for witness messages
std::string elem(const SSet& X, int n, int e) {
  return "level " + idx_str(n) + " element '" + X.id(n, e) + "'";
}

}  // namespace

std::vector<std::string> validate(const SSet& X) {
  std::vector<std::string> rep;
  const int N = X.truncation;
  if (static_cast<int>(X.ids.size()) != N + 1) {
    rep.push_back("structural: levels count != truncation+1");
    return rep;
  }
  if (static_cast<int>(X.face.size()) != N + 1) {
    rep.push_back("structural: face table must have truncation+1 rows");
    return rep;
  }
  for (int n = 0; n <= N; ++n) {
    std::set<std::string> seen;
    for (auto& s : X.ids[n])
      if (!seen.insert(s).second)
        rep.push_back("structural: duplicate id '" + s + "' at level " + idx_str(n));
  }
  for (int n = 1; n <= N; ++n) {
    if (static_cast<int>(X.face[n].size()) != n + 1) {
      rep.push_back("structural: level " + idx_str(n) + " needs " + idx_str(n + 1) +
                    " face maps");
      return rep;
    }
    for (int i = 0; i <= n; ++i) {
      if (static_cast<int>(X.face[n][i].size()) != X.size(n)) {
        rep.push_back("structural: d_" + idx_str(i) + " at level " + idx_str(n) +
                      " is not total");
        return rep;
      }
      for (int e = 0; e < X.size(n); ++e)
        if (X.face[n][i][e] < 0 || X.face[n][i][e] >= X.size(n - 1)) {
          rep.push_back("structural: d_" + idx_str(i) + " out of range at " +
                        elem(X, n, e));
          return rep;
        }
    }
  }
  const bool has_degen = X.simplicial();
  if (has_degen) {
    if (static_cast<int>(X.degen.size()) < N) {
      rep.push_back("structural: degeneracy table too short for simplicial kind");
      return rep;
    }
    for (int n = 0; n < N; ++n) {
      if (static_cast<int>(X.degen[n].size()) != n + 1) {
        rep.push_back("structural: level " + idx_str(n) + " needs " + idx_str(n + 1) +
                      " degeneracy maps");
        return rep;
      }
      for (int i = 0; i <= n; ++i) {
        if (static_cast<int>(X.degen[n][i].size()) != X.size(n)) {
          rep.push_back("structural: s_" + idx_str(i) + " at level " + idx_str(n) +
                        " is not total");
          return rep;
        }
        for (int e = 0; e < X.size(n); ++e)
          if (X.degen[n][i][e] < 0 || X.degen[n][i][e] >= X.size(n + 1)) {
            rep.push_back("structural: s_" + idx_str(i) + " out of range at " +
                          elem(X, n, e));
            return rep;
          }
      }
    }
  }

  // d_i d_j = d_{j-1} d_i for i < j
  for (int n = 2; n <= N; ++n)
    for (int j = 1; j <= n; ++j)
      for (int i = 0; i < j; ++i)
        for (int e = 0; e < X.size(n); ++e)
          if (X.d(n - 1, i, X.d(n, j, e)) != X.d(n - 1, j - 1, X.d(n, i, e)))
            rep.push_back("identity d_" + idx_str(i) + " d_" + idx_str(j) +
                          " = d_" + idx_str(j - 1) + " d_" + idx_str(i) +
                          " fails at " + elem(X, n, e));
  if (has_degen) {
    // s_i s_j = s_{j+1} s_i for i <= j
    for (int n = 0; n + 2 <= N; ++n)
      for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= j; ++i)
          for (int e = 0; e < X.size(n); ++e)
            if (X.s(n + 1, i, X.s(n, j, e)) != X.s(n + 1, j + 1, X.s(n, i, e)))
              rep.push_back("identity s_" + idx_str(i) + " s_" + idx_str(j) +
                            " = s_" + idx_str(j + 1) + " s_" + idx_str(i) +
                            " fails at " + elem(X, n, e));
    // mixed identities, applied to X_n with s_j landing in X_{n+1}
    for (int n = 0; n < N; ++n)
      for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= n + 1; ++i)
          for (int e = 0; e < X.size(n); ++e) {
            int lhs = X.d(n + 1, i, X.s(n, j, e));
            int rhs;
            if (i < j)
              rhs = (n >= 1) ? X.s(n - 1, j - 1, X.d(n, i, e)) : -2;
            else if (i == j || i == j + 1)
              rhs = e;
            else
              rhs = (n >= 1) ? X.s(n - 1, j, X.d(n, i - 1, e)) : -2;
            if (rhs != -2 && lhs != rhs)
              rep.push_back("identity d_" + idx_str(i) + " s_" + idx_str(j) +
                            " fails at " + elem(X, n, e));
          }
  }
  return rep;
}

SSet standard_simplex(int n, int N) {
  SSet X;
  X.kind = SSet::Kind::simplicial;
  X.truncation = N;
  X.ids.resize(N + 1);
  X.face.resize(N + 1);
  X.degen.resize(N + 1);
  // monotone maps [k] -> [n], lexicographic
  std::vector<std::vector<std::vector<int>>> maps(N + 1);
  std::vector<std::map<std::vector<int>, int>> index(N + 1);
  for (int k = 0; k <= N; ++k) {
    std::vector<int> cur(k + 1, 0);
    std::function<void(int, int)> gen = [&](int pos, int low) {
      if (pos == k + 1) {
        index[k][cur] = static_cast<int>(maps[k].size());
        maps[k].push_back(cur);
        std::string id;
        for (int p = 0; p <= k; ++p) id += (p ? "." : "") + idx_str(cur[p]);
        X.ids[k].push_back(id);
        return;
      }
      for (int v = low; v <= n; ++v) {
        cur[pos] = v;
        gen(pos + 1, v);
      }
    };
    gen(0, 0);
  }
  for (int k = 1; k <= N; ++k) {
    X.face[k].assign(k + 1, std::vector<int>(maps[k].size()));
    for (int e = 0; e < static_cast<int>(maps[k].size()); ++e)
      for (int i = 0; i <= k; ++i) {
        std::vector<int> f = maps[k][e];
        f.erase(f.begin() + i);
        X.face[k][i][e] = index[k - 1][f];
      }
  }
  for (int k = 0; k < N; ++k) {
    X.degen[k].assign(k + 1, std::vector<int>(maps[k].size()));
    for (int e = 0; e < static_cast<int>(maps[k].size()); ++e)
      for (int i = 0; i <= k; ++i) {
        std::vector<int> f = maps[k][e];
        f.insert(f.begin() + i, f[i]);
        X.degen[k][i][e] = index[k + 1][f];
      }
  }
  return X;
}

int restrict_simplex(const SSet& X, int n, int x, const Subset& J) {
  int cur = n, e = x;
  for (int v = n; v >= 0; --v) {
    if (std::binary_search(J.begin(), J.end(), v)) continue;
    e = X.d(cur, v, e);
    --cur;
  }
  return e;
}

std::vector<Subset> nonempty_subsets(const Subset& S) {
  std::vector<Subset> out;
  const int m = static_cast<int>(S.size());
  for (int mask = 1; mask < (1 << m); ++mask) {
    Subset J;
    for (int b = 0; b < m; ++b)
      if (mask & (1 << b)) J.push_back(S[b]);
    out.push_back(J);
  }
  return out;
}

namespace {

void check_truncation(const SSet& X, const IndexCollection& I) {
  if (I.max_member_size() - 1 > X.truncation)
    throw InsufficientTruncation(
        "membrane computation needs level " + idx_str(I.max_member_size() - 1) +
        " but truncation is " + idx_str(X.truncation));
}

// Backtracking over members in canonical order. The assignment map carries one
// value per subset seen so far; consistency across members reduces to equality
// on shared subsets because subset values are iterated faces of member values.
struct MembraneSearch {
  const SSet& X;
  const IndexCollection& I;
  // visit(complete assignment) -> keep enumerating?
  std::function<bool(const std::map<Subset, int>&)> visit;

  std::map<Subset, int> assignment;
  std::vector<std::pair<Subset, int>> trail;
  bool stopped = false;

  MembraneSearch(const SSet& X_, const IndexCollection& I_) : X(X_), I(I_) {}

  bool try_member(const Subset& S, int value) {
    size_t mark = trail.size();
    for (auto& J : nonempty_subsets(S)) {
      // positions of J inside S
      Subset pos;
      for (int v : J)
        pos.push_back(static_cast<int>(
            std::lower_bound(S.begin(), S.end(), v) - S.begin()));
      int val = restrict_simplex(X, static_cast<int>(S.size()) - 1, value, pos);
      auto it = assignment.find(J);
      if (it != assignment.end()) {
        if (it->second != val) {
          rollback(mark);
          return false;
        }
      } else {
        assignment.emplace(J, val);
        trail.emplace_back(J, val);
      }
    }
    return true;
  }

  void rollback(size_t mark) {
    while (trail.size() > mark) {
      assignment.erase(trail.back().first);
      trail.pop_back();
    }
  }

  void run(size_t k = 0) {
    if (stopped) return;
    if (k == I.members.size()) {
      if (!visit(assignment)) stopped = true;
      return;
    }
    const Subset& S = I.members[k];
    const int lvl = static_cast<int>(S.size()) - 1;
    size_t mark = trail.size();
    for (int v = 0; v < X.size(lvl) && !stopped; ++v) {
      if (try_member(S, v)) {
        run(k + 1);
        rollback(mark);
      }
    }
  }
};

}  // namespace

std::vector<Membrane> membrane_set(const SSet& X, const IndexCollection& I) {
  check_truncation(X, I);
  std::vector<Membrane> out;
  MembraneSearch search(X, I);
  search.visit = [&](const std::map<Subset, int>& a) {
    out.push_back(Membrane{I.n, a});
    return true;
  };
  search.run();
  return out;
}

long long membrane_count(const SSet& X, const IndexCollection& I) {
  check_truncation(X, I);
  // A membrane is determined by its member values, constrained exactly by
  // agreement on pairwise intersections. Sweep over the members keeping a
  // count per assignment of the "interface" subsets still shared with later
  // members; this never enumerates the membranes themselves.
  const auto& mem = I.members;
  const int K = static_cast<int>(mem.size());
  if (K == 0) return 1;
  auto mask_of = [](const Subset& S) {
    unsigned long long m = 0;
    for (int v : S) m |= 1ull << v;
    return m;
  };
  std::vector<unsigned long long> mmask(K);
  for (int k = 0; k < K; ++k) mmask[k] = mask_of(mem[k]);
  // interface[k] = sorted masks { S_a & S_b : a < k <= b }, nonempty
  std::vector<std::vector<unsigned long long>> interface(K + 1);
  for (int k = 1; k <= K; ++k) {
    std::set<unsigned long long> s;
    for (int a = 0; a < k; ++a)
      for (int b = k; b < K; ++b)
        if (auto m = mmask[a] & mmask[b]) s.insert(m);
    interface[k].assign(s.begin(), s.end());
  }
  auto positions_in = [](const Subset& S, unsigned long long sub) {
    Subset pos;
    for (size_t p = 0; p < S.size(); ++p)
      if (sub >> S[p] & 1) pos.push_back(static_cast<int>(p));
    return pos;
  };
  std::map<std::vector<int>, long long> state{{{}, 1}};
  for (int k = 0; k < K; ++k) {
    const int lvl = static_cast<int>(mem[k].size()) - 1;
    const auto& in = interface[k];
    const auto& out = interface[k + 1];
    // constraint masks: already-assigned subsets of this member
    std::vector<int> cons;  // indices into `in`
    for (size_t p = 0; p < in.size(); ++p)
      if ((in[p] & ~mmask[k]) == 0) cons.push_back(static_cast<int>(p));
    // output layout: carried from `in` or freshly computed from this member
    std::vector<int> carry_from(out.size(), -1);
    std::vector<unsigned long long> fresh;
    std::vector<size_t> fresh_slot;
    for (size_t p = 0; p < out.size(); ++p) {
      auto it = std::lower_bound(in.begin(), in.end(), out[p]);
      if (it != in.end() && *it == out[p]) {
        carry_from[p] = static_cast<int>(it - in.begin());
      } else {
        fresh.push_back(out[p]);
        fresh_slot.push_back(p);
      }
    }
    // bucket the member values by their constraint restrictions
    std::map<std::vector<int>, std::vector<int>> bucket;
    std::vector<std::vector<int>> fresh_vals(X.size(lvl));
    for (int v = 0; v < X.size(lvl); ++v) {
      std::vector<int> key;
      for (int ci : cons)
        key.push_back(restrict_simplex(X, lvl, v, positions_in(mem[k], in[ci])));
      bucket[key].push_back(v);
      for (auto f : fresh)
        fresh_vals[v].push_back(
            restrict_simplex(X, lvl, v, positions_in(mem[k], f)));
    }
    std::map<std::vector<int>, long long> next;
    for (auto& [skey, cnt] : state) {
      std::vector<int> lookup;
      for (int ci : cons) lookup.push_back(skey[ci]);
      auto it = bucket.find(lookup);
      if (it == bucket.end()) continue;
      for (int v : it->second) {
        std::vector<int> nkey(out.size());
        for (size_t p = 0; p < out.size(); ++p)
          if (carry_from[p] >= 0) nkey[p] = skey[carry_from[p]];
        for (size_t q = 0; q < fresh.size(); ++q)
          nkey[fresh_slot[q]] = fresh_vals[v][q];
        next[nkey] += cnt;
      }
    }
    state = std::move(next);
  }
  long long count = 0;
  for (auto& [key, cnt] : state) count += cnt;
  return count;
}

Membrane membrane_of_simplex(const SSet& X, const IndexCollection& I, int x) {
  check_truncation(X, I);
  Membrane m{I.n, {}};
  for (auto& S : I.members)
    for (auto& J : nonempty_subsets(S))
      m.values[J] = restrict_simplex(X, I.n, x, J);
  return m;
}

SegalMapResult segal_map(const SSet& X, const IndexCollection& I) {
  check_truncation(X, I);
  if (I.n > X.truncation)
    throw InsufficientTruncation("Segal map at level " + idx_str(I.n) +
                                 " exceeds truncation");
  SegalMapResult res;
  res.I = I;
  const int n = I.n;
  std::map<std::vector<int>, int> first_with_image;
  for (int x = 0; x < X.size(n); ++x) {
    std::vector<int> key;
    key.reserve(I.members.size());
    for (auto& S : I.members) key.push_back(restrict_simplex(X, n, x, S));
    auto [it, fresh] = first_with_image.emplace(key, x);
    if (!fresh && res.injective) {
      res.injective = false;
      res.witnesses.push_back("not injective: elements '" + X.id(n, it->second) +
                              "' and '" + X.id(n, x) +
                              "' have equal restrictions");
    }
    res.images.push_back(std::move(key));
  }
  long long total = membrane_count(X, I);
  if (total != static_cast<long long>(first_with_image.size())) {
    res.surjective = false;
    // locate the first membrane (canonical enumeration order) not in the image
    MembraneSearch search(X, I);
    search.visit = [&](const std::map<Subset, int>& a) {
      std::vector<int> key;
      for (auto& S : I.members) key.push_back(a.at(S));
      if (first_with_image.count(key)) return true;
      std::string w = "not surjective: membrane with";
      for (size_t k = 0; k < I.members.size(); ++k) {
        w += " [";
        for (size_t p = 0; p < I.members[k].size(); ++p)
          w += (p ? "," : "") + idx_str(I.members[k][p]);
        w += "]='" +
             X.id(static_cast<int>(I.members[k].size()) - 1, key[k]) + "'";
      }
      w += " has no filler";
      res.witnesses.push_back(w);
      return false;
    };
    search.run();
  }
  return res;
}

std::vector<Membrane> membrane_set_oracle(const SSet& X, const IndexCollection& I) {
  check_truncation(X, I);
  // All simplices of Delta^I within truncation: monotone maps [k] -> [n] whose
  // image lies in a member (all monotone for simplicial X, injective only for
  // semi-simplicial X).
  using Simp = std::vector<int>;
  std::vector<std::vector<Simp>> simps(X.truncation + 1);
  for (int k = 0; k <= X.truncation; ++k) {
    std::set<Simp> seen;
    for (auto& S : I.members) {
      const int m = static_cast<int>(S.size());
      Simp cur(k + 1);
      std::function<void(int, int)> gen = [&](int pos, int low) {
        if (pos == k + 1) {
          seen.insert(cur);
          return;
        }
        for (int q = low; q < m; ++q) {
          cur[pos] = S[q];
          gen(pos + 1, X.simplicial() ? q : q + 1);
        }
      };
      if (X.simplicial() || k + 1 <= m) gen(0, 0);
    }
    simps[k].assign(seen.begin(), seen.end());
  }

  std::vector<Membrane> out;
  std::map<Simp, int> value;
  // simplices in increasing dimension, values constrained by faces (and by
  // degeneracies, which force the value outright)
  std::function<void(int, size_t)> assign = [&](int k, size_t idx) {
    if (k > X.truncation) {
      Membrane m{I.n, {}};
      for (int kk = 0; kk <= X.truncation; ++kk)
        for (auto& f : simps[kk]) {
          Simp inj = f;
          inj.erase(std::unique(inj.begin(), inj.end()), inj.end());
          if (inj.size() == f.size()) m.values[f] = value[f];
        }
      out.push_back(std::move(m));
      return;
    }
    if (idx == simps[k].size()) {
      assign(k + 1, 0);
      return;
    }
    const Simp& f = simps[k][idx];
    auto consistent = [&](int v) {
      for (int i = 0; i <= k; ++i) {
        Simp df = f;
        df.erase(df.begin() + i);
        if (k >= 1 && X.d(k, i, v) != value.at(df)) return false;
      }
      return true;
    };
    // degenerate simplex: value forced by s_i applied to the collapse
    if (X.simplicial())
      for (int i = 0; i + 1 <= k; ++i)
        if (f[i] == f[i + 1]) {
          Simp g = f;
          g.erase(g.begin() + i);
          int v = X.s(k - 1, i, value.at(g));
          if (consistent(v)) {
            value[f] = v;
            assign(k, idx + 1);
            value.erase(f);
          }
          return;
        }
    for (int v = 0; v < X.size(k); ++v)
      if (consistent(v)) {
        value[f] = v;
        assign(k, idx + 1);
        value.erase(f);
      }
  };
  assign(0, 0);
  return out;
}

SSet product(const SSet& X, const SSet& Y) {
  if (X.truncation != Y.truncation) throw SSetError("product: truncation mismatch");
  if (X.kind != Y.kind) throw SSetError("product: kind mismatch");
  SSet P;
  P.kind = X.kind;
  P.truncation = X.truncation;
  const int N = X.truncation;
  P.ids.resize(N + 1);
  P.face.resize(N + 1);
  if (P.simplicial()) P.degen.resize(N + 1);
  for (int n = 0; n <= N; ++n)
    for (int a = 0; a < X.size(n); ++a)
      for (int b = 0; b < Y.size(n); ++b)
        P.ids[n].push_back("(" + X.id(n, a) + "," + Y.id(n, b) + ")");
  auto pair_index = [&](int n, int a, int b) { return a * Y.size(n) + b; };
  for (int n = 1; n <= N; ++n) {
    P.face[n].assign(n + 1, std::vector<int>(P.size(n)));
    for (int a = 0; a < X.size(n); ++a)
      for (int b = 0; b < Y.size(n); ++b)
        for (int i = 0; i <= n; ++i)
          P.face[n][i][pair_index(n, a, b)] =
              pair_index(n - 1, X.d(n, i, a), Y.d(n, i, b));
  }
  if (P.simplicial())
    for (int n = 0; n < N; ++n) {
      P.degen[n].assign(n + 1, std::vector<int>(P.size(n)));
      for (int a = 0; a < X.size(n); ++a)
        for (int b = 0; b < Y.size(n); ++b)
          for (int i = 0; i <= n; ++i)
            P.degen[n][i][pair_index(n, a, b)] =
                pair_index(n + 1, X.s(n, i, a), Y.s(n, i, b));
    }
  return P;
}

std::vector<std::string> validate_morphism(const SSet& X, const SSet& Y,
                                           const SimplicialMorphism& f) {
  std::vector<std::string> rep;
  if (X.truncation != Y.truncation ||
      static_cast<int>(f.level.size()) != X.truncation + 1) {
    rep.push_back("structural: component count mismatch");
    return rep;
  }
  for (int n = 0; n <= X.truncation; ++n) {
    if (static_cast<int>(f.level[n].size()) != X.size(n)) {
      rep.push_back("structural: component at level " + idx_str(n) + " not total");
      return rep;
    }
    for (int e = 0; e < X.size(n); ++e)
      if (f.level[n][e] < 0 || f.level[n][e] >= Y.size(n)) {
        rep.push_back("structural: component out of range at level " + idx_str(n));
        return rep;
      }
  }
  for (int n = 1; n <= X.truncation; ++n)
    for (int i = 0; i <= n; ++i)
      for (int e = 0; e < X.size(n); ++e)
        if (f.level[n - 1][X.d(n, i, e)] != Y.d(n, i, f.level[n][e]))
          rep.push_back("does not commute with d_" + idx_str(i) + " at " +
                        elem(X, n, e));
  if (X.simplicial() && Y.simplicial())
    for (int n = 0; n < X.truncation; ++n)
      for (int i = 0; i <= n; ++i)
        for (int e = 0; e < X.size(n); ++e)
          if (f.level[n + 1][X.s(n, i, e)] != Y.s(n, i, f.level[n][e]))
            rep.push_back("does not commute with s_" + idx_str(i) + " at " +
                          elem(X, n, e));
  return rep;
}

SSet quotient_by_free_action(const SSet& X, const GroupTable& G,
                             const std::vector<std::vector<std::vector<int>>>& act) {
  const int N = X.truncation;
  if (static_cast<int>(act.size()) != G.order())
    throw SSetError("action: one permutation family per group element required");
  for (int g = 0; g < G.order(); ++g) {
    if (static_cast<int>(act[g].size()) != N + 1)
      throw SSetError("action: per-level data missing");
    for (int n = 0; n <= N; ++n) {
      if (static_cast<int>(act[g][n].size()) != X.size(n))
        throw SSetError("action: map not total at level " + idx_str(n));
      std::vector<bool> hit(X.size(n), false);
      for (int e = 0; e < X.size(n); ++e) {
        int v = act[g][n][e];
        if (v < 0 || v >= X.size(n) || hit[v])
          throw SSetError("action: not a permutation at level " + idx_str(n));
        hit[v] = true;
      }
    }
  }
  for (int n = 0; n <= N; ++n)
    for (int e = 0; e < X.size(n); ++e) {
      if (act[G.unit][n][e] != e)
        throw SSetError("action: identity element does not act trivially");
      for (int g = 0; g < G.order(); ++g) {
        for (int h = 0; h < G.order(); ++h)
          if (act[g][n][act[h][n][e]] != act[G.mul[g][h]][n][e])
            throw SSetError("action: not a group action at level " + idx_str(n));
        if (g != G.unit && act[g][n][e] == e)
          throw SSetError("action not free: '" + G.names[g] + "' fixes " +
                          elem(X, n, e));
      }
    }
  for (int g = 0; g < G.order(); ++g) {
    for (int n = 1; n <= N; ++n)
      for (int i = 0; i <= n; ++i)
        for (int e = 0; e < X.size(n); ++e)
          if (act[g][n - 1][X.d(n, i, e)] != X.d(n, i, act[g][n][e]))
            throw SSetError("action: does not commute with d_" + idx_str(i));
    if (X.simplicial())
      for (int n = 0; n < N; ++n)
        for (int i = 0; i <= n; ++i)
          for (int e = 0; e < X.size(n); ++e)
            if (act[g][n + 1][X.s(n, i, e)] != X.s(n, i, act[g][n][e]))
              throw SSetError("action: does not commute with s_" + idx_str(i));
  }

  SSet Q;
  Q.kind = X.kind;
  Q.truncation = N;
  Q.ids.resize(N + 1);
  Q.face.resize(N + 1);
  if (Q.simplicial()) Q.degen.resize(N + 1);
  std::vector<std::vector<int>> orbit(N + 1), rep(N + 1);
  for (int n = 0; n <= N; ++n) {
    orbit[n].assign(X.size(n), -1);
    for (int e = 0; e < X.size(n); ++e) {
      if (orbit[n][e] != -1) continue;
      int o = static_cast<int>(rep[n].size());
      // canonical representative: lexicographically least id in the orbit
      int best = e;
      for (int g = 0; g < G.order(); ++g) {
        int v = act[g][n][e];
        orbit[n][v] = o;
        if (X.id(n, v) < X.id(n, best)) best = v;
      }
      rep[n].push_back(best);
      Q.ids[n].push_back("[" + X.id(n, best) + "]");
    }
  }
  for (int n = 1; n <= N; ++n) {
    Q.face[n].assign(n + 1, std::vector<int>(rep[n].size()));
    for (int o = 0; o < static_cast<int>(rep[n].size()); ++o)
      for (int i = 0; i <= n; ++i)
        Q.face[n][i][o] = orbit[n - 1][X.d(n, i, rep[n][o])];
  }
  if (Q.simplicial())
    for (int n = 0; n < N; ++n) {
      Q.degen[n].assign(n + 1, std::vector<int>(rep[n].size()));
      for (int o = 0; o < static_cast<int>(rep[n].size()); ++o)
        for (int i = 0; i <= n; ++i)
          Q.degen[n][i][o] = orbit[n + 1][X.s(n, i, rep[n][o])];
    }
  return Q;
}

SSet disjoint_union(const SSet& X, const SSet& Y) {
  if (X.truncation != Y.truncation) throw SSetError("disjoint_union: truncation mismatch");
  if (X.kind != Y.kind) throw SSetError("disjoint_union: kind mismatch");
  SSet U;
  U.kind = X.kind;
  U.truncation = X.truncation;
  const int N = X.truncation;
  U.ids.resize(N + 1);
  U.face.resize(N + 1);
  if (U.simplicial()) U.degen.resize(N + 1);
  for (int n = 0; n <= N; ++n) {
    for (auto& s : X.ids[n]) U.ids[n].push_back("L:" + s);
    for (auto& s : Y.ids[n]) U.ids[n].push_back("R:" + s);
  }
  for (int n = 1; n <= N; ++n) {
    U.face[n].assign(n + 1, std::vector<int>(U.size(n)));
    for (int i = 0; i <= n; ++i) {
      for (int e = 0; e < X.size(n); ++e) U.face[n][i][e] = X.d(n, i, e);
      for (int e = 0; e < Y.size(n); ++e)
        U.face[n][i][X.size(n) + e] = X.size(n - 1) + Y.d(n, i, e);
    }
  }
  if (U.simplicial())
    for (int n = 0; n < N; ++n) {
      U.degen[n].assign(n + 1, std::vector<int>(U.size(n)));
      for (int i = 0; i <= n; ++i) {
        for (int e = 0; e < X.size(n); ++e) U.degen[n][i][e] = X.s(n, i, e);
        for (int e = 0; e < Y.size(n); ++e)
          U.degen[n][i][X.size(n) + e] = X.size(n + 1) + Y.s(n, i, e);
      }
    }
  return U;
}

}  // namespace segal
