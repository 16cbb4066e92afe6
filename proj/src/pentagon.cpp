#include "segal/pentagon.hpp"

#include "segal/segal_check.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace segal {

namespace {

std::string pair_name(const PentagonSolution& s, int x, int y) {
  return "(" + s.carrier[x] + "," + s.carrier[y] + ")";
}

}  // namespace

PentagonVerdict verify_pentagon(const PentagonSolution& sol) {
  PentagonVerdict v;
  const int s = sol.size();
  std::vector<char> seen(s * s, 0);
  for (int x = 0; x < s; ++x)
    for (int y = 0; y < s; ++y) {
      auto [a, b] = sol.alpha[x][y];
      if (seen[a * s + b]) {
        v.bijective = false;
        v.holds = false;
        v.witness = "alpha not injective at " + pair_name(sol, x, y);
        return v;
      }
      seen[a * s + b] = 1;
    }
  auto al = [&](int x, int y) { return sol.alpha[x][y]; };
  for (int x = 0; x < s; ++x)
    for (int y = 0; y < s; ++y)
      for (int z = 0; z < s; ++z) {
        // left side: a_12 then a_13 then a_23
        auto [a, b] = al(x, y);
        auto [c, d] = al(a, z);
        auto [e, g] = al(b, d);
        // right side: a_23 then a_12
        auto [p, q] = al(y, z);
        auto [r, t] = al(x, p);
        if (c != r || e != t || g != q) {
          v.holds = false;
          v.witness = "pentagon fails at (" + sol.carrier[x] + "," +
                      sol.carrier[y] + "," + sol.carrier[z] + ")";
          return v;
        }
      }
  return v;
}

PentagonSolution group_solution(const GroupTable& G) {
  auto rep = validate_group(G);
  if (!rep.empty()) throw std::runtime_error("invalid group: " + rep.front());
  PentagonSolution s;
  s.carrier = G.names;
  s.alpha.assign(G.order(), std::vector<std::pair<int, int>>(G.order()));
  for (int x = 0; x < G.order(); ++x)
    for (int y = 0; y < G.order(); ++y) s.alpha[x][y] = {G.op(x, y), y};
  return s;
}

PentagonSolution identity_solution(int size) {
  PentagonSolution s;
  for (int i = 0; i < size; ++i) s.carrier.push_back("c" + std::to_string(i));
  s.alpha.assign(size, std::vector<std::pair<int, int>>(size));
  for (int x = 0; x < size; ++x)
    for (int y = 0; y < size; ++y) s.alpha[x][y] = {x, y};
  return s;
}

namespace {

// Full cocycle system on triples i<j<k of {0..n} from fan coordinates
// f[k] = x_{0,k,k+1}, k = 1..n-1. Returns empty map if a cocycle condition
// fails (cannot happen for a verified solution; checked defensively).
std::map<std::array<int, 3>, int> expand_cocycle(const PentagonSolution& sol, int n,
                                                 const std::vector<int>& fan) {
  std::map<std::array<int, 3>, int> x;
  for (int k = 1; k <= n - 1; ++k) x[{0, k, k + 1}] = fan[k - 1];
  for (int k = 2; k <= n; ++k)
    for (int a = k - 2; a >= 1; --a)
      x[{0, a, k}] = sol.alpha[x.at({0, a, k - 1})][x.at({0, k - 1, k})].first;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c)
        x[{a, b, c}] = sol.alpha[x.at({0, a, b})][x.at({0, b, c})].second;
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) {
          auto [a, b] = sol.alpha[x.at({i, j, k})][x.at({i, k, l})];
          if (x.at({i, j, l}) != a || x.at({j, k, l}) != b) return {};
        }
  return x;
}

std::string fan_id(const PentagonSolution& sol, const std::vector<int>& fan) {
  if (fan.empty()) return "*";
  std::string s = sol.carrier[fan[0]];
  for (size_t i = 1; i < fan.size(); ++i) s += "|" + sol.carrier[fan[i]];
  return s;
}

}  // namespace

SSet nerve_of_solution(const PentagonSolution& sol, int N, long long max_simplices) {
  auto v = verify_pentagon(sol);
  if (!v.holds) throw std::runtime_error("unverified solution: " + v.witness);
  const int s = sol.size();
  SSet X;
  X.kind = SSet::Kind::semisimplicial;
  X.truncation = N;
  X.ids.resize(N + 1);
  X.face.resize(N + 1);
  // level n elements = fan tuples in C^{max(n-1,0)}
  std::vector<std::vector<std::vector<int>>> fans(N + 1);
  long long total = 0;
  for (int n = 0; n <= N; ++n) {
    const int len = std::max(n - 1, 0);
    std::vector<int> f(len, 0);
    while (true) {
      fans[n].push_back(f);
      X.ids[n].push_back(fan_id(sol, f));
      int p = len - 1;
      while (p >= 0 && f[p] == s - 1) f[p--] = 0;
      if (p < 0) break;
      ++f[p];
    }
    total += static_cast<long long>(fans[n].size());
    if (total > max_simplices) throw SizeCapExceeded("nerve_of_solution: size cap");
  }
  std::vector<std::map<std::vector<int>, int>> index(N + 1);
  for (int n = 0; n <= N; ++n)
    for (size_t e = 0; e < fans[n].size(); ++e)
      index[n][fans[n][e]] = static_cast<int>(e);
  for (int n = 1; n <= N; ++n) {
    X.face[n].assign(n + 1, std::vector<int>(fans[n].size()));
    for (size_t e = 0; e < fans[n].size(); ++e) {
      if (n <= 2) {
        // faces of a 2-simplex land in the point levels
        for (int i = 0; i <= n; ++i) X.face[n][i][e] = 0;
        continue;
      }
      auto full = expand_cocycle(sol, n, fans[n][e]);
      if (full.empty()) throw std::runtime_error("cocycle expansion failed");
      for (int m = 0; m <= n; ++m) {
        // vertex map skipping m
        std::vector<int> phi;
        for (int i = 0; i <= n; ++i)
          if (i != m) phi.push_back(i);
        std::vector<int> fan;
        for (int k = 1; k <= n - 2; ++k)
          fan.push_back(full.at({phi[0], phi[k], phi[k + 1]}));
        X.face[n][m][e] = index[n - 1].at(fan);
      }
    }
  }
  auto rep = validate(X);
  if (!rep.empty()) throw std::runtime_error("solution nerve invalid: " + rep.front());
  return X;
}

PentagonSolution extract_solution(const SSet& X) {
  if (X.truncation < 3)
    throw InsufficientTruncation("extract_solution: need truncation >= 3");
  if (X.size(0) != 1 || X.size(1) != 1)
    throw std::runtime_error("extract_solution: X_0 and X_1 must be singletons");
  auto seg = is_2segal(X, std::min(4, X.truncation));
  if (!seg.holds)
    throw std::runtime_error("extract_solution: not 2-Segal (witness level " +
                             std::to_string(seg.witnesses.front().level) + ")");
  const int s = X.size(2);
  PentagonSolution sol;
  for (int c = 0; c < s; ++c) sol.carrier.push_back(X.id(2, c));
  sol.alpha.assign(s, std::vector<std::pair<int, int>>(s));
  std::vector<std::vector<int>> found(s, std::vector<int>(s, 0));
  for (int t = 0; t < X.size(3); ++t) {
    int x = X.d(3, 3, t), y = X.d(3, 1, t);
    sol.alpha[x][y] = {X.d(3, 2, t), X.d(3, 0, t)};
    ++found[x][y];
  }
  for (int x = 0; x < s; ++x)
    for (int y = 0; y < s; ++y)
      if (found[x][y] != 1)
        throw std::runtime_error("extract_solution: face pair (" + X.id(2, x) +
                                 "," + X.id(2, y) + ") not uniquely filled");
  auto v = verify_pentagon(sol);
  if (!v.holds)
    throw std::runtime_error("extract_solution: result fails pentagon: " + v.witness);
  return sol;
}

DerivedOps derived_operations(const PentagonSolution& sol) {
  auto v = verify_pentagon(sol);
  if (!v.holds) throw std::runtime_error("unverified solution: " + v.witness);
  const int s = sol.size();
  DerivedOps d;
  d.dot.assign(s, std::vector<int>(s));
  d.star.assign(s, std::vector<int>(s));
  for (int x = 0; x < s; ++x)
    for (int y = 0; y < s; ++y) {
      d.dot[x][y] = sol.alpha[x][y].first;
      d.star[x][y] = sol.alpha[x][y].second;
    }
  for (int x = 0; x < s; ++x)
    for (int y = 0; y < s; ++y)
      for (int z = 0; z < s; ++z) {
        int xy = d.dot[x][y];
        if (d.dot[xy][z] != d.dot[x][d.dot[y][z]]) {
          d.dot_associative = false;
          d.witness = "dot at (" + std::to_string(x) + "," + std::to_string(y) +
                      "," + std::to_string(z) + ")";
        }
        if (d.dot[d.star[x][y]][d.star[xy][z]] != d.star[x][d.dot[y][z]]) {
          d.mixed_identity = false;
          d.witness = "mixed at (" + std::to_string(x) + "," + std::to_string(y) +
                      "," + std::to_string(z) + ")";
        }
        if (d.star[d.star[x][y]][d.star[xy][z]] != d.star[y][z]) {
          d.star_identity = false;
          d.witness = "star at (" + std::to_string(x) + "," + std::to_string(y) +
                      "," + std::to_string(z) + ")";
        }
      }
  return d;
}

namespace {

struct SolutionSearch {
  int s;
  std::vector<int> table;  // table[x*s+y] = a*s+b or -1
  std::vector<char> used;
  std::vector<PentagonSolution>* out;

  bool constraint_ok(int x, int y, int z) const {
    // lazily evaluate both sides; unknown entries leave the triple undecided
    auto al = [&](int u, int v, int& a, int& b) {
      int t = table[u * s + v];
      if (t < 0) return false;
      a = t / s;
      b = t % s;
      return true;
    };
    int a, b, c, d, e, g, p, q, r, t;
    if (!al(x, y, a, b)) return true;
    if (!al(y, z, p, q)) return true;
    if (!al(a, z, c, d)) return true;
    if (!al(x, p, r, t)) return true;
    if (c != r) return false;
    if (!al(b, d, e, g)) return true;
    return e == t && g == q;
  }

  bool all_constraints_with(int x, int y) const {
    for (int u = 0; u < s; ++u)
      for (int v = 0; v < s; ++v) {
        if (!constraint_ok(x, y, u)) return false;
        if (!constraint_ok(u, x, y)) return false;
        if (!constraint_ok(u, v, x)) return false;
        if (!constraint_ok(x, u, v)) return false;
        if (!constraint_ok(u, x, v)) return false;
      }
    return true;
  }

  void run(int cell) {
    if (cell == s * s) {
      PentagonSolution sol = identity_solution(s);
      for (int x = 0; x < s; ++x)
        for (int y = 0; y < s; ++y)
          sol.alpha[x][y] = {table[x * s + y] / s, table[x * s + y] % s};
      out->push_back(std::move(sol));
      return;
    }
    int x = cell / s, y = cell % s;
    for (int img = 0; img < s * s; ++img) {
      if (used[img]) continue;
      table[cell] = img;
      used[img] = 1;
      if (all_constraints_with(x, y)) run(cell + 1);
      used[img] = 0;
      table[cell] = -1;
    }
  }
};

std::vector<int> flat_table(const PentagonSolution& sol) {
  const int s = sol.size();
  std::vector<int> t(s * s);
  for (int x = 0; x < s; ++x)
    for (int y = 0; y < s; ++y)
      t[x * s + y] = sol.alpha[x][y].first * s + sol.alpha[x][y].second;
  return t;
}

std::vector<int> canonical_table(const PentagonSolution& sol) {
  const int s = sol.size();
  std::vector<int> perm(s);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best;
  do {
    std::vector<int> t(s * s);
    for (int x = 0; x < s; ++x)
      for (int y = 0; y < s; ++y) {
        auto [a, b] = sol.alpha[x][y];
        t[perm[x] * s + perm[y]] = perm[a] * s + perm[b];
      }
    if (best.empty() || t < best) best = t;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

std::vector<PentagonSolution> enumerate_solutions(int size, bool dedup) {
  if (size < 1 || size > 4)
    throw SizeCapExceeded("enumerate_solutions: carrier size capped at 4");
  std::vector<PentagonSolution> out;
  SolutionSearch search{size, std::vector<int>(size * size, -1),
                        std::vector<char>(size * size, 0), &out};
  search.run(0);
  if (!dedup) return out;
  std::map<std::vector<int>, PentagonSolution> reps;
  for (auto& sol : out) {
    auto key = canonical_table(sol);
    auto it = reps.find(key);
    if (it == reps.end() || flat_table(sol) < flat_table(it->second))
      reps[key] = sol;
  }
  std::vector<PentagonSolution> res;
  for (auto& [k, sol] : reps) res.push_back(sol);
  return res;
}

std::pair<ClusterPoint, ClusterPoint> cluster_alpha(const ClusterPoint& lam,
                                                    const ClusterPoint& mu) {
  if (lam.c0 <= 0 || lam.c2 <= 0 || mu.c0 <= 0 || mu.c2 <= 0)
    throw std::runtime_error("cluster_alpha: coordinates must be positive");
  Rational t = 1 + lam.c2 / mu.c2 * mu.c0;
  ClusterPoint lp{lam.c0 / t, lam.c2 / mu.c2 / t};
  ClusterPoint mp{mu.c0 * lam.c0, mu.c0 * lam.c2 + mu.c2};
  return {lp, mp};
}

bool cluster_pentagon_check(const ClusterPoint& p, const ClusterPoint& q,
                            const ClusterPoint& r) {
  // left: a_23, then a_13, then a_12
  auto [q1, r1] = cluster_alpha(q, r);
  auto [p1, r2] = cluster_alpha(p, r1);
  auto [p2, q2] = cluster_alpha(p1, q1);
  // right: a_12, then a_23
  auto [pa, qa] = cluster_alpha(p, q);
  auto [qb, rb] = cluster_alpha(qa, r);
  return p2 == pa && q2 == qb && r2 == rb;
}

}  // namespace segal
