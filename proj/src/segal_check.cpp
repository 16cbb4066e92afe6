#include "segal/segal_check.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>

namespace segal {

std::string to_string(SegalProperty p) {
  switch (p) {
    case SegalProperty::one_segal: return "1segal";
    case SegalProperty::two_segal: return "2segal";
    case SegalProperty::unital: return "unital";
  }
  return "?";
}

std::string to_string(TwoSegalStrategy s) {
  return s == TwoSegalStrategy::all_triangulations ? "all" : "boundary";
}

namespace {

std::string collection_string(const IndexCollection& I) {
  std::ostringstream os;
  os << "{";
  for (size_t k = 0; k < I.members.size(); ++k) {
    if (k) os << ",";
    os << "{";
    for (size_t j = 0; j < I.members[k].size(); ++j) {
      if (j) os << ",";
      os << I.members[k][j];
    }
    os << "}";
  }
  os << "}";
  return os.str();
}

// Shared restriction columns per (X, level): column(J)[x] = x restricted to J.
// Reused across the collections checked at one level so large instances pay
// for each subset only once.
struct RestrictionCache {
  const SSet* X = nullptr;
  int n = 0;
  std::map<Subset, std::vector<int>> cols;

  const std::vector<int>& column(const Subset& J) {
    auto it = cols.find(J);
    if (it != cols.end()) return it->second;
    std::vector<int> col(X->size(n));
    for (int x = 0; x < X->size(n); ++x) col[x] = x;
    int cur = n;
    for (int v = n; v >= 0; --v) {
      if (std::binary_search(J.begin(), J.end(), v)) continue;
      const auto& f = X->face[cur][v];
      for (int& e : col) e = f[e];
      --cur;
    }
    return cols.emplace(J, std::move(col)).first->second;
  }
};

constexpr int kFastPathThreshold = 4096;

inline std::uint64_t mix64(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  h *= 0xff51afd7ed558ccdull;
  return h ^ (h >> 33);
}

// Bijectivity only, no witnesses; false means "fall back to segal_map".
bool fast_bijective(const SSet& X, const IndexCollection& I,
                    RestrictionCache& cache) {
  const int n = I.n;
  std::vector<const std::vector<int>*> cols;
  for (auto& S : I.members) cols.push_back(&cache.column(S));
  std::vector<std::pair<std::uint64_t, int>> keys(X.size(n));
  for (int x = 0; x < X.size(n); ++x) {
    std::uint64_t h = 1469598103934665603ull;
    for (auto* c : cols) h = mix64(h, static_cast<std::uint64_t>((*c)[x]));
    keys[x] = {h, x};
  }
  std::sort(keys.begin(), keys.end());
  auto same_key = [&](int a, int b) {
    for (auto* c : cols)
      if ((*c)[a] != (*c)[b]) return false;
    return true;
  };
  long long distinct = 0;
  for (size_t i = 0; i < keys.size();) {
    size_t j = i;
    while (j < keys.size() && keys[j].first == keys[i].first) ++j;
    if (j == i + 1) {
      ++distinct;
    } else {
      // resolve the (rare) hash collisions exactly
      std::vector<int> run;
      for (size_t p = i; p < j; ++p) run.push_back(keys[p].second);
      std::sort(run.begin(), run.end(), [&](int a, int b) {
        for (auto* c : cols)
          if ((*c)[a] != (*c)[b]) return (*c)[a] < (*c)[b];
        return false;
      });
      for (size_t p = 0; p < run.size(); ++p) {
        if (p && same_key(run[p - 1], run[p])) return false;  // not injective
        ++distinct;
      }
    }
    i = j;
  }
  if (distinct != static_cast<long long>(keys.size())) return false;
  return membrane_count(X, I) == distinct;
}

bool check_collection(const SSet& X, const IndexCollection& I, int level,
                      SegalVerdict& v, RestrictionCache* cache = nullptr) {
  if (cache && X.size(I.n) > kFastPathThreshold && fast_bijective(X, I, *cache))
    return true;
  auto r = segal_map(X, I);
  if (r.bijective()) return true;
  std::string detail = r.injective ? "not surjective" : "not injective";
  for (auto& w : r.witnesses) detail += "; " + w;
  v.holds = false;
  v.witnesses.push_back({level, collection_string(I), detail});
  return false;
}

}  // namespace

SegalVerdict is_1segal(const SSet& X, int up_to) {
  if (up_to > X.truncation)
    throw InsufficientTruncation("is_1segal: up_to exceeds truncation");
  SegalVerdict v{SegalProperty::one_segal, up_to, true, {}};
  for (int n = 2; n <= up_to; ++n) {
    RestrictionCache cache{&X, n, {}};
    if (!check_collection(X, interval_collection(n), n, v, &cache)) return v;
  }
  return v;
}

SegalVerdict is_2segal(const SSet& X, int up_to, TwoSegalStrategy strategy) {
  if (up_to > X.truncation)
    throw InsufficientTruncation("is_2segal: up_to exceeds truncation");
  SegalVerdict v{SegalProperty::two_segal, up_to, true, {}};
  for (int n = 3; n <= up_to; ++n) {
    RestrictionCache cache{&X, n, {}};
    if (strategy == TwoSegalStrategy::all_triangulations) {
      for (auto& T : enumerate_triangulations(n))
        if (!check_collection(X, collection_of(T), n, v, &cache)) return v;
    } else {
      for (int j = 2; j <= n - 1; ++j)
        if (!check_collection(X, boundary_pair_collection(n, 0, j), n, v, &cache))
          return v;
      for (int i = 1; i <= n - 2; ++i)
        if (!check_collection(X, boundary_pair_collection(n, i, n), n, v, &cache))
          return v;
    }
  }
  return v;
}

SegalVerdict is_unital(const SSet& X, int up_to) {
  if (!X.simplicial())
    throw SSetError("unitality undefined without degeneracies");
  if (up_to > X.truncation)
    throw InsufficientTruncation("is_unital: up_to exceeds truncation");
  SegalVerdict v{SegalProperty::unital, up_to, true, {}};
  for (int n = 2; n <= up_to; ++n)
    for (int i = 0; i < n; ++i) {
      // the square is a pullback iff s_i maps X_{n-1} bijectively onto
      // { x in X_n : edge_{i,i+1}(x) = s_0(vertex_i(x)) }
      std::vector<char> hit(X.size(n), 0);
      long long expected = 0;
      for (int x = 0; x < X.size(n); ++x) {
        int edge = restrict_simplex(X, n, x, {i, i + 1});
        int vert = restrict_simplex(X, n, x, {i});
        if (edge == X.s(0, 0, vert)) {
          hit[x] = 1;
          ++expected;
        }
      }
      std::vector<char> image(X.size(n), 0);
      std::string bad;
      for (int y = 0; y < X.size(n - 1); ++y) {
        int x = X.s(n - 1, i, y);
        if (!hit[x] || image[x]) {
          bad = "s_" + std::to_string(i) + "(" + X.id(n - 1, y) + ")";
          break;
        }
        image[x] = 1;
      }
      long long covered = 0;
      for (int x = 0; x < X.size(n); ++x)
        if (image[x]) ++covered;
      if (bad.empty() && covered < expected)
        for (int x = 0; x < X.size(n); ++x)
          if (hit[x] && !image[x]) {
            bad = X.id(n, x) + " not a degeneracy";
            break;
          }
      if (!bad.empty()) {
        v.holds = false;
        v.witnesses.push_back(
            {n, "square (n=" + std::to_string(n) + ", i=" + std::to_string(i) + ")",
             bad});
        return v;
      }
    }
  return v;
}

namespace {

SSet path_space(const SSet& X, bool initial) {
  if (X.truncation < 1)
    throw InsufficientTruncation("path space needs truncation >= 1");
  SSet P;
  P.kind = X.kind;
  P.truncation = X.truncation - 1;
  P.ids.assign(X.ids.begin() + 1, X.ids.end());
  P.face.resize(P.truncation + 1);
  for (int n = 1; n <= P.truncation; ++n) {
    P.face[n].resize(n + 1);
    for (int i = 0; i <= n; ++i)
      P.face[n][i] = X.face[n + 1][initial ? i + 1 : i];
  }
  if (X.simplicial()) {
    P.degen.resize(P.truncation + 1);
    for (int n = 0; n < P.truncation; ++n) {
      P.degen[n].resize(n + 1);
      for (int i = 0; i <= n; ++i)
        P.degen[n][i] = X.degen[n + 1][initial ? i + 1 : i];
    }
  }
  return P;
}

SSet suspend(const SSet& X, bool left) {
  if (X.truncation < 0) throw InsufficientTruncation("suspension: empty input");
  SSet S;
  S.kind = SSet::Kind::semisimplicial;
  S.truncation = X.truncation + 1;
  S.ids.resize(S.truncation + 1);
  S.ids[0] = {"*"};
  for (int n = 1; n <= S.truncation; ++n) S.ids[n] = X.ids[n - 1];
  S.face.resize(S.truncation + 1);
  S.face[1] = {std::vector<int>(S.ids[1].size(), 0),
               std::vector<int>(S.ids[1].size(), 0)};
  for (int n = 2; n <= S.truncation; ++n) {
    S.face[n].resize(n + 1);
    if (left) {
      S.face[n][0] = X.face[n - 1][0];
      for (int i = 1; i <= n; ++i) S.face[n][i] = X.face[n - 1][i - 1];
    } else {
      for (int i = 0; i <= n - 1; ++i) S.face[n][i] = X.face[n - 1][i];
      S.face[n][n] = X.face[n - 1][n - 1];
    }
  }
  return S;
}

}  // namespace

SSet path_space_initial(const SSet& X) { return path_space(X, true); }
SSet path_space_final(const SSet& X) { return path_space(X, false); }
SSet suspension_left(const SSet& X) { return suspend(X, true); }
SSet suspension_right(const SSet& X) { return suspend(X, false); }

SSet forget_degeneracies(const SSet& X) {
  SSet Y = X;
  Y.kind = SSet::Kind::semisimplicial;
  Y.degen.clear();
  return Y;
}

PathCriterionReport path_criterion_crosscheck(const SSet& X, int up_to) {
  if (X.truncation < up_to)
    throw InsufficientTruncation("path_criterion_crosscheck: need truncation >= up_to");
  PathCriterionReport rep;
  rep.up_to = up_to;
  rep.two_segal = is_2segal(X, up_to);
  rep.left_1segal = is_1segal(path_space_initial(X), up_to - 1);
  rep.right_1segal = is_1segal(path_space_final(X), up_to - 1);
  rep.consistent =
      rep.two_segal.holds == (rep.left_1segal.holds && rep.right_1segal.holds);
  return rep;
}

}  // namespace segal
