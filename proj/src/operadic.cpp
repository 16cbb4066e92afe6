#include "segal/operadic.hpp"

#include <numeric>
#include <stdexcept>

namespace segal {

int ColoredCooperadData::output_color(int n, int q) const {
  return restrict_simplex(X, n, q, {0, n});
}

int ColoredCooperadData::input_color(int n, int i, int q) const {
  if (i < 1 || i > n) throw std::out_of_range("input_color: bad slot");
  return restrict_simplex(X, n, q, {i - 1, i});
}

ColoredCooperadData extract_cooperad(const SSet& X) {
  if (X.truncation < 1)
    throw InsufficientTruncation("extract_cooperad: need truncation >= 1");
  if (X.size(0) != 1)
    throw std::runtime_error("extract_cooperad: X_0 must be a single point");
  ColoredCooperadData D;
  D.X = X;
  D.colors = X.ids[1];
  return D;
}

IndexCollection cocomposition_collection(const std::vector<int>& m) {
  if (m.empty()) throw std::runtime_error("cocomposition needs at least one part");
  for (int mi : m)
    if (mi < 1) throw std::runtime_error("cocomposition parts must be >= 1");
  const int M = std::accumulate(m.begin(), m.end(), 0);
  std::vector<Subset> members;
  Subset outer{0};
  int p = 0;
  for (int mi : m) {
    Subset interval;
    for (int v = p; v <= p + mi; ++v) interval.push_back(v);
    members.push_back(interval);
    p += mi;
    outer.push_back(p);
  }
  members.push_back(outer);
  return IndexCollection(M, members);
}

SegalMapResult cocomposition(const ColoredCooperadData& D, const std::vector<int>& m) {
  return segal_map(D.X, cocomposition_collection(m));
}

namespace {

std::string partition_string(const std::vector<int>& m) {
  std::string s = "f_{";
  for (size_t i = 0; i < m.size(); ++i)
    s += (i ? "," : "") + std::to_string(m[i]);
  return s + "}";
}

}  // namespace

InvertibilityVerdict check_invertibility(const ColoredCooperadData& D, int up_to) {
  InvertibilityVerdict v;
  if (up_to > D.X.truncation)
    throw InsufficientTruncation("check_invertibility: up_to exceeds truncation");
  // counits: for each pair of colors, Q(b|b') = {q in Q(1): in = b, out = b'}
  // must be a singleton exactly on the diagonal
  for (int b = 0; b < static_cast<int>(D.colors.size()); ++b) {
    int hits = 0;
    for (int q = 0; q < D.X.size(1); ++q)
      if (D.input_color(1, 1, q) == b && D.output_color(1, q) == b) ++hits;
    if (hits != 1) {
      v.holds = false;
      v.witness = "counit at color " + D.colors[b] + " has " +
                  std::to_string(hits) + " elements";
      return v;
    }
  }
  // all compositions of parts >= 1 with total <= up_to; a single part is the
  // identity restriction and is skipped
  std::vector<std::vector<int>> comps;
  for (int total = 2; total <= up_to; ++total) {
    std::vector<int> cur;
    // enumerate compositions of `total` with at least two parts
    auto rec = [&](auto&& self, int rest) -> void {
      if (rest == 0) {
        if (cur.size() >= 2) comps.push_back(cur);
        return;
      }
      for (int part = 1; part <= rest; ++part) {
        cur.push_back(part);
        self(self, rest - part);
        cur.pop_back();
      }
    };
    rec(rec, total);
  }
  for (auto& m : comps) {
    auto res = cocomposition(D, m);
    if (!res.bijective()) {
      v.holds = false;
      v.witness = partition_string(m) + " is not " +
                  (res.injective ? "surjective" : "injective");
      if (!res.witnesses.empty()) v.witness += ": " + res.witnesses.front();
      return v;
    }
  }
  return v;
}

}  // namespace segal
