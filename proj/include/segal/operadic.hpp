#pragma once
#include "segal/segal_check.hpp"
#include "segal/sset.hpp"

#include <string>
#include <vector>

namespace segal {

// The cooperad extracted from a one-vertex simplicial set: colors are the
// edges, n-ary operations the n-simplices, with input colors the short edges
// {i-1,i} and output color the long edge {0,n}. Cocompositions are the
// restriction maps to polygonal subdivisions and are shared with the Segal
// machinery rather than stored as separate tables.
struct ColoredCooperadData {
  SSet X;
  std::vector<std::string> colors;  // = X.ids[1]

  int arity_count(int n) const { return X.size(n); }  // |Q(n)|
  int output_color(int n, int q) const;               // long edge {0,n}
  int input_color(int n, int i, int q) const;         // edge {i-1,i}, 1<=i<=n
};

// Requires X_0 a single point and truncation >= 1.
ColoredCooperadData extract_cooperad(const SSet& X);

// The subdivision collection for f_{m_1..m_n}: the outer polygon on the
// partial sums {0, m_1, m_1+m_2, ..., M} together with the full interval
// {p_{i-1}, ..., p_i} for each part. Parts must be >= 1.
IndexCollection cocomposition_collection(const std::vector<int>& m);

// f_{m_1..m_n} : Q(M) -> Q(n) x prod Q(m_i), realized as the Segal map of
// cocomposition_collection(m). Throws InsufficientTruncation when M exceeds
// the truncation.
SegalMapResult cocomposition(const ColoredCooperadData& D, const std::vector<int>& m);

struct InvertibilityVerdict {
  bool holds = true;
  std::string witness;
};

// Every f_{m_1..m_n} with parts >= 1 and m_1+...+m_n <= up_to is bijective,
// and the counit sets Q(b|b) are singletons. Agrees with is_2segal(X, up_to).
InvertibilityVerdict check_invertibility(const ColoredCooperadData& D, int up_to);

}  // namespace segal
