#pragma once
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace segal {

// Subsets of [n] = {0..n} are kept sorted ascending.
using Subset = std::vector<int>;

struct SSetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InsufficientTruncation : SSetError {
  using SSetError::SSetError;
};
struct SizeCapExceeded : SSetError {
  using SSetError::SSetError;
};

// A finite truncated (semi-)simplicial set. Elements at level n are referred
// to by their index into ids[n]; the string id is the canonical name used for
// serialization and witnesses. Face table face[n][i][e] (1 <= n <= N,
// 0 <= i <= n) gives d_i(e) as an index into level n-1. Degeneracy table
// degen[n][i][e] (0 <= n < N) gives s_i(e) at level n+1; empty for
// semi-simplicial sets.
struct SSet {
  enum class Kind { simplicial, semisimplicial };
  Kind kind = Kind::simplicial;
  int truncation = 0;
  std::vector<std::vector<std::string>> ids;
  std::vector<std::vector<std::vector<int>>> face;
  std::vector<std::vector<std::vector<int>>> degen;

  bool simplicial() const { return kind == Kind::simplicial; }
  int size(int n) const { return static_cast<int>(ids[n].size()); }
  long long total_simplices() const {
    long long t = 0;
    for (auto& l : ids) t += static_cast<long long>(l.size());
    return t;
  }
  int d(int n, int i, int e) const { return face[n][i][e]; }
  int s(int n, int i, int e) const { return degen[n][i][e]; }
  const std::string& id(int n, int e) const { return ids[n][e]; }
  int index_of(int n, const std::string& name) const;  // -1 if absent
  bool operator==(const SSet&) const = default;
};

// Empty report iff all totality constraints and simplicial identities hold.
std::vector<std::string> validate(const SSet& X);

// Delta^n truncated at level N: X_k = monotone maps [k] -> [n].
SSet standard_simplex(int n, int N);

// A collection I of subsets of [n], encoding Delta^I inside Delta^n.
// Members are stored sorted and deduplicated.
struct IndexCollection {
  int n = 0;
  std::vector<Subset> members;
  IndexCollection() = default;
  IndexCollection(int n_, std::vector<Subset> members_);
  int max_member_size() const;
};

// Interval collection {{0,1},{1,2},...,{n-1,n}} for the 1-Segal condition.
IndexCollection interval_collection(int n);

// Value of x in X_n restricted along the inclusion J c [n]; an element of
// X_{|J|-1}, computed by deleting the complementary vertices.
int restrict_simplex(const SSet& X, int n, int x, const Subset& J);

// A membrane: one value in X_{|J|-1} for every nonempty subset J of a member,
// matching under all face maps.
struct Membrane {
  int n = 0;
  std::map<Subset, int> values;
  bool operator==(const Membrane&) const = default;
  bool operator<(const Membrane& o) const { return values < o.values; }
};

// All membranes, enumerated over nondegenerate simplices of Delta^I (i.e.
// keyed by nonempty subsets of members). Throws InsufficientTruncation when
// some member exceeds the truncation.
std::vector<Membrane> membrane_set(const SSet& X, const IndexCollection& I);

// Number of membranes, without materializing them.
long long membrane_count(const SSet& X, const IndexCollection& I);

// Brute-force oracle: the limit over ALL simplices of Delta^I within the
// truncation (monotone maps for a simplicial X, injective monotone maps for a
// semi-simplicial one), reported as the induced subset-keyed membranes so the
// two computations can be compared for equality.
std::vector<Membrane> membrane_set_oracle(const SSet& X, const IndexCollection& I);

// The I-Segal map X_n -> X_I together with its bijectivity verdict.
struct SegalMapResult {
  IndexCollection I;
  // images[x][k] = value of x on I.members[k]; a faithful key for the
  // membrane determined by x.
  std::vector<std::vector<int>> images;
  bool injective = true;
  bool surjective = true;
  bool bijective() const { return injective && surjective; }
  // first failure in canonical order, as element ids / membrane description
  std::vector<std::string> witnesses;
};
SegalMapResult segal_map(const SSet& X, const IndexCollection& I);

// Membrane of a single simplex (all subset values), for tests.
Membrane membrane_of_simplex(const SSet& X, const IndexCollection& I, int x);

// Levelwise product; requires equal truncation and kind.
SSet product(const SSet& X, const SSet& Y);

// A level-preserving map of simplicial sets.
struct SimplicialMorphism {
  std::vector<std::vector<int>> level;  // level[n][e] = image index
};
std::vector<std::string> validate_morphism(const SSet& X, const SSet& Y,
                                           const SimplicialMorphism& f);

// Group data for quotient actions: a Cayley table (see group.hpp for
// constructors of common groups).
struct GroupTable;

// act[g][n][e] = action of group element g on level n. The action must be by
// simplicial automorphisms and free on every level; otherwise an exception
// carrying a fixed-point witness is thrown.
SSet quotient_by_free_action(const SSet& X, const GroupTable& G,
                             const std::vector<std::vector<std::vector<int>>>& act);

// Helpers shared by the construction modules.
std::vector<Subset> nonempty_subsets(const Subset& S);
SSet disjoint_union(const SSet& X, const SSet& Y);

}  // namespace segal
