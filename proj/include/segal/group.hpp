#pragma once
#include <string>
#include <vector>

namespace segal {

// A finite group as a Cayley table. mul[g][h] = g*h.
struct GroupTable {
  std::vector<std::string> names;
  std::vector<std::vector<int>> mul;
  int unit = 0;
  std::vector<int> inv;

  int order() const { return static_cast<int>(names.size()); }
  int op(int g, int h) const { return mul[g][h]; }
};

std::vector<std::string> validate_group(const GroupTable& G);

GroupTable cyclic_group(int n);
GroupTable dihedral_group(int n);        // order 2n, n >= 1
GroupTable dicyclic_group(int n);        // order 4n (n=2 gives Q8, n=3 order 12)
GroupTable symmetric_group(int n);       // n <= 5
GroupTable alternating_group(int n);     // n <= 5
GroupTable direct_product(const GroupTable& A, const GroupTable& B);

// Subgroup closure of a generating set; returns sorted element indices of G.
std::vector<int> generated_subgroup(const GroupTable& G, const std::vector<int>& gens);

// Cayley table of a subgroup given by its (closed) element list.
GroupTable subgroup_table(const GroupTable& G, const std::vector<int>& elements);

// All isomorphism types of groups of order <= 12, for corpus sweeps.
std::vector<std::pair<std::string, GroupTable>> groups_up_to_order(int max_order);

// Group registered by name ("z4", "s3", "d4", "q8", "a4", "z2xz2", ...).
GroupTable group_by_name(const std::string& name);
std::vector<std::string> known_group_names();

}  // namespace segal
