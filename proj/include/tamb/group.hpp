#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tamb/error.hpp"

namespace tamb {

// Hard ceiling on |G|; dense |G| x |G| tables are assumed throughout.
// Can be lowered (never raised) via the TAMBARIZE_MAX_GROUP_ORDER env var.
constexpr int kMaxGroupOrder = 200;

int max_group_order();

// A finite group as a dense multiplication table. Element 0 is the identity;
// the builders relabel their input so this always holds.
struct FiniteGroup {
    int n = 0;
    std::vector<std::vector<int>> mul; // mul[a][b] = a*b
    std::vector<int> inv;
    std::string name;

    int op(int a, int b) const { return mul[a][b]; }
    int conj(int g, int x) const { return mul[mul[g][x]][inv[g]]; } // g x g^-1
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Builders validate the table exhaustively (identity, inverses, associativity).
GroupPtr cyclic_group(int n);
GroupPtr dihedral_group(int n);   // order 2n, n >= 1
GroupPtr symmetric_group(int n);  // order n!, n <= 5
GroupPtr group_from_table(const std::vector<std::vector<int>>& mul,
                          const std::string& name = "table");

bool same_group(const FiniteGroup& a, const FiniteGroup& b);

// Subgroup of a fixed parent group: sorted element list plus membership mask.
struct Subgroup {
    std::vector<int> elems;       // sorted ascending, elems[0] == 0
    std::vector<char> member;     // member[g] == 1 iff g in subgroup

    int order() const { return (int)elems.size(); }
    bool contains(int g) const { return member[g] != 0; }
    bool contains(const Subgroup& other) const;
    bool operator==(const Subgroup& o) const { return elems == o.elems; }
};

// Total order used everywhere a subgroup enumeration has to be reproducible:
// by order first, then by the sorted element list.
bool subgroup_less(const Subgroup& a, const Subgroup& b);

Subgroup make_subgroup(const FiniteGroup& G, std::vector<int> elems);

// Smallest subgroup containing the given generators (closure under mul).
Subgroup generated_subgroup(const FiniteGroup& G, const std::vector<int>& gens);

Subgroup conjugate_subgroup(const FiniteGroup& G, int g, const Subgroup& H); // g H g^-1
Subgroup intersect(const Subgroup& a, const Subgroup& b);

// All subgroups, their conjugacy classes, and the lookup tables the rest of
// the library leans on. Built once per group and shared.
//
// Subgroup ids index `subgroups` (sorted by subgroup_less). Class ids index
// `class_rep`; the representative of a class is its subgroup_less-minimal
// member, and classes are sorted by their representative. Class 0 is always
// the trivial subgroup, the last class is G itself.
struct SubgroupTable {
    GroupPtr group;
    std::vector<Subgroup> subgroups;
    std::vector<int> class_of;          // subgroup id -> class id
    std::vector<int> witness;           // g with (g)(subgroup)(g^-1) == class rep
    std::vector<int> class_rep;         // class id -> subgroup id of representative
    std::vector<std::vector<int>> classes; // class id -> member subgroup ids
    std::vector<std::vector<int>> conj_id;  // conj_id[g][sid] = id of g S g^-1
    std::vector<std::string> class_name;    // display names, unique per class

    const FiniteGroup& G() const { return *group; }
    int num_subgroups() const { return (int)subgroups.size(); }
    int num_classes() const { return (int)class_rep.size(); }

    int id_of(const Subgroup& s) const;        // throws not_a_subgroup if absent
    std::optional<int> try_id_of(const Subgroup& s) const;
    int trivial_id() const { return 0; }
    int full_id() const { return num_subgroups() - 1; }

    // id of the stabilizer-style subgroup {g : pred(g)} is not provided here;
    // callers build the Subgroup and call id_of.

    Subgroup normalizer(const Subgroup& K) const;

    // Up-to-conjugacy inclusion between class representatives.
    bool class_leq(int cls_small, int cls_big) const;
};

using SubgroupTablePtr = std::shared_ptr<const SubgroupTable>;

// Enumerates every subgroup by closing the set of cyclic subgroups under
// pairwise joins. Correct for arbitrary finite groups, no 2-generator
// assumption. Throws group_too_large above max_group_order().
SubgroupTablePtr subgroup_table(GroupPtr G);

// Representatives of the double cosets L\H/K, both L and K inside H.
// One representative per coset, smallest element of the coset, ascending.
std::vector<int> double_cosets(const FiniteGroup& G, const Subgroup& H,
                               const Subgroup& L, const Subgroup& K);

// Left coset representatives of K in H (K <= H), each coset's smallest element.
std::vector<int> left_coset_reps(const FiniteGroup& G, const Subgroup& H,
                                 const Subgroup& K);

} // namespace tamb
