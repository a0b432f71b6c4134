#pragma once

#include <string>
#include <vector>

#include "tamb/gset.hpp"
#include "tamb/report.hpp"

namespace tamb {

// Commutative monoid as a dense operation table. Element names are only for
// display; index `unit` is the neutral element (0 for all built-in tables).
struct MonoidTable {
    int size = 1;
    std::vector<std::vector<int>> op;
    int unit = 0;
    std::vector<std::string> elem_name;

    int mul(int a, int b) const { return op[a][b]; }
    int pow(int q, int k) const {
        int acc = unit;
        for (int i = 0; i < k; ++i) acc = op[acc][q];
        return acc;
    }
    bool operator==(const MonoidTable& o) const {
        return size == o.size && op == o.op && unit == o.unit;
    }
};

MonoidTable trivial_monoid();
MonoidTable cyclic_monoid(int n);     // the group C_n written multiplicatively
MonoidTable idempotent_monoid();      // {1, x} with x*x = x, not a group
MonoidTable make_monoid(int size, std::vector<std::vector<int>> op, int unit,
                        std::vector<std::string> names = {});
void validate_monoid(const MonoidTable& m); // commutative, associative, unital

// Monoid with a G-action by monoid automorphisms.
struct GMonoid {
    GroupPtr group;
    MonoidTable monoid;
    std::vector<std::vector<int>> action; // action[g][q]

    int act(int g, int q) const { return action[g][q]; }
};

GMonoid make_gmonoid(GroupPtr group, MonoidTable monoid,
                     std::vector<std::vector<int>> action);
GMonoid trivial_action(GroupPtr group, MonoidTable monoid);
// Acts by inversion through the first index-2 subgroup when the group has
// one and the monoid is a group; otherwise the action is trivial.
GMonoid inversion_action(const SubgroupTable& tab, MonoidTable monoid);

// The underlying G-set of Q (points = monoid elements).
GSet gmonoid_gset(const GMonoid& Q);

// Semi-Mackey functor in subgroup-indexed form. One monoid per conjugacy
// class of subgroups; elements at an arbitrary subgroup K are represented
// at the class representative, transported along the stored witness, and
// every map below has that transport baked in:
//
//   r[H][K] : level(cls H) -> level(cls K)   for K <= H   (restriction)
//   t[H][K] : level(cls K) -> level(cls H)   for K <= H   (transfer)
//   c[g][H] : level(cls H) -> level(cls gHg^-1)           (conjugation)
//
// H, K are subgroup ids into tab->subgroups.
struct SemiMackeyData {
    SubgroupTablePtr tab;
    std::vector<MonoidTable> level;
    std::vector<std::vector<std::vector<int>>> r; // [H][K]
    std::vector<std::vector<std::vector<int>>> t; // [H][K]
    std::vector<std::vector<std::vector<int>>> c; // [g][H]
    std::string name;

    const MonoidTable& level_at(int cls) const { return level[cls]; }
    const MonoidTable& level_of_subgroup(int sid) const {
        return level[tab->class_of[sid]];
    }
    int rmap(int H, int K, int v) const { return r[H][K][v]; }
    int tmap(int H, int K, int v) const { return t[H][K][v]; }
    int cmap(int g, int H, int v) const { return c[g][H][v]; }
};

// Levels collapse to the one-element monoid; the Grothendieck construction
// on top of this recovers the ordinary Burnside semiring.
SemiMackeyData trivial_functor(SubgroupTablePtr tab);

// Levels are the fixed submonoids Q^H; restriction includes fixed points,
// transfer multiplies over coset representatives, conjugation acts through
// the G-action on Q. Level elements at each class are the fixed elements of
// Q in ascending Q-index order, so level index j names the j-th fixed point.
SemiMackeyData fixed_point_functor(SubgroupTablePtr tab, const GMonoid& Q);

// Every level is Q itself; restriction from H to K raises to the power
// [H:K], transfer and conjugation are identities.
SemiMackeyData ell_functor(SubgroupTablePtr tab, const MonoidTable& Q);

// Assembles user-supplied tables, validating shapes and the hom property.
// Full axiom validation is check_axioms.
SemiMackeyData semi_mackey_from_tables(SubgroupTablePtr tab,
                                       std::vector<MonoidTable> level,
                                       std::vector<std::vector<std::vector<int>>> r,
                                       std::vector<std::vector<std::vector<int>>> t,
                                       std::vector<std::vector<std::vector<int>>> c,
                                       std::string name);

// Exhaustive verification of the subgroup-form axioms: monoid structure of
// every level, hom property of every map, identity maps at equal subgroups,
// triviality of inner conjugations, transitivity of r and t, the cocycle
// rule, compatibility of c with r and t, and the double-coset rule for
// r after t. Every failure lands in the report with a witness.
Report check_axioms(const SemiMackeyData& M);

// For the fixed-point functor, the stored tables are cross-checkable against
// direct equivariant-map computations; included in tests.

// Element of M evaluated on a G-set: one level element per orbit, held at
// the class representative of the orbit's stabilizer.
struct MackeyElement {
    GSet base;
    OrbitDecomposition dec;
    std::vector<int> stab_id; // per orbit
    std::vector<int> comp;    // per orbit, index into level(cls stab)
};

MackeyElement unit_element(const SemiMackeyData& M, const GSet& base);
MackeyElement make_element(const SemiMackeyData& M, const GSet& base,
                           std::vector<int> comp);
bool element_equal(const MackeyElement& a, const MackeyElement& b);

// Componentwise product in M(A); both elements must share the base.
MackeyElement element_product(const SemiMackeyData& M, const MackeyElement& a,
                              const MackeyElement& b);

// Contravariant action: restrict m along f, orbit by orbit, conjugating to
// the representative first and then restricting.
MackeyElement pull(const SemiMackeyData& M, const GMap& f, const MackeyElement& m);

// Covariant action: transfer each orbit of the source up, conjugate back,
// and multiply the contributions into the target components.
MackeyElement push(const SemiMackeyData& M, const GMap& f, const MackeyElement& m);

// Levelwise morphism of semi-Mackey functors over one group.
struct MackeyMorphism {
    std::vector<std::vector<int>> phi; // per class: level_src -> level_dst
};

// Checks monoid-hom per level and commutation with every r, t, c.
Report validate_mackey_morphism(const SemiMackeyData& src, const SemiMackeyData& dst,
                                const MackeyMorphism& f);

// All valid morphisms src -> dst (levels are small); empty optional when the
// raw search space exceeds `cap` candidates.
std::optional<std::vector<MackeyMorphism>> enumerate_mackey_morphisms(
    const SemiMackeyData& src, const SemiMackeyData& dst, long long cap = 2000000);

MackeyElement apply_morphism(const SemiMackeyData& src, const SemiMackeyData& dst,
                             const MackeyMorphism& f, const MackeyElement& m);

// Elements of the level at the trivial subgroup fixed by every conjugation.
std::vector<int> fixed_bottom_level(const SemiMackeyData& M);

// Randomized functor-level validation used by the mutation fuzzer: checks
// functoriality of pull/push and the pullback exchange rule on sampled
// squares, independently of the subgroup-form axiom list.
Report spot_check_functor(const SemiMackeyData& M, int samples, std::uint64_t seed);

} // namespace tamb
