#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tamb/group.hpp"

namespace tamb {

// Finite left G-set as a dense action table. Points are 0..size-1.
struct GSet {
    GroupPtr group;
    int size = 0;
    std::vector<std::vector<int>> act; // act[g][x]

    const FiniteGroup& G() const { return *group; }
    int apply(int g, int x) const { return act[g][x]; }
    bool operator==(const GSet& o) const {
        return size == o.size && act == o.act && same_group(*group, *o.group);
    }
};

// Validates the action axioms (identity, compatibility with the group law).
GSet make_gset(GroupPtr group, int size, std::vector<std::vector<int>> act);

GSet point_gset(GroupPtr group);                  // one-point G-set
GSet trivial_gset(GroupPtr group, int size);      // size points, trivial action

// Left cosets of subgroups[sid], sorted by their smallest member, so the
// coset of the identity is always point 0. Action by left translation.
GSet coset_gset(const SubgroupTable& tab, int sid);

// Point index of the coset g*K inside coset_gset(tab, sid).
int coset_index(const SubgroupTable& tab, int sid, int g);

struct GMap {
    GSet dom, cod;
    std::vector<int> map;

    int operator()(int x) const { return map[x]; }
};

// Checks equivariance and range.
GMap make_gmap(GSet dom, GSet cod, std::vector<int> map);
GMap identity_map(const GSet& X);
GMap compose(const GMap& g, const GMap& f); // g after f
bool same_map(const GMap& a, const GMap& b);

struct OrbitDecomposition {
    int count = 0;
    std::vector<int> orbit_of;    // point -> orbit index (orbits ordered by min point)
    std::vector<int> rep;         // orbit -> smallest point
    std::vector<int> transversal; // point -> smallest g with g*rep == point
    std::vector<Subgroup> stab;   // orbit -> stabilizer of rep
    std::vector<std::vector<int>> points; // orbit -> sorted member points
};

OrbitDecomposition orbit_decompose(const GSet& X);
Subgroup stabilizer(const GSet& X, int x);

// A ⊔ B with the two injections.
struct Coproduct {
    GSet total;
    GMap inj1, inj2;
};
Coproduct disjoint_union(const GSet& A, const GSet& B);

// Copairing [f,g]: A ⊔ B -> C of f: A -> C and g: B -> C.
GMap copair(const Coproduct& c, const GMap& f, const GMap& g);

// A x_X B over the common target of f: A -> X and g: B -> X.
// Points are the pairs (a, b) with f(a) == g(b), ordered lexicographically.
struct Pullback {
    GSet total;
    GMap pr1, pr2;                    // to A resp. B
    std::vector<std::pair<int, int>> pairs; // point -> (a, b)
    std::optional<int> index_of(int a, int b) const;
};
Pullback pullback(const GMap& f, const GMap& g);

// Binary product = pullback over the point.
Pullback product(const GSet& A, const GSet& B);

// The exponential diagram attached to eta: X -> Y and p: A -> X.
//
// Pi points are pairs (y, s) where s assigns to every x in the eta-fiber of
// y a point of A lying over x; they are ordered by (y, s) with s read as a
// tuple over the ascending fiber. g sends (y, s) to (g y, x -> g s(g^-1 x)).
//
//            lambda            rho
//        A <-------- X x_Y Pi -----> Pi
//        |              |            |
//        p              |            | pi
//        v              v            v
//        X <---------- ... --------> Y
//            (pr to X)   eta on the left leg, so pi(y,s) = y.
struct ExponentialDiagram {
    GSet pi_dom;  // Pi_eta(A)
    GMap pi;      // Pi -> Y
    Pullback z;   // X x_Y Pi  (pr1 to X, pr2 to Pi)
    GMap lambda;  // X x_Y Pi -> A, evaluation (x, (y,s)) -> s(x)
    GMap rho;     // = z.pr2

    std::vector<int> base_y;                 // Pi point -> y
    std::vector<std::vector<int>> fiber_of_y; // y -> ascending eta-fiber
    std::vector<std::vector<int>> section;    // Pi point -> chosen A-points, aligned with fiber_of_y[base_y]

    // Pi point with the given base and section, if any.
    std::optional<int> point_of(int y, const std::vector<int>& sec) const;
};

// Throws length_error if the section count would exceed max_points.
ExponentialDiagram dependent_product(const GMap& eta, const GMap& p,
                                     std::int64_t max_points = 1 << 22);

// Number of points Pi_eta(A) would have, or nullopt when above the cap.
std::optional<std::int64_t> dependent_product_size(const GMap& eta, const GMap& p,
                                                   std::int64_t cap = 1 << 22);

// Isomorphism A1 -> A2 commuting with the maps to the shared base, if one
// exists. Orbitwise backtracking: an orbit can only match an orbit whose
// representative admits a point with identical stabilizer over the same
// base point.
std::optional<GMap> iso_over(const GMap& f1, const GMap& f2);

// All equivariant maps A -> B, optionally over a base (f2 o result == f1).
// Aborts with nullopt when more than `cap` maps would be produced.
std::optional<std::vector<GMap>> enumerate_maps(const GSet& A, const GSet& B,
                                                const GMap* f1, const GMap* f2,
                                                std::int64_t cap = 200000);

} // namespace tamb
