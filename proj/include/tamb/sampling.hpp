#pragma once

#include <cstdint>
#include <random>

#include "tamb/gset.hpp"
#include "tamb/report.hpp"

namespace tamb {

// Reproducible stream splitting: every sampled instance derives its own seed
// from (master, stream index), so suites replay exactly.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream);

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}
    int uniform(int lo, int hi); // inclusive bounds
    bool coin() { return uniform(0, 1) == 1; }
    template <class T>
    const T& pick(const std::vector<T>& v) {
        return v[uniform(0, (int)v.size() - 1)];
    }
};

// Random G-set with at most max_orbits orbits and max_points points, with a
// random point relabeling on top so nothing downstream can rely on coset
// numbering.
GSet random_gset(const SubgroupTable& tab, Rng& rng, int max_orbits, int max_points);

// Random G-set over X: orbits are drawn as (base point, subgroup of its
// stabilizer) pairs, which always admit a structure map.
GMap random_over(const SubgroupTable& tab, const GSet& X, Rng& rng,
                 int max_orbits, int max_points);

// Random point relabeling of the domain of f (acts on nothing else).
GMap shuffle_dom(const GMap& f, Rng& rng);

// Checks the three exponential-diagram lemmas on `samples` random instances
// each: (A) the dependent product of a fibered product is the fibered product
// of the dependent products, (B) base change preserves exponential diagrams,
// (C) an exponential diagram stacked on an exponential diagram composes to
// the exponential diagram of the composite.
Report diagram_lemma_suite(const SubgroupTable& tab, int samples, std::uint64_t seed);

// Checks the mapping-space adjunction of the dependent product on random
// instances: maps X x_Y B -> A over X correspond to maps B -> Pi_eta(A)
// over Y, and the two transpositions are mutually inverse bijections.
Report adjunction_suite(const SubgroupTable& tab, int samples, std::uint64_t seed);

// Checks pullback and coproduct universal properties on random cones.
Report universal_property_suite(const SubgroupTable& tab, int samples, std::uint64_t seed);

} // namespace tamb
