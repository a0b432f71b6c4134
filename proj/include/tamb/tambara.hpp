#pragma once

#include <functional>
#include <string>
#include <vector>

#include "tamb/mackey.hpp"
#include "tamb/report.hpp"
#include "tamb/sampling.hpp"

namespace tamb {

// A G-set over X with an element of M on it.
struct LabeledObject {
    GMap p;               // A -> X
    MackeyElement label;  // element of M(A)
};

// Canonical key for the isomorphism class of one labeled orbit over X.
// `orbit` indexes the X-orbit under the image; `stab` is a subgroup id inside
// the stabilizer H of that orbit's representative, minimal among its
// H-conjugates; `label` is the least stored value the H-conjugations moving
// the stabilizer onto `stab` can produce.
struct BasicClass {
    int orbit = 0;
    int stab = 0;
    int label = 0;

    friend bool operator<(const BasicClass& a, const BasicClass& b) {
        if (a.orbit != b.orbit) return a.orbit < b.orbit;
        if (a.stab != b.stab) return a.stab < b.stab;
        return a.label < b.label;
    }
    friend bool operator==(const BasicClass& a, const BasicClass& b) {
        return a.orbit == b.orbit && a.stab == b.stab && a.label == b.label;
    }
};

// Element of the semiring of labeled G-sets over `base`: a multiset of basic
// classes. Terms are sorted by key and carry positive multiplicities.
struct SemiRingElt {
    GSet base;
    std::vector<std::pair<BasicClass, long long>> terms;
};

// Element of the ring completion over `base`: finitely many classes with
// nonzero integer coefficients, sorted by key.
struct RingElt {
    GSet base;
    std::vector<std::pair<BasicClass, long long>> terms;
};

// Decomposes a labeled G-set over X into canonical basic classes. The result
// does not depend on the point numbering of the object.
SemiRingElt canonicalize(const SemiMackeyData& M, const LabeledObject& obj);

// Builds a concrete labeled object in the class of `a`: one coset orbit per
// multiplicity unit, mapped onto the matching X-orbit.
LabeledObject realize(const SemiMackeyData& M, const SemiRingElt& a);

SemiRingElt zero_semiring(const GSet& X);
SemiRingElt one_semiring(const SemiMackeyData& M, const GSet& X);
bool semiring_equal(const SemiRingElt& a, const SemiRingElt& b);

SemiRingElt add(const SemiRingElt& a, const SemiRingElt& b);
SemiRingElt mul(const SemiMackeyData& M, const SemiRingElt& a, const SemiRingElt& b);

// zeta*: pull a class over X back along zeta: Y -> X.
SemiRingElt restrict_semi(const SemiMackeyData& M, const GMap& zeta, const SemiRingElt& a);
// xi_+: push forward along xi: X -> Y by composing the structure maps.
SemiRingElt transfer_semi(const SemiMackeyData& M, const GMap& xi, const SemiRingElt& a);
// eta_o: multiplicative push along eta: X -> Y through the exponential diagram.
SemiRingElt norm_semi(const SemiMackeyData& M, const GMap& eta, const SemiRingElt& a);

// The additive monoid is free on basic classes, so the completion is the
// free abelian group on them.
RingElt k0(const SemiRingElt& a);
RingElt zero_ring(const GSet& X);
RingElt one_ring(const SemiMackeyData& M, const GSet& X);
bool ring_equal(const RingElt& a, const RingElt& b);
bool is_effective(const RingElt& x); // no negative coefficients
SemiRingElt positive_part(const RingElt& x);
SemiRingElt negative_part(const RingElt& x);
RingElt ring_diff(const SemiRingElt& pos, const SemiRingElt& neg);

RingElt ring_add(const RingElt& a, const RingElt& b);
RingElt ring_neg(const RingElt& a);
RingElt ring_sub(const RingElt& a, const RingElt& b);
RingElt ring_scale(long long n, const RingElt& a);
RingElt ring_mul(const SemiMackeyData& M, const RingElt& a, const RingElt& b);

RingElt restrict_ring(const SemiMackeyData& M, const GMap& zeta, const RingElt& x);
RingElt transfer_ring(const SemiMackeyData& M, const GMap& xi, const RingElt& x);

// Signed extension of the norm: write x = a - b, take the exponential diagram
// of a join a u b, grade the section set by how many coordinates land in b,
// and alternate signs along the grading. Agrees with the plain norm when b
// is empty; multiplicativity is property-tested, not assumed.
RingElt norm_on_ring(const SemiMackeyData& M, const GMap& eta, const RingElt& x);

// x over X and y over Y paired into the product over X x Y: pull both back
// along the projections and multiply.
RingElt cross_product(const SemiMackeyData& M, const RingElt& x, const RingElt& y);
// The product base the cross product lives on.
Pullback cross_base(const GSet& X, const GSet& Y);

// Levelwise morphism M -> N applied to every label.
SemiRingElt map_labels(const SemiMackeyData& M, const SemiMackeyData& N,
                       const MackeyMorphism& f, const SemiRingElt& a);
RingElt map_labels_ring(const SemiMackeyData& M, const SemiMackeyData& N,
                        const MackeyMorphism& f, const RingElt& x);

// All basic classes over X with coefficient one, sorted: the additive basis
// of the completion.
std::vector<RingElt> ring_basis(const SemiMackeyData& M, const GSet& X);

SemiRingElt random_semiring_elt(const SemiMackeyData& M, const GSet& X, Rng& rng,
                                int max_orbits, int max_points);
RingElt random_ring_elt(const SemiMackeyData& M, const GSet& X, Rng& rng,
                        int max_orbits, int max_points);

// Samples the seven structure-map compatibilities plus the semiring laws on
// random instances over random bases, with norm instances kept small enough
// for the section enumeration.
Report check_tambara_axioms(const SemiMackeyData& M, int samples, std::uint64_t seed);

// ---------------------------------------------------------------------------
// The completion as a target of morphisms: enough operations to state that
// a family of level maps out of M is multiplicative and compatible with the
// stored structure maps, with all transports expressed as coset maps.

// mu[H][K]: cosets of the representative of K's class -> cosets of the
// representative of H's class; pulling back along it is the stored
// restriction of any completion-style functor, and the multiplicative push
// along it is the stored (multiplicative) transfer.
GMap rep_projection(const SubgroupTable& tab, int H, int K);
// nu[g][H]: coset self-map whose pullback is the stored conjugation.
GMap rep_conjugation(const SubgroupTable& tab, int g, int H);

// The identity-coset class [G/R --id--> G/R, m] at class `cls`.
RingElt unit_class(const SemiMackeyData& M, int cls, int m);

// Completion of N as an adjunction target.
struct TambarizationTarget {
    const SemiMackeyData* N;
    using Elt = RingElt;

    GSet level_base(int cls) const {
        return coset_gset(*N->tab, N->tab->class_rep[cls]);
    }
    Elt restrict(const GMap& f, const Elt& x) const { return restrict_ring(*N, f, x); }
    Elt transfer(const GMap& f, const Elt& x) const { return transfer_ring(*N, f, x); }
    Elt norm(const GMap& f, const Elt& x) const { return norm_on_ring(*N, f, x); }
    Elt add(const Elt& a, const Elt& b) const { return ring_add(a, b); }
    Elt sub(const Elt& a, const Elt& b) const { return ring_sub(a, b); }
    Elt mul(const Elt& a, const Elt& b) const { return ring_mul(*N, a, b); }
    Elt one(const GSet& X) const { return one_ring(*N, X); }
    Elt zero(const GSet& X) const { return zero_ring(X); }
    bool equal(const Elt& a, const Elt& b) const { return ring_equal(a, b); }
};

// Family of maps from the levels of M into a target's values at the class
// representatives; the data of a morphism from M into the multiplicative
// part of the target.
template <class Tgt>
struct MultMorphism {
    std::vector<std::vector<typename Tgt::Elt>> val; // [class][level element]
};

template <class Tgt>
Report validate_mult_morphism(const SemiMackeyData& M, const Tgt& tgt,
                              const MultMorphism<Tgt>& mm) {
    Report rep;
    const SubgroupTable& tab = *M.tab;
    int nc = tab.num_classes(), ns = tab.num_subgroups(), n = tab.G().n;
    bool shape = rep.check((int)mm.val.size() == nc, "shape", "class count");
    for (int ci = 0; ci < nc && shape; ++ci)
        shape &= rep.check((int)mm.val[ci].size() == M.level[ci].size, "shape",
                           "level size at class " + std::to_string(ci));
    if (!shape) return rep;

    for (int ci = 0; ci < nc; ++ci) {
        const MonoidTable& L = M.level[ci];
        GSet base = tgt.level_base(ci);
        rep.check(tgt.equal(mm.val[ci][L.unit], tgt.one(base)), "unit goes to one",
                  "class " + std::to_string(ci));
        for (int a = 0; a < L.size; ++a)
            for (int b = a; b < L.size; ++b)
                rep.check(tgt.equal(mm.val[ci][L.op[a][b]],
                                    tgt.mul(mm.val[ci][a], mm.val[ci][b])),
                          "multiplicative on levels",
                          "class " + std::to_string(ci) + " a=" + std::to_string(a) +
                              " b=" + std::to_string(b));
    }
    for (int H = 0; H < ns; ++H)
        for (int K = 0; K < ns; ++K) {
            if (!tab.subgroups[H].contains(tab.subgroups[K])) continue;
            int cH = tab.class_of[H], cK = tab.class_of[K];
            GMap mu = rep_projection(tab, H, K);
            for (int m = 0; m < M.level[cH].size; ++m)
                rep.check(tgt.equal(tgt.restrict(mu, mm.val[cH][m]),
                                    mm.val[cK][M.r[H][K][m]]),
                          "commutes with restriction",
                          "H=" + std::to_string(H) + " K=" + std::to_string(K) +
                              " m=" + std::to_string(m));
            for (int m = 0; m < M.level[cK].size; ++m)
                rep.check(tgt.equal(tgt.norm(mu, mm.val[cK][m]),
                                    mm.val[cH][M.t[H][K][m]]),
                          "transfer goes to the multiplicative push",
                          "H=" + std::to_string(H) + " K=" + std::to_string(K) +
                              " m=" + std::to_string(m));
        }
    for (int g = 0; g < n; ++g)
        for (int H = 0; H < ns; ++H) {
            int cH = tab.class_of[H];
            GMap nu = rep_conjugation(tab, g, H);
            for (int m = 0; m < M.level[cH].size; ++m)
                rep.check(tgt.equal(tgt.restrict(nu, mm.val[cH][m]),
                                    mm.val[cH][M.c[g][H][m]]),
                          "commutes with conjugation",
                          "g=" + std::to_string(g) + " H=" + std::to_string(H) +
                              " m=" + std::to_string(m));
        }
    return rep;
}

// Orbit of X as a standalone G-set plus its inclusion into X.
GMap orbit_inclusion(const GSet& X, const OrbitDecomposition& dec, int j);

// The value of the induced morphism out of the completion of M on x:
// realize both halves, send each orbit's label through mm at its stabilizer,
// transport along the witness coset map, and push everything forward.
template <class Tgt>
typename Tgt::Elt psi_apply(const SemiMackeyData& M, const Tgt& tgt,
                            const MultMorphism<Tgt>& mm, const RingElt& x) {
    const SubgroupTable& tab = *M.tab;
    const FiniteGroup& G = tab.G();
    auto eval_half = [&](const SemiRingElt& s) {
        LabeledObject obj = realize(M, s);
        typename Tgt::Elt acc = tgt.zero(obj.p.dom);
        for (int j = 0; j < obj.label.dec.count; ++j) {
            GMap inc = orbit_inclusion(obj.p.dom, obj.label.dec, j);
            int K = obj.label.stab_id[j];
            int cls = tab.class_of[K];
            int rep_sid = tab.class_rep[cls];
            int wK = tab.witness[K];
            std::vector<int> omega(inc.dom.size);
            for (int idx = 0; idx < inc.dom.size; ++idx) {
                int u = obj.label.dec.transversal[inc.map[idx]];
                omega[idx] = coset_index(tab, rep_sid, G.mul[u][G.inv[wK]]);
            }
            GMap w = make_gmap(inc.dom, tgt.level_base(cls), std::move(omega));
            acc = tgt.add(acc, tgt.transfer(inc, tgt.restrict(w, mm.val[cls][obj.label.comp[j]])));
        }
        return tgt.transfer(obj.p, acc);
    };
    return tgt.sub(eval_half(positive_part(x)), eval_half(negative_part(x)));
}

// Reads back level data from a morphism out of the completion by evaluating
// it on the identity-coset classes.
template <class Tgt>
MultMorphism<Tgt> phi_of_psi(const SemiMackeyData& M, const Tgt&,
                             const std::function<typename Tgt::Elt(const RingElt&)>& psi) {
    MultMorphism<Tgt> mm;
    int nc = M.tab->num_classes();
    mm.val.resize(nc);
    for (int ci = 0; ci < nc; ++ci)
        for (int m = 0; m < M.level[ci].size; ++m)
            mm.val[ci].push_back(psi(unit_class(M, ci, m)));
    return mm;
}

// The level maps induced by a levelwise morphism M -> N, landing in the
// completion of N.
MultMorphism<TambarizationTarget> induced_mult_morphism(const SemiMackeyData& M,
                                                        const SemiMackeyData& N,
                                                        const MackeyMorphism& beta);

bool mult_morphism_equal(const TambarizationTarget& tgt,
                         const MultMorphism<TambarizationTarget>& a,
                         const MultMorphism<TambarizationTarget>& b);

// Property check that a concrete map of completions respects the ring
// operations and the three structure maps on sampled data.
template <class Tgt>
Report check_tambara_morphism(const SemiMackeyData& M, const Tgt& tgt,
                              const std::function<typename Tgt::Elt(const RingElt&)>& psi,
                              int samples, std::uint64_t seed) {
    Report rep;
    const SubgroupTable& tab = *M.tab;
    for (int it = 0; it < samples; ++it) {
        Rng rng(derive_seed(seed, (std::uint64_t)it));
        GSet Y = random_gset(tab, rng, 2, 6);
        GMap xi = random_over(tab, Y, rng, 2, 8);
        const GSet& X = xi.dom;
        RingElt x = random_ring_elt(M, X, rng, 2, 8);
        RingElt y = random_ring_elt(M, X, rng, 2, 8);

        rep.check(tgt.equal(psi(ring_add(x, y)), tgt.add(psi(x), psi(y))),
                  "respects addition", "sample " + std::to_string(it));
        rep.check(tgt.equal(psi(ring_mul(M, x, y)), tgt.mul(psi(x), psi(y))),
                  "respects multiplication", "sample " + std::to_string(it));
        rep.check(tgt.equal(psi(one_ring(M, X)), tgt.one(X)), "respects one",
                  "sample " + std::to_string(it));
        rep.check(tgt.equal(psi(transfer_ring(M, xi, x)), tgt.transfer(xi, psi(x))),
                  "respects transfer", "sample " + std::to_string(it));
        RingElt z = random_ring_elt(M, Y, rng, 2, 8);
        rep.check(tgt.equal(psi(restrict_ring(M, xi, z)), tgt.restrict(xi, psi(z))),
                  "respects restriction", "sample " + std::to_string(it));

        GSet Yn = random_gset(tab, rng, 1, 3);
        GMap eta = random_over(tab, Yn, rng, 2, 6);
        RingElt xn = random_ring_elt(M, eta.dom, rng, 2, 6);
        rep.check(tgt.equal(psi(norm_on_ring(M, eta, xn)), tgt.norm(eta, psi(xn))),
                  "respects norm", "sample " + std::to_string(it));
    }
    return rep;
}

} // namespace tamb
