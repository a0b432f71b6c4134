#include "tamb/tambara.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>

namespace tamb {

namespace {

using Terms = std::vector<std::pair<BasicClass, long long>>;

Terms merge_terms(const Terms& a, const Terms& b, long long sign_b) {
    std::map<BasicClass, long long> acc;
    for (const auto& [k, v] : a) acc[k] += v;
    for (const auto& [k, v] : b) acc[k] += sign_b * v;
    Terms out;
    for (const auto& [k, v] : acc)
        if (v != 0) out.emplace_back(k, v);
    return out;
}

void require_same_base(const GSet& a, const GSet& b) {
    require(a == b, errc::base_mismatch, "elements live over different bases");
}

// Smallest group element in each coset of coset_gset(tab, sid), by point.
std::vector<int> coset_point_reps(const SubgroupTable& tab, int sid) {
    const FiniteGroup& G = tab.G();
    int sz = G.n / tab.subgroups[sid].order();
    std::vector<int> rep(sz, -1);
    for (int g = 0; g < G.n; ++g) {
        int idx = coset_index(tab, sid, g);
        if (rep[idx] < 0) rep[idx] = g;
    }
    return rep;
}

} // namespace

SemiRingElt canonicalize(const SemiMackeyData& M, const LabeledObject& obj) {
    require(obj.label.base == obj.p.dom, errc::base_mismatch,
            "label must live on the mapped object");
    const SubgroupTable& tab = *M.tab;
    require(same_group(*obj.p.dom.group, tab.G()), errc::group_mismatch,
            "object over a different group");
    const FiniteGroup& G = tab.G();
    OrbitDecomposition dx = orbit_decompose(obj.p.cod);
    std::map<BasicClass, long long> acc;
    const MackeyElement& m = obj.label;
    for (int j = 0; j < m.dec.count; ++j) {
        int x = obj.p.map[m.dec.rep[j]];
        int i = dx.orbit_of[x];
        int iu = G.inv[dx.transversal[x]];
        int K0 = m.stab_id[j];
        // move the orbit representative into the fiber over the X-orbit rep
        int K = tab.conj_id[iu][K0];
        int lbl = M.c[iu][K0][m.comp[j]];
        // canonical form under the conjugation action of the base stabilizer
        const Subgroup& H = dx.stab[i];
        int Kc = K;
        for (int h : H.elems) Kc = std::min(Kc, tab.conj_id[h][K]);
        int best = std::numeric_limits<int>::max();
        for (int h : H.elems)
            if (tab.conj_id[h][K] == Kc) best = std::min(best, M.c[h][K][lbl]);
        acc[BasicClass{i, Kc, best}] += 1;
    }
    SemiRingElt out;
    out.base = obj.p.cod;
    out.terms.assign(acc.begin(), acc.end());
    return out;
}

LabeledObject realize(const SemiMackeyData& M, const SemiRingElt& a) {
    const SubgroupTable& tab = *M.tab;
    const FiniteGroup& G = tab.G();
    const GSet& X = a.base;
    require(same_group(*X.group, G), errc::group_mismatch, "base over a different group");
    OrbitDecomposition dx = orbit_decompose(X);

    long long total = 0;
    for (const auto& [cls, mult] : a.terms) {
        require(cls.orbit >= 0 && cls.orbit < dx.count, errc::malformed_input,
                "class names a missing orbit");
        require(cls.stab >= 0 && cls.stab < tab.num_subgroups(), errc::malformed_input,
                "class names a missing subgroup");
        require(dx.stab[cls.orbit].contains(tab.subgroups[cls.stab]),
                errc::malformed_input, "class stabilizer not under the base point");
        require(cls.label >= 0 && cls.label < M.level_of_subgroup(cls.stab).size,
                errc::malformed_input, "class label out of range");
        require(mult > 0, errc::malformed_input, "multiplicities must be positive");
        total += mult * (G.n / tab.subgroups[cls.stab].order());
    }
    require(total <= 1 << 22, errc::malformed_input, "realized object too large");

    std::vector<std::vector<int>> act(G.n, std::vector<int>((size_t)total));
    std::vector<int> pmap((size_t)total);
    std::vector<int> comps;
    int off = 0;
    for (const auto& [cls, mult] : a.terms) {
        GSet C = coset_gset(tab, cls.stab);
        std::vector<int> reps = coset_point_reps(tab, cls.stab);
        int xi = dx.rep[cls.orbit];
        for (long long copy = 0; copy < mult; ++copy) {
            for (int g = 0; g < G.n; ++g)
                for (int pt = 0; pt < C.size; ++pt) act[g][off + pt] = off + C.act[g][pt];
            for (int pt = 0; pt < C.size; ++pt) pmap[off + pt] = X.act[reps[pt]][xi];
            comps.push_back(cls.label);
            off += C.size;
        }
    }
    GSet A = make_gset(X.group, (int)total, std::move(act));
    GMap p = make_gmap(A, X, std::move(pmap));
    MackeyElement label = make_element(M, A, std::move(comps));
    return {std::move(p), std::move(label)};
}

SemiRingElt zero_semiring(const GSet& X) { return {X, {}}; }

SemiRingElt one_semiring(const SemiMackeyData& M, const GSet& X) {
    return canonicalize(M, {identity_map(X), unit_element(M, X)});
}

bool semiring_equal(const SemiRingElt& a, const SemiRingElt& b) {
    return a.base == b.base && a.terms == b.terms;
}

SemiRingElt add(const SemiRingElt& a, const SemiRingElt& b) {
    require_same_base(a.base, b.base);
    return {a.base, merge_terms(a.terms, b.terms, 1)};
}

SemiRingElt mul(const SemiMackeyData& M, const SemiRingElt& a, const SemiRingElt& b) {
    require_same_base(a.base, b.base);
    LabeledObject ra = realize(M, a);
    LabeledObject rb = realize(M, b);
    Pullback P = pullback(ra.p, rb.p);
    MackeyElement lab = element_product(M, pull(M, P.pr1, ra.label),
                                        pull(M, P.pr2, rb.label));
    return canonicalize(M, {compose(ra.p, P.pr1), std::move(lab)});
}

SemiRingElt restrict_semi(const SemiMackeyData& M, const GMap& zeta, const SemiRingElt& a) {
    require_same_base(a.base, zeta.cod);
    LabeledObject r = realize(M, a);
    Pullback P = pullback(r.p, zeta);
    return canonicalize(M, {P.pr2, pull(M, P.pr1, r.label)});
}

SemiRingElt transfer_semi(const SemiMackeyData& M, const GMap& xi, const SemiRingElt& a) {
    require_same_base(a.base, xi.dom);
    LabeledObject r = realize(M, a);
    return canonicalize(M, {compose(xi, r.p), r.label});
}

SemiRingElt norm_semi(const SemiMackeyData& M, const GMap& eta, const SemiRingElt& a) {
    require_same_base(a.base, eta.dom);
    LabeledObject r = realize(M, a);
    ExponentialDiagram E = dependent_product(eta, r.p);
    MackeyElement lab = push(M, E.rho, pull(M, E.lambda, r.label));
    return canonicalize(M, {E.pi, std::move(lab)});
}

RingElt k0(const SemiRingElt& a) { return {a.base, a.terms}; }

RingElt zero_ring(const GSet& X) { return {X, {}}; }

RingElt one_ring(const SemiMackeyData& M, const GSet& X) { return k0(one_semiring(M, X)); }

bool ring_equal(const RingElt& a, const RingElt& b) {
    return a.base == b.base && a.terms == b.terms;
}

bool is_effective(const RingElt& x) {
    for (const auto& [k, v] : x.terms)
        if (v < 0) return false;
    return true;
}

SemiRingElt positive_part(const RingElt& x) {
    SemiRingElt out{x.base, {}};
    for (const auto& [k, v] : x.terms)
        if (v > 0) out.terms.emplace_back(k, v);
    return out;
}

SemiRingElt negative_part(const RingElt& x) {
    SemiRingElt out{x.base, {}};
    for (const auto& [k, v] : x.terms)
        if (v < 0) out.terms.emplace_back(k, -v);
    return out;
}

RingElt ring_diff(const SemiRingElt& pos, const SemiRingElt& neg) {
    require_same_base(pos.base, neg.base);
    return {pos.base, merge_terms(pos.terms, neg.terms, -1)};
}

RingElt ring_add(const RingElt& a, const RingElt& b) {
    require_same_base(a.base, b.base);
    return {a.base, merge_terms(a.terms, b.terms, 1)};
}

RingElt ring_neg(const RingElt& a) { return {a.base, merge_terms({}, a.terms, -1)}; }

RingElt ring_sub(const RingElt& a, const RingElt& b) {
    require_same_base(a.base, b.base);
    return {a.base, merge_terms(a.terms, b.terms, -1)};
}

RingElt ring_scale(long long n, const RingElt& a) {
    RingElt out{a.base, {}};
    if (n == 0) return out;
    for (const auto& [k, v] : a.terms) out.terms.emplace_back(k, n * v);
    return out;
}

RingElt ring_mul(const SemiMackeyData& M, const RingElt& a, const RingElt& b) {
    require_same_base(a.base, b.base);
    SemiRingElt ap = positive_part(a), an = negative_part(a);
    SemiRingElt bp = positive_part(b), bn = negative_part(b);
    RingElt pos = ring_add(k0(mul(M, ap, bp)), k0(mul(M, an, bn)));
    RingElt neg = ring_add(k0(mul(M, ap, bn)), k0(mul(M, an, bp)));
    return ring_sub(pos, neg);
}

RingElt restrict_ring(const SemiMackeyData& M, const GMap& zeta, const RingElt& x) {
    return ring_diff(restrict_semi(M, zeta, positive_part(x)),
                     restrict_semi(M, zeta, negative_part(x)));
}

RingElt transfer_ring(const SemiMackeyData& M, const GMap& xi, const RingElt& x) {
    return ring_diff(transfer_semi(M, xi, positive_part(x)),
                     transfer_semi(M, xi, negative_part(x)));
}

RingElt norm_on_ring(const SemiMackeyData& M, const GMap& eta, const RingElt& x) {
    require_same_base(x.base, eta.dom);
    LabeledObject A = realize(M, positive_part(x));
    LabeledObject B = realize(M, negative_part(x));
    Coproduct cp = disjoint_union(A.p.dom, B.p.dom);
    GMap pC = copair(cp, A.p, B.p);
    // orbits of the union are the orbits of A followed by those of B
    std::vector<int> comps = A.label.comp;
    comps.insert(comps.end(), B.label.comp.begin(), B.label.comp.end());
    MackeyElement mC = make_element(M, cp.total, std::move(comps));

    ExponentialDiagram E = dependent_product(eta, pC);
    MackeyElement L = push(M, E.rho, pull(M, E.lambda, mC));

    // grade every section by how many coordinates land in the negative block
    int asize = A.p.dom.size;
    int np = E.pi_dom.size;
    std::vector<int> grade(np, 0);
    int maxk = 0;
    for (int pt = 0; pt < np; ++pt) {
        for (int v : E.section[pt])
            if (v >= asize) ++grade[pt];
        maxk = std::max(maxk, grade[pt]);
    }
    const FiniteGroup& G = M.tab->G();
    RingElt out = zero_ring(eta.cod);
    for (int k = 0; k <= maxk; ++k) {
        std::vector<int> pts;
        for (int pt = 0; pt < np; ++pt)
            if (grade[pt] == k) pts.push_back(pt);
        if (pts.empty()) continue;
        std::vector<int> pos(np, -1);
        for (int idx = 0; idx < (int)pts.size(); ++idx) pos[pts[idx]] = idx;
        std::vector<std::vector<int>> act(G.n, std::vector<int>(pts.size()));
        for (int g = 0; g < G.n; ++g)
            for (int idx = 0; idx < (int)pts.size(); ++idx) {
                int img = pos[E.pi_dom.act[g][pts[idx]]];
                require(img >= 0, errc::malformed_table, "grading not stable under the action");
                act[g][idx] = img;
            }
        GSet S = make_gset(E.pi_dom.group, (int)pts.size(), std::move(act));
        GMap inc = make_gmap(S, E.pi_dom, pts);
        RingElt term = k0(canonicalize(M, {compose(E.pi, inc), pull(M, inc, L)}));
        out = k % 2 == 0 ? ring_add(out, term) : ring_sub(out, term);
    }
    return out;
}

Pullback cross_base(const GSet& X, const GSet& Y) { return product(X, Y); }

RingElt cross_product(const SemiMackeyData& M, const RingElt& x, const RingElt& y) {
    require(same_group(*x.base.group, *y.base.group), errc::group_mismatch,
            "cross product needs one group");
    Pullback P = cross_base(x.base, y.base);
    return ring_mul(M, restrict_ring(M, P.pr1, x), restrict_ring(M, P.pr2, y));
}

SemiRingElt map_labels(const SemiMackeyData& M, const SemiMackeyData& N,
                       const MackeyMorphism& f, const SemiRingElt& a) {
    Report v = validate_mackey_morphism(M, N, f);
    require(v.ok(), errc::not_a_mackey_morphism,
            v.violations.empty() ? "invalid morphism" : v.violations.front().rule);
    LabeledObject r = realize(M, a);
    return canonicalize(N, {r.p, apply_morphism(M, N, f, r.label)});
}

RingElt map_labels_ring(const SemiMackeyData& M, const SemiMackeyData& N,
                        const MackeyMorphism& f, const RingElt& x) {
    return ring_diff(map_labels(M, N, f, positive_part(x)),
                     map_labels(M, N, f, negative_part(x)));
}

std::vector<RingElt> ring_basis(const SemiMackeyData& M, const GSet& X) {
    const SubgroupTable& tab = *M.tab;
    OrbitDecomposition dx = orbit_decompose(X);
    std::vector<RingElt> out;
    for (int i = 0; i < dx.count; ++i) {
        const Subgroup& H = dx.stab[i];
        for (int K = 0; K < tab.num_subgroups(); ++K) {
            if (!H.contains(tab.subgroups[K])) continue;
            bool minimal = true;
            for (int h : H.elems) minimal = minimal && tab.conj_id[h][K] >= K;
            if (!minimal) continue;
            for (int lbl = 0; lbl < M.level_of_subgroup(K).size; ++lbl) {
                bool least = true;
                for (int h : H.elems)
                    if (tab.conj_id[h][K] == K) least = least && M.c[h][K][lbl] >= lbl;
                if (!least) continue;
                out.push_back(RingElt{X, {{BasicClass{i, K, lbl}, 1}}});
            }
        }
    }
    return out;
}

SemiRingElt random_semiring_elt(const SemiMackeyData& M, const GSet& X, Rng& rng,
                                int max_orbits, int max_points) {
    GMap p = random_over(*M.tab, X, rng, max_orbits, max_points);
    MackeyElement lab = unit_element(M, p.dom);
    for (int i = 0; i < lab.dec.count; ++i)
        lab.comp[i] = rng.uniform(0, M.level_of_subgroup(lab.stab_id[i]).size - 1);
    return canonicalize(M, {p, std::move(lab)});
}

RingElt random_ring_elt(const SemiMackeyData& M, const GSet& X, Rng& rng,
                        int max_orbits, int max_points) {
    int mode = rng.uniform(0, 5);
    if (mode == 0) return zero_ring(X);
    SemiRingElt p = random_semiring_elt(M, X, rng, max_orbits, max_points);
    if (mode == 1) return k0(p);
    if (mode == 2) return ring_neg(k0(p));
    SemiRingElt n = random_semiring_elt(M, X, rng, max_orbits, max_points);
    return ring_diff(p, n);
}

namespace {

LabeledObject random_relabel(const SemiMackeyData& M, const LabeledObject& obj, Rng& rng) {
    int n = obj.p.dom.size;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.uniform(0, i)]);
    std::vector<int> ipos(n);
    for (int i = 0; i < n; ++i) ipos[perm[i]] = i;
    const FiniteGroup& G = obj.p.dom.G();
    std::vector<std::vector<int>> act(G.n, std::vector<int>(n));
    for (int g = 0; g < G.n; ++g)
        for (int i = 0; i < n; ++i) act[g][i] = ipos[obj.p.dom.act[g][perm[i]]];
    GSet A2 = make_gset(obj.p.dom.group, n, std::move(act));
    GMap sigma = make_gmap(A2, obj.p.dom, perm);
    return {compose(obj.p, sigma), pull(M, sigma, obj.label)};
}

} // namespace

Report check_tambara_axioms(const SemiMackeyData& M, int samples, std::uint64_t seed) {
    Report rep;
    const SubgroupTable& tab = *M.tab;
    for (int it = 0; it < samples; ++it) {
        Rng rng(derive_seed(seed, (std::uint64_t)it));
        std::string at = "sample " + std::to_string(it);

        GSet X = random_gset(tab, rng, 2, 8);
        SemiRingElt a = random_semiring_elt(M, X, rng, 2, 8);
        SemiRingElt b = random_semiring_elt(M, X, rng, 2, 8);
        SemiRingElt c = random_semiring_elt(M, X, rng, 2, 6);
        SemiRingElt zero = zero_semiring(X);
        SemiRingElt one = one_semiring(M, X);

        rep.check(semiring_equal(add(a, b), add(b, a)), "sum commutes", at);
        rep.check(semiring_equal(add(add(a, b), c), add(a, add(b, c))), "sum associates", at);
        rep.check(semiring_equal(add(a, zero), a), "zero is neutral", at);
        rep.check(semiring_equal(mul(M, a, b), mul(M, b, a)), "product commutes", at);
        rep.check(semiring_equal(mul(M, mul(M, a, b), c), mul(M, a, mul(M, b, c))),
                  "product associates", at);
        rep.check(semiring_equal(mul(M, a, one), a), "one is neutral", at);
        rep.check(semiring_equal(mul(M, a, zero), zero), "zero absorbs", at);
        rep.check(semiring_equal(mul(M, a, add(b, c)), add(mul(M, a, b), mul(M, a, c))),
                  "product distributes over sum", at);

        LabeledObject ra = realize(M, a);
        rep.check(semiring_equal(canonicalize(M, ra), a), "realize inverts canonicalize", at);
        rep.check(semiring_equal(canonicalize(M, random_relabel(M, ra, rng)), a),
                  "canonical form survives relabeling", at);

        GMap zeta = random_over(tab, X, rng, 2, 8);
        rep.check(semiring_equal(restrict_semi(M, zeta, add(a, b)),
                                 add(restrict_semi(M, zeta, a), restrict_semi(M, zeta, b))),
                  "restriction preserves sums", at);
        rep.check(semiring_equal(restrict_semi(M, zeta, mul(M, a, b)),
                                 mul(M, restrict_semi(M, zeta, a), restrict_semi(M, zeta, b))),
                  "restriction preserves products", at);
        rep.check(semiring_equal(restrict_semi(M, zeta, one), one_semiring(M, zeta.dom)),
                  "restriction preserves one", at);
        rep.check(semiring_equal(restrict_semi(M, identity_map(X), a), a),
                  "restriction along the identity", at);
        GMap zeta2 = random_over(tab, zeta.dom, rng, 2, 8);
        rep.check(semiring_equal(restrict_semi(M, zeta2, restrict_semi(M, zeta, a)),
                                 restrict_semi(M, compose(zeta, zeta2), a)),
                  "restriction is functorial", at);

        GMap xi = random_over(tab, X, rng, 2, 8);
        SemiRingElt a1 = random_semiring_elt(M, xi.dom, rng, 2, 8);
        SemiRingElt b1 = random_semiring_elt(M, xi.dom, rng, 2, 8);
        rep.check(semiring_equal(transfer_semi(M, xi, add(a1, b1)),
                                 add(transfer_semi(M, xi, a1), transfer_semi(M, xi, b1))),
                  "transfer preserves sums", at);
        rep.check(semiring_equal(transfer_semi(M, xi, zero_semiring(xi.dom)), zero),
                  "transfer preserves zero", at);
        rep.check(semiring_equal(transfer_semi(M, identity_map(X), a), a),
                  "transfer along the identity", at);
        GMap xi2 = random_over(tab, xi.dom, rng, 1, 6);
        SemiRingElt a2 = random_semiring_elt(M, xi2.dom, rng, 1, 6);
        rep.check(semiring_equal(transfer_semi(M, xi, transfer_semi(M, xi2, a2)),
                                 transfer_semi(M, compose(xi, xi2), a2)),
                  "transfer is functorial", at);

        Pullback P = pullback(xi, zeta);
        rep.check(semiring_equal(restrict_semi(M, zeta, transfer_semi(M, xi, a1)),
                                 transfer_semi(M, P.pr2, restrict_semi(M, P.pr1, a1))),
                  "transfer base change", at);

        rep.check(semiring_equal(transfer_semi(M, xi, mul(M, a1, restrict_semi(M, xi, a))),
                                 mul(M, transfer_semi(M, xi, a1), a)),
                  "projection formula", at);

        // norms on deliberately small instances
        GSet Yn = random_gset(tab, rng, 1, 4);
        GMap eta = random_over(tab, Yn, rng, 2, 5);
        SemiRingElt an = random_semiring_elt(M, eta.dom, rng, 2, 5);
        SemiRingElt bn = random_semiring_elt(M, eta.dom, rng, 1, 3);
        rep.check(semiring_equal(norm_semi(M, eta, mul(M, an, bn)),
                                 mul(M, norm_semi(M, eta, an), norm_semi(M, eta, bn))),
                  "norm preserves products", at);
        rep.check(semiring_equal(norm_semi(M, eta, one_semiring(M, eta.dom)),
                                 one_semiring(M, Yn)),
                  "norm preserves one", at);
        rep.check(semiring_equal(norm_semi(M, identity_map(eta.dom), an), an),
                  "norm along the identity", at);

        GMap zeta_n = random_over(tab, Yn, rng, 2, 6);
        Pullback Pn = pullback(eta, zeta_n);
        rep.check(semiring_equal(restrict_semi(M, zeta_n, norm_semi(M, eta, an)),
                                 norm_semi(M, Pn.pr2, restrict_semi(M, Pn.pr1, an))),
                  "norm base change", at);

        GMap xi_n = random_over(tab, eta.dom, rng, 2, 4);
        SemiRingElt aA = random_semiring_elt(M, xi_n.dom, rng, 1, 4);
        ExponentialDiagram E = dependent_product(eta, xi_n);
        rep.check(semiring_equal(
                      transfer_semi(M, E.pi,
                                    norm_semi(M, E.rho, restrict_semi(M, E.lambda, aA))),
                      norm_semi(M, eta, transfer_semi(M, xi_n, aA))),
                  "transfer then norm expands through the exponential diagram", at);

        RingElt xr = random_ring_elt(M, eta.dom, rng, 1, 2);
        RingElt yr = random_ring_elt(M, eta.dom, rng, 1, 2);
        rep.check(ring_equal(norm_on_ring(M, eta, ring_mul(M, xr, yr)),
                             ring_mul(M, norm_on_ring(M, eta, xr), norm_on_ring(M, eta, yr))),
                  "signed norm preserves products", at);
        rep.check(ring_equal(norm_on_ring(M, eta, k0(an)), k0(norm_semi(M, eta, an))),
                  "signed norm extends the norm", at);
        rep.check(ring_equal(ring_mul(M, ring_sub(one_ring(M, X), one_ring(M, X)),
                                      random_ring_elt(M, X, rng, 1, 4)),
                             zero_ring(X)),
                  "differences cancel", at);
    }
    return rep;
}

GMap rep_projection(const SubgroupTable& tab, int H, int K) {
    require(tab.subgroups[H].contains(tab.subgroups[K]), errc::not_contained,
            "projection needs nested subgroups");
    const FiniteGroup& G = tab.G();
    int repH = tab.class_rep[tab.class_of[H]];
    int repK = tab.class_rep[tab.class_of[K]];
    int move = G.mul[tab.witness[K]][G.inv[tab.witness[H]]];
    GSet dom = coset_gset(tab, repK);
    GSet cod = coset_gset(tab, repH);
    std::vector<int> reps = coset_point_reps(tab, repK);
    std::vector<int> map(dom.size);
    for (int pt = 0; pt < dom.size; ++pt)
        map[pt] = coset_index(tab, repH, G.mul[reps[pt]][move]);
    return make_gmap(std::move(dom), std::move(cod), std::move(map));
}

GMap rep_conjugation(const SubgroupTable& tab, int g, int H) {
    const FiniteGroup& G = tab.G();
    int rep = tab.class_rep[tab.class_of[H]];
    int Hg = tab.conj_id[g][H];
    int move = G.mul[tab.witness[Hg]][G.mul[g][G.inv[tab.witness[H]]]];
    GSet dom = coset_gset(tab, rep);
    GSet cod = dom;
    std::vector<int> reps = coset_point_reps(tab, rep);
    std::vector<int> map(dom.size);
    for (int pt = 0; pt < dom.size; ++pt)
        map[pt] = coset_index(tab, rep, G.mul[reps[pt]][move]);
    return make_gmap(std::move(dom), std::move(cod), std::move(map));
}

RingElt unit_class(const SemiMackeyData& M, int cls, int m) {
    require(cls >= 0 && cls < M.tab->num_classes(), errc::malformed_input, "class id");
    require(m >= 0 && m < M.level[cls].size, errc::malformed_input, "level element");
    GSet X = coset_gset(*M.tab, M.tab->class_rep[cls]);
    return k0(canonicalize(M, {identity_map(X), make_element(M, X, {m})}));
}

GMap orbit_inclusion(const GSet& X, const OrbitDecomposition& dec, int j) {
    const std::vector<int>& pts = dec.points[j];
    const FiniteGroup& G = X.G();
    std::vector<int> pos(X.size, -1);
    for (int idx = 0; idx < (int)pts.size(); ++idx) pos[pts[idx]] = idx;
    std::vector<std::vector<int>> act(G.n, std::vector<int>(pts.size()));
    for (int g = 0; g < G.n; ++g)
        for (int idx = 0; idx < (int)pts.size(); ++idx)
            act[g][idx] = pos[X.act[g][pts[idx]]];
    GSet S = make_gset(X.group, (int)pts.size(), std::move(act));
    return make_gmap(std::move(S), X, pts);
}

MultMorphism<TambarizationTarget> induced_mult_morphism(const SemiMackeyData& M,
                                                        const SemiMackeyData& N,
                                                        const MackeyMorphism& beta) {
    Report v = validate_mackey_morphism(M, N, beta);
    require(v.ok(), errc::not_a_mackey_morphism,
            v.violations.empty() ? "invalid morphism" : v.violations.front().rule);
    MultMorphism<TambarizationTarget> mm;
    int nc = M.tab->num_classes();
    mm.val.resize(nc);
    for (int ci = 0; ci < nc; ++ci)
        for (int m = 0; m < M.level[ci].size; ++m)
            mm.val[ci].push_back(unit_class(N, ci, beta.phi[ci][m]));
    return mm;
}

bool mult_morphism_equal(const TambarizationTarget& tgt,
                         const MultMorphism<TambarizationTarget>& a,
                         const MultMorphism<TambarizationTarget>& b) {
    if (a.val.size() != b.val.size()) return false;
    for (size_t ci = 0; ci < a.val.size(); ++ci) {
        if (a.val[ci].size() != b.val[ci].size()) return false;
        for (size_t m = 0; m < a.val[ci].size(); ++m)
            if (!tgt.equal(a.val[ci][m], b.val[ci][m])) return false;
    }
    return true;
}

} // namespace tamb
