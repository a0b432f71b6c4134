#include "tamb/sampling.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace tamb {

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    // splitmix64 over the pair
    std::uint64_t z = master + 0x9e3779b97f4a7c15ull * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

int Rng::uniform(int lo, int hi) {
    return (int)std::uniform_int_distribution<long long>(lo, hi)(eng);
}

namespace {

GSet shuffle_points(const GSet& X, Rng& rng) {
    std::vector<int> perm(X.size);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng.eng);
    GSet Y;
    Y.group = X.group;
    Y.size = X.size;
    Y.act.assign(X.act.size(), std::vector<int>(X.size));
    for (size_t g = 0; g < X.act.size(); ++g)
        for (int x = 0; x < X.size; ++x) Y.act[g][perm[x]] = perm[X.act[g][x]];
    return Y;
}

} // namespace

GMap shuffle_dom(const GMap& f, Rng& rng) {
    std::vector<int> perm(f.dom.size);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng.eng);
    GSet D;
    D.group = f.dom.group;
    D.size = f.dom.size;
    D.act.assign(f.dom.act.size(), std::vector<int>(f.dom.size));
    std::vector<int> m(f.dom.size);
    for (size_t g = 0; g < f.dom.act.size(); ++g)
        for (int x = 0; x < f.dom.size; ++x) D.act[g][perm[x]] = perm[f.dom.act[g][x]];
    for (int x = 0; x < f.dom.size; ++x) m[perm[x]] = f.map[x];
    GMap out;
    out.dom = std::move(D);
    out.cod = f.cod;
    out.map = std::move(m);
    return out;
}

GSet random_gset(const SubgroupTable& tab, Rng& rng, int max_orbits, int max_points) {
    int orbits = rng.uniform(1, max_orbits);
    GSet acc = make_gset(tab.group, 0, std::vector<std::vector<int>>(tab.G().n));
    for (int i = 0; i < orbits; ++i) {
        int sid = rng.uniform(0, tab.num_subgroups() - 1);
        GSet orb = coset_gset(tab, sid);
        if (acc.size + orb.size > max_points) continue;
        acc = disjoint_union(acc, orb).total;
    }
    if (acc.size == 0) acc = coset_gset(tab, tab.full_id()); // keep at least a point
    return shuffle_points(acc, rng);
}

GMap random_over(const SubgroupTable& tab, const GSet& X, Rng& rng,
                 int max_orbits, int max_points) {
    const FiniteGroup& G = tab.G();
    GSet acc = make_gset(tab.group, 0, std::vector<std::vector<int>>(G.n));
    std::vector<int> acc_map;
    int orbits = rng.uniform(0, max_orbits);
    for (int i = 0; i < orbits && X.size > 0; ++i) {
        int x = rng.uniform(0, X.size - 1);
        Subgroup Gx = stabilizer(X, x);
        std::vector<int> inside;
        for (int sid = 0; sid < tab.num_subgroups(); ++sid)
            if (Gx.contains(tab.subgroups[sid])) inside.push_back(sid);
        int sid = rng.pick(inside);
        GSet orb = coset_gset(tab, sid);
        if (acc.size + orb.size > max_points) continue;
        auto reps = left_coset_reps(G, make_subgroup(G, [&] {
            std::vector<int> all(G.n);
            std::iota(all.begin(), all.end(), 0);
            return all;
        }()), tab.subgroups[sid]);
        for (int r : reps) acc_map.push_back(X.act[r][x]);
        acc = disjoint_union(acc, orb).total;
    }
    GMap p;
    p.dom = std::move(acc);
    p.cod = X;
    p.map = std::move(acc_map);
    return shuffle_dom(p, rng);
}

namespace {

std::string describe(const GMap& f) {
    std::ostringstream os;
    os << "map[" << f.dom.size << "->" << f.cod.size << "](";
    for (int v : f.map) os << v << ",";
    os << ")";
    return os.str();
}

// one sampled instance of eta: X -> Y plus however many over-objects we need
struct LemmaInstance {
    GSet Y;
    GMap eta;   // X -> Y
    GMap p1;    // A1 -> X
    GMap p2;    // A2 -> X
    GMap zeta;  // Y' -> Y
};

std::optional<LemmaInstance> draw_instance(const SubgroupTable& tab, Rng& rng,
                                           std::int64_t cap) {
    LemmaInstance ins;
    ins.Y = random_gset(tab, rng, 2, 6);
    ins.eta = random_over(tab, ins.Y, rng, 2, 8);
    const GSet& X = ins.eta.dom;
    ins.p1 = random_over(tab, X, rng, 2, 8);
    ins.p2 = random_over(tab, X, rng, 2, 8);
    ins.zeta = random_over(tab, ins.Y, rng, 2, 6);
    if (!dependent_product_size(ins.eta, ins.p1, cap)) return std::nullopt;
    if (!dependent_product_size(ins.eta, ins.p2, cap)) return std::nullopt;
    return ins;
}

} // namespace

Report diagram_lemma_suite(const SubgroupTable& tab, int samples, std::uint64_t seed) {
    Report rep;
    const std::int64_t cap = 4096;
    for (int it = 0; it < samples; ++it) {
        Rng rng(derive_seed(seed, it));
        auto ins = draw_instance(tab, rng, cap);
        int tries = 0;
        while (!ins && tries < 50) { ins = draw_instance(tab, rng, cap); ++tries; }
        if (!ins) continue;
        const GMap& eta = ins->eta;

        // (A) Pi_eta(A1 x_X A2) — over Y —> Pi_eta(A1) x_Y Pi_eta(A2)
        {
            Pullback fp = pullback(ins->p1, ins->p2);
            GMap pp = compose(ins->p1, fp.pr1);
            if (dependent_product_size(eta, pp, cap)) {
                auto ES = dependent_product(eta, pp);
                auto E1 = dependent_product(eta, ins->p1);
                auto E2 = dependent_product(eta, ins->p2);
                Pullback T = pullback(E1.pi, E2.pi);
                GMap toY = compose(E1.pi, T.pr1);
                rep.check(iso_over(ES.pi, toY).has_value(),
                          "lemma A: dependent product of a fibered product",
                          describe(eta) + " " + describe(ins->p1) + " " + describe(ins->p2));
            }
        }

        // (B) base change along zeta: Y' -> Y
        {
            auto E = dependent_product(eta, ins->p1);
            Pullback PX = pullback(eta, ins->zeta);     // X' = X x_Y Y'
            GMap etap = PX.pr2;                          // X' -> Y'
            Pullback PA = pullback(ins->p1, PX.pr1);     // A' = A x_X X'
            GMap pprime = PA.pr2;                        // A' -> X'
            if (dependent_product_size(etap, pprime, cap)) {
                auto Ep = dependent_product(etap, pprime);
                Pullback W = pullback(E.pi, ins->zeta);  // Pi x_Y Y'
                bool ok = iso_over(Ep.pi, W.pr2).has_value();
                // canonical comparison map, checked pointwise
                if (ok) {
                    std::vector<int> can(W.total.size, -1);
                    bool welldef = true;
                    for (int w = 0; w < W.total.size && welldef; ++w) {
                        auto [s, yp] = W.pairs[w];
                        int y = E.base_y[s];
                        const auto& fib = Ep.fiber_of_y[yp];
                        std::vector<int> sec(fib.size());
                        for (size_t k = 0; k < fib.size() && welldef; ++k) {
                            auto [x, yp2] = PX.pairs[fib[k]];
                            (void)yp2;
                            const auto& fx = E.fiber_of_y[y];
                            auto itx = std::lower_bound(fx.begin(), fx.end(), x);
                            int a = E.section[s][itx - fx.begin()];
                            auto ai = PA.index_of(a, fib[k]);
                            if (!ai) { welldef = false; break; }
                            sec[k] = *ai;
                        }
                        if (!welldef) break;
                        auto pt = Ep.point_of(yp, sec);
                        if (!pt) { welldef = false; break; }
                        can[w] = *pt;
                    }
                    std::set<int> img(can.begin(), can.end());
                    ok = welldef && (int)img.size() == W.total.size &&
                         W.total.size == Ep.pi_dom.size;
                    if (ok)
                        for (int g = 0; g < tab.G().n && ok; ++g)
                            for (int w = 0; w < W.total.size && ok; ++w)
                                ok = can[W.total.act[g][w]] == Ep.pi_dom.act[g][can[w]];
                }
                rep.check(ok, "lemma B: base change of an exponential diagram",
                          describe(eta) + " " + describe(ins->p1) + " " + describe(ins->zeta));
            }
        }

        // (C) stacked exponential diagrams compose
        {
            const GMap& xi = ins->p1; // Z -> X
            GMap p = random_over(tab, xi.dom, rng, 2, 6);
            if (dependent_product_size(eta, xi, cap)) {
                auto E1 = dependent_product(eta, xi);
                Pullback PA = pullback(p, E1.lambda); // A' = A x_Z (X x_Y Pi1)
                GMap pprime = PA.pr2;
                GMap comp = compose(xi, p);
                if (dependent_product_size(E1.rho, pprime, cap) &&
                    dependent_product_size(eta, comp, cap)) {
                    auto E2 = dependent_product(E1.rho, pprime);
                    auto E3 = dependent_product(eta, comp);
                    GMap left = compose(E1.pi, E2.pi);
                    rep.check(iso_over(left, E3.pi).has_value(),
                              "lemma C: composite of stacked exponential diagrams",
                              describe(eta) + " " + describe(xi) + " " + describe(p));
                }
            }
        }
    }
    return rep;
}

Report adjunction_suite(const SubgroupTable& tab, int samples, std::uint64_t seed) {
    Report rep;
    const std::int64_t cap = 2048;
    long long attempts = 0, budget = 50ll * samples + 100;
    for (int it = 0; it < samples && attempts < budget; ++it) {
        Rng rng(derive_seed(seed ^ 0xabcdef, attempts++));
        GSet Y = random_gset(tab, rng, 2, 6);
        GMap eta = random_over(tab, Y, rng, 2, 8);
        GMap p = random_over(tab, eta.dom, rng, 2, 8);
        GMap q = random_over(tab, Y, rng, 2, 8);
        if (!dependent_product_size(eta, p, cap)) { --it; continue; }
        auto E = dependent_product(eta, p);
        Pullback P = pullback(eta, q); // X x_Y B
        auto H1 = enumerate_maps(P.total, p.dom, &P.pr1, &p, 20000);
        auto H2 = enumerate_maps(q.dom, E.pi_dom, &q, &E.pi, 20000);
        if (!H1 || !H2) { --it; continue; }
        std::string w = describe(eta) + " " + describe(p) + " " + describe(q);
        rep.check(H1->size() == H2->size(), "hom sets across the adjunction have equal size", w);

        auto up = [&](const GMap& h) -> std::optional<GMap> {
            std::vector<int> m(q.dom.size);
            for (int b = 0; b < q.dom.size; ++b) {
                int y = q.map[b];
                const auto& fib = E.fiber_of_y[y];
                std::vector<int> sec(fib.size());
                for (size_t k = 0; k < fib.size(); ++k) {
                    auto idx = P.index_of(fib[k], b);
                    if (!idx) return std::nullopt;
                    sec[k] = h.map[*idx];
                }
                auto pt = E.point_of(y, sec);
                if (!pt) return std::nullopt;
                m[b] = *pt;
            }
            GMap k;
            k.dom = q.dom;
            k.cod = E.pi_dom;
            k.map = std::move(m);
            return k;
        };
        auto down = [&](const GMap& k) -> GMap {
            std::vector<int> m(P.total.size);
            for (int i = 0; i < P.total.size; ++i) {
                auto [x, b] = P.pairs[i];
                int s = k.map[b];
                const auto& fib = E.fiber_of_y[E.base_y[s]];
                auto itx = std::lower_bound(fib.begin(), fib.end(), x);
                m[i] = E.section[s][itx - fib.begin()];
            }
            GMap h;
            h.dom = P.total;
            h.cod = p.dom;
            h.map = std::move(m);
            return h;
        };

        std::set<std::vector<int>> seen;
        bool ok = true;
        for (const GMap& h : *H1) {
            auto k = up(h);
            if (!k) { ok = false; break; }
            seen.insert(k->map);
            GMap h2 = down(*k);
            if (h2.map != h.map) { ok = false; break; }
        }
        rep.check(ok, "transpose up then down is the identity", w);
        rep.check(seen.size() == H1->size(), "transpose up is injective", w);
        bool ok2 = true;
        for (const GMap& k : *H2) {
            if (!seen.count(k.map)) { ok2 = false; break; } // surjectivity onto H2
            GMap h = down(k);
            auto k2 = up(h);
            if (!k2 || k2->map != k.map) { ok2 = false; break; }
        }
        rep.check(ok2, "transpose down then up is the identity", w);
    }
    return rep;
}

Report universal_property_suite(const SubgroupTable& tab, int samples, std::uint64_t seed) {
    Report rep;
    long long attempts = 0, budget = 50ll * samples + 100;
    for (int it = 0; it < samples && attempts < budget; ++it) {
        Rng rng(derive_seed(seed ^ 0x5eed, attempts++));
        GSet X = random_gset(tab, rng, 2, 6);
        GMap f = random_over(tab, X, rng, 2, 6);
        GMap g = random_over(tab, X, rng, 2, 6);
        Pullback P = pullback(f, g);
        GSet C = random_gset(tab, rng, 1, 4);
        auto mapsA = enumerate_maps(C, f.dom, nullptr, nullptr, 3000);
        auto mapsB = enumerate_maps(C, g.dom, nullptr, nullptr, 3000);
        auto mapsP = enumerate_maps(C, P.total, nullptr, nullptr, 3000);
        if (!mapsA || !mapsB || !mapsP) { --it; continue; }
        std::string w = describe(f) + " " + describe(g);
        // every commuting cone factors uniquely
        for (const GMap& u : *mapsA)
            for (const GMap& v : *mapsB) {
                bool commutes = true;
                for (int c = 0; c < C.size; ++c)
                    if (f.map[u.map[c]] != g.map[v.map[c]]) { commutes = false; break; }
                if (!commutes) continue;
                int count = 0;
                for (const GMap& h : *mapsP) {
                    bool hits = true;
                    for (int c = 0; c < C.size; ++c)
                        if (P.pr1.map[h.map[c]] != u.map[c] ||
                            P.pr2.map[h.map[c]] != v.map[c]) { hits = false; break; }
                    if (hits) ++count;
                }
                rep.check(count == 1, "pullback universal property: unique mediating map", w);
            }
        // coproduct: restriction along the injections is a bijection onto pairs
        Coproduct cp = disjoint_union(f.dom, g.dom);
        auto mapsTot = enumerate_maps(cp.total, C, nullptr, nullptr, 3000);
        auto mapsA2 = enumerate_maps(f.dom, C, nullptr, nullptr, 3000);
        auto mapsB2 = enumerate_maps(g.dom, C, nullptr, nullptr, 3000);
        if (mapsTot && mapsA2 && mapsB2) {
            rep.check(mapsTot->size() == mapsA2->size() * mapsB2->size(),
                      "coproduct universal property: hom set factors", w);
            for (const GMap& u : *mapsA2)
                for (const GMap& v : *mapsB2) {
                    GMap both = copair(cp, u, v);
                    bool l = same_map(compose(both, cp.inj1), u);
                    bool r = same_map(compose(both, cp.inj2), v);
                    if (!(l && r)) {
                        rep.add("copair restricts to its legs", w);
                        break;
                    }
                    rep.count();
                }
        }
    }
    return rep;
}

} // namespace tamb
