#include "tamb/gset.hpp"

#include <algorithm>
#include <map>

namespace tamb {

GSet make_gset(GroupPtr group, int size, std::vector<std::vector<int>> act) {
    const FiniteGroup& G = *group;
    require(size >= 0, errc::malformed_input, "negative G-set size");
    require((int)act.size() == G.n, errc::malformed_input, "action table has wrong height");
    for (const auto& row : act) {
        require((int)row.size() == size, errc::malformed_input, "action row has wrong width");
        for (int v : row)
            require(v >= 0 && v < size, errc::malformed_input, "action value out of range");
    }
    for (int x = 0; x < size; ++x)
        require(act[0][x] == x, errc::malformed_input, "identity must act trivially");
    for (int g = 0; g < G.n; ++g)
        for (int h = 0; h < G.n; ++h) {
            int gh = G.mul[g][h];
            for (int x = 0; x < size; ++x)
                require(act[g][act[h][x]] == act[gh][x], errc::malformed_input,
                        "action is not compatible with the group law");
        }
    GSet X;
    X.group = std::move(group);
    X.size = size;
    X.act = std::move(act);
    return X;
}

GSet point_gset(GroupPtr group) { return trivial_gset(std::move(group), 1); }

GSet trivial_gset(GroupPtr group, int size) {
    std::vector<std::vector<int>> act(group->n, std::vector<int>(size));
    for (auto& row : act)
        for (int x = 0; x < size; ++x) row[x] = x;
    GSet X;
    X.group = std::move(group);
    X.size = size;
    X.act = std::move(act);
    return X;
}

GSet coset_gset(const SubgroupTable& tab, int sid) {
    const FiniteGroup& G = tab.G();
    const Subgroup& K = tab.subgroups[sid];
    std::vector<int> reps = left_coset_reps(G, make_subgroup(G, [&] {
        std::vector<int> all(G.n);
        for (int i = 0; i < G.n; ++i) all[i] = i;
        return all;
    }()), K);
    // reps are coset-minimal and ascending; rep 0 is the coset of e.
    std::vector<int> coset_of(G.n, -1);
    for (int i = 0; i < (int)reps.size(); ++i)
        for (int k : K.elems) coset_of[G.mul[reps[i]][k]] = i;
    int m = (int)reps.size();
    std::vector<std::vector<int>> act(G.n, std::vector<int>(m));
    for (int g = 0; g < G.n; ++g)
        for (int i = 0; i < m; ++i) act[g][i] = coset_of[G.mul[g][reps[i]]];
    GSet X;
    X.group = tab.group;
    X.size = m;
    X.act = std::move(act);
    return X;
}

int coset_index(const SubgroupTable& tab, int sid, int g) {
    const FiniteGroup& G = tab.G();
    const Subgroup& K = tab.subgroups[sid];
    // smallest member of gK, then rank among coset minima
    int mn = G.n;
    for (int k : K.elems) mn = std::min(mn, G.mul[g][k]);
    std::vector<char> covered(G.n, 0);
    int idx = 0;
    for (int h = 0; h < G.n; ++h) {
        if (covered[h]) continue;
        if (h == mn) return idx;
        ++idx;
        for (int k : K.elems) covered[G.mul[h][k]] = 1;
    }
    fail(errc::malformed_input, "coset_index internal miss");
}

GMap make_gmap(GSet dom, GSet cod, std::vector<int> map) {
    require(same_group(*dom.group, *cod.group), errc::group_mismatch,
            "map between G-sets of different groups");
    require((int)map.size() == dom.size, errc::malformed_input, "map has wrong length");
    for (int v : map)
        require(v >= 0 && v < cod.size, errc::malformed_input, "map value out of range");
    const FiniteGroup& G = *dom.group;
    for (int g = 0; g < G.n; ++g)
        for (int x = 0; x < dom.size; ++x)
            require(map[dom.act[g][x]] == cod.act[g][map[x]], errc::malformed_input,
                    "map is not equivariant");
    GMap f;
    f.dom = std::move(dom);
    f.cod = std::move(cod);
    f.map = std::move(map);
    return f;
}

GMap identity_map(const GSet& X) {
    std::vector<int> m(X.size);
    for (int i = 0; i < X.size; ++i) m[i] = i;
    GMap f;
    f.dom = X;
    f.cod = X;
    f.map = std::move(m);
    return f;
}

GMap compose(const GMap& g, const GMap& f) {
    require(f.cod == g.dom, errc::base_mismatch, "composition mismatch");
    GMap h;
    h.dom = f.dom;
    h.cod = g.cod;
    h.map.resize(f.dom.size);
    for (int x = 0; x < f.dom.size; ++x) h.map[x] = g.map[f.map[x]];
    return h;
}

bool same_map(const GMap& a, const GMap& b) {
    return a.dom == b.dom && a.cod == b.cod && a.map == b.map;
}

OrbitDecomposition orbit_decompose(const GSet& X) {
    const FiniteGroup& G = X.G();
    OrbitDecomposition d;
    d.orbit_of.assign(X.size, -1);
    d.transversal.assign(X.size, -1);
    for (int x = 0; x < X.size; ++x) {
        if (d.orbit_of[x] >= 0) continue;
        int idx = d.count++;
        d.rep.push_back(x);
        d.points.emplace_back();
        for (int g = 0; g < G.n; ++g) {
            int y = X.act[g][x];
            if (d.orbit_of[y] < 0) {
                d.orbit_of[y] = idx;
                d.transversal[y] = g;
                d.points.back().push_back(y);
            }
        }
        std::sort(d.points.back().begin(), d.points.back().end());
        d.stab.push_back(stabilizer(X, x));
    }
    return d;
}

Subgroup stabilizer(const GSet& X, int x) {
    const FiniteGroup& G = X.G();
    std::vector<int> elems;
    for (int g = 0; g < G.n; ++g)
        if (X.act[g][x] == x) elems.push_back(g);
    return make_subgroup(G, std::move(elems));
}

Coproduct disjoint_union(const GSet& A, const GSet& B) {
    require(same_group(*A.group, *B.group), errc::group_mismatch, "coproduct across groups");
    const FiniteGroup& G = *A.group;
    GSet T;
    T.group = A.group;
    T.size = A.size + B.size;
    T.act.assign(G.n, std::vector<int>(T.size));
    for (int g = 0; g < G.n; ++g) {
        for (int x = 0; x < A.size; ++x) T.act[g][x] = A.act[g][x];
        for (int x = 0; x < B.size; ++x) T.act[g][A.size + x] = A.size + B.act[g][x];
    }
    Coproduct c;
    std::vector<int> m1(A.size), m2(B.size);
    for (int x = 0; x < A.size; ++x) m1[x] = x;
    for (int x = 0; x < B.size; ++x) m2[x] = A.size + x;
    c.inj1 = GMap{A, T, std::move(m1)};
    c.inj2 = GMap{B, T, std::move(m2)};
    c.total = std::move(T);
    return c;
}

GMap copair(const Coproduct& c, const GMap& f, const GMap& g) {
    require(f.cod == g.cod, errc::base_mismatch, "copair targets differ");
    require(f.dom == c.inj1.dom && g.dom == c.inj2.dom, errc::base_mismatch,
            "copair legs do not match the coproduct");
    std::vector<int> m(c.total.size);
    for (int x = 0; x < f.dom.size; ++x) m[x] = f.map[x];
    for (int x = 0; x < g.dom.size; ++x) m[f.dom.size + x] = g.map[x];
    GMap h;
    h.dom = c.total;
    h.cod = f.cod;
    h.map = std::move(m);
    return h;
}

std::optional<int> Pullback::index_of(int a, int b) const {
    auto it = std::lower_bound(pairs.begin(), pairs.end(), std::make_pair(a, b));
    if (it == pairs.end() || *it != std::make_pair(a, b)) return std::nullopt;
    return (int)(it - pairs.begin());
}

Pullback pullback(const GMap& f, const GMap& g) {
    require(f.cod == g.cod, errc::base_mismatch, "pullback needs a common target");
    const GSet& A = f.dom;
    const GSet& B = g.dom;
    const FiniteGroup& G = *A.group;
    Pullback P;
    for (int a = 0; a < A.size; ++a)
        for (int b = 0; b < B.size; ++b)
            if (f.map[a] == g.map[b]) P.pairs.emplace_back(a, b);
    int m = (int)P.pairs.size();
    GSet T;
    T.group = A.group;
    T.size = m;
    T.act.assign(G.n, std::vector<int>(m));
    for (int gg = 0; gg < G.n; ++gg)
        for (int i = 0; i < m; ++i) {
            auto [a, b] = P.pairs[i];
            auto idx = std::lower_bound(P.pairs.begin(), P.pairs.end(),
                                        std::make_pair(A.act[gg][a], B.act[gg][b]));
            T.act[gg][i] = (int)(idx - P.pairs.begin());
        }
    std::vector<int> m1(m), m2(m);
    for (int i = 0; i < m; ++i) { m1[i] = P.pairs[i].first; m2[i] = P.pairs[i].second; }
    P.pr1 = GMap{T, A, std::move(m1)};
    P.pr2 = GMap{T, B, std::move(m2)};
    P.total = std::move(T);
    return P;
}

Pullback product(const GSet& A, const GSet& B) {
    GSet pt = point_gset(A.group);
    std::vector<int> ca(A.size, 0), cb(B.size, 0);
    return pullback(GMap{A, pt, std::move(ca)}, GMap{B, pt, std::move(cb)});
}

std::optional<int> ExponentialDiagram::point_of(int y, const std::vector<int>& sec) const {
    // points are sorted by (base_y, section), so binary search applies
    int lo = 0, hi = (int)base_y.size();
    while (lo < hi) {
        int mid = (lo + hi) / 2;
        if (std::pair(base_y[mid], section[mid]) < std::pair(y, sec)) lo = mid + 1;
        else hi = mid;
    }
    if (lo < (int)base_y.size() && base_y[lo] == y && section[lo] == sec) return lo;
    return std::nullopt;
}

std::optional<std::int64_t> dependent_product_size(const GMap& eta, const GMap& p,
                                                   std::int64_t cap) {
    const GSet& X = eta.dom;
    const GSet& Y = eta.cod;
    const GSet& A = p.dom;
    require(p.cod == X, errc::base_mismatch, "dependent product needs p into the domain of eta");
    std::vector<std::int64_t> fiber_count(X.size, 0);
    for (int a = 0; a < A.size; ++a) ++fiber_count[p.map[a]];
    std::int64_t total = 0;
    for (int y = 0; y < Y.size; ++y) {
        std::int64_t sections = 1;
        for (int x = 0; x < X.size; ++x) {
            if (eta.map[x] != y) continue;
            sections *= fiber_count[x];
            if (sections > cap) return std::nullopt;
        }
        total += sections;
        if (total > cap) return std::nullopt;
    }
    return total;
}

ExponentialDiagram dependent_product(const GMap& eta, const GMap& p,
                                     std::int64_t max_points) {
    auto sz = dependent_product_size(eta, p, max_points);
    if (!sz) throw std::length_error("dependent product exceeds the point cap");
    const GSet& X = eta.dom;
    const GSet& Y = eta.cod;
    const GSet& A = p.dom;
    const FiniteGroup& G = *X.group;

    ExponentialDiagram E;
    E.fiber_of_y.assign(Y.size, {});
    for (int x = 0; x < X.size; ++x) E.fiber_of_y[eta.map[x]].push_back(x);
    std::vector<std::vector<int>> over_x(X.size);
    for (int a = 0; a < A.size; ++a) over_x[p.map[a]].push_back(a);

    // Points (y, s), y ascending, s in lexicographic order over the fiber.
    std::map<std::pair<int, std::vector<int>>, int> index;
    for (int y = 0; y < Y.size; ++y) {
        const auto& fib = E.fiber_of_y[y];
        std::vector<int> choice(fib.size(), 0);
        bool alive = true;
        for (int x : fib)
            if (over_x[x].empty()) { alive = false; break; }
        if (!alive && !fib.empty()) continue;
        while (alive) {
            std::vector<int> sec(fib.size());
            for (size_t i = 0; i < fib.size(); ++i) sec[i] = over_x[fib[i]][choice[i]];
            int id = (int)E.base_y.size();
            index[{y, sec}] = id;
            E.base_y.push_back(y);
            E.section.push_back(std::move(sec));
            // advance odometer
            int i = (int)fib.size() - 1;
            for (; i >= 0; --i) {
                if (++choice[i] < (int)over_x[fib[i]].size()) break;
                choice[i] = 0;
            }
            if (i < 0) break;
        }
        // a y with an empty fiber carries exactly one (empty) section; the
        // loop above already emitted it on its single pass
    }

    int m = (int)E.base_y.size();
    GSet Pi;
    Pi.group = X.group;
    Pi.size = m;
    Pi.act.assign(G.n, std::vector<int>(m));
    for (int g = 0; g < G.n; ++g) {
        int gi = G.inv[g];
        for (int i = 0; i < m; ++i) {
            int y2 = Y.act[g][E.base_y[i]];
            const auto& fib2 = E.fiber_of_y[y2];
            std::vector<int> sec2(fib2.size());
            const auto& fib1 = E.fiber_of_y[E.base_y[i]];
            for (size_t k = 0; k < fib2.size(); ++k) {
                int x1 = X.act[gi][fib2[k]];
                auto it = std::lower_bound(fib1.begin(), fib1.end(), x1);
                sec2[k] = A.act[g][E.section[i][it - fib1.begin()]];
            }
            Pi.act[g][i] = index.at({y2, sec2});
        }
    }
    E.pi_dom = Pi;
    std::vector<int> pim(m);
    for (int i = 0; i < m; ++i) pim[i] = E.base_y[i];
    E.pi = GMap{Pi, Y, std::move(pim)};

    E.z = pullback(eta, E.pi);
    std::vector<int> lam(E.z.total.size);
    for (int i = 0; i < E.z.total.size; ++i) {
        auto [x, s] = E.z.pairs[i];
        const auto& fib = E.fiber_of_y[E.base_y[s]];
        auto it = std::lower_bound(fib.begin(), fib.end(), x);
        lam[i] = E.section[s][it - fib.begin()];
    }
    E.lambda = GMap{E.z.total, A, std::move(lam)};
    E.rho = E.z.pr2;
    return E;
}

namespace {

struct OrbitInfo {
    int rep;
    Subgroup stab;
    int base; // f(rep), or -1 when no base map
};

bool match_orbits(const GSet& A2, const GMap* f1, const GMap* f2,
                  const std::vector<OrbitInfo>& o1,
                  const std::vector<OrbitInfo>& o2,
                  const OrbitDecomposition& d2, std::vector<int>& assign,
                  std::vector<char>& used, std::vector<int>& image, size_t i) {
    if (i == o1.size()) return true;
    for (size_t j = 0; j < o2.size(); ++j) {
        if (used[j]) continue;
        if (o1[i].stab.order() != o2[j].stab.order()) continue;
        // candidate image point for the representative of orbit i
        int found = -1;
        for (int b : d2.points[j]) {
            if (f1 && f2 && f2->map[b] != o1[i].base) continue;
            if (stabilizer(A2, b).elems == o1[i].stab.elems) { found = b; break; }
        }
        if (found < 0) continue;
        used[j] = 1;
        assign[i] = (int)j;
        image[i] = found;
        if (match_orbits(A2, f1, f2, o1, o2, d2, assign, used, image, i + 1)) return true;
        used[j] = 0;
    }
    return false;
}

} // namespace

std::optional<GMap> iso_over(const GMap& f1, const GMap& f2) {
    require(f1.cod == f2.cod, errc::base_mismatch, "iso_over needs a common base");
    const GSet& A1 = f1.dom;
    const GSet& A2 = f2.dom;
    if (A1.size != A2.size) return std::nullopt;
    auto d1 = orbit_decompose(A1);
    auto d2 = orbit_decompose(A2);
    if (d1.count != d2.count) return std::nullopt;
    std::vector<OrbitInfo> o1(d1.count), o2(d2.count);
    for (int i = 0; i < d1.count; ++i)
        o1[i] = {d1.rep[i], d1.stab[i], f1.map[d1.rep[i]]};
    for (int j = 0; j < d2.count; ++j)
        o2[j] = {d2.rep[j], d2.stab[j], f2.map[d2.rep[j]]};
    std::vector<int> assign(d1.count, -1), image(d1.count, -1);
    std::vector<char> used(d2.count, 0);
    if (!match_orbits(A2, &f1, &f2, o1, o2, d2, assign, used, image, 0))
        return std::nullopt;
    std::vector<int> m(A1.size, -1);
    for (int i = 0; i < d1.count; ++i)
        for (int x : d1.points[i])
            m[x] = A2.act[d1.transversal[x]][image[i]];
    GMap iso = make_gmap(A1, A2, std::move(m));
    for (int x = 0; x < A1.size; ++x)
        require(f2.map[iso.map[x]] == f1.map[x], errc::malformed_input,
                "iso_over produced a non-commuting map");
    return iso;
}

std::optional<std::vector<GMap>> enumerate_maps(const GSet& A, const GSet& B,
                                                const GMap* f1, const GMap* f2,
                                                std::int64_t cap) {
    auto dA = orbit_decompose(A);
    // candidate images per orbit representative
    std::vector<std::vector<int>> cand(dA.count);
    for (int i = 0; i < dA.count; ++i) {
        const Subgroup& K = dA.stab[i];
        for (int b = 0; b < B.size; ++b) {
            if (f1 && f2 && f2->map[b] != f1->map[dA.rep[i]]) continue;
            bool ok = true;
            for (int k : K.elems)
                if (B.act[k][b] != b) { ok = false; break; }
            if (ok) cand[i].push_back(b);
        }
        if (cand[i].empty()) return std::vector<GMap>{};
    }
    std::int64_t total = 1;
    for (int i = 0; i < dA.count; ++i) {
        total *= (std::int64_t)cand[i].size();
        if (total > cap) return std::nullopt;
    }
    std::vector<GMap> out;
    out.reserve((size_t)total);
    std::vector<int> choice(dA.count, 0);
    while (true) {
        std::vector<int> m(A.size);
        for (int i = 0; i < dA.count; ++i) {
            int b = cand[i][choice[i]];
            for (int x : dA.points[i]) m[x] = B.act[dA.transversal[x]][b];
        }
        GMap f;
        f.dom = A;
        f.cod = B;
        f.map = std::move(m);
        out.push_back(std::move(f));
        int i = dA.count - 1;
        for (; i >= 0; --i) {
            if (++choice[i] < (int)cand[i].size()) break;
            choice[i] = 0;
        }
        if (i < 0) break;
    }
    return out;
}

} // namespace tamb
