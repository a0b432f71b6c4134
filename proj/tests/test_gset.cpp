#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "tamb/gset.hpp"
#include "tamb/sampling.hpp"

using namespace tamb;

namespace {

GMap to_point(const GSet& X) {
    return GMap{X, point_gset(X.group), std::vector<int>(X.size, 0)};
}

// oracle: does an over-base iso exist? checked by filtering all equivariant maps
bool iso_over_brute(const GMap& f1, const GMap& f2) {
    if (f1.dom.size != f2.dom.size) return false;
    auto all = enumerate_maps(f1.dom, f2.dom, nullptr, nullptr, 100000);
    REQUIRE(all.has_value());
    for (const GMap& h : *all) {
        std::set<int> img(h.map.begin(), h.map.end());
        if ((int)img.size() != f2.dom.size) continue;
        bool comm = true;
        for (int x = 0; x < f1.dom.size; ++x)
            if (f2.map[h.map[x]] != f1.map[x]) { comm = false; break; }
        if (comm) return true;
    }
    return false;
}

} // namespace

TEST_CASE("coset gsets are transitive with the right stabilizer") {
    auto tab = subgroup_table(symmetric_group(3));
    for (int sid = 0; sid < tab->num_subgroups(); ++sid) {
        GSet X = coset_gset(*tab, sid);
        CHECK(X.size == 6 / tab->subgroups[sid].order());
        auto d = orbit_decompose(X);
        CHECK(d.count == 1);
        CHECK(d.rep[0] == 0);
        CHECK(d.stab[0].elems == tab->subgroups[sid].elems);
        // validates the action axioms
        CHECK_NOTHROW(make_gset(tab->group, X.size, X.act));
    }
}

TEST_CASE("coset_index matches the enumeration") {
    auto tab = subgroup_table(symmetric_group(3));
    for (int sid = 0; sid < tab->num_subgroups(); ++sid) {
        GSet X = coset_gset(*tab, sid);
        const FiniteGroup& G = tab->G();
        for (int g = 0; g < G.n; ++g) {
            int idx = coset_index(*tab, sid, g);
            // g * (coset of e) should equal the coset of g
            CHECK(X.act[g][0] == idx);
        }
    }
}

TEST_CASE("action validation rejects non-actions") {
    auto C2 = cyclic_group(2);
    CHECK_THROWS_AS(make_gset(C2, 2, {{0, 1}, {0, 0}}), error);
    CHECK_THROWS_AS(make_gset(C2, 2, {{1, 0}, {0, 1}}), error);
    CHECK_NOTHROW(make_gset(C2, 2, {{0, 1}, {1, 0}}));
}

TEST_CASE("orbit decomposition bookkeeping") {
    auto tab = subgroup_table(cyclic_group(4));
    GSet a = coset_gset(*tab, 0);        // free orbit, 4 points
    GSet b = coset_gset(*tab, tab->full_id()); // fixed point
    GSet X = disjoint_union(a, b).total;
    auto d = orbit_decompose(X);
    REQUIRE(d.count == 2);
    CHECK(d.rep[0] == 0);
    CHECK(d.rep[1] == 4);
    CHECK(d.stab[0].order() == 1);
    CHECK(d.stab[1].order() == 4);
    for (int x = 0; x < X.size; ++x)
        CHECK(X.act[d.transversal[x]][d.rep[d.orbit_of[x]]] == x);
}

TEST_CASE("pullback of the free orbit with itself over the point") {
    auto tab = subgroup_table(cyclic_group(2));
    GSet F = coset_gset(*tab, 0);
    Pullback P = product(F, F);
    CHECK(P.total.size == 4);
    auto d = orbit_decompose(P.total);
    CHECK(d.count == 2);
    CHECK(d.stab[0].order() == 1);
    CHECK(d.stab[1].order() == 1);
}

TEST_CASE("pullback restricting the point to the free orbit") {
    auto tab = subgroup_table(cyclic_group(2));
    GSet F = coset_gset(*tab, 0);
    GSet pt = point_gset(tab->group);
    // [pt -> pt] pulled back along F -> pt is F over F via the identity
    Pullback P = pullback(identity_map(pt), to_point(F));
    CHECK(P.total.size == 2);
    auto iso = iso_over(P.pr2, identity_map(F));
    CHECK(iso.has_value());
}

TEST_CASE("dependent product along the fold of the free orbit") {
    auto tab = subgroup_table(cyclic_group(2));
    GSet F = coset_gset(*tab, 0);
    GMap eta = to_point(F);
    // A = two free orbits over F
    Coproduct c = disjoint_union(F, F);
    GMap p = copair(c, identity_map(F), identity_map(F));
    auto E = dependent_product(eta, p);
    CHECK(E.pi_dom.size == 4);
    auto d = orbit_decompose(E.pi_dom);
    REQUIRE(d.count == 3);
    int fixed = 0, free_orbits = 0;
    for (int i = 0; i < d.count; ++i) {
        if (d.stab[i].order() == 2) ++fixed;
        if (d.stab[i].order() == 1) ++free_orbits;
    }
    CHECK(fixed == 2);
    CHECK(free_orbits == 1);
    // evaluation square: p(lambda(x, s)) == x
    for (int i = 0; i < E.z.total.size; ++i)
        CHECK(p.map[E.lambda.map[i]] == E.z.pairs[i].first);
}

TEST_CASE("dependent product with empty fibers") {
    auto tab = subgroup_table(cyclic_group(2));
    GSet F = coset_gset(*tab, 0);
    GSet pt = point_gset(tab->group);
    GMap eta = to_point(F);
    // A empty over F: no sections at all
    GSet empty = make_gset(tab->group, 0, std::vector<std::vector<int>>(2));
    GMap p0 = GMap{empty, F, {}};
    auto E0 = dependent_product(eta, p0);
    CHECK(E0.pi_dom.size == 0);
    // eta with an empty fiber: the isolated target point still has one section
    Coproduct c = disjoint_union(F, pt);
    GSet Y2 = disjoint_union(pt, pt).total;
    std::vector<int> em(F.size, 0);
    GMap eta2 = make_gmap(F, Y2, std::move(em)); // nothing over the second point
    GMap p = identity_map(F);
    auto E = dependent_product(eta2, p);
    // over y0: 2 sections? fiber has both points of F, each with one A-point: 1 section;
    // over y1: empty fiber, one empty section
    CHECK(E.pi_dom.size == 2);
    CHECK(E.base_y[0] == 0);
    CHECK(E.base_y[1] == 1);
    CHECK(E.section[1].empty());
}

TEST_CASE("iso_over agrees with brute force on random instances") {
    for (auto Gp : {cyclic_group(4), symmetric_group(3)}) {
        auto tab = subgroup_table(Gp);
        for (int it = 0; it < 60; ++it) {
            Rng rng(derive_seed(11, it));
            GSet X = random_gset(*tab, rng, 2, 5);
            GMap f1 = random_over(*tab, X, rng, 2, 7);
            GMap f2 = random_over(*tab, X, rng, 2, 7);
            auto fast = iso_over(f1, f2);
            bool slow = iso_over_brute(f1, f2);
            CHECK(fast.has_value() == slow);
            if (fast) {
                // returned map really is an iso over X
                std::set<int> img(fast->map.begin(), fast->map.end());
                CHECK((int)img.size() == f2.dom.size);
            }
        }
    }
}

TEST_CASE("iso_over is reflexive on shuffles") {
    auto tab = subgroup_table(symmetric_group(3));
    for (int it = 0; it < 40; ++it) {
        Rng rng(derive_seed(12, it));
        GSet X = random_gset(*tab, rng, 2, 6);
        GMap f = random_over(*tab, X, rng, 3, 10);
        GMap g = shuffle_dom(f, rng);
        CHECK(iso_over(f, g).has_value());
    }
}

TEST_CASE("iso_over distinguishes different stabilizers over the same orbit") {
    auto tab = subgroup_table(cyclic_group(4));
    GSet pt = point_gset(tab->group);
    GSet a = coset_gset(*tab, 1); // order-2 subgroup: 2 points
    GSet b = disjoint_union(point_gset(tab->group), point_gset(tab->group)).total;
    CHECK(a.size == b.size);
    CHECK(!iso_over(to_point(a), to_point(b)).has_value());
}

TEST_CASE("diagram lemma suite") {
    for (auto Gp : {cyclic_group(2), cyclic_group(3), symmetric_group(3)}) {
        auto tab = subgroup_table(Gp);
        Report r = diagram_lemma_suite(*tab, 40, 2024);
        INFO(Gp->name, " violations: ", r.violations.empty() ? "" : r.violations[0].rule);
        CHECK(r.ok());
        CHECK(r.checks >= 40);
    }
}

TEST_CASE("mapping space adjunction suite") {
    for (auto Gp : {cyclic_group(2), symmetric_group(3)}) {
        auto tab = subgroup_table(Gp);
        Report r = adjunction_suite(*tab, 30, 77);
        INFO(Gp->name, " violations: ", r.violations.empty() ? "" : r.violations[0].rule);
        CHECK(r.ok());
        CHECK(r.checks >= 30);
    }
}

TEST_CASE("universal property suite") {
    for (auto Gp : {cyclic_group(3), symmetric_group(3)}) {
        auto tab = subgroup_table(Gp);
        Report r = universal_property_suite(*tab, 15, 5150);
        INFO(Gp->name, " violations: ", r.violations.empty() ? "" : r.violations[0].rule);
        CHECK(r.ok());
        CHECK(r.checks > 0);
    }
}

TEST_CASE("enumerate_maps counts match orbit structure") {
    // Hom(G/K, G/H) has one map per coset gH with K g H = g H
    auto tab = subgroup_table(symmetric_group(3));
    GSet a = coset_gset(*tab, 1);              // G/C2
    GSet b = coset_gset(*tab, tab->full_id()); // G/G
    auto maps = enumerate_maps(a, b, nullptr, nullptr, 1000);
    REQUIRE(maps.has_value());
    CHECK(maps->size() == 1);
    auto maps2 = enumerate_maps(a, a, nullptr, nullptr, 1000);
    REQUIRE(maps2.has_value());
    // |Hom(G/C2, G/C2)| = |fixed points of C2 on G/C2| = 1 for S3
    CHECK(maps2->size() == 1);
    GSet c3 = coset_gset(*tab, tab->class_rep[2]); // G/C3
    auto maps3 = enumerate_maps(c3, c3, nullptr, nullptr, 1000);
    REQUIRE(maps3.has_value());
    CHECK(maps3->size() == 2); // Weyl group of C3 in S3
}
