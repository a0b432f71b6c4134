#include "tamb/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>

namespace tamb {

const char* errc_name(errc c) {
    switch (c) {
        case errc::non_associative: return "NonAssociative";
        case errc::no_identity: return "NoIdentity";
        case errc::no_inverse: return "NoInverse";
        case errc::malformed_table: return "MalformedTable";
        case errc::group_too_large: return "GroupTooLarge";
        case errc::not_a_subgroup: return "NotASubgroup";
        case errc::not_contained: return "NotContained";
        case errc::base_mismatch: return "BaseMismatch";
        case errc::group_mismatch: return "GroupMismatch";
        case errc::not_a_mackey_morphism: return "NotAMackeyMorphism";
        case errc::not_a_tambara_morphism: return "NotATambaraMorphism";
        case errc::nontrivial_q_unsupported: return "NontrivialQUnsupported";
        case errc::lemma_violated: return "LemmaViolated";
        case errc::malformed_input: return "MalformedInput";
    }
    return "UnknownError";
}

int max_group_order() {
    static int cached = [] {
        int bound = kMaxGroupOrder;
        if (const char* s = std::getenv("TAMBARIZE_MAX_GROUP_ORDER")) {
            int v = std::atoi(s);
            if (v > 0 && v < bound) bound = v;
        }
        return bound;
    }();
    return cached;
}

namespace {

void validate_table(const std::vector<std::vector<int>>& mul) {
    int n = (int)mul.size();
    require(n > 0, errc::malformed_table, "empty multiplication table");
    require(n <= max_group_order(), errc::group_too_large,
            "group order " + std::to_string(n) + " exceeds bound " +
                std::to_string(max_group_order()));
    for (const auto& row : mul) {
        require((int)row.size() == n, errc::malformed_table, "table is not square");
        for (int v : row)
            require(v >= 0 && v < n, errc::malformed_table, "entry out of range");
    }
}

// Finds the two-sided identity, or -1.
int find_identity(const std::vector<std::vector<int>>& mul) {
    int n = (int)mul.size();
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            ok = mul[e][a] == a && mul[a][e] == a;
        if (ok) return e;
    }
    return -1;
}

GroupPtr finish_group(std::vector<std::vector<int>> mul, std::string name) {
    validate_table(mul);
    int n = (int)mul.size();
    int e = find_identity(mul);
    require(e >= 0, errc::no_identity, "no two-sided identity");
    if (e != 0) {
        // Relabel by swapping 0 <-> e so the identity sits at index 0.
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::swap(perm[0], perm[e]);
        std::vector<std::vector<int>> m2(n, std::vector<int>(n));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                m2[perm[a]][perm[b]] = perm[mul[a][b]];
        mul = std::move(m2);
    }
    auto g = std::make_shared<FiniteGroup>();
    g->n = n;
    g->mul = std::move(mul);
    g->name = std::move(name);
    g->inv.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (g->mul[a][b] == 0 && g->mul[b][a] == 0) {
                g->inv[a] = b;
                break;
            }
        }
        require(g->inv[a] >= 0, errc::no_inverse,
                "element " + std::to_string(a) + " has no inverse");
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                require(g->mul[g->mul[a][b]][c] == g->mul[a][g->mul[b][c]],
                        errc::non_associative, "table is not associative");
    return g;
}

} // namespace

GroupPtr cyclic_group(int n) {
    require(n >= 1, errc::malformed_table, "cyclic group needs n >= 1");
    require(n <= max_group_order(), errc::group_too_large, "cyclic order too large");
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            mul[a][b] = (a + b) % n;
    return finish_group(std::move(mul), "C" + std::to_string(n));
}

GroupPtr dihedral_group(int n) {
    require(n >= 1, errc::malformed_table, "dihedral group needs n >= 1");
    require(2 * n <= max_group_order(), errc::group_too_large, "dihedral order too large");
    // Elements: k in [0,n) rotations r^k, n+k reflections s r^k.
    // Relations: r^n = s^2 = e, s r s = r^-1.
    int N = 2 * n;
    auto rot = [&](int x) { return x % n; };
    std::vector<std::vector<int>> mul(N, std::vector<int>(N));
    for (int a = 0; a < N; ++a) {
        for (int b = 0; b < N; ++b) {
            bool fa = a >= n, fb = b >= n;
            int ka = a % n, kb = b % n;
            int k;
            if (!fa && !fb) k = rot(ka + kb);
            else if (!fa && fb) k = n + rot(kb - ka + n);
            else if (fa && !fb) k = n + rot(ka + kb);
            else k = rot(kb - ka + n);
            mul[a][b] = k;
        }
    }
    return finish_group(std::move(mul), "D" + std::to_string(n));
}

GroupPtr symmetric_group(int n) {
    require(n >= 1 && n <= 5, errc::malformed_table, "symmetric group supported for n <= 5");
    std::vector<std::vector<int>> perms;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    int N = (int)perms.size();
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < N; ++i) index[perms[i]] = i;
    std::vector<std::vector<int>> mul(N, std::vector<int>(N));
    for (int a = 0; a < N; ++a) {
        for (int b = 0; b < N; ++b) {
            std::vector<int> c(n);
            for (int i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]]; // (a o b)(i)
            mul[a][b] = index[c];
        }
    }
    // Identity permutation sorts first, so it is already element 0.
    return finish_group(std::move(mul), "S" + std::to_string(n));
}

GroupPtr group_from_table(const std::vector<std::vector<int>>& mul, const std::string& name) {
    return finish_group(mul, name);
}

bool same_group(const FiniteGroup& a, const FiniteGroup& b) {
    if (&a == &b) return true;
    return a.n == b.n && a.mul == b.mul;
}

bool Subgroup::contains(const Subgroup& other) const {
    for (int g : other.elems)
        if (!member[g]) return false;
    return true;
}

bool subgroup_less(const Subgroup& a, const Subgroup& b) {
    if (a.elems.size() != b.elems.size()) return a.elems.size() < b.elems.size();
    return a.elems < b.elems;
}

Subgroup make_subgroup(const FiniteGroup& G, std::vector<int> elems) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    Subgroup s;
    s.member.assign(G.n, 0);
    for (int g : elems) {
        require(g >= 0 && g < G.n, errc::not_a_subgroup, "element out of range");
        s.member[g] = 1;
    }
    s.elems = std::move(elems);
    require(!s.elems.empty() && s.elems[0] == 0, errc::not_a_subgroup,
            "subgroup must contain the identity");
    for (int a : s.elems) {
        require(s.member[G.inv[a]], errc::not_a_subgroup, "not closed under inverse");
        for (int b : s.elems)
            require(s.member[G.mul[a][b]], errc::not_a_subgroup, "not closed under product");
    }
    return s;
}

Subgroup generated_subgroup(const FiniteGroup& G, const std::vector<int>& gens) {
    std::vector<char> in(G.n, 0);
    std::vector<int> stack = {0};
    in[0] = 1;
    for (int g : gens) {
        require(g >= 0 && g < G.n, errc::not_a_subgroup, "generator out of range");
        if (!in[g]) { in[g] = 1; stack.push_back(g); }
    }
    // Close under products; inverses come for free in a finite group.
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<int> cur;
        for (int g = 0; g < G.n; ++g) if (in[g]) cur.push_back(g);
        for (int a : cur)
            for (int b : cur) {
                int c = G.mul[a][b];
                if (!in[c]) { in[c] = 1; grew = true; }
            }
    }
    std::vector<int> elems;
    for (int g = 0; g < G.n; ++g) if (in[g]) elems.push_back(g);
    return make_subgroup(G, std::move(elems));
}

Subgroup conjugate_subgroup(const FiniteGroup& G, int g, const Subgroup& H) {
    std::vector<int> elems;
    elems.reserve(H.elems.size());
    for (int h : H.elems) elems.push_back(G.conj(g, h));
    return make_subgroup(G, std::move(elems));
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
    std::vector<int> elems;
    for (int g : a.elems)
        if (b.member[g]) elems.push_back(g);
    Subgroup s;
    s.elems = std::move(elems);
    s.member.assign(a.member.size(), 0);
    for (int g : s.elems) s.member[g] = 1;
    return s;
}

int SubgroupTable::id_of(const Subgroup& s) const {
    auto r = try_id_of(s);
    require(r.has_value(), errc::not_a_subgroup, "subgroup not in enumeration");
    return *r;
}

std::optional<int> SubgroupTable::try_id_of(const Subgroup& s) const {
    auto it = std::lower_bound(subgroups.begin(), subgroups.end(), s, subgroup_less);
    if (it == subgroups.end() || !(*it == s)) return std::nullopt;
    return (int)(it - subgroups.begin());
}

Subgroup SubgroupTable::normalizer(const Subgroup& K) const {
    const FiniteGroup& g = G();
    std::vector<int> elems;
    for (int x = 0; x < g.n; ++x) {
        bool norm = true;
        for (int k : K.elems)
            if (!K.member[g.conj(x, k)]) { norm = false; break; }
        if (norm) elems.push_back(x);
    }
    return make_subgroup(g, std::move(elems));
}

bool SubgroupTable::class_leq(int cls_small, int cls_big) const {
    const Subgroup& big = subgroups[class_rep[cls_big]];
    for (int sid : classes[cls_small])
        if (big.contains(subgroups[sid])) return true;
    return false;
}

namespace {

// Distinguishes cyclic classes by name; everything else falls back to order.
std::string base_class_name(const FiniteGroup& G, const Subgroup& s) {
    if (s.order() == 1) return "e";
    if (s.order() == G.n) return "G";
    for (int g : s.elems) {
        // cyclic iff some element generates all of s
        int x = g, cnt = 1;
        while (x != 0) { x = G.mul[x][g]; ++cnt; }
        if (cnt == s.order()) return "C" + std::to_string(s.order());
    }
    return "H" + std::to_string(s.order());
}

} // namespace

SubgroupTablePtr subgroup_table(GroupPtr Gp) {
    const FiniteGroup& G = *Gp;
    require(G.n <= max_group_order(), errc::group_too_large, "group exceeds order bound");

    std::set<std::vector<int>> seen;
    std::vector<Subgroup> all;
    auto add = [&](Subgroup s) -> bool {
        if (seen.count(s.elems)) return false;
        seen.insert(s.elems);
        all.push_back(std::move(s));
        return true;
    };
    // Seed with every cyclic subgroup, then close under pairwise joins.
    for (int g = 0; g < G.n; ++g) add(generated_subgroup(G, {g}));
    size_t frontier_start = 0;
    while (frontier_start < all.size()) {
        size_t frontier_end = all.size();
        for (size_t i = frontier_start; i < frontier_end; ++i)
            for (size_t j = 0; j < frontier_end; ++j) {
                if (all[i].contains(all[j]) || all[j].contains(all[i])) continue;
                std::vector<int> gens = all[i].elems;
                gens.insert(gens.end(), all[j].elems.begin(), all[j].elems.end());
                add(generated_subgroup(G, gens));
            }
        frontier_start = frontier_end;
    }
    std::sort(all.begin(), all.end(), subgroup_less);

    auto tab = std::make_shared<SubgroupTable>();
    tab->group = Gp;
    tab->subgroups = std::move(all);
    int ns = tab->num_subgroups();

    std::map<std::vector<int>, int> id_by_elems;
    for (int i = 0; i < ns; ++i) id_by_elems[tab->subgroups[i].elems] = i;

    tab->conj_id.assign(G.n, std::vector<int>(ns, -1));
    for (int g = 0; g < G.n; ++g)
        for (int i = 0; i < ns; ++i) {
            Subgroup c = conjugate_subgroup(G, g, tab->subgroups[i]);
            tab->conj_id[g][i] = id_by_elems.at(c.elems);
        }

    tab->class_of.assign(ns, -1);
    tab->witness.assign(ns, -1);
    for (int i = 0; i < ns; ++i) {
        if (tab->class_of[i] >= 0) continue;
        // i is minimal in its class because subgroups are sorted: any
        // earlier member would have been visited and claimed i already.
        int cls = (int)tab->class_rep.size();
        tab->class_rep.push_back(i);
        tab->classes.emplace_back();
        for (int g = 0; g < G.n; ++g) {
            int j = tab->conj_id[g][i];
            if (tab->class_of[j] < 0) {
                tab->class_of[j] = cls;
                // g maps subgroup i to j, so inv[g] maps j back to the rep.
                tab->witness[j] = G.inv[g];
                tab->classes.back().push_back(j);
            }
        }
        std::sort(tab->classes.back().begin(), tab->classes.back().end());
    }

    // Display names: base name plus #k to separate same-named classes.
    std::map<std::string, std::vector<int>> by_base;
    tab->class_name.assign(tab->num_classes(), "");
    for (int c = 0; c < tab->num_classes(); ++c)
        by_base[base_class_name(G, tab->subgroups[tab->class_rep[c]])].push_back(c);
    for (auto& [base, clist] : by_base) {
        for (size_t k = 0; k < clist.size(); ++k) {
            tab->class_name[clist[k]] =
                clist.size() == 1 ? base : base + "#" + std::to_string(k + 1);
        }
    }
    return tab;
}

std::vector<int> double_cosets(const FiniteGroup& G, const Subgroup& H,
                               const Subgroup& L, const Subgroup& K) {
    require(H.contains(L), errc::not_contained, "L must lie in H");
    require(H.contains(K), errc::not_contained, "K must lie in H");
    std::vector<char> covered(G.n, 0);
    std::vector<int> reps;
    for (int h : H.elems) {
        if (covered[h]) continue;
        reps.push_back(h);
        for (int l : L.elems)
            for (int k : K.elems)
                covered[G.mul[G.mul[l][h]][k]] = 1;
    }
    return reps;
}

std::vector<int> left_coset_reps(const FiniteGroup& G, const Subgroup& H,
                                 const Subgroup& K) {
    require(H.contains(K), errc::not_contained, "K must lie in H");
    std::vector<char> covered(G.n, 0);
    std::vector<int> reps;
    for (int h : H.elems) {
        if (covered[h]) continue;
        reps.push_back(h);
        for (int k : K.elems) covered[G.mul[h][k]] = 1;
    }
    return reps;
}

} // namespace tamb
