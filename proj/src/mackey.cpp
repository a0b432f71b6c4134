#include "tamb/mackey.hpp"

#include <algorithm>
#include <string>

#include "tamb/sampling.hpp"

namespace tamb {

namespace {

std::vector<int> identity_vec(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i;
    return v;
}

std::string witness_hk(int H, int K) {
    return "H=" + std::to_string(H) + " K=" + std::to_string(K);
}

} // namespace

MonoidTable trivial_monoid() {
    MonoidTable m;
    m.size = 1;
    m.op = {{0}};
    m.unit = 0;
    m.elem_name = {"1"};
    return m;
}

MonoidTable cyclic_monoid(int n) {
    require(n >= 1 && n <= 64, errc::malformed_table, "cyclic monoid size out of range");
    MonoidTable m;
    m.size = n;
    m.op.assign(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) m.op[a][b] = (a + b) % n;
    m.unit = 0;
    m.elem_name.resize(n);
    for (int a = 0; a < n; ++a)
        m.elem_name[a] = a == 0 ? "1" : (a == 1 ? "w" : "w" + std::to_string(a));
    return m;
}

MonoidTable idempotent_monoid() {
    MonoidTable m;
    m.size = 2;
    m.op = {{0, 1}, {1, 1}};
    m.unit = 0;
    m.elem_name = {"1", "x"};
    return m;
}

MonoidTable make_monoid(int size, std::vector<std::vector<int>> op, int unit,
                        std::vector<std::string> names) {
    MonoidTable m;
    m.size = size;
    m.op = std::move(op);
    m.unit = unit;
    if (names.empty()) {
        names.resize(size);
        for (int i = 0; i < size; ++i)
            names[i] = i == unit ? "1" : "q" + std::to_string(i);
    }
    require((int)names.size() == size, errc::malformed_table, "monoid name count");
    m.elem_name = std::move(names);
    validate_monoid(m);
    return m;
}

void validate_monoid(const MonoidTable& m) {
    require(m.size >= 1, errc::malformed_table, "empty monoid");
    require((int)m.op.size() == m.size, errc::malformed_table, "monoid table rows");
    for (const auto& row : m.op) {
        require((int)row.size() == m.size, errc::malformed_table, "monoid table cols");
        for (int v : row)
            require(v >= 0 && v < m.size, errc::malformed_table, "monoid entry range");
    }
    require(m.unit >= 0 && m.unit < m.size, errc::no_identity, "monoid unit out of range");
    for (int a = 0; a < m.size; ++a) {
        require(m.op[m.unit][a] == a && m.op[a][m.unit] == a, errc::no_identity,
                "monoid unit fails at " + std::to_string(a));
        for (int b = 0; b < m.size; ++b) {
            require(m.op[a][b] == m.op[b][a], errc::malformed_table,
                    "monoid not commutative at " + std::to_string(a) + "," + std::to_string(b));
            for (int c = 0; c < m.size; ++c)
                require(m.op[m.op[a][b]][c] == m.op[a][m.op[b][c]], errc::non_associative,
                        "monoid not associative");
        }
    }
}

GMonoid make_gmonoid(GroupPtr group, MonoidTable monoid,
                     std::vector<std::vector<int>> action) {
    require(group != nullptr, errc::malformed_input, "missing group");
    validate_monoid(monoid);
    const FiniteGroup& G = *group;
    require((int)action.size() == G.n, errc::malformed_table, "action rows");
    for (const auto& row : action) {
        require((int)row.size() == monoid.size, errc::malformed_table, "action cols");
        for (int v : row)
            require(v >= 0 && v < monoid.size, errc::malformed_table, "action entry range");
    }
    for (int q = 0; q < monoid.size; ++q)
        require(action[0][q] == q, errc::malformed_table, "identity must act trivially");
    for (int g = 0; g < G.n; ++g) {
        require(action[g][monoid.unit] == monoid.unit, errc::malformed_table,
                "action must fix the unit");
        for (int a = 0; a < monoid.size; ++a)
            for (int b = 0; b < monoid.size; ++b)
                require(action[g][monoid.op[a][b]] == monoid.op[action[g][a]][action[g][b]],
                        errc::malformed_table, "action must be by monoid maps");
        for (int h = 0; h < G.n; ++h)
            for (int q = 0; q < monoid.size; ++q)
                require(action[g][action[h][q]] == action[G.mul[g][h]][q],
                        errc::malformed_table, "action law fails");
    }
    GMonoid Q;
    Q.group = std::move(group);
    Q.monoid = std::move(monoid);
    Q.action = std::move(action);
    return Q;
}

GMonoid trivial_action(GroupPtr group, MonoidTable monoid) {
    std::vector<std::vector<int>> action(group->n, identity_vec(monoid.size));
    return make_gmonoid(std::move(group), std::move(monoid), std::move(action));
}

GMonoid inversion_action(const SubgroupTable& tab, MonoidTable monoid) {
    const FiniteGroup& G = tab.G();
    std::vector<int> invq(monoid.size, -1);
    bool is_group = true;
    for (int q = 0; q < monoid.size && is_group; ++q) {
        for (int r = 0; r < monoid.size; ++r)
            if (monoid.op[q][r] == monoid.unit) { invq[q] = r; break; }
        if (invq[q] < 0) is_group = false;
    }
    int half = -1;
    for (int sid = 0; sid < tab.num_subgroups(); ++sid)
        if (tab.subgroups[sid].order() * 2 == G.n) { half = sid; break; }
    std::vector<std::vector<int>> action(G.n, identity_vec(monoid.size));
    if (is_group && half >= 0) {
        for (int g = 0; g < G.n; ++g)
            if (!tab.subgroups[half].contains(g)) action[g] = invq;
    }
    return make_gmonoid(tab.group, std::move(monoid), std::move(action));
}

GSet gmonoid_gset(const GMonoid& Q) {
    return make_gset(Q.group, Q.monoid.size, Q.action);
}

SemiMackeyData trivial_functor(SubgroupTablePtr tab) {
    SemiMackeyData M;
    int ns = tab->num_subgroups(), nc = tab->num_classes(), n = tab->G().n;
    M.level.assign(nc, trivial_monoid());
    M.r.assign(ns, std::vector<std::vector<int>>(ns));
    M.t.assign(ns, std::vector<std::vector<int>>(ns));
    for (int H = 0; H < ns; ++H)
        for (int K = 0; K < ns; ++K)
            if (tab->subgroups[H].contains(tab->subgroups[K])) {
                M.r[H][K] = {0};
                M.t[H][K] = {0};
            }
    M.c.assign(n, std::vector<std::vector<int>>(ns, std::vector<int>{0}));
    M.name = "trivial";
    M.tab = std::move(tab);
    return M;
}

SemiMackeyData fixed_point_functor(SubgroupTablePtr tab, const GMonoid& Q) {
    require(same_group(tab->G(), *Q.group), errc::group_mismatch,
            "monoid action group differs from subgroup table group");
    const FiniteGroup& G = tab->G();
    int ns = tab->num_subgroups(), nc = tab->num_classes(), n = G.n;
    int qn = Q.monoid.size;

    // Fixed submonoid at every class representative, with global <-> local
    // index translation.
    std::vector<std::vector<int>> emb(nc);
    std::vector<std::vector<int>> loc(nc, std::vector<int>(qn, -1));
    SemiMackeyData M;
    M.level.resize(nc);
    for (int ci = 0; ci < nc; ++ci) {
        const Subgroup& R = tab->subgroups[tab->class_rep[ci]];
        for (int q = 0; q < qn; ++q) {
            bool fixed = true;
            for (int h : R.elems)
                if (Q.action[h][q] != q) { fixed = false; break; }
            if (fixed) {
                loc[ci][q] = (int)emb[ci].size();
                emb[ci].push_back(q);
            }
        }
        MonoidTable lvl;
        lvl.size = (int)emb[ci].size();
        lvl.op.assign(lvl.size, std::vector<int>(lvl.size));
        for (int a = 0; a < lvl.size; ++a)
            for (int b = 0; b < lvl.size; ++b)
                lvl.op[a][b] = loc[ci][Q.monoid.op[emb[ci][a]][emb[ci][b]]];
        lvl.unit = loc[ci][Q.monoid.unit];
        lvl.elem_name.resize(lvl.size);
        for (int a = 0; a < lvl.size; ++a) lvl.elem_name[a] = Q.monoid.elem_name[emb[ci][a]];
        M.level[ci] = std::move(lvl);
    }

    auto down = [&](int ci, int q, const char* what) {
        int v = loc[ci][q];
        require(v >= 0, errc::malformed_table, std::string(what) + " left the fixed submonoid");
        return v;
    };

    M.r.assign(ns, std::vector<std::vector<int>>(ns));
    M.t.assign(ns, std::vector<std::vector<int>>(ns));
    for (int H = 0; H < ns; ++H) {
        int cH = tab->class_of[H], wH = tab->witness[H];
        for (int K = 0; K < ns; ++K) {
            if (!tab->subgroups[H].contains(tab->subgroups[K])) continue;
            int cK = tab->class_of[K], wK = tab->witness[K];
            int down_g = G.mul[wK][G.inv[wH]];
            auto& rv = M.r[H][K];
            rv.resize(M.level[cH].size);
            for (int v = 0; v < M.level[cH].size; ++v)
                rv[v] = down(cK, Q.action[down_g][emb[cH][v]], "restriction");
            auto reps = left_coset_reps(G, tab->subgroups[H], tab->subgroups[K]);
            auto& tv = M.t[H][K];
            tv.resize(M.level[cK].size);
            for (int u = 0; u < M.level[cK].size; ++u) {
                int acc = Q.monoid.unit;
                for (int h : reps) {
                    int g = G.mul[G.mul[wH][h]][G.inv[wK]];
                    acc = Q.monoid.op[acc][Q.action[g][emb[cK][u]]];
                }
                tv[u] = down(cH, acc, "transfer");
            }
        }
    }

    M.c.assign(n, std::vector<std::vector<int>>(ns));
    for (int g = 0; g < n; ++g)
        for (int H = 0; H < ns; ++H) {
            int cH = tab->class_of[H], wH = tab->witness[H];
            int Hg = tab->conj_id[g][H];
            int cHg = tab->class_of[Hg], wHg = tab->witness[Hg];
            int move_g = G.mul[G.mul[wHg][g]][G.inv[wH]];
            auto& cv = M.c[g][H];
            cv.resize(M.level[cH].size);
            for (int v = 0; v < M.level[cH].size; ++v)
                cv[v] = down(cHg, Q.action[move_g][emb[cH][v]], "conjugation");
        }

    M.name = "fixed_points";
    M.tab = std::move(tab);
    return M;
}

SemiMackeyData ell_functor(SubgroupTablePtr tab, const MonoidTable& Q) {
    validate_monoid(Q);
    const FiniteGroup& G = tab->G();
    int ns = tab->num_subgroups(), nc = tab->num_classes(), n = G.n;
    SemiMackeyData M;
    M.level.assign(nc, Q);
    M.r.assign(ns, std::vector<std::vector<int>>(ns));
    M.t.assign(ns, std::vector<std::vector<int>>(ns));
    for (int H = 0; H < ns; ++H)
        for (int K = 0; K < ns; ++K) {
            if (!tab->subgroups[H].contains(tab->subgroups[K])) continue;
            int idx = tab->subgroups[H].order() / tab->subgroups[K].order();
            auto& rv = M.r[H][K];
            rv.resize(Q.size);
            for (int q = 0; q < Q.size; ++q) rv[q] = Q.pow(q, idx);
            M.t[H][K] = identity_vec(Q.size);
        }
    M.c.assign(n, std::vector<std::vector<int>>(ns, identity_vec(Q.size)));
    M.name = "power";
    M.tab = std::move(tab);
    return M;
}

SemiMackeyData semi_mackey_from_tables(SubgroupTablePtr tab,
                                       std::vector<MonoidTable> level,
                                       std::vector<std::vector<std::vector<int>>> r,
                                       std::vector<std::vector<std::vector<int>>> t,
                                       std::vector<std::vector<std::vector<int>>> c,
                                       std::string name) {
    require(tab != nullptr, errc::malformed_input, "missing subgroup table");
    int ns = tab->num_subgroups(), nc = tab->num_classes(), n = tab->G().n;
    require((int)level.size() == nc, errc::malformed_table, "one level per subgroup class required");
    for (const auto& lvl : level) validate_monoid(lvl);
    require((int)r.size() == ns && (int)t.size() == ns, errc::malformed_table, "r/t table rows");
    for (int H = 0; H < ns; ++H) {
        require((int)r[H].size() == ns && (int)t[H].size() == ns, errc::malformed_table,
                "r/t table cols");
        for (int K = 0; K < ns; ++K) {
            bool leq = tab->subgroups[H].contains(tab->subgroups[K]);
            int szH = level[tab->class_of[H]].size, szK = level[tab->class_of[K]].size;
            if (!leq) {
                require(r[H][K].empty() && t[H][K].empty(), errc::malformed_table,
                        "map present for non-nested subgroups " + witness_hk(H, K));
                continue;
            }
            require((int)r[H][K].size() == szH, errc::malformed_table,
                    "restriction domain size " + witness_hk(H, K));
            for (int v : r[H][K])
                require(v >= 0 && v < szK, errc::malformed_table,
                        "restriction range " + witness_hk(H, K));
            require((int)t[H][K].size() == szK, errc::malformed_table,
                    "transfer domain size " + witness_hk(H, K));
            for (int v : t[H][K])
                require(v >= 0 && v < szH, errc::malformed_table,
                        "transfer range " + witness_hk(H, K));
        }
    }
    require((int)c.size() == n, errc::malformed_table, "conjugation table rows");
    for (int g = 0; g < n; ++g) {
        require((int)c[g].size() == ns, errc::malformed_table, "conjugation table cols");
        for (int H = 0; H < ns; ++H) {
            int szH = level[tab->class_of[H]].size;
            int szHg = level[tab->class_of[tab->conj_id[g][H]]].size;
            require((int)c[g][H].size() == szH, errc::malformed_table,
                    "conjugation domain size at g=" + std::to_string(g) + " H=" + std::to_string(H));
            for (int v : c[g][H])
                require(v >= 0 && v < szHg, errc::malformed_table,
                        "conjugation range at g=" + std::to_string(g) + " H=" + std::to_string(H));
        }
    }
    SemiMackeyData M;
    M.tab = std::move(tab);
    M.level = std::move(level);
    M.r = std::move(r);
    M.t = std::move(t);
    M.c = std::move(c);
    M.name = std::move(name);
    return M;
}

Report check_axioms(const SemiMackeyData& M) {
    Report rep;
    const SubgroupTable& tab = *M.tab;
    const FiniteGroup& G = tab.G();
    int ns = tab.num_subgroups(), nc = tab.num_classes(), n = G.n;

    // Shape gate first; the dense loops below index without further checks.
    bool shape = true;
    shape &= rep.check((int)M.level.size() == nc, "shape", "level count");
    shape &= rep.check((int)M.r.size() == ns && (int)M.t.size() == ns && (int)M.c.size() == n,
                       "shape", "table row counts");
    if (!shape) return rep;
    auto leq = [&](int K, int H) { return tab.subgroups[H].contains(tab.subgroups[K]); };
    auto lvl_sz = [&](int sid) { return M.level[tab.class_of[sid]].size; };
    for (int H = 0; H < ns && shape; ++H) {
        shape &= rep.check((int)M.r[H].size() == ns && (int)M.t[H].size() == ns, "shape",
                           "r/t cols at H=" + std::to_string(H));
        if (!shape) break;
        for (int K = 0; K < ns && shape; ++K) {
            if (!leq(K, H)) {
                shape &= rep.check(M.r[H][K].empty() && M.t[H][K].empty(), "shape",
                                   "spurious map " + witness_hk(H, K));
                continue;
            }
            bool ok = (int)M.r[H][K].size() == lvl_sz(H) && (int)M.t[H][K].size() == lvl_sz(K);
            for (int v : M.r[H][K]) ok = ok && v >= 0 && v < lvl_sz(K);
            for (int v : M.t[H][K]) ok = ok && v >= 0 && v < lvl_sz(H);
            shape &= rep.check(ok, "shape", "r/t sizes " + witness_hk(H, K));
        }
    }
    for (int g = 0; g < n && shape; ++g) {
        shape &= rep.check((int)M.c[g].size() == ns, "shape", "c cols at g=" + std::to_string(g));
        if (!shape) break;
        for (int H = 0; H < ns && shape; ++H) {
            int Hg = tab.conj_id[g][H];
            bool ok = (int)M.c[g][H].size() == lvl_sz(H);
            for (int v : M.c[g][H]) ok = ok && v >= 0 && v < lvl_sz(Hg);
            shape &= rep.check(ok, "shape",
                               "c size at g=" + std::to_string(g) + " H=" + std::to_string(H));
        }
    }
    if (!shape) return rep;

    for (int ci = 0; ci < nc; ++ci) {
        try {
            validate_monoid(M.level[ci]);
            rep.check(true, "level monoid", "class " + std::to_string(ci));
        } catch (const error& e) {
            rep.check(false, "level monoid",
                      "class " + std::to_string(ci) + ": " + e.what());
        }
    }
    if (!rep.ok()) return rep;

    auto is_hom = [&](const std::vector<int>& f, const MonoidTable& dom,
                      const MonoidTable& cod) {
        if (f[dom.unit] != cod.unit) return false;
        for (int a = 0; a < dom.size; ++a)
            for (int b = 0; b < dom.size; ++b)
                if (f[dom.op[a][b]] != cod.op[f[a]][f[b]]) return false;
        return true;
    };

    for (int H = 0; H < ns; ++H)
        for (int K = 0; K < ns; ++K) {
            if (!leq(K, H)) continue;
            const MonoidTable& LH = M.level[tab.class_of[H]];
            const MonoidTable& LK = M.level[tab.class_of[K]];
            rep.check(is_hom(M.r[H][K], LH, LK), "restriction is multiplicative",
                      witness_hk(H, K));
            rep.check(is_hom(M.t[H][K], LK, LH), "transfer is multiplicative",
                      witness_hk(H, K));
        }
    for (int g = 0; g < n; ++g)
        for (int H = 0; H < ns; ++H) {
            const MonoidTable& LH = M.level[tab.class_of[H]];
            const MonoidTable& LHg = M.level[tab.class_of[tab.conj_id[g][H]]];
            bool hom = is_hom(M.c[g][H], LH, LHg);
            std::vector<char> hit(LHg.size, 0);
            for (int v : M.c[g][H]) hit[v] = 1;
            bool bij = LH.size == LHg.size &&
                       std::count(hit.begin(), hit.end(), (char)1) == LHg.size;
            rep.check(hom && bij, "conjugation is an isomorphism",
                      "g=" + std::to_string(g) + " H=" + std::to_string(H));
        }
    if (!rep.ok()) return rep;

    for (int H = 0; H < ns; ++H) {
        rep.check(M.r[H][H] == identity_vec(lvl_sz(H)), "restriction to itself is identity",
                  "H=" + std::to_string(H));
        rep.check(M.t[H][H] == identity_vec(lvl_sz(H)), "transfer from itself is identity",
                  "H=" + std::to_string(H));
    }

    for (int H = 0; H < ns; ++H)
        for (int h : tab.subgroups[H].elems) {
            bool ok = tab.conj_id[h][H] == H && M.c[h][H] == identity_vec(lvl_sz(H));
            rep.check(ok, "inner conjugation is identity",
                      "h=" + std::to_string(h) + " H=" + std::to_string(H));
        }

    for (int g1 = 0; g1 < n; ++g1)
        for (int g2 = 0; g2 < n; ++g2)
            for (int H = 0; H < ns; ++H) {
                int H1 = tab.conj_id[g1][H];
                int g21 = G.mul[g2][g1];
                bool ok = true;
                for (int v = 0; v < lvl_sz(H); ++v)
                    ok = ok && M.c[g21][H][v] == M.c[g2][H1][M.c[g1][H][v]];
                rep.check(ok, "conjugation composes",
                          "g1=" + std::to_string(g1) + " g2=" + std::to_string(g2) +
                              " H=" + std::to_string(H));
            }

    for (int H = 0; H < ns; ++H)
        for (int K = 0; K < ns; ++K) {
            if (!leq(K, H)) continue;
            for (int L = 0; L < ns; ++L) {
                if (!leq(L, K)) continue;
                bool okr = true, okt = true;
                for (int v = 0; v < lvl_sz(H); ++v)
                    okr = okr && M.r[K][L][M.r[H][K][v]] == M.r[H][L][v];
                for (int v = 0; v < lvl_sz(L); ++v)
                    okt = okt && M.t[H][K][M.t[K][L][v]] == M.t[H][L][v];
                rep.check(okr, "restriction composes",
                          witness_hk(H, K) + " L=" + std::to_string(L));
                rep.check(okt, "transfer composes",
                          witness_hk(H, K) + " L=" + std::to_string(L));
            }
        }

    for (int g = 0; g < n; ++g)
        for (int H = 0; H < ns; ++H)
            for (int K = 0; K < ns; ++K) {
                if (!leq(K, H)) continue;
                int Hg = tab.conj_id[g][H], Kg = tab.conj_id[g][K];
                bool okr = true, okt = true;
                for (int v = 0; v < lvl_sz(H); ++v)
                    okr = okr && M.c[g][K][M.r[H][K][v]] == M.r[Hg][Kg][M.c[g][H][v]];
                for (int v = 0; v < lvl_sz(K); ++v)
                    okt = okt && M.c[g][H][M.t[H][K][v]] == M.t[Hg][Kg][M.c[g][K][v]];
                rep.check(okr, "conjugation commutes with restriction",
                          "g=" + std::to_string(g) + " " + witness_hk(H, K));
                rep.check(okt, "conjugation commutes with transfer",
                          "g=" + std::to_string(g) + " " + witness_hk(H, K));
            }

    for (int H = 0; H < ns; ++H)
        for (int L = 0; L < ns; ++L) {
            if (!leq(L, H)) continue;
            for (int K = 0; K < ns; ++K) {
                if (!leq(K, H)) continue;
                auto reps = double_cosets(G, tab.subgroups[H], tab.subgroups[L],
                                          tab.subgroups[K]);
                const MonoidTable& LL = M.level[tab.class_of[L]];
                bool ok = true;
                for (int v = 0; v < lvl_sz(K) && ok; ++v) {
                    int lhs = M.r[H][L][M.t[H][K][v]];
                    int rhs = LL.unit;
                    for (int h : reps) {
                        int Lh = tab.conj_id[G.inv[h]][L];
                        Subgroup P = intersect(tab.subgroups[Lh], tab.subgroups[K]);
                        int pid = tab.id_of(P);
                        int Ph = tab.conj_id[h][pid];
                        int w = M.t[L][Ph][M.c[h][pid][M.r[K][pid][v]]];
                        rhs = LL.op[rhs][w];
                    }
                    ok = lhs == rhs;
                }
                rep.check(ok, "restriction of a transfer expands over double cosets",
                          witness_hk(H, K) + " L=" + std::to_string(L));
            }
        }

    return rep;
}

MackeyElement make_element(const SemiMackeyData& M, const GSet& base,
                           std::vector<int> comp) {
    require(same_group(*base.group, M.tab->G()), errc::group_mismatch,
            "element base lives over a different group");
    MackeyElement m;
    m.base = base;
    m.dec = orbit_decompose(base);
    m.stab_id.resize(m.dec.count);
    for (int i = 0; i < m.dec.count; ++i) m.stab_id[i] = M.tab->id_of(m.dec.stab[i]);
    require((int)comp.size() == m.dec.count, errc::malformed_input,
            "one component per orbit required");
    for (int i = 0; i < m.dec.count; ++i)
        require(comp[i] >= 0 && comp[i] < M.level_of_subgroup(m.stab_id[i]).size,
                errc::malformed_input, "component out of range");
    m.comp = std::move(comp);
    return m;
}

MackeyElement unit_element(const SemiMackeyData& M, const GSet& base) {
    MackeyElement m = make_element(M, base, std::vector<int>(orbit_decompose(base).count, 0));
    for (int i = 0; i < m.dec.count; ++i)
        m.comp[i] = M.level_of_subgroup(m.stab_id[i]).unit;
    return m;
}

bool element_equal(const MackeyElement& a, const MackeyElement& b) {
    return a.base == b.base && a.comp == b.comp;
}

MackeyElement element_product(const SemiMackeyData& M, const MackeyElement& a,
                              const MackeyElement& b) {
    require(a.base == b.base, errc::base_mismatch, "product needs a common base");
    MackeyElement out = a;
    for (int i = 0; i < out.dec.count; ++i)
        out.comp[i] = M.level_of_subgroup(out.stab_id[i]).op[a.comp[i]][b.comp[i]];
    return out;
}

MackeyElement pull(const SemiMackeyData& M, const GMap& f, const MackeyElement& m) {
    require(f.cod == m.base, errc::base_mismatch, "pull needs the element over the target");
    MackeyElement out = unit_element(M, f.dom);
    const SubgroupTable& tab = *M.tab;
    for (int i = 0; i < out.dec.count; ++i) {
        int a = out.dec.rep[i];
        int K = out.stab_id[i];
        int x = f.map[a];
        int j = m.dec.orbit_of[x];
        int u = m.dec.transversal[x];
        int H = m.stab_id[j];
        int uH = tab.conj_id[u][H];
        out.comp[i] = M.r[uH][K][M.c[u][H][m.comp[j]]];
    }
    return out;
}

MackeyElement push(const SemiMackeyData& M, const GMap& f, const MackeyElement& m) {
    require(f.dom == m.base, errc::base_mismatch, "push needs the element over the source");
    MackeyElement out = unit_element(M, f.cod);
    const SubgroupTable& tab = *M.tab;
    const FiniteGroup& G = tab.G();
    for (int i = 0; i < m.dec.count; ++i) {
        int a = m.dec.rep[i];
        int K = m.stab_id[i];
        int x = f.map[a];
        int j = out.dec.orbit_of[x];
        int u = out.dec.transversal[x];
        int H = out.stab_id[j];
        int uH = tab.conj_id[u][H];
        int w = M.c[G.inv[u]][uH][M.t[uH][K][m.comp[i]]];
        out.comp[j] = M.level_of_subgroup(H).op[out.comp[j]][w];
    }
    return out;
}

namespace {

bool morphism_commutes(const SemiMackeyData& src, const SemiMackeyData& dst,
                       const MackeyMorphism& f) {
    const SubgroupTable& tab = *src.tab;
    int ns = tab.num_subgroups(), n = tab.G().n;
    for (int H = 0; H < ns; ++H)
        for (int K = 0; K < ns; ++K) {
            if (!tab.subgroups[H].contains(tab.subgroups[K])) continue;
            int cH = tab.class_of[H], cK = tab.class_of[K];
            for (int v = 0; v < src.level[cH].size; ++v)
                if (f.phi[cK][src.r[H][K][v]] != dst.r[H][K][f.phi[cH][v]]) return false;
            for (int v = 0; v < src.level[cK].size; ++v)
                if (f.phi[cH][src.t[H][K][v]] != dst.t[H][K][f.phi[cK][v]]) return false;
        }
    for (int g = 0; g < n; ++g)
        for (int H = 0; H < ns; ++H) {
            int cH = tab.class_of[H], cHg = tab.class_of[tab.conj_id[g][H]];
            for (int v = 0; v < src.level[cH].size; ++v)
                if (f.phi[cHg][src.c[g][H][v]] != dst.c[g][H][f.phi[cH][v]]) return false;
        }
    return true;
}

} // namespace

Report validate_mackey_morphism(const SemiMackeyData& src, const SemiMackeyData& dst,
                                const MackeyMorphism& f) {
    require(src.tab.get() == dst.tab.get(), errc::group_mismatch,
            "morphism endpoints must share a subgroup table");
    Report rep;
    int nc = src.tab->num_classes();
    bool shape = rep.check((int)f.phi.size() == nc, "shape", "one component per class");
    for (int ci = 0; ci < nc && shape; ++ci) {
        bool ok = (int)f.phi[ci].size() == src.level[ci].size;
        for (int v : f.phi[ci]) ok = ok && v >= 0 && v < dst.level[ci].size;
        shape &= rep.check(ok, "shape", "component size at class " + std::to_string(ci));
    }
    if (!shape) return rep;
    for (int ci = 0; ci < nc; ++ci) {
        const MonoidTable& A = src.level[ci];
        const MonoidTable& B = dst.level[ci];
        bool ok = f.phi[ci][A.unit] == B.unit;
        for (int a = 0; a < A.size && ok; ++a)
            for (int b = 0; b < A.size && ok; ++b)
                ok = f.phi[ci][A.op[a][b]] == B.op[f.phi[ci][a]][f.phi[ci][b]];
        rep.check(ok, "component is multiplicative", "class " + std::to_string(ci));
    }
    rep.check(morphism_commutes(src, dst, f), "commutes with structure maps", "");
    return rep;
}

std::optional<std::vector<MackeyMorphism>> enumerate_mackey_morphisms(
    const SemiMackeyData& src, const SemiMackeyData& dst, long long cap) {
    require(src.tab.get() == dst.tab.get(), errc::group_mismatch,
            "morphism endpoints must share a subgroup table");
    int nc = src.tab->num_classes();
    std::vector<std::vector<std::vector<int>>> homs(nc);
    for (int ci = 0; ci < nc; ++ci) {
        const MonoidTable& A = src.level[ci];
        const MonoidTable& B = dst.level[ci];
        std::vector<int> f(A.size, 0);
        // Odometer over all maps, keeping the monoid homomorphisms.
        while (true) {
            bool hom = f[A.unit] == B.unit;
            for (int a = 0; a < A.size && hom; ++a)
                for (int b = 0; b < A.size && hom; ++b)
                    hom = f[A.op[a][b]] == B.op[f[a]][f[b]];
            if (hom) homs[ci].push_back(f);
            int k = 0;
            while (k < A.size && f[k] == B.size - 1) f[k++] = 0;
            if (k == A.size) break;
            ++f[k];
        }
        if (homs[ci].empty()) return std::vector<MackeyMorphism>{};
    }
    long long total = 1;
    for (int ci = 0; ci < nc; ++ci) {
        total *= (long long)homs[ci].size();
        if (total > cap) return std::nullopt;
    }
    std::vector<MackeyMorphism> out;
    std::vector<int> pick(nc, 0);
    while (true) {
        MackeyMorphism f;
        f.phi.resize(nc);
        for (int ci = 0; ci < nc; ++ci) f.phi[ci] = homs[ci][pick[ci]];
        if (morphism_commutes(src, dst, f)) out.push_back(std::move(f));
        int k = 0;
        while (k < nc && pick[k] == (int)homs[k].size() - 1) pick[k++] = 0;
        if (k == nc) break;
        ++pick[k];
    }
    return out;
}

MackeyElement apply_morphism(const SemiMackeyData& src, const SemiMackeyData& dst,
                             const MackeyMorphism& f, const MackeyElement& m) {
    MackeyElement out = unit_element(dst, m.base);
    for (int i = 0; i < out.dec.count; ++i)
        out.comp[i] = f.phi[src.tab->class_of[out.stab_id[i]]][m.comp[i]];
    return out;
}

std::vector<int> fixed_bottom_level(const SemiMackeyData& M) {
    int e = M.tab->trivial_id();
    int n = M.tab->G().n;
    std::vector<int> out;
    for (int v = 0; v < M.level[M.tab->class_of[e]].size; ++v) {
        bool fixed = true;
        for (int g = 0; g < n && fixed; ++g) fixed = M.c[g][e][v] == v;
        if (fixed) out.push_back(v);
    }
    return out;
}

Report spot_check_functor(const SemiMackeyData& M, int samples, std::uint64_t seed) {
    Report rep;
    const SubgroupTable& tab = *M.tab;
    for (int it = 0; it < samples; ++it) {
        Rng rng(derive_seed(seed, (std::uint64_t)it));
        GSet Z = random_gset(tab, rng, 2, 8);
        GMap g = random_over(tab, Z, rng, 2, 10);
        GMap f = random_over(tab, g.dom, rng, 2, 12);
        GMap gf = compose(g, f);

        // Random element over Z, pulled two ways.
        MackeyElement mz = unit_element(M, Z);
        for (int i = 0; i < mz.dec.count; ++i)
            mz.comp[i] = rng.uniform(0, M.level_of_subgroup(mz.stab_id[i]).size - 1);
        rep.check(element_equal(pull(M, f, pull(M, g, mz)), pull(M, gf, mz)),
                  "pull respects composition", "sample " + std::to_string(it));

        MackeyElement mx = unit_element(M, f.dom);
        for (int i = 0; i < mx.dec.count; ++i)
            mx.comp[i] = rng.uniform(0, M.level_of_subgroup(mx.stab_id[i]).size - 1);
        rep.check(element_equal(push(M, g, push(M, f, mx)), push(M, gf, mx)),
                  "push respects composition", "sample " + std::to_string(it));

        // Pullback square of g against an independent map into Z: pushing
        // then pulling equals pulling then pushing.
        GMap h = random_over(tab, Z, rng, 2, 10);
        Pullback P = pullback(h, g);
        MackeyElement my = unit_element(M, g.dom);
        for (int i = 0; i < my.dec.count; ++i)
            my.comp[i] = rng.uniform(0, M.level_of_subgroup(my.stab_id[i]).size - 1);
        MackeyElement lhs = pull(M, h, push(M, g, my));
        MackeyElement rhs = push(M, P.pr1, pull(M, P.pr2, my));
        rep.check(element_equal(lhs, rhs), "pull after push matches the pullback square",
                  "sample " + std::to_string(it));

        // Identity map does nothing.
        rep.check(element_equal(pull(M, identity_map(Z), mz), mz), "pull along identity",
                  "sample " + std::to_string(it));
        rep.check(element_equal(push(M, identity_map(Z), mz), mz), "push along identity",
                  "sample " + std::to_string(it));
    }
    return rep;
}

} // namespace tamb
