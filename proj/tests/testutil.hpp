#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "tamb/group.hpp"

namespace tamb::testutil {

// Independent oracle: enumerate subgroups by scanning every subset that
// contains the identity. Only usable for tiny groups (cost 2^(n-1)).
inline std::set<std::vector<int>> brute_force_subgroups(const FiniteGroup& G) {
    std::set<std::vector<int>> out;
    int n = G.n;
    for (unsigned long long mask = 1; mask < (1ull << n); mask += 2) {
        std::vector<int> elems;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) elems.push_back(i);
        bool closed = true;
        for (int a : elems) {
            if (!(mask >> G.inv[a] & 1)) { closed = false; break; }
            for (int b : elems)
                if (!(mask >> G.mul[a][b] & 1)) { closed = false; break; }
            if (!closed) break;
        }
        if (closed) out.insert(elems);
    }
    return out;
}

} // namespace tamb::testutil
