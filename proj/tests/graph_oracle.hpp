#pragma once

#include "lct/dualgraph.hpp"

#include <functional>

namespace oracle {

/// Z . A_i <= 0 for every vertex, computed from the edge list.
inline bool is_anti_nef(const lct::DualGraph& g, const std::vector<long>& z)
{
    for (std::size_t i = 0; i < g.size(); ++i) {
        long s = z[i] * g.vertex(i).self_intersection;
        for (std::size_t j = 0; j < g.size(); ++j)
            if (g.adjacent(i, j))
                s += z[j];
        if (s > 0)
            return false;
    }
    return true;
}

/// Every cycle with 1 <= z_i <= limit_i; returns the anti-nef ones.
inline std::vector<std::vector<long>> anti_nef_cycles_below(const lct::DualGraph& g, const std::vector<long>& limit)
{
    std::vector<std::vector<long>> out;
    std::vector<long> z(g.size(), 1);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == g.size()) {
            if (is_anti_nef(g, z))
                out.push_back(z);
            return;
        }
        for (long v = 1; v <= limit[i]; ++v) {
            z[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

/// z is the unique least positive anti-nef cycle among cycles bounded by z.
inline bool is_minimal_fundamental(const lct::DualGraph& g, const std::vector<long>& z)
{
    if (!is_anti_nef(g, z))
        return false;
    auto found = anti_nef_cycles_below(g, z);
    return found.size() == 1 && found.front() == z;
}

} // namespace oracle
