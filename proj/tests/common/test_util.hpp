#pragma once

// Shared helpers for the unit and acceptance suites: oracle-side brute force
// kept deliberately independent of the engine code paths it checks.

#include <algorithm>
#include <array>
#include <cstdio>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "conlab/nodal.hpp"
#include "conlab/rational.hpp"

namespace testutil {

// All generator subsets of {lo..hi} with 2 <= size <= max_size and gcd 1.
inline std::vector<std::vector<long>> coprime_families(long lo, long hi, std::size_t max_size) {
    std::vector<long> pool;
    for (long v = lo; v <= hi; ++v)
        pool.push_back(v);
    std::vector<std::vector<long>> out;
    const std::size_t n = pool.size();
    for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
        std::vector<long> gens;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::size_t(1) << i))
                gens.push_back(pool[i]);
        if (gens.size() < 2 || gens.size() > max_size)
            continue;
        long g = 0;
        for (long a : gens)
            g = std::gcd(g, a);
        if (g == 1)
            out.push_back(std::move(gens));
    }
    return out;
}

// Naive membership: every non-negative generator combination with sum below
// the bound. Oracle for the dynamic-programming closure.
inline std::vector<char> brute_force_membership(const std::vector<long>& gens, long bound) {
    std::vector<char> table(static_cast<std::size_t>(bound), 0);
    table[0] = 1;
    for (long n = 0; n < bound; ++n) {
        if (!table[static_cast<std::size_t>(n)])
            continue;
        for (long a : gens)
            if (n + a < bound)
                table[static_cast<std::size_t>(n + a)] = 1;
    }
    return table;
}

// Random connected rational nodal curve: spanning tree over the components
// plus random extra nodes (self-nodes allowed).
inline conlab::NodalCurve random_connected_curve(std::mt19937& rng, int max_components = 6,
                                                 int max_nodes = 10) {
    std::uniform_int_distribution<int> comp_dist(1, max_components);
    const int v = comp_dist(rng);
    std::uniform_int_distribution<int> extra_dist(0, max_nodes - (v - 1));
    const int extra = extra_dist(rng);

    struct Endpoint {
        int component;
    };
    std::vector<std::pair<int, int>> edges; // component pairs
    for (int i = 1; i < v; ++i) {
        std::uniform_int_distribution<int> prev(0, i - 1);
        edges.push_back({prev(rng), i});
    }
    std::uniform_int_distribution<int> any(0, v - 1);
    for (int i = 0; i < extra; ++i)
        edges.push_back({any(rng), any(rng)});

    std::vector<conlab::NodalCurve::Component> comps(static_cast<std::size_t>(v));
    for (int i = 0; i < v; ++i)
        comps[static_cast<std::size_t>(i)].label = "C" + std::to_string(i);
    std::vector<conlab::NodalCurve::Node> nodes;
    std::vector<int> next_point(static_cast<std::size_t>(v), 0);
    auto fresh_point = [&](int c) {
        const int idx = next_point[static_cast<std::size_t>(c)]++;
        comps[static_cast<std::size_t>(c)].points.push_back(conlab::Rational(idx));
        return idx;
    };
    for (const auto& [a, b] : edges) {
        conlab::NodalCurve::PointRef pa{a, fresh_point(a)};
        conlab::NodalCurve::PointRef pb{b, fresh_point(b)};
        nodes.push_back({pa, pb});
    }
    return conlab::NodalCurve(std::move(comps), std::move(nodes));
}

struct CommandResult {
    int exit_code = -1;
    std::string output;
};

// Runs a shell command, capturing stdout (stderr is dropped).
inline CommandResult run_command(const std::string& cmd) {
    CommandResult res;
    FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!pipe)
        return res;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        res.output.append(buf.data(), n);
    const int status = pclose(pipe);
    if (status >= 0 && WIFEXITED(status))
        res.exit_code = WEXITSTATUS(status);
    return res;
}

} // namespace testutil
