#pragma once

// Brute-force oracles for the test suites, all built on cell geometry so
// they share no code path with the edge-sequence implementation.

#include <ribbonweave/partition.hpp>
#include <ribbonweave/tableaux.hpp>

#include <set>
#include <vector>

namespace oracles {

using ribbonweave::Composition;
using ribbonweave::Partition;
using ribbonweave::RibbonTableau;

using Cell = std::pair<int, int>;  // (row, column), 1-based

inline std::set<Cell> cells_of(const Partition& p) {
    std::set<Cell> out;
    for (int r = 1; r <= p.rows(); ++r)
        for (int c = 1; c <= p.part(r); ++c) out.insert({r, c});
    return out;
}

inline std::set<Cell> skew_cells(const Partition& small, const Partition& big) {
    std::set<Cell> out;
    for (int r = 1; r <= big.rows(); ++r)
        for (int c = small.part(r) + 1; c <= big.part(r); ++c) out.insert({r, c});
    return out;
}

/// Connected and free of 2x2 blocks.
inline bool is_ribbon_cells(const std::set<Cell>& cells) {
    if (cells.empty()) return false;
    // connectivity by flood fill
    std::set<Cell> seen;
    std::vector<Cell> stack{*cells.begin()};
    while (!stack.empty()) {
        const Cell c = stack.back();
        stack.pop_back();
        if (!cells.count(c) || seen.count(c)) continue;
        seen.insert(c);
        stack.push_back({c.first + 1, c.second});
        stack.push_back({c.first - 1, c.second});
        stack.push_back({c.first, c.second + 1});
        stack.push_back({c.first, c.second - 1});
    }
    if (seen.size() != cells.size()) return false;
    for (const Cell& c : cells)
        if (cells.count({c.first + 1, c.second}) && cells.count({c.first, c.second + 1}) &&
            cells.count({c.first + 1, c.second + 1}))
            return false;
    return true;
}

inline int cells_height(const std::set<Cell>& cells) {
    std::set<int> rows;
    for (const Cell& c : cells) rows.insert(c.first);
    return static_cast<int>(rows.size()) - 1;
}

inline int cells_sign(const std::set<Cell>& cells) { return cells_height(cells) % 2 ? -1 : 1; }

/// All partitions mu containing p with mu/p a ribbon of the given size.
inline std::vector<Partition> addable_shapes(const Partition& p, int size) {
    std::vector<Partition> out;
    for (const Partition& mu : ribbonweave::all_partitions(p.size() + size))
        if (mu.contains(p) && is_ribbon_cells(skew_cells(p, mu))) out.push_back(mu);
    return out;
}

/// All partitions mu contained in p with p/mu a ribbon of the given size.
inline std::vector<Partition> removable_shapes(const Partition& p, int size) {
    std::vector<Partition> out;
    if (p.size() < size) return out;
    for (const Partition& mu : ribbonweave::all_partitions(p.size() - size))
        if (p.contains(mu) && is_ribbon_cells(skew_cells(mu, p))) out.push_back(mu);
    return out;
}

/// Second, fully geometric tableau enumerator (chains of shapes).
inline std::vector<std::vector<Partition>> enumerate_chains_geometric(const Partition& shape,
                                                                      const Composition& content) {
    std::vector<std::vector<Partition>> out;
    std::vector<Partition> chain{Partition{}};
    auto rec = [&](auto&& self, std::size_t step) -> void {
        if (step == content.parts.size()) {
            if (chain.back() == shape) out.push_back(chain);
            return;
        }
        for (const Partition& next : addable_shapes(chain.back(), content.parts[step])) {
            if (!shape.contains(next)) continue;
            chain.push_back(next);
            self(self, step + 1);
            chain.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

/// Geometric sign of a chain.
inline int chain_sign(const std::vector<Partition>& chain) {
    int s = 1;
    for (std::size_t k = 0; k + 1 < chain.size(); ++k)
        s *= cells_sign(skew_cells(chain[k], chain[k + 1]));
    return s;
}

}  // namespace oracles
