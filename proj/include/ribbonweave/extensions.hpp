#pragma once

// Content permutation of ribbon tableaux through lozenge-shaped local
// rules, and oscillating ribbon tableaux with their hook-matching
// correspondence.
//
// The lozenge grid is a triangle of rhombic cells (i,j), 1 <= i <= j <=
// ell-1, drawn with cell (i-1,j) up-left and cell (i,j-1) down-left of
// (i,j).  The input tableau labels the upper-left side bottom to top, the
// output the upper-right side; a cell reads the chain lambda (south), mu
// (west), xi (north) and either exchanges the two steps (erase west, write
// the exchanged middle east) or, when the exchange is blocked, rewrites the
// west label in place and reverses the sweep direction, involution-principle
// style.  Unmarked cells move the west label east unchanged.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include <cstdlib>

#include "characters.hpp"
#include "growth.hpp"
#include "partition.hpp"
#include "ribbon_ops.hpp"
#include "tableaux.hpp"

namespace ribbonweave {

enum class LozengeCase { Exchange, Blocked };

/// Exchange carries the canonical middle partition realizing the two step
/// sizes in the opposite order (sign product preserved); Blocked carries
/// the replacement middle with the same step sizes (sign product reversed).
struct LozengeOutcome {
    LozengeCase tag;
    Partition value;
};

/// The local rule on a chain lambda < mid < xi of two nonempty ribbon
/// steps.  Disjoint edge intervals are exchanged outright; when the
/// intervals chain through a shared endpoint, the bit at the composite
/// index decides between the bridged exchange and the blocked rewrite.
inline LozengeOutcome lozenge_rule(const Partition& lam, const Partition& mid, const Partition& xi) {
    const auto first_iv = ribbon_interval(lam, mid);
    const auto second_iv = ribbon_interval(mid, xi);
    if (!first_iv || lam == mid || !second_iv || mid == xi)
        throw std::invalid_argument("lozenge_rule: chain steps must be nonempty ribbons");
    const auto [i1, j1] = *first_iv;
    const auto [i2, j2] = *second_iv;
    const EdgeSequence s = encode_edges(lam);
    if (i2 != j1 && j2 != i1)
        return {LozengeCase::Exchange, detail::flip_all(lam, {i2, j2})};
    if (i2 == j1) {  // second step continues past the first
        const int x = i1 + j2 - j1;
        if (s.bit(x) == 0) return {LozengeCase::Exchange, detail::flip_all(lam, {i1, x})};
        return {LozengeCase::Blocked, detail::flip_all(lam, {x, j2})};
    }
    // j2 == i1: second step continues below the first
    const int x = i2 + j1 - i1;
    if (s.bit(x) == 1) return {LozengeCase::Exchange, detail::flip_all(lam, {x, j1})};
    return {LozengeCase::Blocked, detail::flip_all(lam, {i2, x})};
}

/// Marked lozenges realizing the content permutation sigma (entry at
/// position x moves to position sigma(x)): cell (i, j) is marked exactly
/// when i <= #{x <= j : sigma(x) > sigma(j+1)}.
inline std::set<std::pair<int, int>> mark_lozenges(const std::vector<int>& sigma, int ell) {
    check_permutation(sigma);
    if (static_cast<int>(sigma.size()) != ell) throw std::invalid_argument("mark_lozenges: length mismatch");
    std::set<std::pair<int, int>> marks;
    for (int j = 1; j <= ell - 1; ++j) {
        int m = 0;
        for (int x = 1; x <= j; ++x)
            if (sigma[static_cast<std::size_t>(x - 1)] > sigma[static_cast<std::size_t>(j)]) ++m;
        for (int i = 1; i <= m; ++i) marks.insert({i, j});
    }
    return marks;
}

enum class PermuteEnd { Converted, Matched };

struct PermuteResult {
    PermuteEnd end;
    RibbonTableau tableau;  // content sigma(c) when Converted, content c when Matched
    long long steps = 0;
};

namespace lozdetail {

// vertex coordinates of cell (i,j) in the rhombic drawing
inline Vertex west(int i, int j) { return {i + j - 1, j - i}; }
inline Vertex east(int i, int j) { return {i + j + 1, j - i}; }
inline Vertex north(int i, int j) { return {i + j, j - i + 1}; }
inline Vertex south(int i, int j) { return {i + j, j - i - 1}; }

struct SweepState {
    int ell = 0;
    const std::set<std::pair<int, int>>* marks = nullptr;
    std::vector<std::pair<int, int>> cells;  // lex order: column-by-column
    std::map<Vertex, Partition> labels;
    int pos = 0;
    int dir = +1;
    long long steps_taken = 0;
};

inline SweepState make_state(int ell, const std::set<std::pair<int, int>>& marks) {
    SweepState st;
    st.ell = ell;
    st.marks = &marks;
    for (int i = 1; i <= ell - 1; ++i)
        for (int j = i; j <= ell - 1; ++j) st.cells.emplace_back(i, j);
    // fixed boundary: the empty partitions under the bottom cells
    for (int i = 1; i <= ell - 1; ++i) st.labels[south(i, i)] = Partition{};
    return st;
}

inline std::vector<Vertex> input_vertices(int ell) {
    std::vector<Vertex> v;
    v.push_back(south(1, 1));
    for (int j = 1; j <= ell - 1; ++j) v.push_back(west(1, j));
    v.push_back(north(1, ell - 1));
    return v;
}

inline std::vector<Vertex> output_vertices(int ell) {
    std::vector<Vertex> v;
    v.push_back(south(ell - 1, ell - 1));
    for (int p = 1; p <= ell - 1; ++p) v.push_back(east(ell - p, ell - 1));
    v.push_back(north(1, ell - 1));
    return v;
}

inline void run_sweep(SweepState& st, long long step_cap) {
    const int ncells = static_cast<int>(st.cells.size());
    while (st.pos >= 0 && st.pos < ncells) {
        const auto [i, j] = st.cells[static_cast<std::size_t>(st.pos)];
        const bool marked = st.marks->count({i, j}) > 0;
        const Partition lam = st.labels.at(south(i, j));
        const Partition xi = st.labels.at(north(i, j));
        if (st.dir > 0) {
            const Partition mu = st.labels.at(west(i, j));
            if (!marked) {
                st.labels.erase(west(i, j));
                st.labels[east(i, j)] = mu;
            } else {
                const LozengeOutcome o = lozenge_rule(lam, mu, xi);
                if (o.tag == LozengeCase::Exchange) {
                    st.labels.erase(west(i, j));
                    st.labels[east(i, j)] = o.value;
                } else {
                    st.labels[west(i, j)] = o.value;
                    st.dir = -1;
                }
            }
        } else {
            const Partition nu = st.labels.at(east(i, j));
            if (!marked) {
                st.labels.erase(east(i, j));
                st.labels[west(i, j)] = nu;
            } else {
                const LozengeOutcome o = lozenge_rule(lam, nu, xi);
                if (o.tag == LozengeCase::Exchange) {
                    st.labels.erase(east(i, j));
                    st.labels[west(i, j)] = o.value;
                } else {
                    st.labels[east(i, j)] = o.value;
                    st.dir = +1;
                }
            }
        }
        st.pos += st.dir;
        if (++st.steps_taken > step_cap)
            throw StepCapExceeded("lozenge sweep exceeded the step cap");
    }
}

}  // namespace lozdetail

/// Permuted content: c'_{sigma(x)} = c_x.
inline Composition permute_composition(const Composition& c, const std::vector<int>& sigma) {
    Composition out;
    out.parts.assign(c.parts.size(), 0);
    for (std::size_t x = 0; x < c.parts.size(); ++x)
        out.parts[static_cast<std::size_t>(sigma[x] - 1)] = c.parts[x];
    return out;
}

/// Sweep the lozenge grid over t with the marking of sigma: Converted
/// tableaux have content sigma(c) and the same shape and sign; Matched
/// results pair t with another tableau of content c and opposite sign
/// (a sign-reversing involution).
inline PermuteResult permute_content(const RibbonTableau& t, const std::vector<int>& sigma,
                                     long long step_cap = kDefaultStepCap) {
    const int ell = t.length();
    check_permutation(sigma);
    if (static_cast<int>(sigma.size()) != ell)
        throw std::invalid_argument("permute_content: sigma length must match tableau length");
    if (ell <= 1) return {PermuteEnd::Converted, t, 0};
    const auto marks = mark_lozenges(sigma, ell);
    lozdetail::SweepState st = lozdetail::make_state(ell, marks);
    const auto in = lozdetail::input_vertices(ell);
    for (int p = 0; p <= ell; ++p) st.labels[in[static_cast<std::size_t>(p)]] = t.chain[static_cast<std::size_t>(p)];
    lozdetail::run_sweep(st, step_cap);
    std::vector<Partition> chain;
    const auto side = st.pos < 0 ? lozdetail::input_vertices(ell) : lozdetail::output_vertices(ell);
    for (const Vertex& v : side) chain.push_back(st.labels.at(v));
    return {st.pos < 0 ? PermuteEnd::Matched : PermuteEnd::Converted, RibbonTableau(std::move(chain)),
            st.steps_taken};
}

/// Reverse sweep from a tableau of content sigma(c): Converted results have
/// content c (and invert permute_content on its converted domain); Matched
/// results pair elements of the sigma(c) side sign-reversingly.
inline PermuteResult permute_content_inverse(const RibbonTableau& t, const std::vector<int>& sigma,
                                             long long step_cap = kDefaultStepCap) {
    const int ell = t.length();
    check_permutation(sigma);
    if (static_cast<int>(sigma.size()) != ell)
        throw std::invalid_argument("permute_content_inverse: sigma length must match tableau length");
    if (ell <= 1) return {PermuteEnd::Converted, t, 0};
    const auto marks = mark_lozenges(sigma, ell);
    lozdetail::SweepState st = lozdetail::make_state(ell, marks);
    const auto out = lozdetail::output_vertices(ell);
    for (int p = 0; p <= ell; ++p)
        st.labels[out[static_cast<std::size_t>(p)]] = t.chain[static_cast<std::size_t>(p)];
    st.pos = static_cast<int>(st.cells.size()) - 1;
    st.dir = -1;
    lozdetail::run_sweep(st, step_cap);
    std::vector<Partition> chain;
    const auto side = st.pos < 0 ? lozdetail::input_vertices(ell) : lozdetail::output_vertices(ell);
    for (const Vertex& v : side) chain.push_back(st.labels.at(v));
    return {st.pos < 0 ? PermuteEnd::Converted : PermuteEnd::Matched, RibbonTableau(std::move(chain)),
            st.steps_taken};
}

/// A closed walk at the empty partition with ell nonempty ribbon steps up
/// and ell down, in any order.  Size = half the sum of the step sizes.
struct OscillatingTableau {
    std::vector<Partition> chain;

    OscillatingTableau() { chain.emplace_back(); }
    explicit OscillatingTableau(std::vector<Partition> c) : chain(std::move(c)) {
        if (chain.size() % 2 == 0 || chain.empty())
            throw std::invalid_argument("oscillating tableau needs 2*ell steps");
        if (!chain.front().empty() || !chain.back().empty())
            throw std::invalid_argument("oscillating tableau starts and ends empty");
        int ups = 0, downs = 0;
        for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
            const Partition& a = chain[k];
            const Partition& b = chain[k + 1];
            if (is_ribbon_step(a, b))
                ++ups;
            else if (is_ribbon_step(b, a))
                ++downs;
            else
                throw std::invalid_argument("oscillating step is not a nonempty ribbon");
        }
        if (ups != downs) throw std::invalid_argument("oscillating tableau needs equal ups and downs");
    }

    int length() const { return static_cast<int>(chain.size() - 1) / 2; }

    int size() const {
        int total = 0;
        for (std::size_t k = 0; k + 1 < chain.size(); ++k)
            total += std::abs(chain[k + 1].size() - chain[k].size());
        return total / 2;
    }

    int sign() const {
        int s = 1;
        for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
            const Partition& small = chain[k].size() < chain[k + 1].size() ? chain[k] : chain[k + 1];
            const Partition& big = chain[k].size() < chain[k + 1].size() ? chain[k + 1] : chain[k];
            s *= skew_ribbon_sign(small, big);
        }
        return s;
    }

    auto operator<=>(const OscillatingTableau&) const = default;
};

/// A perfect matching of [1, 2*ell] with a hook attached to every pair.
struct HookMatching {
    std::vector<std::pair<int, int>> pairs;  // (a, b) with a < b
    std::vector<Hook> hooks;                 // aligned with pairs

    HookMatching() = default;
    HookMatching(std::vector<std::pair<int, int>> p, std::vector<Hook> h)
        : pairs(std::move(p)), hooks(std::move(h)) {
        if (pairs.size() != hooks.size()) throw std::invalid_argument("pair/hook length mismatch");
        std::vector<int> seen(2 * pairs.size(), 0);
        for (auto& [a, b] : pairs) {
            if (a < 1 || b <= a || b > 2 * static_cast<int>(pairs.size()))
                throw std::invalid_argument("pairs must satisfy 1 <= a < b <= 2*ell");
            if (seen[static_cast<std::size_t>(a - 1)]++ || seen[static_cast<std::size_t>(b - 1)]++)
                throw std::invalid_argument("pairs must form a perfect matching");
        }
    }

    int length() const { return static_cast<int>(pairs.size()); }
    int size() const {
        int n = 0;
        for (const Hook& h : hooks) n += h.size;
        return n;
    }

    auto operator<=>(const HookMatching&) const = default;
};

/// All oscillating ribbon tableaux of size n and length ell.
inline std::vector<OscillatingTableau> enumerate_oscillating(int n, int ell) {
    if (ell < 1 || n < ell) throw std::invalid_argument("need n >= ell >= 1");
    std::vector<OscillatingTableau> out;
    std::vector<Partition> chain{Partition{}};
    auto rec = [&](auto&& self, int ups_left, int downs_left, int budget) -> void {
        const Partition cur = chain.back();  // copy: push_back reallocates
        if (ups_left == 0 && downs_left == 0) {
            if (cur.empty() && budget == 0) out.emplace_back(chain);
            return;
        }
        const int steps_left = ups_left + downs_left;
        if (ups_left > 0)
            for (int s = 1; s + (steps_left - 1) <= budget; ++s)
                for (const Ribbon& r : addable_ribbons(cur, s)) {
                    chain.push_back(apply_ribbon(cur, r));
                    self(self, ups_left - 1, downs_left, budget - s);
                    chain.pop_back();
                }
        if (downs_left > 0 && !cur.empty())
            for (int s = 1; s + (steps_left - 1) <= budget && s <= cur.size(); ++s)
                for (const Ribbon& r : removable_ribbons(cur, s)) {
                    chain.push_back(apply_ribbon(cur, r));
                    self(self, ups_left, downs_left - 1, budget - s);
                    chain.pop_back();
                }
    };
    rec(rec, ell, ell, 2 * n);
    std::sort(out.begin(), out.end());
    return out;
}

/// Signed count of Osc(n, ell) by direct enumeration.
inline long long signed_count_oscillating_brute(int n, int ell) {
    long long s = 0;
    for (const OscillatingTableau& t : enumerate_oscillating(n, ell)) s += t.sign();
    return s;
}

/// The closed form pinned against the brute-force oracle:
/// (2*ell-1)!! * C(n+ell-1, 2*ell-1).
inline BigInt signed_count_oscillating(int n, int ell) {
    return odd_double_factorial(2 * ell - 1) * binomial(n + ell - 1, 2 * ell - 1);
}

/// All hook matchings on [1, 2*ell] of total size n.
inline std::vector<HookMatching> enumerate_hook_matchings(int n, int ell) {
    std::vector<std::vector<std::pair<int, int>>> matchings;
    std::vector<std::pair<int, int>> cur;
    std::vector<int> free;
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(cur.size()) == ell) {
            matchings.push_back(cur);
            return;
        }
        int a = 0;
        for (int v = 1; v <= 2 * ell; ++v)
            if (!std::count_if(cur.begin(), cur.end(),
                               [v](const auto& pr) { return pr.first == v || pr.second == v; })) {
                a = v;
                break;
            }
        for (int b = a + 1; b <= 2 * ell; ++b) {
            if (std::count_if(cur.begin(), cur.end(),
                              [b](const auto& pr) { return pr.first == b || pr.second == b; }))
                continue;
            cur.emplace_back(a, b);
            self(self);
            cur.pop_back();
        }
    };
    rec(rec);

    std::vector<HookMatching> out;
    std::vector<Hook> hooks(static_cast<std::size_t>(ell), Hook{});
    for (const auto& m : matchings) {
        auto fill = [&](auto&& self, int idx, int rest) -> void {
            if (idx == ell) {
                if (rest == 0) out.emplace_back(m, hooks);
                return;
            }
            for (int s = 1; s + (ell - idx - 1) <= rest; ++s)
                for (int h = 0; h < s; ++h) {
                    hooks[static_cast<std::size_t>(idx)] = Hook(s, h);
                    self(self, idx + 1, rest - s);
                }
        };
        fill(fill, 0, n);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Embed a hook matching on the staircase grid: the hook of pair (a, b)
/// colors the square in column a, row b from the top, plus its mirror
/// image across the antidiagonal.
inline Configuration embed_hook_matching(const HookMatching& m, const SquareOrder& order) {
    if (order.kind() != SquareOrder::Kind::Staircase)
        throw std::invalid_argument("embed: staircase order required");
    if (m.length() != order.ell()) throw std::invalid_argument("embed: length mismatch");
    const int two_ell = 2 * order.ell();
    Configuration cfg = initial_configuration(order);
    for (std::size_t k = 0; k < m.pairs.size(); ++k) {
        const auto [a, b] = m.pairs[k];
        cfg.coloring[{a, two_ell + 1 - b}] = m.hooks[k];
        cfg.coloring[{b, two_ell + 1 - a}] = m.hooks[k];
    }
    return cfg;
}

inline OscillatingTableau read_staircase_chain(const Configuration& cfg) {
    const int two_ell = 2 * cfg.order->ell();
    std::vector<Partition> chain;
    for (int k = 0; k <= two_ell; ++k) chain.push_back(cfg.labels.at({k, two_ell - k}));
    return OscillatingTableau(std::move(chain));
}

inline HookMatching read_hook_matching(const Configuration& cfg) {
    const int two_ell = 2 * cfg.order->ell();
    std::vector<std::pair<int, int>> pairs;
    std::vector<Hook> hooks;
    for (const auto& [sq, hk] : cfg.coloring) {
        if (sq.first + sq.second > two_ell) continue;  // mirror copies
        pairs.emplace_back(sq.first, two_ell + 1 - sq.second);
        hooks.push_back(hk);
    }
    return HookMatching(std::move(pairs), std::move(hooks));
}

/// Growth walk from a hook matching to an oscillating ribbon tableau.
inline OscillatingTableau oscillating_correspondence(const HookMatching& m, const SquareOrder& order,
                                                     long long step_cap = kDefaultStepCap,
                                                     std::vector<StepRecord>* trace = nullptr) {
    Configuration cfg = embed_hook_matching(m, order);
    if (run_walk(cfg, trace, step_cap) != RunEnd::Forward)
        throw std::logic_error("matching walk exited on the matching side");
    return read_staircase_chain(cfg);
}

/// Backward walk from an oscillating tableau: the matching it corresponds
/// to, or the sign-reversed matched tableau outside the image.
inline std::variant<HookMatching, OscillatingTableau> oscillating_correspondence_inverse(
    const OscillatingTableau& t, const SquareOrder& order, long long step_cap = kDefaultStepCap,
    std::vector<StepRecord>* trace = nullptr) {
    if (order.kind() != SquareOrder::Kind::Staircase)
        throw std::invalid_argument("staircase order required");
    if (t.length() != order.ell()) throw std::invalid_argument("length mismatch");
    const int two_ell = 2 * order.ell();
    Configuration cfg;
    cfg.order = &order;
    for (int k = 0; k <= two_ell; ++k) {
        const Partition& a = t.chain[static_cast<std::size_t>(k)];
        cfg.labels[{k, two_ell - k}] = a;
        if (k < two_ell) {
            const Partition& b = t.chain[static_cast<std::size_t>(k + 1)];
            cfg.labels[{k, two_ell - k - 1}] = a.size() <= b.size() ? a : b;
        }
    }
    cfg.pos = static_cast<int>(order.steps().size()) - 1;
    cfg.dir = -1;
    if (run_walk(cfg, trace, step_cap) == RunEnd::Backward) return read_hook_matching(cfg);
    return read_staircase_chain(cfg);
}

}  // namespace ribbonweave
