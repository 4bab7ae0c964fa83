#pragma once

// Global correspondences on grids of squares: the forward algorithm from
// hook permutations to pairs of ribbon tableaux, its inverse, and the
// half-grid variant for hook involutions.  One engine drives all of them:
// a configuration holds the border labels and the hook coloring, and a
// step applies the direct or inverse local rule at the cursor square,
// reversing direction whenever S or T fires (the involution-principle
// walk).  The square grid, the half grid (squares applied in symmetric
// pairs), and the staircase grid used for oscillating tableaux differ only
// in their step plans.

#include <cstdlib>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "local_rules.hpp"
#include "partition.hpp"
#include "tableaux.hpp"

namespace ribbonweave {

using Square = std::pair<int, int>;  // (column, row), 1-based, rows from the bottom
using Vertex = std::pair<int, int>;  // lattice point (x, y)

struct StepCapExceeded : std::runtime_error {
    explicit StepCapExceeded(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr long long kDefaultStepCap = 10'000'000;

/// The region of squares a run sweeps: column i holds rows 1..col_heights[i-1];
/// border paths run from (0, top) to (width, 0).
struct GridRegion {
    std::vector<int> col_heights;
    int top = 0;

    int width() const { return static_cast<int>(col_heights.size()); }
    int height(int i) const { return i >= 1 && i <= width() ? col_heights[static_cast<std::size_t>(i - 1)] : 0; }
    bool contains(int i, int j) const { return i >= 1 && i <= width() && j >= 1 && j <= height(i); }
};

/// A total processing order: a sequence of steps, each one square or a
/// symmetric pair of squares, extending the product order on the region.
class SquareOrder {
public:
    enum class Kind { Full, Half, Staircase };

    /// Row-major order on the ell x ell grid ((i,j) before (i',j') when
    /// j < j', or j = j' and i < i'); half = true restricts to i >= j and
    /// applies off-diagonal squares in symmetric pairs.
    static SquareOrder default_order(int ell, bool half) { return make_square(ell, half, false); }
    static SquareOrder column_major(int ell, bool half) { return make_square(ell, half, true); }

    /// The staircase region for hook matchings on [1, 2*ell]: squares (i,j)
    /// with i + j <= 2*ell, borders from (0, 2*ell) to (2*ell, 0).
    static SquareOrder staircase(int ell, bool col_major = false) {
        SquareOrder o;
        o.kind_ = Kind::Staircase;
        o.ell_ = ell;
        o.region_.top = 2 * ell;
        o.region_.col_heights.resize(static_cast<std::size_t>(2 * ell));
        for (int i = 1; i <= 2 * ell; ++i) o.region_.col_heights[static_cast<std::size_t>(i - 1)] = 2 * ell - i;
        std::vector<Square> squares;
        for (int i = 1; i <= 2 * ell; ++i)
            for (int j = 1; j <= 2 * ell - i; ++j) squares.emplace_back(i, j);
        sort_squares(squares, col_major);
        for (const Square& sq : squares) o.steps_.push_back({sq});
        o.check_extends_product_order();
        return o;
    }

    Kind kind() const { return kind_; }
    int ell() const { return ell_; }
    const GridRegion& region() const { return region_; }
    const std::vector<std::vector<Square>>& steps() const { return steps_; }

    /// Squares in processing order (pairs flattened), 0-based rank.
    std::vector<Square> squares_in_order() const {
        std::vector<Square> out;
        for (const auto& st : steps_) out.insert(out.end(), st.begin(), st.end());
        return out;
    }

private:
    static void sort_squares(std::vector<Square>& squares, bool col_major) {
        std::sort(squares.begin(), squares.end(), [col_major](const Square& a, const Square& b) {
            if (col_major) return a < b;
            return std::pair{a.second, a.first} < std::pair{b.second, b.first};
        });
    }

    static SquareOrder make_square(int ell, bool half, bool col_major) {
        if (ell < 1) throw std::invalid_argument("grid side must be >= 1");
        SquareOrder o;
        o.kind_ = half ? Kind::Half : Kind::Full;
        o.ell_ = ell;
        o.region_.top = ell;
        o.region_.col_heights.assign(static_cast<std::size_t>(ell), ell);
        std::vector<Square> squares;
        for (int i = 1; i <= ell; ++i)
            for (int j = 1; j <= (half ? i : ell); ++j) squares.emplace_back(i, j);
        sort_squares(squares, col_major);
        for (const Square& sq : squares) {
            if (half && sq.first != sq.second)
                o.steps_.push_back({sq, Square{sq.second, sq.first}});
            else
                o.steps_.push_back({sq});
        }
        o.check_extends_product_order();
        return o;
    }

    // rank(a) < rank(b) whenever a <= b componentwise (for half plans on the
    // induced (min,max) coordinates)
    void check_extends_product_order() const {
        std::map<Square, std::size_t> rank;
        for (std::size_t t = 0; t < steps_.size(); ++t) rank[key(steps_[t].front())] = t;
        for (const auto& [a, ra] : rank)
            for (const auto& [b, rb] : rank)
                if (a != b && a.first <= b.first && a.second <= b.second && ra >= rb)
                    throw std::logic_error("square order does not extend the product order");
    }

    Square key(const Square& sq) const {
        if (kind_ != Kind::Half) return sq;
        return {std::min(sq.first, sq.second), std::max(sq.first, sq.second)};
    }

    Kind kind_ = Kind::Full;
    int ell_ = 0;
    GridRegion region_;
    std::vector<std::vector<Square>> steps_;
};

struct StepRecord {
    Square sq;
    Rule rule;
    int dir;
};

inline std::string format_step_record(const StepRecord& r) {
    return "sq=(" + std::to_string(r.sq.first) + "," + std::to_string(r.sq.second) +
           ") dir=" + (r.dir > 0 ? "+1" : "-1") + " rule=" + rule_name(r.rule);
}

/// The mutable state of a run: border vertex labels, the hook coloring of
/// outside squares, the cursor (index of the next step) and the direction.
/// Squares steps[0..pos) are inside when dir = +1, steps[0..pos] when
/// dir = -1.
struct Configuration {
    const SquareOrder* order = nullptr;  // non-owning
    std::map<Vertex, Partition> labels;
    std::map<Square, Hook> coloring;
    int pos = 0;
    int dir = +1;
    long long steps_taken = 0;

    bool forward_done() const { return pos >= static_cast<int>(order->steps().size()); }
    bool backward_done() const { return pos < 0; }

    int inside_count() const { return pos + (dir < 0 ? 1 : 0); }
};

namespace growth_detail {

inline Rule apply_at_square(Configuration& cfg, const Square& sq) {
    const auto [i, j] = sq;
    const Vertex bl{i - 1, j - 1}, br{i, j - 1}, tl{i - 1, j}, tr{i, j};
    try {
        if (cfg.dir > 0) {
            std::optional<Hook> hk;
            const auto it = cfg.coloring.find(sq);
            if (it != cfg.coloring.end()) hk = it->second;
            const RuleOutcome o =
                apply_direct(SquareIn::direct(cfg.labels.at(tl), cfg.labels.at(br), cfg.labels.at(bl), hk));
            if (o.rule == Rule::S) {
                cfg.labels[bl] = o.result;
                return Rule::S;
            }
            if (it != cfg.coloring.end()) cfg.coloring.erase(sq);
            cfg.labels.erase(bl);
            cfg.labels[tr] = o.result;
            return o.rule;
        }
        const RuleOutcome o =
            apply_inverse(SquareIn::inverse(cfg.labels.at(tl), cfg.labels.at(br), cfg.labels.at(tr)));
        if (o.rule == Rule::T) {
            cfg.labels[tr] = o.result;
            return Rule::T;
        }
        cfg.labels.erase(tr);
        cfg.labels[bl] = o.result;
        if (o.rule == Rule::I2) cfg.coloring[sq] = *o.hook_out;
        return o.rule;
    } catch (const std::out_of_range&) {
        throw std::logic_error("corrupt configuration: missing border label at square (" +
                               std::to_string(i) + "," + std::to_string(j) + ")");
    }
}

}  // namespace growth_detail

/// Apply one step of the walk at the cursor, mirroring over square pairs,
/// and advance the cursor (S and T reverse the direction first).
inline std::vector<StepRecord> step(Configuration& cfg) {
    if (cfg.forward_done() || cfg.backward_done()) throw std::logic_error("step: cursor out of range");
    const auto& squares = cfg.order->steps()[static_cast<std::size_t>(cfg.pos)];
    std::vector<StepRecord> recs;
    for (std::size_t k = 0; k < squares.size(); ++k) {
        const Rule r = growth_detail::apply_at_square(cfg, squares[k]);
        recs.push_back({squares[k], r, cfg.dir});
        if (k > 0 && r != recs.front().rule) throw std::logic_error("asymmetric rule on a mirrored pair");
    }
    if (is_switch_rule(recs.front().rule)) cfg.dir = -cfg.dir;
    cfg.pos += cfg.dir;
    ++cfg.steps_taken;
    return recs;
}

enum class RunEnd { Forward, Backward };

inline RunEnd run_walk(Configuration& cfg, std::vector<StepRecord>* trace, long long step_cap) {
    while (!cfg.forward_done() && !cfg.backward_done()) {
        auto recs = step(cfg);
        if (trace) trace->insert(trace->end(), recs.begin(), recs.end());
        if (cfg.steps_taken > step_cap)
            throw StepCapExceeded("growth walk exceeded the step cap (termination is guaranteed; "
                                  "this indicates an implementation bug)");
    }
    return cfg.forward_done() ? RunEnd::Forward : RunEnd::Backward;
}

/// Fresh configuration with the initial border (left and bottom sides, all
/// labels empty) and no coloring.
inline Configuration initial_configuration(const SquareOrder& order) {
    Configuration cfg;
    cfg.order = &order;
    const GridRegion& g = order.region();
    for (int y = 0; y <= g.top; ++y) cfg.labels[{0, y}] = Partition{};
    for (int x = 0; x <= g.width(); ++x) cfg.labels[{x, 0}] = Partition{};
    return cfg;
}

/// A hook permutation as a positive configuration: hooks at (i, sigma(i)).
inline Configuration embed_hook_permutation(const HookPermutation& hp, const SquareOrder& order) {
    if (order.kind() != SquareOrder::Kind::Full) throw std::invalid_argument("embed: full grid order required");
    if (hp.length() != order.ell()) throw std::invalid_argument("embed: length must match the grid side");
    Configuration cfg = initial_configuration(order);
    for (int i = 1; i <= hp.length(); ++i)
        cfg.coloring[{i, hp.sigma[static_cast<std::size_t>(i - 1)]}] = hp.hooks[static_cast<std::size_t>(i - 1)];
    return cfg;
}

/// A hook involution embedded symmetrically for a half-grid plan.
inline Configuration embed_hook_involution(const HookInvolution& inv, const SquareOrder& order) {
    if (order.kind() != SquareOrder::Kind::Half) throw std::invalid_argument("embed: half grid order required");
    if (inv.length() != order.ell()) throw std::invalid_argument("embed: length must match the grid side");
    Configuration cfg = initial_configuration(order);
    for (int i = 1; i <= inv.length(); ++i)
        cfg.coloring[{i, inv.hp.sigma[static_cast<std::size_t>(i - 1)]}] =
            inv.hp.hooks[static_cast<std::size_t>(i - 1)];
    return cfg;
}

/// Border vertices of the fully processed grid, i.e. the profile path from
/// (0, top) to (width, 0) hugging the region.
inline std::vector<Vertex> final_border_vertices(const GridRegion& g) {
    std::vector<Vertex> out;
    int y = g.top;
    out.push_back({0, y});
    while (y > g.height(1)) out.push_back({0, --y});
    for (int i = 1; i <= g.width(); ++i) {
        out.push_back({i, y});
        const int next = i < g.width() ? g.height(i + 1) : 0;
        while (y > next) out.push_back({i, --y});
    }
    return out;
}

inline RibbonTableau read_right_chain(const Configuration& cfg) {
    const GridRegion& g = cfg.order->region();
    std::vector<Partition> chain;
    for (int y = 0; y <= g.top; ++y) chain.push_back(cfg.labels.at({g.width(), y}));
    return RibbonTableau(std::move(chain));
}

inline RibbonTableau read_top_chain(const Configuration& cfg) {
    const GridRegion& g = cfg.order->region();
    std::vector<Partition> chain;
    for (int x = 0; x <= g.width(); ++x) chain.push_back(cfg.labels.at({x, g.top}));
    return RibbonTableau(std::move(chain));
}

/// Read the coloring of a backward-completed run as a hook permutation.
inline HookPermutation read_hook_permutation(const Configuration& cfg) {
    const int ell = cfg.order->ell();
    std::vector<Hook> hooks(static_cast<std::size_t>(ell), Hook{});
    std::vector<int> sigma(static_cast<std::size_t>(ell), 0);
    if (static_cast<int>(cfg.coloring.size()) != ell)
        throw std::logic_error("backward run did not leave one hook per column");
    for (const auto& [sq, hk] : cfg.coloring) {
        sigma[static_cast<std::size_t>(sq.first - 1)] = sq.second;
        hooks[static_cast<std::size_t>(sq.first - 1)] = hk;
    }
    return HookPermutation(std::move(hooks), std::move(sigma));
}

/// Labels of a pair of tableaux on the final border of a full grid.
inline void embed_tableau_pair(Configuration& cfg, const RibbonTableau& p, const RibbonTableau& q) {
    const GridRegion& g = cfg.order->region();
    if (p.length() != g.top || q.length() != g.width())
        throw std::invalid_argument("tableau lengths must match the grid side");
    if (!(p.shape() == q.shape())) throw std::invalid_argument("tableaux must share their shape");
    cfg.labels.clear();
    for (int y = 0; y <= g.top; ++y) cfg.labels[{g.width(), y}] = p.chain[static_cast<std::size_t>(y)];
    for (int x = 0; x <= g.width(); ++x) cfg.labels[{x, g.top}] = q.chain[static_cast<std::size_t>(x)];
    cfg.pos = static_cast<int>(cfg.order->steps().size()) - 1;
    cfg.dir = -1;
}

struct PhiResult {
    RibbonTableau p;
    RibbonTableau q;
    std::vector<StepRecord> trace;
};

/// Forward correspondence: hook permutation -> same-shape pair (P, Q).
/// P is read on the right side bottom to top, Q on the top side left to
/// right; c(Q) = c(H) and c(P) = c(H, sigma^{-1}).
inline PhiResult run_phi(const HookPermutation& hp, const SquareOrder& order,
                         long long step_cap = kDefaultStepCap) {
    Configuration cfg = embed_hook_permutation(hp, order);
    PhiResult out;
    if (run_walk(cfg, &out.trace, step_cap) != RunEnd::Forward)
        throw std::logic_error("run_phi walked back to the permutation side");
    out.p = read_right_chain(cfg);
    out.q = read_top_chain(cfg);
    return out;
}

using TableauPair = std::pair<RibbonTableau, RibbonTableau>;

/// Backward walk from a same-shape pair: lands on the hook permutation it
/// came from, or (for pairs outside the image) on the sign-reversed partner
/// pair under the T-involution.
inline std::variant<HookPermutation, TableauPair> run_phi_inverse(const RibbonTableau& p,
                                                                  const RibbonTableau& q,
                                                                  const SquareOrder& order,
                                                                  long long step_cap = kDefaultStepCap,
                                                                  std::vector<StepRecord>* trace = nullptr) {
    Configuration cfg = initial_configuration(order);
    embed_tableau_pair(cfg, p, q);
    if (run_walk(cfg, trace, step_cap) == RunEnd::Backward) return read_hook_permutation(cfg);
    return TableauPair{read_right_chain(cfg), read_top_chain(cfg)};
}

/// Half-grid forward walk from a hook involution: a ribbon tableau on the
/// fixed set, or the sign-reversed matched involution otherwise.
inline std::variant<RibbonTableau, HookInvolution> run_involution(const HookInvolution& inv,
                                                                  const SquareOrder& half_order,
                                                                  long long step_cap = kDefaultStepCap,
                                                                  std::vector<StepRecord>* trace = nullptr) {
    Configuration cfg = embed_hook_involution(inv, half_order);
    if (run_walk(cfg, trace, step_cap) == RunEnd::Forward) return read_right_chain(cfg);
    return HookInvolution(read_hook_permutation(cfg));
}

/// Half-grid backward walk from a ribbon tableau: the hook involution it
/// corresponds to, or the matched tableau outside the image.
inline std::variant<HookInvolution, RibbonTableau> run_involution_inverse(
    const RibbonTableau& t, const SquareOrder& half_order, long long step_cap = kDefaultStepCap,
    std::vector<StepRecord>* trace = nullptr) {
    if (half_order.kind() != SquareOrder::Kind::Half)
        throw std::invalid_argument("half grid order required");
    Configuration cfg = initial_configuration(half_order);
    embed_tableau_pair(cfg, t, t);
    if (run_walk(cfg, trace, step_cap) == RunEnd::Backward)
        return HookInvolution(read_hook_permutation(cfg));
    return read_right_chain(cfg);
}

/// Inside-region column heights implied by the cursor.
inline std::vector<int> inside_heights(const Configuration& cfg) {
    const GridRegion& g = cfg.order->region();
    std::vector<int> h(static_cast<std::size_t>(g.width()), 0);
    const int count = cfg.inside_count();
    const auto& steps = cfg.order->steps();
    for (int t = 0; t < count; ++t)
        for (const Square& sq : steps[static_cast<std::size_t>(t)])
            h[static_cast<std::size_t>(sq.first - 1)] =
                std::max(h[static_cast<std::size_t>(sq.first - 1)], sq.second);
    return h;
}

/// Border path of the current inside region, from (0, top) to (width, 0).
inline std::vector<Vertex> border_path(const Configuration& cfg) {
    const GridRegion& g = cfg.order->region();
    const std::vector<int> h = inside_heights(cfg);
    std::vector<Vertex> out;
    int y = g.top;
    out.push_back({0, y});
    auto col_h = [&](int i) { return i <= g.width() ? h[static_cast<std::size_t>(i - 1)] : 0; };
    while (y > col_h(1)) out.push_back({0, --y});
    for (int i = 1; i <= g.width(); ++i) {
        out.push_back({i, y});
        while (y > col_h(i + 1)) out.push_back({i, --y});
    }
    return out;
}

/// All violated configuration invariants, empty when the configuration is
/// valid: the border is labeled by a good labeling, inside squares are
/// uncolored, and every empty border edge sees exactly one hook in its
/// column (horizontal) or row (vertical) while nonempty edges see none.
inline std::vector<std::string> validate_configuration(const Configuration& cfg) {
    std::vector<std::string> bad;
    const std::vector<int> h = inside_heights(cfg);
    for (std::size_t i = 1; i < h.size(); ++i)
        if (h[i] > h[i - 1]) bad.push_back("inside region is not closed under the product order");

    const std::vector<Vertex> path = border_path(cfg);
    // labels live exactly on the border
    for (const Vertex& v : path)
        if (!cfg.labels.count(v))
            bad.push_back("missing label at (" + std::to_string(v.first) + "," + std::to_string(v.second) + ")");
    if (cfg.labels.size() != path.size()) bad.push_back("labels off the border");
    if (!bad.empty()) return bad;

    if (!cfg.labels.at(path.front()).empty() || !cfg.labels.at(path.back()).empty())
        bad.push_back("extreme border vertices must be labeled by the empty partition");

    for (std::size_t t = 0; t + 1 < path.size(); ++t) {
        const Vertex a = path[t], b = path[t + 1];
        const bool horizontal = a.second == b.second;
        const Partition& small = horizontal ? cfg.labels.at(a) : cfg.labels.at(b);
        const Partition& big = horizontal ? cfg.labels.at(b) : cfg.labels.at(a);
        const bool empty_edge = small == big;
        if (!empty_edge && !is_ribbon_step(small, big)) {
            bad.push_back("border edge does not span a ribbon");
            continue;
        }
        int hooks_seen = 0;
        if (horizontal) {
            const int col = b.first;
            for (const auto& [sq, hk] : cfg.coloring)
                if (sq.first == col && sq.second > a.second) ++hooks_seen;
        } else {
            const int row = a.second;
            for (const auto& [sq, hk] : cfg.coloring)
                if (sq.second == row && sq.first > a.first) ++hooks_seen;
        }
        if (empty_edge && hooks_seen != 1)
            bad.push_back("empty border edge must see exactly one hook (saw " + std::to_string(hooks_seen) + ")");
        if (!empty_edge && hooks_seen != 0)
            bad.push_back("nonempty border edge must see no hooks");
    }

    for (const auto& [sq, hk] : cfg.coloring)
        if (sq.second <= h[static_cast<std::size_t>(sq.first - 1)]) bad.push_back("colored square inside the border");
    return bad;
}

/// Content (c, c') of a configuration on a full square grid: per column the
/// hook size or the size of the ribbon on that column's horizontal border
/// edge, and the row analogue.
inline std::pair<Composition, Composition> configuration_content(const Configuration& cfg) {
    const GridRegion& g = cfg.order->region();
    const std::vector<Vertex> path = border_path(cfg);
    Composition c, cp;
    c.parts.assign(static_cast<std::size_t>(g.width()), 0);
    cp.parts.assign(static_cast<std::size_t>(g.top), 0);
    for (std::size_t t = 0; t + 1 < path.size(); ++t) {
        const Vertex a = path[t], b = path[t + 1];
        if (a.second == b.second)
            c.parts[static_cast<std::size_t>(b.first - 1)] =
                cfg.labels.at(b).size() - cfg.labels.at(a).size();
        else
            cp.parts[static_cast<std::size_t>(a.second - 1)] =
                cfg.labels.at(a).size() - cfg.labels.at(b).size();
    }
    for (const auto& [sq, hk] : cfg.coloring) {
        c.parts[static_cast<std::size_t>(sq.first - 1)] += hk.size;
        if (sq.second <= static_cast<int>(cp.parts.size()))
            cp.parts[static_cast<std::size_t>(sq.second - 1)] += hk.size;
    }
    return {c, cp};
}

/// Sign of a configuration: product of the signs of all border-edge ribbons.
inline int configuration_sign(const Configuration& cfg) {
    const std::vector<Vertex> path = border_path(cfg);
    int sign = 1;
    for (std::size_t t = 0; t + 1 < path.size(); ++t) {
        const Vertex a = path[t], b = path[t + 1];
        const bool horizontal = a.second == b.second;
        const Partition& small = horizontal ? cfg.labels.at(a) : cfg.labels.at(b);
        const Partition& big = horizontal ? cfg.labels.at(b) : cfg.labels.at(a);
        sign *= skew_ribbon_sign(small, big);
    }
    return sign;
}

/// Sign of the half configuration carried by a symmetric configuration:
/// border ribbons weakly below the diagonal times the diagonal hooks.
inline int half_configuration_sign(const Configuration& cfg) {
    const std::vector<Vertex> path = border_path(cfg);
    int sign = 1;
    bool below = false;  // past the unique diagonal vertex
    for (std::size_t t = 0; t + 1 < path.size(); ++t) {
        if (path[t].first == path[t].second) below = true;
        if (!below) continue;
        const Vertex a = path[t], b = path[t + 1];
        const bool horizontal = a.second == b.second;
        const Partition& small = horizontal ? cfg.labels.at(a) : cfg.labels.at(b);
        const Partition& big = horizontal ? cfg.labels.at(b) : cfg.labels.at(a);
        sign *= skew_ribbon_sign(small, big);
    }
    for (const auto& [sq, hk] : cfg.coloring)
        if (sq.first == sq.second) sign *= hk.sign();
    return sign;
}

}  // namespace ribbonweave
