#pragma once

// The complete local-rule system on a square: direct rules D1-D6 with the
// in-place rewrite S, inverse rules I1-I6 with T, plus the local signed
// bijections they induce between the down-set and up-set of a pair of
// partitions.
//
// A square carries mu (top left), nu (bottom right), and either a bottom
// left lambda (direct input, with an optional hook when lambda = mu = nu)
// or a top right xi (inverse input).  Rules D1-D6 and I1-I6 preserve the
// product of the two boundary ribbon signs; S and T reverse it.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "partition.hpp"
#include "ribbon_ops.hpp"

namespace ribbonweave {

enum class Rule { D1, D2, D3, D4, D5, D6, S, I1, I2, I3, I4, I5, I6, T };

inline const char* rule_name(Rule r) {
    switch (r) {
        case Rule::D1: return "D1";
        case Rule::D2: return "D2";
        case Rule::D3: return "D3";
        case Rule::D4: return "D4";
        case Rule::D5: return "D5";
        case Rule::D6: return "D6";
        case Rule::S: return "S";
        case Rule::I1: return "I1";
        case Rule::I2: return "I2";
        case Rule::I3: return "I3";
        case Rule::I4: return "I4";
        case Rule::I5: return "I5";
        case Rule::I6: return "I6";
        case Rule::T: return "T";
    }
    return "?";
}

inline bool is_switch_rule(Rule r) { return r == Rule::S || r == Rule::T; }

struct RuleOutcome {
    Rule rule;
    Partition result;              // xi for D-rules, lambda for I-rules, the
                                   // rewritten corner for S and T
    std::optional<Hook> hook_out;  // only for I2
    bool switched = false;         // true exactly for S and T
};

struct SquareIn {
    Partition mu;                         // top left
    Partition nu;                         // bottom right
    std::optional<Partition> bottom_left; // lambda (direct input)
    std::optional<Hook> hook;             // interior hook, direct input only
    std::optional<Partition> top_right;   // xi (inverse input)

    static SquareIn direct(Partition mu, Partition nu, Partition lambda,
                           std::optional<Hook> hook = std::nullopt) {
        return SquareIn{std::move(mu), std::move(nu), std::move(lambda), hook, std::nullopt};
    }
    static SquareIn inverse(Partition mu, Partition nu, Partition xi) {
        return SquareIn{std::move(mu), std::move(nu), std::nullopt, std::nullopt, std::move(xi)};
    }
};

namespace detail {
/// The step big/small as a small-addable ribbon; throws unless it is one.
inline Ribbon addable_step(const Partition& small, const Partition& big, const char* what) {
    auto iv = ribbon_interval(small, big);
    if (!iv || small == big) throw std::invalid_argument(std::string(what) + ": step is not a nonempty ribbon");
    return Ribbon(small, iv->first, iv->second, RibbonKind::Addable);
}
/// The step big/small as a big-removable ribbon.
inline Ribbon removable_step(const Partition& small, const Partition& big, const char* what) {
    auto iv = ribbon_interval(small, big);
    if (!iv || small == big) throw std::invalid_argument(std::string(what) + ": step is not a nonempty ribbon");
    return Ribbon(big, iv->first, iv->second, RibbonKind::Removable);
}
}  // namespace detail

/// Apply the direct rule determined by (lambda, C, mu, nu).  For D1-D6 the
/// result is the top-right xi; for S it is the rewritten bottom-left.
inline RuleOutcome apply_direct(const SquareIn& sq) {
    if (!sq.bottom_left || sq.top_right)
        throw std::invalid_argument("apply_direct: needs bottom_left and no top_right");
    const Partition& mu = sq.mu;
    const Partition& nu = sq.nu;
    const Partition& lam = *sq.bottom_left;
    if (sq.hook && !(lam == mu && mu == nu))
        throw std::invalid_argument("apply_direct: hook allowed only when lambda = mu = nu");

    if (lam == mu && mu == nu) {
        if (!sq.hook) return {Rule::D1, lam, std::nullopt, false};
        const Ribbon r = first(lam, *sq.hook);
        return {Rule::D2, apply_ribbon(lam, r), std::nullopt, false};
    }
    if (mu == nu) {  // lambda != mu = nu
        const Ribbon down = detail::removable_step(lam, mu, "apply_direct(D3)");
        const Ribbon up = next(mu, down);
        return {Rule::D3, apply_ribbon(mu, up), std::nullopt, false};
    }
    if (lam == mu) {
        if (!ribbon_interval(lam, nu)) throw std::invalid_argument("apply_direct(D4): nu/lambda not a ribbon");
        return {Rule::D4, nu, std::nullopt, false};
    }
    if (lam == nu) {
        if (!ribbon_interval(lam, mu)) throw std::invalid_argument("apply_direct(D4): mu/lambda not a ribbon");
        return {Rule::D4, mu, std::nullopt, false};
    }
    // all three distinct: both steps are nonempty lambda-addable ribbons
    const Ribbon r = detail::addable_step(lam, mu, "apply_direct(D5/D6)");
    const Ribbon r2 = detail::addable_step(lam, nu, "apply_direct(D5/D6)");
    if (r.lo != r2.lo && r.hi != r2.hi)
        return {Rule::D5, bumpout(lam, r, r2), std::nullopt, false};
    const SlideOrSwitch ss = slide_or_switch_out(lam, r, r2);
    if (ss.tag == SlideTag::Slide) return {Rule::D6, ss.value, std::nullopt, false};
    return {Rule::S, ss.value, std::nullopt, true};
}

/// Apply the inverse rule determined by (mu, nu, xi).  For I1-I6 the result
/// is the bottom-left lambda (I2 also emits the hook); for T it is the
/// rewritten top-right.
inline RuleOutcome apply_inverse(const SquareIn& sq) {
    if (!sq.top_right || sq.bottom_left || sq.hook)
        throw std::invalid_argument("apply_inverse: needs top_right only");
    const Partition& mu = sq.mu;
    const Partition& nu = sq.nu;
    const Partition& xi = *sq.top_right;

    if (xi == mu && mu == nu) return {Rule::I1, xi, std::nullopt, false};
    if (mu == nu) {  // xi != mu = nu
        const Ribbon up = detail::addable_step(mu, xi, "apply_inverse(I2/I3)");
        const std::optional<Ribbon> p = prev(mu, up);
        if (!p) return {Rule::I2, mu, Hook(up.size(), up.height()), false};
        return {Rule::I3, apply_ribbon(mu, *p), std::nullopt, false};
    }
    if (xi == mu) {
        if (!ribbon_interval(nu, xi)) throw std::invalid_argument("apply_inverse(I4): xi/nu not a ribbon");
        return {Rule::I4, nu, std::nullopt, false};
    }
    if (xi == nu) {
        if (!ribbon_interval(mu, xi)) throw std::invalid_argument("apply_inverse(I4): xi/mu not a ribbon");
        return {Rule::I4, mu, std::nullopt, false};
    }
    const Ribbon r = detail::removable_step(mu, xi, "apply_inverse(I5/I6)");
    const Ribbon r2 = detail::removable_step(nu, xi, "apply_inverse(I5/I6)");
    if (r.lo != r2.lo && r.hi != r2.hi)
        return {Rule::I5, bumpin(xi, r, r2), std::nullopt, false};
    const SlideOrSwitch ss = slide_or_switch_in(xi, r, r2);
    if (ss.tag == SlideTag::Slide) return {Rule::I6, ss.value, std::nullopt, false};
    return {Rule::T, ss.value, std::nullopt, true};
}

/// Elements of the down-set D_i(mu, nu): partitions lambda of size
/// min(|mu|,|nu|) - i with mu/lambda and nu/lambda (possibly empty) ribbons.
inline std::vector<Partition> down_set(const Partition& mu, const Partition& nu, int i) {
    if (i < 0) throw std::invalid_argument("down_set: i >= 0");
    const int target = std::min(mu.size(), nu.size()) - i;
    std::vector<Partition> out;
    if (target < 0) return out;
    auto below_nu = [&](const Partition& lam) {
        return lam == nu || ribbon_interval(lam, nu).has_value();
    };
    if (mu.size() == target && below_nu(mu)) out.push_back(mu);
    const int drop = mu.size() - target;
    if (drop >= 1)
        for (const Ribbon& r : removable_ribbons(mu, drop)) {
            const Partition lam = apply_ribbon(mu, r);
            if (below_nu(lam)) out.push_back(lam);
        }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// Elements of the up-set U_i(mu, nu): partitions xi of size
/// max(|mu|,|nu|) + i with xi/mu and xi/nu (possibly empty) ribbons.
inline std::vector<Partition> up_set(const Partition& mu, const Partition& nu, int i) {
    if (i < 0) throw std::invalid_argument("up_set: i >= 0");
    const int target = std::max(mu.size(), nu.size()) + i;
    std::vector<Partition> out;
    auto above_nu = [&](const Partition& xi) {
        return xi == nu || ribbon_interval(nu, xi).has_value();
    };
    if (mu.size() == target && above_nu(mu)) out.push_back(mu);
    const int grow = target - mu.size();
    if (grow >= 1)
        for (const Ribbon& r : addable_ribbons(mu, grow)) {
            const Partition xi = apply_ribbon(mu, r);
            if (above_nu(xi)) out.push_back(xi);
        }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// Sign of lambda as an element of D_i(mu, nu).
inline int down_sign(const Partition& mu, const Partition& nu, const Partition& lam) {
    return skew_ribbon_sign(lam, mu) * skew_ribbon_sign(lam, nu);
}
/// Sign of xi as an element of U_i(mu, nu).
inline int up_sign(const Partition& mu, const Partition& nu, const Partition& xi) {
    return skew_ribbon_sign(mu, xi) * skew_ribbon_sign(nu, xi);
}

/// The diagonal bijection between U_i(mu,mu) and D_i(mu,mu) + heights
/// [0, i-1], realized by rules I2/I3 (and inverted by D2/D3).  Heights are
/// preserved, so with sgn(h) = (-1)^h the pairing is sign-preserving.
struct DiagPairing {
    std::vector<std::pair<Partition, Partition>> to_removable;  // xi -> lambda (I3)
    std::vector<std::pair<Partition, int>> to_height;           // xi -> h (I2)
};

inline DiagPairing local_bijection_diag(const Partition& mu, int i) {
    if (i < 1) throw std::invalid_argument("local_bijection_diag: i >= 1");
    DiagPairing out;
    for (const Ribbon& r : addable_ribbons(mu, i)) {
        const Partition xi = apply_ribbon(mu, r);
        const RuleOutcome o = apply_inverse(SquareIn::inverse(mu, mu, xi));
        if (o.rule == Rule::I2)
            out.to_height.emplace_back(xi, o.hook_out->height);
        else
            out.to_removable.emplace_back(xi, o.result);
    }
    return out;
}

/// The off-diagonal signed bijection between D_i(mu,nu) and U_i(mu,nu):
/// S and T act as sign-reversing involutions off their fixed sets, and the
/// direct rules D4/D5/D6 map the fixed sets sign-preservingly.
struct OffdiagPairing {
    std::vector<std::pair<Partition, Partition>> s_pairs;    // lambda <-> switched lambda
    std::vector<std::pair<Partition, Partition>> t_pairs;    // xi <-> switched xi
    std::vector<std::pair<Partition, Partition>> fixed_map;  // lambda -> xi
};

inline OffdiagPairing local_bijection_offdiag(const Partition& mu, const Partition& nu, int i) {
    if (mu == nu) throw std::invalid_argument("local_bijection_offdiag: mu != nu required");
    OffdiagPairing out;
    for (const Partition& lam : down_set(mu, nu, i)) {
        const RuleOutcome o = apply_direct(SquareIn::direct(mu, nu, lam));
        if (o.rule == Rule::S) {
            if (lam < o.result) out.s_pairs.emplace_back(lam, o.result);
        } else {
            out.fixed_map.emplace_back(lam, o.result);
        }
    }
    for (const Partition& xi : up_set(mu, nu, i)) {
        const RuleOutcome o = apply_inverse(SquareIn::inverse(mu, nu, xi));
        if (o.rule == Rule::T && xi < o.result) out.t_pairs.emplace_back(xi, o.result);
    }
    return out;
}

}  // namespace ribbonweave
