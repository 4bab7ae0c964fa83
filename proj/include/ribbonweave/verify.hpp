#pragma once

// The acceptance checks: each criterion exercises one of the library's
// headline identities at desk scale with pinned bounds, returning a
// pass/fail record.  The CLI verify suites run the same code with
// adjustable bounds.

#include <map>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "characters.hpp"
#include "extensions.hpp"
#include "growth.hpp"
#include "local_rules.hpp"
#include "operators.hpp"
#include "partition.hpp"
#include "ribbon_ops.hpp"
#include "tableaux.hpp"

namespace ribbonweave::verify {

struct Check {
    std::string name;
    bool pass = true;
    std::string detail;

    Check() = default;
    explicit Check(std::string n) : name(std::move(n)) {}
};

struct Bounds {
    int max_size = 8;
    int max_len = 3;
    long long step_cap = kDefaultStepCap;
};

namespace detail {

inline void fail(Check& c, const std::string& msg) {
    c.pass = false;
    if (!c.detail.empty()) c.detail += "; ";
    c.detail += msg;
}

template <class T>
std::string str(const T& v) {
    std::ostringstream out;
    out << v;
    return out.str();
}

/// Signed count of ribbon tableaux of the given shape and length, memoized.
class SignedByLength {
public:
    long long operator()(const Partition& shape, int len) {
        if (len == 0) return shape.empty() ? 1 : 0;
        const auto key = std::make_pair(shape, len);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        long long total = 0;
        for (int s = 1; s + (len - 1) <= shape.size(); ++s)
            for (const Ribbon& r : removable_ribbons(shape, s))
                total += r.sign() * (*this)(apply_ribbon(shape, r), len - 1);
        memo_.emplace(key, total);
        return total;
    }

private:
    std::map<std::pair<Partition, int>, long long> memo_;
};

inline long long count_hook_permutations(int n, int ell) {
    long long fact = 1;
    for (int t = 2; t <= ell; ++t) fact *= t;
    return static_cast<long long>(binomial(n + ell - 1, 2 * ell - 1)) * fact;
}

}  // namespace detail

/// Corollary-level identity: the signed sum over same-shape pairs of
/// length-ell tableaux equals ell! * C(n+ell-1, 2*ell-1).
inline Check criterion_pair_count_by_length(int max_n = 8, int max_ell = 3) {
    Check c{"pair counts by length: sum of eps(P)eps(Q) = ell! C(n+ell-1, 2ell-1)"};
    for (int ell = 1; ell <= max_ell; ++ell)
        for (int n = ell; n <= max_n; ++n) {
            std::map<Partition, long long> by_shape;
            for (const RibbonTableau& t : enumerate_tableaux_by_length(n, ell))
                by_shape[t.shape()] += t.sign();
            long long pairs = 0;
            for (const auto& [shape, s] : by_shape) pairs += s * s;
            const long long expect = detail::count_hook_permutations(n, ell);
            if (pairs != expect)
                detail::fail(c, "n=" + std::to_string(n) + " ell=" + std::to_string(ell) + ": " +
                                    std::to_string(pairs) + " != " + std::to_string(expect));
        }
    return c;
}

/// Content refinement: the signed pair sum over fixed contents mu, nu
/// equals delta_{sorted} * prod i^{j_i} j_i!.
inline Check criterion_pair_count_by_content(int max_n = 6, int max_parts = 3) {
    Check c{"pair counts by content: signed pair sum = delta * prod i^{j_i} j_i!"};
    for (int n = 1; n <= max_n; ++n)
        for (int pa = 1; pa <= std::min(max_parts, n); ++pa)
            for (int pb = 1; pb <= std::min(max_parts, n); ++pb)
                for (const Composition& mu : compositions_exact(n, pa))
                    for (const Composition& nu : compositions_exact(n, pb)) {
                        BigInt pairs = 0;
                        for (const Partition& shape : all_partitions(n))
                            pairs += BigInt(signed_tableau_count(shape, mu)) *
                                     signed_tableau_count(shape, nu);
                        BigInt expect = 0;
                        if (mu.sorted() == nu.sorted()) {
                            expect = 1;
                            for (auto [i, m] : multiplicities(mu.sorted()))
                                expect *= boost::multiprecision::pow(BigInt(i), static_cast<unsigned>(m)) *
                                          factorial(m);
                        }
                        if (pairs != expect)
                            detail::fail(c, "mu=" + mu.to_string() + " nu=" + nu.to_string());
                    }
    return c;
}

/// The forward correspondence is a content-preserving injection inverted by
/// the backward walk, and the leftover same-shape pairs match up
/// sign-reversingly under the T-involution.
inline Check criterion_phi_bijection(int max_n = 6, int max_ell = 3,
                                     long long step_cap = kDefaultStepCap) {
    Check c{"hook permutations <-> same-shape pairs (signed bijection)"};
    for (int ell = 1; ell <= max_ell; ++ell) {
        const SquareOrder order = SquareOrder::default_order(ell, false);
        for (int n = ell; n <= max_n; ++n) {
            std::set<std::pair<std::vector<Partition>, std::vector<Partition>>> image;
            long long hook_perms = 0;
            HookPermutationEnumerator en(n, ell);
            HookPermutation hp;
            while (en.next(hp)) {
                ++hook_perms;
                const PhiResult res = run_phi(hp, order, step_cap);
                if (!(res.p.shape() == res.q.shape())) detail::fail(c, "shape mismatch");
                if (!(res.q.content() == hp.content())) detail::fail(c, "c(Q) != c(H)");
                if (!(res.p.content() == hp.content_through(hp.sigma_inverse())))
                    detail::fail(c, "c(P) != c(H, sigma^-1)");
                if (!image.insert({res.p.chain, res.q.chain}).second) detail::fail(c, "phi not injective");
                const auto back = run_phi_inverse(res.p, res.q, order, step_cap);
                if (!std::holds_alternative<HookPermutation>(back) ||
                    !(std::get<HookPermutation>(back) == hp))
                    detail::fail(c, "phi inverse failed");
                if (!c.pass) return c;
            }
            std::map<Partition, std::vector<RibbonTableau>> by_shape;
            for (const RibbonTableau& t : enumerate_tableaux_by_length(n, ell))
                by_shape[t.shape()].push_back(t);
            long long signed_pairs = 0;
            for (const auto& [shape, ts] : by_shape)
                for (const RibbonTableau& p : ts)
                    for (const RibbonTableau& q : ts) {
                        signed_pairs += p.sign() * q.sign();
                        if (image.count({p.chain, q.chain})) continue;
                        const auto out = run_phi_inverse(p, q, order, step_cap);
                        if (!std::holds_alternative<TableauPair>(out)) {
                            detail::fail(c, "non-image pair walked back to a permutation");
                            return c;
                        }
                        const auto& [p2, q2] = std::get<TableauPair>(out);
                        if (p2.sign() * q2.sign() != -(p.sign() * q.sign()))
                            detail::fail(c, "T-involution does not reverse the sign");
                        const auto again = run_phi_inverse(p2, q2, order, step_cap);
                        if (!std::holds_alternative<TableauPair>(again) ||
                            !(std::get<TableauPair>(again) == TableauPair{p, q}))
                            detail::fail(c, "T-involution is not an involution");
                        if (!c.pass) return c;
                    }
            if (signed_pairs != hook_perms)
                detail::fail(c, "signed pair total != hook permutation count at n=" + std::to_string(n) +
                                    " ell=" + std::to_string(ell));
        }
    }
    return c;
}

/// The half-grid correspondence between hook involutions and single ribbon
/// tableaux: sign-preserving on the matched fixed sets, with all three
/// signed totals equal to the count of special involutions.
inline Check criterion_involution_bijection(int max_n = 6, int max_ell = 3,
                                            long long step_cap = kDefaultStepCap) {
    Check c{"hook involutions <-> ribbon tableaux (signed bijection)"};
    for (int ell = 1; ell <= max_ell; ++ell) {
        const SquareOrder half = SquareOrder::default_order(ell, true);
        for (int n = ell; n <= max_n; ++n) {
            const auto invs = enumerate_hook_involutions_by_size(n, ell);
            const auto tabs = enumerate_tableaux_by_length(n, ell);
            long long inv_signed = 0, tab_signed = 0, specials = 0;
            for (const auto& inv : invs) {
                inv_signed += inv.sign();
                if (is_special(inv)) ++specials;
            }
            for (const auto& t : tabs) tab_signed += t.sign();
            if (inv_signed != specials || tab_signed != specials) {
                detail::fail(c, "signed totals disagree at n=" + std::to_string(n) + " ell=" +
                                    std::to_string(ell));
                continue;
            }
            std::set<std::vector<Partition>> image;
            for (const auto& inv : invs) {
                auto out = run_involution(inv, half, step_cap);
                if (std::holds_alternative<RibbonTableau>(out)) {
                    const RibbonTableau& t = std::get<RibbonTableau>(out);
                    if (t.sign() != inv.sign()) detail::fail(c, "sign not preserved");
                    if (!image.insert(t.chain).second) detail::fail(c, "not injective");
                    auto back = run_involution_inverse(t, half, step_cap);
                    if (!std::holds_alternative<HookInvolution>(back) ||
                        !(std::get<HookInvolution>(back) == inv))
                        detail::fail(c, "inverse walk failed");
                } else {
                    const HookInvolution& other = std::get<HookInvolution>(out);
                    if (other.sign() != -inv.sign()) detail::fail(c, "matched involution sign");
                }
                if (!c.pass) return c;
            }
            for (const auto& t : tabs) {
                if (image.count(t.chain)) continue;
                auto out = run_involution_inverse(t, half, step_cap);
                if (!std::holds_alternative<RibbonTableau>(out) ||
                    std::get<RibbonTableau>(out).sign() != -t.sign()) {
                    detail::fail(c, "unmatched tableau outside the image");
                    return c;
                }
            }
        }
    }
    return c;
}

/// Column sums: the closed formula, the tableau sum, the special-involution
/// count (and, within its bound, the square-root census) all agree; the
/// small-value classifications hold.
inline Check criterion_column_sums(int max_n = 8, int roots_max_n = 7, int classify_max_n = 10) {
    Check c{"column sums: formula = tableaux = special count = root census"};
    for (int n = 1; n <= max_n; ++n)
        for (const Partition& mu : all_partitions(n)) {
            const BigInt f = column_sum(mu, ColumnSumMethod::Formula);
            if (column_sum(mu, ColumnSumMethod::Tableaux) != f)
                detail::fail(c, "tableaux route at mu=" + mu.to_string());
            if (column_sum(mu, ColumnSumMethod::Spec) != f)
                detail::fail(c, "special-involution route at mu=" + mu.to_string());
            if (n <= roots_max_n && column_sum(mu, ColumnSumMethod::Roots) != f)
                detail::fail(c, "square-root census at mu=" + mu.to_string());
            if (!c.pass) return c;
        }
    for (int n = 1; n <= classify_max_n; ++n)
        for (int k = 0; k <= 4; ++k) {
            const auto listed = classify_column_sum(n, k);
            for (const Partition& mu : all_partitions(n)) {
                const bool in_list = std::count(listed.begin(), listed.end(), mu) > 0;
                if (in_list != column_sum_characterization(k, mu)) {
                    detail::fail(c, "classification k=" + std::to_string(k) + " mu=" + mu.to_string());
                    return c;
                }
            }
        }
    return c;
}

/// Operator identities: commutation basis-wise, the parity boundary
/// identity, and the q-series through q^16.
inline Check criterion_operator_identities(int comm_max = 10, int parity_max = 12, int max_ij = 5,
                                           int parity_max_i = 6, int q_degree = 16) {
    Check c{"operator identities: commutation, parity boundary, q-series"};
    for (int i = 1; i <= max_ij; ++i)
        for (int j = 1; j <= max_ij; ++j) {
            const CheckReport r = check_commutation(i, j, comm_max);
            if (!r.ok) detail::fail(c, r.detail);
        }
    for (int n = 0; n <= parity_max; ++n)
        for (const Partition& p : all_partitions(n))
            for (int i = 1; i <= parity_max_i; ++i)
                if (!check_signed_boundary(p, i)) {
                    detail::fail(c, "parity boundary at " + p.to_string() + ", i=" + std::to_string(i));
                    return c;
                }
    for (int ell = 1; ell <= 3; ++ell) {
        const CheckReport r = check_stanley_product(ell, q_degree / 2);
        if (!r.ok) detail::fail(c, r.detail);
        const QPoly series = q_pair_DU(ell, q_degree / 2);
        for (int n = 0; 2 * n <= q_degree; ++n)
            if (series.coef(2 * n) != factorial(ell) * binomial(n + ell - 1, 2 * ell - 1)) {
                detail::fail(c, "vacuum series coefficient at n=" + std::to_string(n));
                return c;
            }
    }
    for (int n = 0; n <= 6; ++n)
        for (const Partition& lam : all_partitions(n)) {
            const CheckReport r = check_q_commutation(lam, q_degree);
            if (!r.ok) {
                detail::fail(c, r.detail);
                return c;
            }
        }
    return c;
}

/// Content rearrangement invariance plus the lozenge sweep as a
/// terminating signed bijection over the same range.
inline Check criterion_content_invariance(int max_n = 7, int max_parts = 4,
                                          long long step_cap = kDefaultStepCap) {
    Check c{"content rearrangement: invariant signed counts, lozenge sweep bijection"};
    for (int n = 1; n <= max_n; ++n)
        for (const Partition& shape : all_partitions(n))
            for (int parts = 1; parts <= std::min(max_parts, n); ++parts)
                for (const Composition& cc : compositions_exact(n, parts)) {
                    std::vector<int> sorted = cc.parts;
                    std::sort(sorted.rbegin(), sorted.rend());
                    if (signed_tableau_count(shape, cc) !=
                        signed_tableau_count(shape, Composition{sorted})) {
                        detail::fail(c, "signed count moved under rearrangement at shape=" +
                                            shape.to_string() + " c=" + cc.to_string());
                        return c;
                    }
                }
    // the sweep realizes the equality as a signed bijection
    for (int n = 2; n <= max_n; ++n)
        for (const Partition& shape : all_partitions(n))
            for (int parts = 2; parts <= std::min(max_parts, n); ++parts)
                for (const Composition& cc : compositions_exact(n, parts)) {
                    const auto dom = enumerate_tableaux(shape, cc);
                    if (dom.empty()) continue;
                    std::vector<int> sigma(static_cast<std::size_t>(parts));
                    std::iota(sigma.begin(), sigma.end(), 1);
                    do {
                        const Composition target = permute_composition(cc, sigma);
                        std::set<std::vector<Partition>> images;
                        std::map<std::vector<Partition>, std::vector<Partition>> matched;
                        for (const RibbonTableau& t : dom) {
                            const PermuteResult res = permute_content(t, sigma, step_cap);
                            if (res.end == PermuteEnd::Converted) {
                                if (!(res.tableau.content() == target) ||
                                    res.tableau.sign() != t.sign() ||
                                    !(res.tableau.shape() == shape) ||
                                    !images.insert(res.tableau.chain).second) {
                                    detail::fail(c, "converted output broken");
                                    return c;
                                }
                                const PermuteResult back = permute_content_inverse(res.tableau, sigma, step_cap);
                                if (back.end != PermuteEnd::Converted || !(back.tableau.chain == t.chain)) {
                                    detail::fail(c, "reverse sweep does not invert");
                                    return c;
                                }
                            } else {
                                if (res.tableau.sign() != -t.sign() ||
                                    !(res.tableau.content() == cc)) {
                                    detail::fail(c, "matched partner broken");
                                    return c;
                                }
                                matched.emplace(t.chain, res.tableau.chain);
                            }
                        }
                        for (const auto& [a, b] : matched)
                            if (!matched.count(b) || !(matched.at(b) == a)) {
                                detail::fail(c, "matching is not an involution");
                                return c;
                            }
                        // unmatched targets pair off on their own side
                        for (const RibbonTableau& t : enumerate_tableaux(shape, target)) {
                            if (images.count(t.chain)) continue;
                            const PermuteResult res = permute_content_inverse(t, sigma, step_cap);
                            if (res.end != PermuteEnd::Matched || res.tableau.sign() != -t.sign()) {
                                detail::fail(c, "target-side matching broken");
                                return c;
                            }
                        }
                    } while (std::next_permutation(sigma.begin(), sigma.end()));
                }
    return c;
}

/// Oscillating signed counts match the pinned closed form, and the
/// staircase correspondence round-trips.
inline Check criterion_oscillating(int max_n = 6, int max_ell = 3,
                                   long long step_cap = kDefaultStepCap) {
    Check c{"oscillating tableaux: signed count formula and matching correspondence"};
    for (int ell = 1; ell <= max_ell; ++ell)
        for (int n = ell; n <= max_n; ++n)
            if (BigInt(signed_count_oscillating_brute(n, ell)) != signed_count_oscillating(n, ell)) {
                detail::fail(c, "count mismatch at n=" + std::to_string(n) + " ell=" + std::to_string(ell));
                return c;
            }
    for (int ell = 1; ell <= 2; ++ell) {
        const SquareOrder order = SquareOrder::staircase(ell);
        for (int n = ell; n <= std::min(max_n, 4); ++n) {
            std::set<std::vector<Partition>> image;
            long long count = 0;
            for (const HookMatching& m : enumerate_hook_matchings(n, ell)) {
                ++count;
                const OscillatingTableau t = oscillating_correspondence(m, order, step_cap);
                if (!image.insert(t.chain).second) {
                    detail::fail(c, "correspondence not injective");
                    return c;
                }
                const auto back = oscillating_correspondence_inverse(t, order, step_cap);
                if (!std::holds_alternative<HookMatching>(back) ||
                    !(std::get<HookMatching>(back) == m)) {
                    detail::fail(c, "correspondence does not round-trip");
                    return c;
                }
            }
            long long osc_signed = 0;
            for (const OscillatingTableau& t : enumerate_oscillating(n, ell)) osc_signed += t.sign();
            if (osc_signed != count) {
                detail::fail(c, "signed total != matching count");
                return c;
            }
        }
    }
    return c;
}

/// Local layer: rule totality, D/I inversion, S/T involutions with the sign
/// law, the local signed bijections, and the interleaving property.
inline Check criterion_local_rules(int max_base = 10, int max_ribbon = 5) {
    Check c{"local rules: totality, inversion, sign laws, interleaving"};
    for (int n = 0; n <= max_base && c.pass; ++n)
        for (const Partition& lam : all_partitions(n)) {
            // interleaving + the diagonal signed deficit
            for (int s = 1; s <= max_ribbon; ++s) {
                std::size_t adds = 0, rems = 0;
                for (int h = 0; h < s; ++h) {
                    const Interleaving iv = interleaved(lam, s, h);
                    if (iv.addables.size() != iv.removables.size() + 1)
                        detail::fail(c, "interleaving count at " + lam.to_string());
                    adds += iv.addables.size();
                    rems += iv.removables.size();
                }
                if (adds != addable_ribbons(lam, s).size() || rems != removable_ribbons(lam, s).size())
                    detail::fail(c, "height classes do not partition the ribbons");
                if (!check_signed_boundary(lam, s)) detail::fail(c, "signed deficit");
            }
            // forward squares built over lam
            std::vector<SquareIn> squares;
            squares.push_back(SquareIn::direct(lam, lam, lam));
            for (int s = 1; s <= max_ribbon; ++s)
                for (int h = 0; h < s; ++h)
                    squares.push_back(SquareIn::direct(lam, lam, lam, Hook(s, h)));
            for (int s1 = 1; s1 <= max_ribbon; ++s1)
                for (const Ribbon& r : addable_ribbons(lam, s1)) {
                    const Partition mu = apply_ribbon(lam, r);
                    squares.push_back(SquareIn::direct(mu, mu, lam));
                    squares.push_back(SquareIn::direct(mu, lam, lam));
                    squares.push_back(SquareIn::direct(lam, mu, lam));
                    for (int s2 = 1; s2 <= max_ribbon; ++s2)
                        for (const Ribbon& r2 : addable_ribbons(lam, s2)) {
                            const Partition nu = apply_ribbon(lam, r2);
                            if (!(nu == mu)) squares.push_back(SquareIn::direct(mu, nu, lam));
                        }
                }
            for (const SquareIn& sq : squares) {
                const int sign_in = down_sign(sq.mu, sq.nu, *sq.bottom_left);
                const RuleOutcome out = apply_direct(sq);
                if (out.rule == Rule::S) {
                    if (down_sign(sq.mu, sq.nu, out.result) != -sign_in)
                        detail::fail(c, "S must reverse the sign");
                    const RuleOutcome again =
                        apply_direct(SquareIn::direct(sq.mu, sq.nu, out.result));
                    if (again.rule != Rule::S || !(again.result == *sq.bottom_left))
                        detail::fail(c, "S is not an involution");
                    continue;
                }
                const int sign_out = up_sign(sq.mu, sq.nu, out.result);
                if (sign_out != sign_in) detail::fail(c, "direct rule changed the sign");
                const RuleOutcome back = apply_inverse(SquareIn::inverse(sq.mu, sq.nu, out.result));
                const bool hook_ok =
                    sq.hook ? (back.hook_out && *back.hook_out == *sq.hook) : !back.hook_out;
                if (!(back.result == *sq.bottom_left) || !hook_ok)
                    detail::fail(c, "inverse rule does not undo the direct rule");
                if (!c.pass) return c;
            }
        }
    return c;
}

/// First orthogonality of the character table, independent of everything
/// the library claims elsewhere.
inline Check criterion_orthogonality(int max_n = 6) {
    Check c{"first orthogonality of the character table"};
    for (int n = 1; n <= max_n; ++n) {
        const auto shapes = all_partitions(n);
        for (const Partition& lam : shapes)
            for (const Partition& nu : shapes) {
                BigInt total = 0;
                for (const Partition& mu : shapes)
                    total += conjugacy_class_size(mu) * mn_character(lam, Composition{mu.parts()}) *
                             mn_character(nu, Composition{mu.parts()});
                if (total != (lam == nu ? factorial(n) : BigInt(0))) {
                    detail::fail(c, "orthogonality at n=" + std::to_string(n));
                    return c;
                }
            }
    }
    return c;
}

/// The ten acceptance criteria at their pinned bounds.
inline std::vector<Check> acceptance() {
    return {
        criterion_pair_count_by_length(8, 3),
        criterion_pair_count_by_content(6, 3),
        criterion_phi_bijection(6, 3),
        criterion_involution_bijection(6, 3),
        criterion_column_sums(8, 7, 10),
        criterion_operator_identities(10, 12, 5, 6, 16),
        criterion_content_invariance(7, 4),
        criterion_oscillating(6, 3),
        criterion_local_rules(10, 5),
        criterion_orthogonality(6),
    };
}

/// Core invariants for the CLI: encode/decode and ribbon-move round trips.
inline Check check_core(const Bounds& b) {
    Check c{"core: edge-sequence round trips and ribbon moves"};
    for (int n = 0; n <= b.max_size; ++n)
        for (const Partition& p : all_partitions(n)) {
            if (!(decode_edges(encode_edges(p)) == p)) {
                detail::fail(c, "round trip at " + p.to_string());
                return c;
            }
            for (int s = 1; s <= std::min(b.max_size, 5); ++s)
                for (const Ribbon& r : addable_ribbons(p, s)) {
                    const Partition q = apply_ribbon(p, r);
                    if (!(apply_ribbon(q, Ribbon(q, r.lo, r.hi, RibbonKind::Removable)) == p)) {
                        detail::fail(c, "ribbon move not reversible");
                        return c;
                    }
                }
        }
    return c;
}

/// Named suites for the CLI.
inline std::vector<Check> suite(const std::string& name, const Bounds& b) {
    if (name == "core") return {check_core(b)};
    if (name == "local") return {criterion_local_rules(b.max_size, 5)};
    if (name == "global")
        return {criterion_pair_count_by_length(std::min(b.max_size, 8), b.max_len),
                criterion_pair_count_by_content(std::min(b.max_size, 6), std::min(b.max_len, 3)),
                criterion_phi_bijection(std::min(b.max_size, 6), b.max_len, b.step_cap),
                criterion_involution_bijection(std::min(b.max_size, 6), b.max_len, b.step_cap)};
    if (name == "characters")
        return {criterion_column_sums(b.max_size, std::min(b.max_size, 7), b.max_size + 2),
                criterion_orthogonality(std::min(b.max_size, 6))};
    if (name == "operators") return {criterion_operator_identities(b.max_size + 2, b.max_size + 4, 5, 6, 16)};
    if (name == "extensions")
        return {criterion_content_invariance(std::min(b.max_size, 7), 4, b.step_cap),
                criterion_oscillating(std::min(b.max_size, 6), b.max_len, b.step_cap)};
    if (name == "control") {
        // negative control: a deliberately wrong expectation that must fail
        Check c{"control: deliberately corrupted identity (must FAIL)"};
        if (column_sum(Partition::parse("2,1")) != 1)
            detail::fail(c, "C((2,1)) is 0, not 1 (corruption detected as intended)");
        return {c};
    }
    throw std::invalid_argument("unknown suite: " + name);
}

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"core", "local", "global", "characters", "operators",
                                                "extensions"};
    return names;
}

}  // namespace ribbonweave::verify
