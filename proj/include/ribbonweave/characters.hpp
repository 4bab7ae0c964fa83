#pragma once

// Symmetric-group character values by rim-hook peeling, the column sums of
// the character table through four independent routes, canonical cycle
// forms, and the bijection from special hook involutions to square roots.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "partition.hpp"
#include "tableaux.hpp"

namespace ribbonweave {

using BigInt = boost::multiprecision::cpp_int;

/// Character value chi^shape_mu as the signed count of ribbon tableaux of
/// that shape and content, computed by recursive rim-hook peeling with
/// memoization; enumerate_tableaux stays available as the slow oracle.
inline BigInt mn_character(const Partition& shape, const Composition& mu) {
    if (mu.size() != shape.size()) throw std::invalid_argument("mn_character: size mismatch");
    std::map<std::pair<std::vector<int>, int>, BigInt> memo;
    auto rec = [&](auto&& self, const Partition& cur, int steps) -> BigInt {
        if (steps == 0) return cur.empty() ? 1 : 0;
        const auto key = std::make_pair(cur.parts(), steps);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        BigInt total = 0;
        const int want = mu.parts[static_cast<std::size_t>(steps - 1)];
        if (cur.size() >= want)
            for (const Ribbon& r : removable_ribbons(cur, want))
                total += BigInt(r.sign()) * self(self, apply_ribbon(cur, r), steps - 1);
        memo.emplace(key, total);
        return total;
    };
    return rec(rec, shape, mu.length());
}

/// Double factorial (2k-1)!! with (-1)!! = 1.
inline BigInt odd_double_factorial(int m) {
    if (m < -1 || m % 2 == 0) throw std::invalid_argument("odd_double_factorial: odd argument >= -1");
    BigInt out = 1;
    for (int v = m; v >= 1; v -= 2) out *= v;
    return out;
}

inline BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt out = 1;
    for (int t = 1; t <= k; ++t) {
        out *= n - k + t;
        out /= t;
    }
    return out;
}

inline BigInt factorial(int n) {
    BigInt out = 1;
    for (int t = 2; t <= n; ++t) out *= t;
    return out;
}

/// The closed-form coefficient for part size i with multiplicity m:
/// 0 when i is even and m odd; (m-1)!! i^{m/2} when both even;
/// sum_k C(m, m-2k) (2k-1)!! i^k when i is odd.
inline BigInt c_coeff(int i, int m) {
    if (i < 1 || m < 0) throw std::invalid_argument("c_coeff: i >= 1, m >= 0");
    if (i % 2 == 0) {
        if (m % 2 == 1) return 0;
        return odd_double_factorial(m - 1) * boost::multiprecision::pow(BigInt(i), static_cast<unsigned>(m / 2));
    }
    BigInt total = 0;
    for (int k = 0; 2 * k <= m; ++k)
        total += binomial(m, m - 2 * k) * odd_double_factorial(2 * k - 1) *
                 boost::multiprecision::pow(BigInt(i), static_cast<unsigned>(k));
    return total;
}

/// Multiplicity map i -> m_i of a partition.
inline std::map<int, int> multiplicities(const Partition& mu) {
    std::map<int, int> m;
    for (int p : mu.parts()) ++m[p];
    return m;
}

/// Canonical cycle decomposition: cycles grouped by length ascending, each
/// cycle written from its minimum, groups ordered by minimum.
struct CycleForm {
    std::vector<std::vector<int>> cycles;  // each starts at its min

    std::string to_string() const {
        std::ostringstream out;
        std::size_t k = 0;
        while (k < cycles.size()) {
            const std::size_t len = cycles[k].size();
            out << '[';
            while (k < cycles.size() && cycles[k].size() == len) {
                out << '(';
                for (std::size_t t = 0; t < cycles[k].size(); ++t) {
                    if (t) out << ' ';
                    out << cycles[k][t];
                }
                out << ')';
                ++k;
            }
            out << ']';
        }
        return out.str();
    }
};

/// One-line permutation utilities; perm[i-1] = image of i.
inline void check_permutation(const std::vector<int>& perm) {
    std::vector<int> seen(perm.size(), 0);
    for (int v : perm)
        if (v < 1 || v > static_cast<int>(perm.size()) || seen[static_cast<std::size_t>(v - 1)]++)
            throw std::invalid_argument("not a permutation");
}

inline std::vector<int> parse_one_line(const std::string& text) {
    std::vector<int> perm;
    std::istringstream in(text);
    int v;
    while (in >> v) perm.push_back(v);
    check_permutation(perm);
    return perm;
}

inline CycleForm canonical_cycle_form(const std::vector<int>& perm) {
    check_permutation(perm);
    const int n = static_cast<int>(perm.size());
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<int>> cycles;
    for (int start = 1; start <= n; ++start) {
        if (used[static_cast<std::size_t>(start - 1)]) continue;
        std::vector<int> cyc;
        int x = start;
        do {
            used[static_cast<std::size_t>(x - 1)] = 1;
            cyc.push_back(x);
            x = perm[static_cast<std::size_t>(x - 1)];
        } while (x != start);
        cycles.push_back(std::move(cyc));
    }
    std::stable_sort(cycles.begin(), cycles.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.front() < b.front();
    });
    return CycleForm{std::move(cycles)};
}

inline Partition cycle_type(const std::vector<int>& perm) {
    std::vector<int> lens;
    for (const auto& c : canonical_cycle_form(perm).cycles) lens.push_back(static_cast<int>(c.size()));
    std::sort(lens.rbegin(), lens.rend());
    return Partition(std::move(lens));
}

/// The class representative whose canonical cycle form fills consecutive
/// integers, smallest cycle lengths first.
inline std::vector<int> canonical_permutation(const Partition& mu) {
    std::vector<int> lens = mu.parts();
    std::sort(lens.begin(), lens.end());
    std::vector<int> perm(static_cast<std::size_t>(mu.size()));
    int base = 1;
    for (int len : lens) {
        for (int t = 0; t < len; ++t)
            perm[static_cast<std::size_t>(base + t - 1)] = base + (t + 1) % len;
        base += len;
    }
    return perm;
}

/// The j-th cycle of length 2m squaring to the product of two disjoint
/// m-cycles: interleave c1 with c2 shifted by j.
inline std::vector<int> root_of_pair(const std::vector<int>& c1, const std::vector<int>& c2, int j) {
    const std::size_t m = c1.size();
    if (c2.size() != m || m == 0) throw std::invalid_argument("root_of_pair: cycles of equal length");
    if (j < 0 || j >= static_cast<int>(m)) throw std::invalid_argument("root_of_pair: j in [0, m-1]");
    std::vector<int> word;
    for (std::size_t t = 0; t < m; ++t) {
        word.push_back(c1[t]);
        word.push_back(c2[(static_cast<std::size_t>(j) + t) % m]);
    }
    return word;
}

/// The unique cycle of odd length m squaring to c1: advance by (m+1)/2.
inline std::vector<int> root_of_odd(const std::vector<int>& c1) {
    const int m = static_cast<int>(c1.size());
    if (m % 2 == 0) throw std::invalid_argument("root_of_odd: odd length required");
    std::vector<int> word;
    int pos = 0;
    for (int t = 0; t < m; ++t) {
        word.push_back(c1[static_cast<std::size_t>(pos)]);
        pos = (pos + (m + 1) / 2) % m;
    }
    return word;
}

/// Compose a set of disjoint cycle words into a one-line permutation of [n].
inline std::vector<int> cycles_to_permutation(const std::vector<std::vector<int>>& cycles, int n) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    for (const auto& c : cycles)
        for (std::size_t t = 0; t < c.size(); ++t)
            perm[static_cast<std::size_t>(c[t] - 1)] = c[(t + 1) % c.size()];
    check_permutation(perm);
    return perm;
}

inline std::vector<int> compose(const std::vector<int>& a, const std::vector<int>& b) {
    // (a after b): x -> a[b[x]]
    std::vector<int> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[static_cast<std::size_t>(b[i] - 1)];
    return out;
}

/// The square root of the canonical permutation of type mu attached to a
/// special hook involution whose content lists the parts of mu ascending:
/// fixed points map to odd-cycle roots, transpositions with hook height h
/// to the h-th interleaving root.
inline std::vector<int> hi_to_root(const HookInvolution& inv, const Partition& mu) {
    if (!is_special(inv)) throw std::invalid_argument("hi_to_root: involution must be special");
    std::vector<int> asc = mu.parts();
    std::sort(asc.begin(), asc.end());
    if (inv.content().parts != asc)
        throw std::invalid_argument("hi_to_root: content must list the parts of mu ascending");

    // cycles of the canonical permutation, grouped exactly like asc
    std::vector<std::vector<int>> canon;
    int base = 1;
    for (int len : asc) {
        std::vector<int> cyc(static_cast<std::size_t>(len));
        std::iota(cyc.begin(), cyc.end(), base);
        canon.push_back(std::move(cyc));
        base += len;
    }

    std::vector<std::vector<int>> parts_of_root;
    const auto& sigma = inv.hp.sigma;
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        const int j = sigma[i];
        if (j == static_cast<int>(i) + 1)
            parts_of_root.push_back(root_of_odd(canon[i]));
        else if (j > static_cast<int>(i) + 1)
            parts_of_root.push_back(
                root_of_pair(canon[i], canon[static_cast<std::size_t>(j - 1)], inv.hp.hooks[i].height));
    }
    return cycles_to_permutation(parts_of_root, mu.size());
}

/// Exhaustive square-root census; guarded by an oracle bound because it
/// walks all of S_n.
inline BigInt count_square_roots(const std::vector<int>& perm, int oracle_bound = 8) {
    const int n = static_cast<int>(perm.size());
    if (n > oracle_bound) throw std::invalid_argument("count_square_roots: beyond oracle bound");
    std::vector<int> tau(static_cast<std::size_t>(n));
    std::iota(tau.begin(), tau.end(), 1);
    BigInt count = 0;
    do {
        if (compose(tau, tau) == perm) ++count;
    } while (std::next_permutation(tau.begin(), tau.end()));
    return count;
}

enum class ColumnSumMethod { Formula, Tableaux, Roots, Spec };

/// The column sum C(mu) = sum over shapes of chi^shape_mu, via the closed
/// formula, the tableau route, the square-root census, or the special hook
/// involution count.  All four agree.
inline BigInt column_sum(const Partition& mu, ColumnSumMethod method = ColumnSumMethod::Formula) {
    switch (method) {
        case ColumnSumMethod::Formula: {
            BigInt out = 1;
            for (auto [i, m] : multiplicities(mu)) out *= c_coeff(i, m);
            return out;
        }
        case ColumnSumMethod::Tableaux: {
            BigInt out = 0;
            Composition content{std::vector<int>(mu.parts())};
            for (const Partition& shape : all_partitions(mu.size())) out += mn_character(shape, content);
            return out;
        }
        case ColumnSumMethod::Roots:
            return count_square_roots(canonical_permutation(mu));
        case ColumnSumMethod::Spec: {
            std::vector<int> asc = mu.parts();
            std::sort(asc.begin(), asc.end());
            BigInt out = 0;
            for (const HookInvolution& inv : enumerate_hook_involutions(Composition{std::move(asc)}))
                if (is_special(inv)) ++out;
            return out;
        }
    }
    throw std::logic_error("unreachable");
}

/// All partitions of n whose column sum equals k (by the closed formula).
inline std::vector<Partition> classify_column_sum(int n, const BigInt& k) {
    std::vector<Partition> out;
    for (const Partition& mu : all_partitions(n))
        if (column_sum(mu, ColumnSumMethod::Formula) == k) out.push_back(mu);
    return out;
}

/// Odd and distinct parts.
inline bool is_odd_distinct(const Partition& mu) {
    for (auto [i, m] : multiplicities(mu))
        if (i % 2 == 0 || m > 1) return false;
    return true;
}

/// The small-value characterizations of C(mu) for k in {0, 1, 2, 3, 4},
/// used as an independent cross-check of classify_column_sum.
inline bool column_sum_characterization(int k, const Partition& mu) {
    const auto mult = multiplicities(mu);
    auto m_of = [&](int i) {
        auto it = mult.find(i);
        return it == mult.end() ? 0 : it->second;
    };
    auto strip = [&](std::initializer_list<std::pair<int, int>> deduct) {
        std::vector<int> parts;
        for (auto [i, m] : mult) {
            int keep = m;
            for (auto [di, dm] : deduct)
                if (di == i) keep -= dm;
            if (keep < 0) return std::optional<Partition>{};
            for (int t = 0; t < keep; ++t) parts.push_back(i);
        }
        std::sort(parts.rbegin(), parts.rend());
        return std::optional<Partition>{Partition(parts)};
    };
    switch (k) {
        case 0:
            for (auto [i, m] : mult)
                if (i % 2 == 0 && m % 2 == 1) return true;
            return false;
        case 1:
            return is_odd_distinct(mu);
        case 2: {
            if (m_of(1) == 2) {
                auto rest = strip({{1, 2}});
                if (rest && is_odd_distinct(*rest)) return true;
            }
            if (m_of(2) == 2) {
                auto rest = strip({{2, 2}});
                if (rest && is_odd_distinct(*rest)) return true;
            }
            return false;
        }
        case 3:
            return false;
        case 4: {
            // the four coefficient patterns whose product is 4:
            // c(1,3), c(3,2), c(4,2), and c(1,2)*c(2,2)
            if (m_of(1) == 3) {
                auto rest = strip({{1, 3}});
                if (rest && is_odd_distinct(*rest)) return true;
            }
            if (m_of(3) == 2) {
                auto rest = strip({{3, 2}});
                if (rest && is_odd_distinct(*rest)) return true;
            }
            if (m_of(4) == 2) {
                auto rest = strip({{4, 2}});
                if (rest && is_odd_distinct(*rest)) return true;
            }
            if (m_of(1) == 2 && m_of(2) == 2) {
                auto rest = strip({{1, 2}, {2, 2}});
                if (rest && is_odd_distinct(*rest)) return true;
            }
            return false;
        }
    }
    throw std::invalid_argument("column_sum_characterization: k in [0,4]");
}

/// Size of the conjugacy class of cycle type mu in S_n.
inline BigInt conjugacy_class_size(const Partition& mu) {
    BigInt denom = 1;
    for (auto [i, m] : multiplicities(mu))
        denom *= boost::multiprecision::pow(BigInt(i), static_cast<unsigned>(m)) * factorial(m);
    return factorial(mu.size()) / denom;
}

}  // namespace ribbonweave
