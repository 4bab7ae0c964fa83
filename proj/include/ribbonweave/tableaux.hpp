#pragma once

// Ribbon tableaux, hook permutations and hook involutions: validation,
// signs, contents, exhaustive enumeration, the hook-sequence/subset
// bijection, and the special-set involution on hook involutions.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include "partition.hpp"

namespace ribbonweave {

/// A chain of partitions from the empty one in which every step is a
/// nonempty ribbon.  Content = step sizes; sign = product of step signs.
struct RibbonTableau {
    std::vector<Partition> chain;  // chain[0] = empty partition

    RibbonTableau() { chain.emplace_back(); }
    explicit RibbonTableau(std::vector<Partition> c) : chain(std::move(c)) {
        if (chain.empty() || !chain.front().empty())
            throw std::invalid_argument("ribbon tableau chain must start at the empty partition");
        for (std::size_t k = 0; k + 1 < chain.size(); ++k)
            if (!is_ribbon_step(chain[k], chain[k + 1]))
                throw std::invalid_argument("ribbon tableau step is not a nonempty ribbon");
    }

    int length() const { return static_cast<int>(chain.size()) - 1; }
    const Partition& shape() const { return chain.back(); }

    Composition content() const {
        Composition c;
        for (std::size_t k = 0; k + 1 < chain.size(); ++k)
            c.parts.push_back(chain[k + 1].size() - chain[k].size());
        return c;
    }

    int sign() const {
        int s = 1;
        for (std::size_t k = 0; k + 1 < chain.size(); ++k) s *= skew_ribbon_sign(chain[k], chain[k + 1]);
        return s;
    }

    auto operator<=>(const RibbonTableau&) const = default;
};

/// An ordered sequence of hooks together with a permutation of [1, ell].
struct HookPermutation {
    std::vector<Hook> hooks;
    std::vector<int> sigma;  // 1-based images: sigma[i-1] = sigma(i)

    HookPermutation() = default;
    HookPermutation(std::vector<Hook> h, std::vector<int> s) : hooks(std::move(h)), sigma(std::move(s)) {
        if (hooks.size() != sigma.size()) throw std::invalid_argument("hook/permutation length mismatch");
        std::vector<int> seen(sigma.size(), 0);
        for (int v : sigma) {
            if (v < 1 || v > static_cast<int>(sigma.size()) || seen[v - 1]++)
                throw std::invalid_argument("sigma is not a permutation");
        }
    }

    int length() const { return static_cast<int>(hooks.size()); }
    int size() const {
        int n = 0;
        for (const Hook& h : hooks) n += h.size;
        return n;
    }

    /// Content c(H): the sizes in hook-list order.
    Composition content() const {
        Composition c;
        for (const Hook& h : hooks) c.parts.push_back(h.size);
        return c;
    }

    /// Content permuted through tau: (|H_tau(1)|, ..., |H_tau(ell)|).
    Composition content_through(const std::vector<int>& tau) const {
        Composition c;
        for (int v : tau) c.parts.push_back(hooks[static_cast<std::size_t>(v - 1)].size);
        return c;
    }

    std::vector<int> sigma_inverse() const {
        std::vector<int> inv(sigma.size());
        for (std::size_t i = 0; i < sigma.size(); ++i) inv[static_cast<std::size_t>(sigma[i] - 1)] = static_cast<int>(i) + 1;
        return inv;
    }

    auto operator<=>(const HookPermutation&) const = default;
};

/// A hook permutation whose array representation is symmetric: sigma is an
/// involution and paired positions carry equal hooks.  Sign = product of
/// fixed-point hook signs.
struct HookInvolution {
    HookPermutation hp;

    HookInvolution() = default;
    explicit HookInvolution(HookPermutation h) : hp(std::move(h)) {
        const auto& s = hp.sigma;
        for (std::size_t i = 0; i < s.size(); ++i) {
            const int j = s[i];
            if (s[static_cast<std::size_t>(j - 1)] != static_cast<int>(i) + 1)
                throw std::invalid_argument("sigma is not an involution");
            if (!(hp.hooks[i] == hp.hooks[static_cast<std::size_t>(j - 1)]))
                throw std::invalid_argument("paired positions must carry equal hooks");
        }
    }

    int length() const { return hp.length(); }
    int size() const { return hp.size(); }
    Composition content() const { return hp.content(); }

    int sign() const {
        int s = 1;
        for (std::size_t i = 0; i < hp.sigma.size(); ++i)
            if (hp.sigma[i] == static_cast<int>(i) + 1) s *= hp.hooks[i].sign();
        return s;
    }

    auto operator<=>(const HookInvolution&) const = default;
};

/// All ribbon tableaux of the given shape and content, in lexicographic
/// chain order, built by peeling ribbons off the final shape.
inline std::vector<RibbonTableau> enumerate_tableaux(const Partition& shape, const Composition& content) {
    if (content.size() != shape.size()) throw std::invalid_argument("content size must match shape size");
    for (int p : content.parts)
        if (p < 1) throw std::invalid_argument("content parts must be positive");
    std::vector<RibbonTableau> out;
    std::vector<Partition> suffix;  // shapes from the top, reversed
    auto rec = [&](auto&& self, const Partition& cur, int step) -> void {
        if (step == 0) {
            if (!cur.empty()) return;
            std::vector<Partition> chain{Partition{}};
            chain.insert(chain.end(), suffix.rbegin(), suffix.rend());
            out.emplace_back(std::move(chain));
            return;
        }
        const int want = content.parts[static_cast<std::size_t>(step - 1)];
        if (cur.size() < want) return;
        for (const Ribbon& r : removable_ribbons(cur, want)) {
            suffix.push_back(cur);
            self(self, apply_ribbon(cur, r), step - 1);
            suffix.pop_back();
        }
    };
    rec(rec, shape, content.length());
    std::sort(out.begin(), out.end());
    return out;
}

/// All ribbon tableaux of total size n with exactly ell steps, over all
/// shapes, in lexicographic chain order.
inline std::vector<RibbonTableau> enumerate_tableaux_by_length(int n, int ell) {
    if (ell < 1 || n < ell) throw std::invalid_argument("need n >= ell >= 1");
    std::vector<RibbonTableau> out;
    std::vector<Partition> chain{Partition{}};
    auto rec = [&](auto&& self, int steps_left) -> void {
        const Partition cur = chain.back();  // copy: push_back reallocates
        if (steps_left == 0) {
            if (cur.size() == n) out.emplace_back(chain);
            return;
        }
        const int budget = n - cur.size() - (steps_left - 1);
        for (int s = 1; s <= budget; ++s)
            for (const Ribbon& r : addable_ribbons(cur, s)) {
                chain.push_back(apply_ribbon(cur, r));
                self(self, steps_left - 1);
                chain.pop_back();
            }
    };
    rec(rec, ell);
    std::sort(out.begin(), out.end());
    return out;
}

/// Signed count of RT(shape, content) summed as +-1 per tableau.
inline long long signed_tableau_count(const Partition& shape, const Composition& content) {
    long long s = 0;
    for (const RibbonTableau& t : enumerate_tableaux(shape, content)) s += t.sign();
    return s;
}

/// The hook-sequence <-> subset bijection: a length-ell sequence of total
/// size n maps to the 2*ell - 1 integers i_1 < ... < i_{2ell-1} in
/// [1, n+ell-1] with i_{2t} = i_{2t-2} + size_t + 1 and
/// i_{2t-1} = i_{2t-2} + height_t + 1.
inline std::set<int> hooks_to_subset(const std::vector<Hook>& hooks) {
    std::set<int> out;
    int even = 0;  // i_{2t-2}
    for (std::size_t t = 0; t < hooks.size(); ++t) {
        const int odd = even + hooks[t].height + 1;
        const int next_even = even + hooks[t].size + 1;
        out.insert(odd);
        if (t + 1 < hooks.size()) out.insert(next_even);
        even = next_even;
    }
    return out;
}

inline std::vector<Hook> subset_to_hooks(const std::set<int>& s, int n, int ell) {
    if (static_cast<int>(s.size()) != 2 * ell - 1) throw std::invalid_argument("subset must have 2*ell-1 elements");
    std::vector<int> idx(s.begin(), s.end());
    if (idx.front() < 1 || idx.back() > n + ell - 1)
        throw std::invalid_argument("subset must lie in [1, n+ell-1]");
    idx.insert(idx.begin(), 0);
    idx.push_back(n + ell);
    std::vector<Hook> hooks;
    for (int t = 1; t <= ell; ++t) {
        const int size = idx[static_cast<std::size_t>(2 * t)] - idx[static_cast<std::size_t>(2 * t - 2)] - 1;
        const int height = idx[static_cast<std::size_t>(2 * t - 1)] - idx[static_cast<std::size_t>(2 * t - 2)] - 1;
        hooks.emplace_back(size, height);
    }
    return hooks;
}

/// Lazy enumerator of hook permutations of total size n and length ell, in
/// lexicographic (sigma, hook subset) order.  Single consumer.
class HookPermutationEnumerator {
public:
    HookPermutationEnumerator(int n, int ell) : n_(n), ell_(ell) {
        if (ell < 1 || n < ell) throw std::invalid_argument("need n >= ell >= 1");
        sigma_.resize(static_cast<std::size_t>(ell));
        std::iota(sigma_.begin(), sigma_.end(), 1);
        subset_.resize(static_cast<std::size_t>(2 * ell - 1));
        std::iota(subset_.begin(), subset_.end(), 1);
        fresh_ = true;
    }

    bool next(HookPermutation& out) {
        if (!fresh_ && !advance()) return false;
        fresh_ = false;
        out = HookPermutation(subset_to_hooks(std::set<int>(subset_.begin(), subset_.end()), n_, ell_), sigma_);
        return true;
    }

    std::vector<HookPermutation> collect() {
        std::vector<HookPermutation> all;
        HookPermutation hp;
        while (next(hp)) all.push_back(hp);
        return all;
    }

private:
    bool advance() {
        // next subset in lex order, then next sigma when subsets wrap
        const int m = n_ + ell_ - 1, k = 2 * ell_ - 1;
        int i = k - 1;
        while (i >= 0 && subset_[static_cast<std::size_t>(i)] == m - (k - 1 - i)) --i;
        if (i >= 0) {
            ++subset_[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                subset_[static_cast<std::size_t>(j)] = subset_[static_cast<std::size_t>(j - 1)] + 1;
            return true;
        }
        std::iota(subset_.begin(), subset_.end(), 1);
        return std::next_permutation(sigma_.begin(), sigma_.end());
    }

    int n_, ell_;
    std::vector<int> sigma_, subset_;
    bool fresh_;
};

/// All hook involutions with hook-size list equal to the composition mu, in
/// deterministic order.
inline std::vector<HookInvolution> enumerate_hook_involutions(const Composition& mu) {
    const int ell = mu.length();
    std::vector<HookInvolution> out;
    std::vector<int> sigma(static_cast<std::size_t>(ell), 0);

    std::vector<Hook> hooks(static_cast<std::size_t>(std::max(ell, 1)));
    auto fill_hooks = [&](auto&& self, const std::vector<int>& sig, std::size_t pos) -> void {
        if (pos == static_cast<std::size_t>(ell)) {
            out.emplace_back(HookPermutation(std::vector<Hook>(hooks.begin(), hooks.begin() + ell), sig));
            return;
        }
        const int i = static_cast<int>(pos) + 1;
        const int j = sig[pos];
        if (j < i) {  // hook fixed by the pair's smaller index
            hooks[pos] = hooks[static_cast<std::size_t>(j - 1)];
            self(self, sig, pos + 1);
            return;
        }
        for (int h = 0; h < mu.parts[pos]; ++h) {
            hooks[pos] = Hook(mu.parts[pos], h);
            self(self, sig, pos + 1);
        }
    };

    auto build_sigma = [&](auto&& self, int i) -> void {
        if (i > ell) {
            fill_hooks(fill_hooks, sigma, 0);
            return;
        }
        if (sigma[static_cast<std::size_t>(i - 1)] != 0) {
            self(self, i + 1);
            return;
        }
        sigma[static_cast<std::size_t>(i - 1)] = i;  // fixed point
        self(self, i + 1);
        sigma[static_cast<std::size_t>(i - 1)] = 0;
        for (int j = i + 1; j <= ell; ++j) {
            if (sigma[static_cast<std::size_t>(j - 1)] != 0) continue;
            if (mu.parts[static_cast<std::size_t>(i - 1)] != mu.parts[static_cast<std::size_t>(j - 1)]) continue;
            sigma[static_cast<std::size_t>(i - 1)] = j;
            sigma[static_cast<std::size_t>(j - 1)] = i;
            self(self, i + 1);
            sigma[static_cast<std::size_t>(i - 1)] = 0;
            sigma[static_cast<std::size_t>(j - 1)] = 0;
        }
    };
    if (ell == 0) {
        out.emplace_back(HookPermutation{});
        return out;
    }
    build_sigma(build_sigma, 1);
    std::sort(out.begin(), out.end());
    return out;
}

/// True when every fixed point's hook has odd size and height zero; such
/// elements all have sign +1.
inline bool is_special(const HookInvolution& inv) {
    for (std::size_t i = 0; i < inv.hp.sigma.size(); ++i)
        if (inv.hp.sigma[i] == static_cast<int>(i) + 1) {
            const Hook& h = inv.hp.hooks[i];
            if (h.size % 2 == 0 || h.height != 0) return false;
        }
    return true;
}

/// The sign-reversing involution off the special set: toggle the height of
/// the smallest offending fixed-point hook by the parity rules (even size:
/// h even -> h+1, h odd -> h-1; odd size: h odd -> h+1, h even -> h-1).
inline HookInvolution spec_involution(const HookInvolution& inv) {
    if (is_special(inv)) throw std::invalid_argument("spec_involution: element is already special");
    HookPermutation hp = inv.hp;
    for (std::size_t i = 0; i < hp.sigma.size(); ++i) {
        if (hp.sigma[i] != static_cast<int>(i) + 1) continue;
        const Hook& h = hp.hooks[i];
        const bool offending = h.size % 2 == 0 || h.height != 0;
        if (!offending) continue;
        int nh;
        if (h.size % 2 == 0)
            nh = h.height % 2 == 0 ? h.height + 1 : h.height - 1;
        else
            nh = h.height % 2 == 1 ? h.height + 1 : h.height - 1;
        hp.hooks[i] = Hook(h.size, nh);
        return HookInvolution(std::move(hp));
    }
    throw std::logic_error("spec_involution: no offending fixed point found");
}

/// All hook involutions of total size n and length ell (any content).
inline std::vector<HookInvolution> enumerate_hook_involutions_by_size(int n, int ell) {
    std::vector<HookInvolution> out;
    for (const Composition& c : compositions_exact(n, ell)) {
        auto part = enumerate_hook_involutions(c);
        out.insert(out.end(), part.begin(), part.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace ribbonweave
