#pragma once

// Operations on ribbons, expressed as index arithmetic on edge sequences:
// the Shimozono-White interleaving with first/next/prev, the bump moves for
// pairs with distinct endpoints, and slide/switch for pairs sharing one
// endpoint.  The geometric cell-set formulations survive only in the test
// oracles; the index flips are the normative definitions here.

#include <cassert>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "partition.hpp"

namespace ribbonweave {

/// Addable and removable ribbons of one size-height class, each sorted
/// north-east first.  Merged by head index descending they strictly
/// alternate a r' a r' ... a, so there is always one more addable.
struct Interleaving {
    std::vector<Ribbon> addables;
    std::vector<Ribbon> removables;
};

inline Interleaving interleaved(const Partition& p, int size, int height) {
    if (height < 0 || height > size - 1) throw std::invalid_argument("height must lie in [0, size-1]");
    Interleaving out;
    for (const Ribbon& r : addable_ribbons(p, size))
        if (r.height() == height) out.addables.push_back(r);
    for (const Ribbon& r : removable_ribbons(p, size))
        if (r.height() == height) out.removables.push_back(r);
    // alternation sanity: a_0 > r'_1 > a_1 > ... > r'_t > a_t by head index
    assert(out.addables.size() == out.removables.size() + 1);
    for (std::size_t i = 0; i < out.removables.size(); ++i) {
        assert(out.addables[i].hi > out.removables[i].hi);
        assert(out.removables[i].hi > out.addables[i + 1].hi);
    }
    return out;
}

/// The north-east-most addable ribbon of the hook's size and height.
inline Ribbon first(const Partition& p, const Hook& hk) {
    Interleaving iv = interleaved(p, hk.size, hk.height);
    if (iv.addables.empty()) throw std::logic_error("first: no addable ribbon in the class");
    return iv.addables.front();
}

/// The addable ribbon of the same class immediately south-west of the
/// removable r.
inline Ribbon next(const Partition& p, const Ribbon& r) {
    if (r.kind != RibbonKind::Removable || !(r.base == p))
        throw std::invalid_argument("next: expects a p-removable ribbon");
    Interleaving iv = interleaved(p, r.size(), r.height());
    for (std::size_t i = 0; i < iv.removables.size(); ++i)
        if (iv.removables[i] == r) return iv.addables[i + 1];
    throw std::invalid_argument("next: ribbon not found in its class");
}

/// The removable ribbon of the same class immediately north-east of the
/// addable r; empty exactly when r is first(p, hook of r).
inline std::optional<Ribbon> prev(const Partition& p, const Ribbon& r) {
    if (r.kind != RibbonKind::Addable || !(r.base == p))
        throw std::invalid_argument("prev: expects a p-addable ribbon");
    Interleaving iv = interleaved(p, r.size(), r.height());
    for (std::size_t i = 0; i < iv.addables.size(); ++i)
        if (iv.addables[i] == r) return i == 0 ? std::nullopt : std::optional<Ribbon>(iv.removables[i - 1]);
    throw std::invalid_argument("prev: ribbon not found in its class");
}

namespace detail {
inline Partition flip_all(const Partition& p, std::initializer_list<int> idx) {
    EdgeSequence s = encode_edges(p);
    for (int i : idx) s.flip(i);
    return s.decode();
}
}  // namespace detail

/// Two p-addable ribbons with distinct tails and heads: flip all four
/// indices.  The result xi satisfies: xi/(p+r) and xi/(p+r2) are ribbons
/// with the two sizes exchanged and the product of signs preserved.
inline Partition bumpout(const Partition& p, const Ribbon& r, const Ribbon& r2) {
    if (r.kind != RibbonKind::Addable || r2.kind != RibbonKind::Addable)
        throw std::invalid_argument("bumpout: expects addable ribbons");
    if (!(r.base == p) || !(r2.base == p)) throw std::invalid_argument("bumpout: base mismatch");
    if (r.lo == r2.lo || r.hi == r2.hi)
        throw std::invalid_argument("bumpout: ribbons share a tail or head");
    return detail::flip_all(p, {r.lo, r.hi, r2.lo, r2.hi});
}

/// Mirror of bumpout for two p-removable ribbons.
inline Partition bumpin(const Partition& p, const Ribbon& r, const Ribbon& r2) {
    if (r.kind != RibbonKind::Removable || r2.kind != RibbonKind::Removable)
        throw std::invalid_argument("bumpin: expects removable ribbons");
    if (!(r.base == p) || !(r2.base == p)) throw std::invalid_argument("bumpin: base mismatch");
    if (r.lo == r2.lo || r.hi == r2.hi)
        throw std::invalid_argument("bumpin: ribbons share a tail or head");
    return detail::flip_all(p, {r.lo, r.hi, r2.lo, r2.hi});
}

enum class SlideTag { Slide, Switch };

/// Result of a slide-or-switch: Slide carries the combined-move partition
/// (sign product preserved), Switch the in-place replacement (sign product
/// reversed).
struct SlideOrSwitch {
    SlideTag tag;
    Partition value;
};

/// Two p-addable ribbons sharing exactly one endpoint.  Shared tail i with
/// heads j1 != j2: slide when bit(j1+j2-i) = 0, else switch.  Shared head j
/// with tails i1 != i2: slide when bit(i1+i2-j) = 1, else switch.
inline SlideOrSwitch slide_or_switch_out(const Partition& p, const Ribbon& r, const Ribbon& r2) {
    if (r.kind != RibbonKind::Addable || r2.kind != RibbonKind::Addable)
        throw std::invalid_argument("slide_or_switch_out: expects addable ribbons");
    if (!(r.base == p) || !(r2.base == p)) throw std::invalid_argument("slide_or_switch_out: base mismatch");
    const bool same_tail = r.lo == r2.lo, same_head = r.hi == r2.hi;
    if (same_tail == same_head)
        throw std::invalid_argument("slide_or_switch_out: exactly one shared endpoint required");
    const EdgeSequence s = encode_edges(p);
    if (same_tail) {
        const int i = r.lo, k = r.hi + r2.hi - i;
        if (s.bit(k) == 0) return {SlideTag::Slide, detail::flip_all(p, {i, k})};
        return {SlideTag::Switch, detail::flip_all(p, {i, r.hi, r2.hi, k})};
    }
    const int j = r.hi, k = r.lo + r2.lo - j;
    if (s.bit(k) == 1) return {SlideTag::Slide, detail::flip_all(p, {k, j})};
    return {SlideTag::Switch, detail::flip_all(p, {r.lo, r2.lo, j, k})};
}

/// Mirror of slide_or_switch_out for two p-removable ribbons: shared tail i
/// slides when bit(j1+j2-i) = 1, shared head j slides when bit(i1+i2-j) = 0.
inline SlideOrSwitch slide_or_switch_in(const Partition& p, const Ribbon& r, const Ribbon& r2) {
    if (r.kind != RibbonKind::Removable || r2.kind != RibbonKind::Removable)
        throw std::invalid_argument("slide_or_switch_in: expects removable ribbons");
    if (!(r.base == p) || !(r2.base == p)) throw std::invalid_argument("slide_or_switch_in: base mismatch");
    const bool same_tail = r.lo == r2.lo, same_head = r.hi == r2.hi;
    if (same_tail == same_head)
        throw std::invalid_argument("slide_or_switch_in: exactly one shared endpoint required");
    const EdgeSequence s = encode_edges(p);
    if (same_tail) {
        const int i = r.lo, k = r.hi + r2.hi - i;
        if (s.bit(k) == 1) return {SlideTag::Slide, detail::flip_all(p, {i, k})};
        return {SlideTag::Switch, detail::flip_all(p, {i, r.hi, r2.hi, k})};
    }
    const int j = r.hi, k = r.lo + r2.lo - j;
    if (s.bit(k) == 0) return {SlideTag::Slide, detail::flip_all(p, {k, j})};
    return {SlideTag::Switch, detail::flip_all(p, {r.lo, r2.lo, j, k})};
}

}  // namespace ribbonweave
