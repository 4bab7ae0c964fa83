#pragma once

// Integer partitions, their edge-sequence encoding, and elementary ribbon
// (rim hook) addition/removal. Everything downstream builds on this file.
//
// A partition is encoded by the bi-infinite 0/1 word delta(lambda) read off
// the lower-right boundary of its Ferrers diagram from bottom to top:
// 1 for a vertical edge, 0 for a horizontal one.  Index convention:
// bit(i) = 1 exactly when some part satisfies parts[k] - k = i (1-based k,
// parts[k] = 0 beyond the last part), so the empty partition reads
// ...111|000... with the separator between indices -1 and 0.
//
// Ribbons are particle moves on this word: an addable ribbon is a pair of
// indices (lo, hi), lo < hi, with bit(lo) = 1 and bit(hi) = 0; removable is
// the mirror pattern.  Tail = lo, head = hi (head is the north-east end).

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ribbonweave {

/// A partition: nonincreasing finite sequence of positive integers.
/// Immutable value type; all operations return new values.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t k = 0; k < parts_.size(); ++k) {
            if (parts_[k] < 1) throw std::invalid_argument("partition parts must be positive");
            if (k + 1 < parts_.size() && parts_[k] < parts_[k + 1])
                throw std::invalid_argument("partition parts must be nonincreasing");
        }
        size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
    }

    /// Parse the text form: comma-separated parts, empty string for the
    /// empty partition (e.g. "4,2,2,1").
    static Partition parse(const std::string& text) {
        std::vector<int> parts;
        std::string tok;
        std::istringstream in(text);
        while (std::getline(in, tok, ',')) {
            if (tok.empty()) continue;
            parts.push_back(std::stoi(tok));
        }
        return Partition(std::move(parts));
    }

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    bool empty() const { return parts_.empty(); }
    int rows() const { return static_cast<int>(parts_.size()); }

    /// 1-based part access; parts beyond the last are 0.
    int part(int k) const {
        if (k < 1) throw std::out_of_range("part index is 1-based");
        return k <= rows() ? parts_[k - 1] : 0;
    }

    bool contains(const Partition& other) const {
        if (other.rows() > rows()) return false;
        for (int k = 1; k <= other.rows(); ++k)
            if (part(k) < other.part(k)) return false;
        return true;
    }

    /// Cells of the Ferrers diagram as (row, column), both 1-based.
    std::vector<std::pair<int, int>> cells() const {
        std::vector<std::pair<int, int>> out;
        for (int r = 1; r <= rows(); ++r)
            for (int c = 1; c <= part(r); ++c) out.emplace_back(r, c);
        return out;
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t k = 0; k < parts_.size(); ++k) {
            if (k) s += ',';
            s += std::to_string(parts_[k]);
        }
        return s;
    }

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// The edge-sequence word of a partition over an explicit finite window;
/// bit(i) = 1 for i < window_lo and 0 for i >= window_hi.
class EdgeSequence {
public:
    EdgeSequence() = default;

    static EdgeSequence encode(const Partition& p) {
        EdgeSequence s;
        if (p.empty()) return s;
        const int lo = -(p.rows() + 1);
        const int hi = p.part(1);  // exclusive
        s.lo_ = lo;
        s.bits_.assign(static_cast<std::size_t>(hi - lo), 0);
        for (int k = 1;; ++k) {
            const int i = p.part(k) - k;
            if (i < lo) break;
            s.bits_[static_cast<std::size_t>(i - lo)] = 1;
        }
        return s;
    }

    int bit(int i) const {
        if (bits_.empty()) return i < 0 ? 1 : 0;
        if (i < lo_) return 1;
        if (i >= lo_ + static_cast<int>(bits_.size())) return 0;
        return bits_[static_cast<std::size_t>(i - lo_)];
    }

    /// Flip the bit at index i, growing the window on demand.
    void flip(int i) {
        ensure_window(i);
        auto& b = bits_[static_cast<std::size_t>(i - lo_)];
        b = b ? 0 : 1;
    }

    int window_lo() const { return lo_; }
    int window_hi() const { return lo_ + static_cast<int>(bits_.size()); }

    /// Inverse of encode.  Throws if the characteristic property (number of
    /// 0s left of the separator equals number of 1s right of it) fails.
    Partition decode() const {
        // Ones at positions q_1 > q_2 > ... give parts q_k + k; positions
        // below the window contribute the constant lo + (#ones in window),
        // which must therefore be 0 for the parts to terminate.
        int ones = 0;
        for (int v : bits_) ones += v;
        if (!bits_.empty() && lo_ + ones != 0)
            throw std::invalid_argument("edge sequence violates the characteristic property");
        std::vector<int> parts;
        int k = 0;
        for (int i = window_hi() - 1; i >= lo_; --i) {
            if (bit(i)) {
                ++k;
                const int part = i + k;
                if (part > 0) parts.push_back(part);
            }
        }
        return Partition(std::move(parts));
    }

    /// Indices in [window_lo-pad, window_hi+pad) — handy for scans.
    std::pair<int, int> scan_range(int pad) const {
        if (bits_.empty()) return {-pad, pad};
        return {lo_ - pad, window_hi() + pad};
    }

private:
    void ensure_window(int i) {
        if (bits_.empty()) {
            lo_ = std::min(i, -1);
            const int hi = std::max(i + 1, 1);
            bits_.assign(static_cast<std::size_t>(hi - lo_), 0);
            for (int k = lo_; k < 0; ++k) bits_[static_cast<std::size_t>(k - lo_)] = 1;
            return;
        }
        while (i < lo_) { bits_.insert(bits_.begin(), 1); --lo_; }
        while (i >= window_hi()) bits_.push_back(0);
    }

    int lo_ = 0;
    std::vector<uint8_t> bits_;
};

inline EdgeSequence encode_edges(const Partition& p) { return EdgeSequence::encode(p); }
inline Partition decode_edges(const EdgeSequence& s) { return s.decode(); }

/// A hook: ribbon of straight shape, determined by size and height.
struct Hook {
    int size = 1;
    int height = 0;

    Hook() = default;
    Hook(int s, int h) : size(s), height(h) {
        if (s < 1 || h < 0 || h > s - 1) throw std::invalid_argument("hook height must lie in [0, size-1]");
    }

    /// The hook as a partition (size-height, 1, ..., 1).
    Partition shape() const {
        std::vector<int> parts{size - height};
        parts.insert(parts.end(), static_cast<std::size_t>(height), 1);
        return Partition(std::move(parts));
    }

    int sign() const { return height % 2 ? -1 : 1; }

    /// Text form "size:height" (e.g. "3:1").
    std::string to_string() const { return std::to_string(size) + ":" + std::to_string(height); }
    static Hook parse(const std::string& text) {
        auto colon = text.find(':');
        if (colon == std::string::npos) throw std::invalid_argument("hook text form is size:height");
        return Hook(std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1)));
    }

    auto operator<=>(const Hook&) const = default;
};

enum class RibbonKind { Addable, Removable };

/// A ribbon relative to a base partition, held as the index pair of its
/// particle move in delta(base).  lo is the tail index, hi the head index.
struct Ribbon {
    Partition base;
    int lo = 0;
    int hi = 0;
    RibbonKind kind = RibbonKind::Addable;

    Ribbon() = default;
    Ribbon(Partition b, int l, int h, RibbonKind k) : base(std::move(b)), lo(l), hi(h), kind(k) {
        if (lo >= hi) throw std::invalid_argument("ribbon needs lo < hi");
        const EdgeSequence s = encode_edges(base);
        const int want_lo = kind == RibbonKind::Addable ? 1 : 0;
        if (s.bit(lo) != want_lo || s.bit(hi) != 1 - want_lo)
            throw std::invalid_argument("ribbon index pair does not match the edge sequence");
    }

    int size() const { return hi - lo; }

    int height() const {
        const EdgeSequence s = encode_edges(base);
        int h = 0;
        for (int i = lo + 1; i < hi; ++i) h += s.bit(i);
        return h;
    }

    int sign() const { return height() % 2 ? -1 : 1; }
    Hook hook() const { return Hook(size(), height()); }

    bool operator==(const Ribbon& o) const {
        return base == o.base && lo == o.lo && hi == o.hi && kind == o.kind;
    }
};

/// All ribbons of the given size addable to p, north-east first (head index
/// descending).
inline std::vector<Ribbon> addable_ribbons(const Partition& p, int size) {
    if (size < 1) throw std::invalid_argument("ribbon size must be positive");
    const EdgeSequence s = encode_edges(p);
    auto [lo, hi] = s.scan_range(size + 1);
    std::vector<Ribbon> out;
    for (int i = hi; i >= lo; --i)
        if (s.bit(i) == 1 && s.bit(i + size) == 0) out.emplace_back(p, i, i + size, RibbonKind::Addable);
    return out;
}

/// All ribbons of the given size removable from p, north-east first.
inline std::vector<Ribbon> removable_ribbons(const Partition& p, int size) {
    if (size < 1) throw std::invalid_argument("ribbon size must be positive");
    const EdgeSequence s = encode_edges(p);
    auto [lo, hi] = s.scan_range(size + 1);
    std::vector<Ribbon> out;
    for (int i = hi; i >= lo; --i)
        if (s.bit(i) == 0 && s.bit(i + size) == 1) out.emplace_back(p, i, i + size, RibbonKind::Removable);
    return out;
}

/// Exchange the bits at r.lo and r.hi.  Addable grows the size by r.size(),
/// Removable shrinks it; the two directions on the same index pair are
/// mutually inverse.
inline Partition apply_ribbon(const Partition& p, const Ribbon& r) {
    if (!(r.base == p)) throw std::invalid_argument("apply_ribbon: ribbon base mismatch");
    EdgeSequence s = encode_edges(p);
    const int want_lo = r.kind == RibbonKind::Addable ? 1 : 0;
    if (s.bit(r.lo) != want_lo || s.bit(r.hi) != 1 - want_lo)
        throw std::invalid_argument("apply_ribbon: invalid ribbon");
    s.flip(r.lo);
    s.flip(r.hi);
    return s.decode();
}

/// The cell set of the skew shape of r, as (row, column) pairs.
inline std::set<std::pair<int, int>> ribbon_cells(const Ribbon& r) {
    const Partition other = apply_ribbon(r.base, r);
    const Partition& big = r.kind == RibbonKind::Addable ? other : r.base;
    const Partition& small = r.kind == RibbonKind::Addable ? r.base : other;
    std::set<std::pair<int, int>> cells;
    for (int row = 1; row <= big.rows(); ++row)
        for (int col = small.part(row) + 1; col <= big.part(row); ++col) cells.emplace(row, col);
    return cells;
}

/// North-east-most cell (top row, rightmost).
inline std::pair<int, int> ribbon_head(const Ribbon& r) {
    auto cells = ribbon_cells(r);
    std::pair<int, int> best = *cells.begin();
    for (auto& c : cells)
        if (c.first < best.first || (c.first == best.first && c.second > best.second)) best = c;
    return best;
}

/// South-west-most cell (bottom row, leftmost).
inline std::pair<int, int> ribbon_tail(const Ribbon& r) {
    auto cells = ribbon_cells(r);
    std::pair<int, int> best = *cells.begin();
    for (auto& c : cells)
        if (c.first > best.first || (c.first == best.first && c.second < best.second)) best = c;
    return best;
}

/// A composition: finite sequence of positive integers.
struct Composition {
    std::vector<int> parts;

    Composition() = default;
    explicit Composition(std::vector<int> p) : parts(std::move(p)) {
        for (int x : parts)
            if (x < 1) throw std::invalid_argument("composition parts must be positive");
    }

    static Composition parse(const std::string& text) {
        Composition c;
        std::string tok;
        std::istringstream in(text);
        while (std::getline(in, tok, ',')) {
            if (tok.empty()) continue;
            c.parts.push_back(std::stoi(tok));
            if (c.parts.back() < 1) throw std::invalid_argument("composition parts must be positive");
        }
        return c;
    }

    int size() const { return std::accumulate(parts.begin(), parts.end(), 0); }
    int length() const { return static_cast<int>(parts.size()); }

    /// The nonincreasing rearrangement.
    Partition sorted() const {
        std::vector<int> p = parts;
        std::sort(p.rbegin(), p.rend());
        return Partition(std::move(p));
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t k = 0; k < parts.size(); ++k) {
            if (k) s += ',';
            s += std::to_string(parts[k]);
        }
        return s;
    }

    auto operator<=>(const Composition&) const = default;
};

/// The interval of the (possibly empty) ribbon between nested partitions:
/// nullopt result means big/small is not a ribbon; the pair (0,0) encodes
/// the empty ribbon (big == small).
inline std::optional<std::pair<int, int>> ribbon_interval(const Partition& small,
                                                          const Partition& big) {
    if (small == big) return std::pair<int, int>{0, 0};
    const EdgeSequence a = encode_edges(small), b = encode_edges(big);
    const int lo = std::min(a.scan_range(1).first, b.scan_range(1).first);
    const int hi = std::max(a.scan_range(1).second, b.scan_range(1).second);
    int flip_lo = 0, flip_hi = 0, nflips = 0;
    for (int i = lo; i <= hi; ++i) {
        if (a.bit(i) != b.bit(i)) {
            if (nflips == 0) flip_lo = i;
            flip_hi = i;
            ++nflips;
            if (nflips > 2) return std::nullopt;
        }
    }
    if (nflips != 2) return std::nullopt;
    // adding big/small to small must move a particle right
    if (!(a.bit(flip_lo) == 1 && a.bit(flip_hi) == 0)) return std::nullopt;
    if (big.size() - small.size() != flip_hi - flip_lo) return std::nullopt;
    return std::pair<int, int>{flip_lo, flip_hi};
}

/// True when big/small is a nonempty ribbon.
inline bool is_ribbon_step(const Partition& small, const Partition& big) {
    if (small == big) return false;
    auto iv = ribbon_interval(small, big);
    return iv.has_value();
}

/// Sign of the (possibly empty) skew big/small; +1 for the empty ribbon,
/// throws if it is not a ribbon at all.
inline int skew_ribbon_sign(const Partition& small, const Partition& big) {
    if (small == big) return 1;
    auto iv = ribbon_interval(small, big);
    if (!iv) throw std::invalid_argument("skew shape is not a ribbon");
    const EdgeSequence s = encode_edges(small);
    int h = 0;
    for (int i = iv->first + 1; i < iv->second; ++i) h += s.bit(i);
    return h % 2 ? -1 : 1;
}

/// All partitions of n, in lexicographically decreasing part order.
inline std::vector<Partition> all_partitions(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n == 0 ? 1 : n);
    return out;
}

/// All compositions of n with exactly k parts.
inline std::vector<Composition> compositions_exact(int n, int k) {
    std::vector<Composition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int parts_left) -> void {
        if (parts_left == 0) {
            if (rest == 0) out.emplace_back(Composition(cur));
            return;
        }
        for (int p = 1; p + (parts_left - 1) <= rest; ++p) {
            cur.push_back(p);
            self(self, rest - p, parts_left - 1);
            cur.pop_back();
        }
    };
    rec(rec, n, k);
    return out;
}

}  // namespace ribbonweave
