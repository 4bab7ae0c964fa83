#pragma once

// The signed up/down operators on the free module over partitions, their
// commutation identities, and the q-graded series checks.  The infinite
// ambient space is realized by explicit size truncation: up never moves
// mass downward, so pairings against the empty partition after equally many
// ups and downs are exact whenever the bound covers the peak size.

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "characters.hpp"
#include "partition.hpp"

namespace ribbonweave {

/// Polynomial in q with integer coefficients, truncated beyond a fixed
/// degree.
class QPoly {
public:
    explicit QPoly(int trunc = 0) : trunc_(trunc), coef_(static_cast<std::size_t>(trunc) + 1, 0) {}

    static QPoly one(int trunc) {
        QPoly p(trunc);
        p.coef_[0] = 1;
        return p;
    }
    static QPoly monomial(int degree, int trunc, BigInt c = 1) {
        QPoly p(trunc);
        if (degree <= trunc) p.coef_[static_cast<std::size_t>(degree)] = std::move(c);
        return p;
    }

    int trunc() const { return trunc_; }
    const BigInt& coef(int degree) const {
        static const BigInt zero = 0;
        if (degree < 0 || degree > trunc_) return zero;
        return coef_[static_cast<std::size_t>(degree)];
    }
    BigInt& at(int degree) { return coef_[static_cast<std::size_t>(degree)]; }

    bool is_zero() const {
        for (const BigInt& c : coef_)
            if (c != 0) return false;
        return true;
    }

    QPoly operator-() const {
        QPoly out(trunc_);
        for (int d = 0; d <= trunc_; ++d) out.coef_[static_cast<std::size_t>(d)] = -coef(d);
        return out;
    }
    QPoly& operator+=(const QPoly& o) {
        check(o);
        for (int d = 0; d <= trunc_; ++d) coef_[static_cast<std::size_t>(d)] += o.coef(d);
        return *this;
    }
    QPoly& operator-=(const QPoly& o) {
        check(o);
        for (int d = 0; d <= trunc_; ++d) coef_[static_cast<std::size_t>(d)] -= o.coef(d);
        return *this;
    }
    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }

    friend QPoly operator*(const QPoly& a, const QPoly& b) {
        a.check(b);
        QPoly out(a.trunc_);
        for (int d = 0; d <= a.trunc_; ++d) {
            if (a.coef(d) == 0) continue;
            for (int e = 0; d + e <= a.trunc_; ++e)
                if (b.coef(e) != 0) out.coef_[static_cast<std::size_t>(d + e)] += a.coef(d) * b.coef(e);
        }
        return out;
    }

    bool operator==(const QPoly& o) const { return trunc_ == o.trunc_ && coef_ == o.coef_; }

    std::string to_string() const {
        std::ostringstream out;
        bool any = false;
        for (int d = 0; d <= trunc_; ++d) {
            if (coef(d) == 0) continue;
            if (any) out << " + ";
            out << coef(d) << "*q^" << d;
            any = true;
        }
        return any ? out.str() : std::string("0");
    }

private:
    void check(const QPoly& o) const {
        if (trunc_ != o.trunc_) throw std::invalid_argument("QPoly truncation mismatch");
    }

    int trunc_;
    std::vector<BigInt> coef_;
};

/// The series expansion of q^2/(1-q^2)^2 = sum_i i q^{2i}, truncated.
inline QPoly q_center_series(int trunc) {
    QPoly out(trunc);
    for (int i = 1; 2 * i <= trunc; ++i) out.at(2 * i) = i;
    return out;
}

/// Finite linear combination of partitions; zero coefficients are pruned.
template <class Coeff>
using PartitionVector = std::map<Partition, Coeff>;

namespace opdetail {
inline bool is_zero_like(const BigInt& c) { return c == 0; }
inline bool is_zero_like(const QPoly& c) { return c.is_zero(); }

template <class Coeff>
void add_term(PartitionVector<Coeff>& v, const Partition& p, const Coeff& c) {
    if (is_zero_like(c)) return;
    auto it = v.find(p);
    if (it == v.end()) {
        v.emplace(p, c);
        return;
    }
    it->second += c;
    if (is_zero_like(it->second)) v.erase(it);
}
}  // namespace opdetail

/// Basis vector.
template <class Coeff>
PartitionVector<Coeff> unit_vector(const Partition& p, Coeff c) {
    PartitionVector<Coeff> v;
    v.emplace(p, std::move(c));
    return v;
}

/// U_i: linear extension of p -> sum over addable size-i ribbons of
/// sign(r) * (p + r).
template <class Coeff>
PartitionVector<Coeff> up(const PartitionVector<Coeff>& v, int i) {
    if (i < 1) throw std::invalid_argument("up: i >= 1");
    PartitionVector<Coeff> out;
    for (const auto& [p, c] : v)
        for (const Ribbon& r : addable_ribbons(p, i))
            opdetail::add_term(out, apply_ribbon(p, r), r.sign() < 0 ? Coeff(-c) : c);
    return out;
}

/// D_i: dual of U_i under the partition pairing.
template <class Coeff>
PartitionVector<Coeff> down(const PartitionVector<Coeff>& v, int i) {
    if (i < 1) throw std::invalid_argument("down: i >= 1");
    PartitionVector<Coeff> out;
    for (const auto& [p, c] : v)
        for (const Ribbon& r : removable_ribbons(p, i))
            opdetail::add_term(out, apply_ribbon(p, r), r.sign() < 0 ? Coeff(-c) : c);
    return out;
}

/// <v, w>: bilinear pairing with the partitions as an orthonormal basis.
template <class Coeff>
Coeff pairing(const PartitionVector<Coeff>& v, const PartitionVector<Coeff>& w) {
    Coeff out{};
    bool first = true;
    for (const auto& [p, c] : v) {
        auto it = w.find(p);
        if (it == w.end()) continue;
        if (first) {
            out = c * it->second;
            first = false;
        } else {
            out += c * it->second;
        }
    }
    if (first) return Coeff{};
    return out;
}

/// U = sum_i q^i U_i applied with a size bound (partitions above the bound
/// are dropped).
inline PartitionVector<QPoly> up_q(const PartitionVector<QPoly>& v, int size_bound, int trunc) {
    PartitionVector<QPoly> out;
    for (const auto& [p, c] : v)
        for (int i = 1; p.size() + i <= size_bound; ++i)
            for (const Ribbon& r : addable_ribbons(p, i))
                opdetail::add_term(out, apply_ribbon(p, r), c * QPoly::monomial(i, trunc, r.sign()));
    return out;
}

/// D = sum_j q^j D_j (no bound needed going down).
inline PartitionVector<QPoly> down_q(const PartitionVector<QPoly>& v, int trunc) {
    PartitionVector<QPoly> out;
    for (const auto& [p, c] : v)
        for (int j = 1; j <= p.size(); ++j)
            for (const Ribbon& r : removable_ribbons(p, j))
                opdetail::add_term(out, apply_ribbon(p, r), c * QPoly::monomial(j, trunc, r.sign()));
    return out;
}

struct CheckReport {
    bool ok = true;
    std::string detail;
};

/// Verify D_i U_j = U_j D_i + [i == j] * i * Id on every partition of size
/// <= max_size.
inline CheckReport check_commutation(int i, int j, int max_size) {
    for (int n = 0; n <= max_size; ++n)
        for (const Partition& lam : all_partitions(n)) {
            const auto basis = unit_vector<BigInt>(lam, 1);
            PartitionVector<BigInt> lhs = down(up(basis, j), i);
            PartitionVector<BigInt> rhs = up(down(basis, i), j);
            if (i == j) opdetail::add_term(rhs, lam, BigInt(i));
            if (!(lhs == rhs))
                return {false, "commutation fails at partition " + lam.to_string() + " with i=" +
                                   std::to_string(i) + " j=" + std::to_string(j)};
        }
    return {};
}

/// The q-series <empty, D^ell U^ell empty> computed by iterated operators
/// with peak sizes capped at max_n; the coefficient of q^{2n} equals
/// ell! * C(n+ell-1, 2*ell-1) for n <= max_n.
inline QPoly q_pair_DU(int ell, int max_n) {
    if (ell < 1) throw std::invalid_argument("q_pair_DU: ell >= 1");
    const int trunc = 2 * max_n;
    PartitionVector<QPoly> v = unit_vector(Partition{}, QPoly::one(trunc));
    for (int t = 0; t < ell; ++t) v = up_q(v, max_n, trunc);
    for (int t = 0; t < ell; ++t) v = down_q(v, trunc);
    auto it = v.find(Partition{});
    return it == v.end() ? QPoly(trunc) : it->second;
}

/// Pointwise form of the parity identity: the signed count of addable
/// size-i ribbons equals the signed count of removable ones plus i mod 2.
inline bool check_signed_boundary(const Partition& p, int i) {
    if (i < 1) throw std::invalid_argument("check_signed_boundary: i >= 1");
    int add = 0, rem = 0;
    for (const Ribbon& r : addable_ribbons(p, i)) add += r.sign();
    for (const Ribbon& r : removable_ribbons(p, i)) rem += r.sign();
    return add == rem + (i % 2);
}

/// <U_nu empty, U_mu empty> against the closed product formula
/// delta_{sorted(mu), sorted(nu)} * prod_i i^{j_i} j_i!.
inline std::pair<BigInt, BigInt> check_content_product(const Composition& mu, const Composition& nu) {
    if (mu.size() != nu.size()) throw std::invalid_argument("check_content_product: size mismatch");
    auto build = [](const Composition& c) {
        PartitionVector<BigInt> v = unit_vector<BigInt>(Partition{}, 1);
        for (int part : c.parts) v = up(v, part);
        return v;
    };
    const BigInt direct = pairing(build(mu), build(nu));
    BigInt formula = 0;
    if (mu.sorted() == nu.sorted()) {
        formula = 1;
        for (auto [i, m] : multiplicities(mu.sorted()))
            formula *= boost::multiprecision::pow(BigInt(i), static_cast<unsigned>(m)) * factorial(m);
    }
    return {direct, formula};
}

/// Stanley's product form evaluated at the vacuum: <empty, D^ell U^ell empty>
/// must equal ell! * r^ell with r = sum_i i q^{2i}.
inline CheckReport check_stanley_product(int ell, int max_n) {
    const QPoly direct = q_pair_DU(ell, max_n);
    const int trunc = 2 * max_n;
    QPoly expect = QPoly::one(trunc);
    const QPoly r = q_center_series(trunc);
    for (int t = 0; t < ell; ++t) expect = expect * r;
    const BigInt fact = factorial(ell);
    for (int d = 0; d <= trunc; ++d) expect.at(d) *= fact;
    if (direct == expect) return {};
    return {false, "product formula mismatch at ell=" + std::to_string(ell) + ": direct=" +
                       direct.to_string() + " expected=" + expect.to_string()};
}

/// The q-form of the commutation identity DU = UD + (sum_i i q^{2i}) Id,
/// applied to one basis partition and compared through q^max_degree (the
/// internal size bound is chosen so those coefficients are exact).
inline CheckReport check_q_commutation(const Partition& lam, int max_degree) {
    const int trunc = max_degree;
    const int size_bound = lam.size() + std::max(max_degree - 1, 1);
    const auto basis = unit_vector(lam, QPoly::one(trunc));
    PartitionVector<QPoly> lhs = down_q(up_q(basis, size_bound, trunc), trunc);
    PartitionVector<QPoly> rhs = up_q(down_q(basis, trunc), size_bound, trunc);
    opdetail::add_term(rhs, lam, q_center_series(trunc));
    auto coef_at = [&](const PartitionVector<QPoly>& v, const Partition& p, int d) -> BigInt {
        auto it = v.find(p);
        return it == v.end() ? BigInt(0) : it->second.coef(d);
    };
    std::vector<Partition> keys;
    for (const auto& [p, c] : lhs) keys.push_back(p);
    for (const auto& [p, c] : rhs)
        if (!lhs.count(p)) keys.push_back(p);
    for (const Partition& p : keys)
        for (int d = 0; d <= max_degree; ++d)
            if (coef_at(lhs, p, d) != coef_at(rhs, p, d))
                return {false, "q-commutation mismatch at " + lam.to_string() + ", entry " +
                                   p.to_string() + ", degree " + std::to_string(d)};
    return {};
}

}  // namespace ribbonweave
