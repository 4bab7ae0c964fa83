#include <catch2/catch_amalgamated.hpp>

#include <ribbonweave/operators.hpp>

using namespace ribbonweave;

namespace {
Partition P(const std::string& s) { return Partition::parse(s); }
Composition C(const std::string& s) { return Composition::parse(s); }

PartitionVector<BigInt> basis(const std::string& s) { return unit_vector<BigInt>(P(s), 1); }
}  // namespace

TEST_CASE("up and down on small vectors") {
    const auto u1 = up(basis(""), 1);
    REQUIRE(u1.size() == 1);
    CHECK(u1.at(P("1")) == 1);

    const auto u2 = up(basis(""), 2);
    REQUIRE(u2.size() == 2);
    CHECK(u2.at(P("2")) == 1);
    CHECK(u2.at(P("1,1")) == -1);

    // (2,1)/(1) is disconnected, so only the two straight shapes remain
    const auto u12 = up(basis("1"), 2);
    REQUIRE(u12.size() == 2);
    CHECK(u12.at(P("3")) == 1);
    CHECK(u12.at(P("1,1,1")) == -1);

    CHECK(down(basis(""), 1).empty());
    const auto d = down(basis("2,1"), 3);
    REQUIRE(d.size() == 1);
    CHECK(d.at(P("")) == -1);
}

TEST_CASE("up and down are dual under the pairing") {
    for (int m = 0; m <= 10; ++m)
        for (const Partition& lam : all_partitions(m))
            for (int i = 1; i <= 5; ++i) {
                const auto ulam = up(unit_vector<BigInt>(lam, 1), i);
                for (const Partition& mu : all_partitions(m + i)) {
                    const auto dmu = down(unit_vector<BigInt>(mu, 1), i);
                    const BigInt lhs = ulam.count(mu) ? ulam.at(mu) : 0;
                    const BigInt rhs = dmu.count(lam) ? dmu.at(lam) : 0;
                    REQUIRE(lhs == rhs);
                }
            }
}

TEST_CASE("commutation identities hold basis-wise") {
    CHECK(check_commutation(1, 1, 8).ok);
    CHECK(check_commutation(2, 3, 8).ok);
    for (int i = 1; i <= 5; ++i)
        for (int j = 1; j <= 5; ++j) CHECK(check_commutation(i, j, 10).ok);
}

TEST_CASE("a corrupted identity is reported") {
    // negative control: D1U1 = U1D1 + 2 Id fails already on the empty partition
    const auto b = basis("");
    auto lhs = down(up(b, 1), 1);
    auto rhs = up(down(b, 1), 1);
    opdetail::add_term(rhs, P(""), BigInt(2));
    CHECK_FALSE(lhs == rhs);
}

TEST_CASE("vacuum q-series of D^ell U^ell") {
    const QPoly one = q_pair_DU(1, 8);
    for (int n = 0; n <= 8; ++n) CHECK(one.coef(2 * n) == n);

    const QPoly two = q_pair_DU(2, 6);
    CHECK(two.coef(4) == 2);
    CHECK(two.coef(8) == 20);  // 2! * C(5,3)

    for (int ell = 1; ell <= 3; ++ell) {
        const QPoly series = q_pair_DU(ell, 8);
        for (int n = 0; n <= 8; ++n)
            REQUIRE(series.coef(2 * n) == factorial(ell) * binomial(n + ell - 1, 2 * ell - 1));
        for (int d = 1; d <= 2 * 8; d += 2) REQUIRE(series.coef(d) == 0);
    }
}

TEST_CASE("product form of the vacuum series") {
    for (int ell = 1; ell <= 3; ++ell) CHECK(check_stanley_product(ell, 8).ok);
}

TEST_CASE("q-form of the commutation identity through q^16") {
    for (int n = 0; n <= 6; ++n)
        for (const Partition& lam : all_partitions(n)) REQUIRE(check_q_commutation(lam, 16).ok);
}

TEST_CASE("parity boundary identity") {
    CHECK(check_signed_boundary(P(""), 1));
    CHECK(check_signed_boundary(P(""), 2));
    CHECK(check_signed_boundary(P("1"), 2));
    for (int n = 0; n <= 12; ++n)
        for (const Partition& p : all_partitions(n))
            for (int i = 1; i <= 6; ++i) REQUIRE(check_signed_boundary(p, i));
}

TEST_CASE("content product pairing") {
    const auto a = check_content_product(C("2,1"), C("2,1"));
    CHECK(a.first == 2);
    CHECK(a.second == 2);
    const auto b = check_content_product(C("2,1"), C("1,2"));
    CHECK(b.first == 2);
    CHECK(b.second == 2);
    const auto c = check_content_product(C("2,2"), C("3,1"));
    CHECK(c.first == 0);
    CHECK(c.second == 0);
    // every pair of compositions of size <= 6 with <= 3 parts
    for (int n = 1; n <= 6; ++n)
        for (int pa = 1; pa <= std::min(3, n); ++pa)
            for (int pb = 1; pb <= std::min(3, n); ++pb)
                for (const Composition& mu : compositions_exact(n, pa))
                    for (const Composition& nu : compositions_exact(n, pb)) {
                        const auto [direct, formula] = check_content_product(mu, nu);
                        REQUIRE(direct == formula);
                    }
}
