#include <catch2/catch_amalgamated.hpp>

#include <ribbonweave/local_rules.hpp>

#include <map>
#include <set>

using namespace ribbonweave;

namespace {
const Partition kEmpty{};
Partition P(const std::string& s) { return Partition::parse(s); }
}  // namespace

TEST_CASE("direct rule dispatch on the spec squares") {
    // D2: equal corners with a hook
    const RuleOutcome d2 = apply_direct(SquareIn::direct(kEmpty, kEmpty, kEmpty, Hook(3, 1)));
    CHECK(d2.rule == Rule::D2);
    CHECK(d2.result == P("2,1"));

    // D1: equal corners, no hook
    const RuleOutcome d1 = apply_direct(SquareIn::direct(kEmpty, kEmpty, kEmpty));
    CHECK(d1.rule == Rule::D1);
    CHECK(d1.result == kEmpty);

    // D3: lambda below mu = nu
    const RuleOutcome d3 = apply_direct(SquareIn::direct(P("1"), P("1"), kEmpty));
    CHECK(d3.rule == Rule::D3);
    CHECK(d3.result == P("1,1"));

    // D6: distinct corners, shared tail, slide
    const RuleOutcome d6 = apply_direct(SquareIn::direct(P("3"), P("2"), kEmpty));
    CHECK(d6.rule == Rule::D6);
    CHECK(d6.result == P("5"));

    // D4: lambda equals one of them
    const RuleOutcome d4 = apply_direct(SquareIn::direct(P("1"), P("2"), P("1")));
    CHECK(d4.rule == Rule::D4);
    CHECK(d4.result == P("2"));

    CHECK_THROWS_AS(apply_direct(SquareIn::direct(P("1"), P("2"), P("1"), Hook(1, 0))),
                    std::invalid_argument);
}

TEST_CASE("inverse rule dispatch on the spec squares") {
    const RuleOutcome i2 = apply_inverse(SquareIn::inverse(kEmpty, kEmpty, P("2,1")));
    CHECK(i2.rule == Rule::I2);
    CHECK(i2.result == kEmpty);
    REQUIRE(i2.hook_out.has_value());
    CHECK(*i2.hook_out == Hook(3, 1));

    const RuleOutcome i3 = apply_inverse(SquareIn::inverse(P("1"), P("1"), P("1,1")));
    CHECK(i3.rule == Rule::I3);
    CHECK(i3.result == kEmpty);

    const RuleOutcome i1 = apply_inverse(SquareIn::inverse(P("2,1"), P("2,1"), P("2,1")));
    CHECK(i1.rule == Rule::I1);
    CHECK(i1.result == P("2,1"));
}

namespace {
// all (mu, nu, i) pairs with nonempty down/up sets over partitions of size
// <= max built from a common lambda or xi
struct SquareCase {
    Partition mu, nu, lam;
};

std::vector<SquareCase> forward_cases(int max_base, int max_ribbon) {
    std::vector<SquareCase> out;
    for (int n = 0; n <= max_base; ++n)
        for (const Partition& lam : all_partitions(n)) {
            out.push_back({lam, lam, lam});  // D1 square
            for (int s1 = 1; s1 <= max_ribbon; ++s1)
                for (const Ribbon& r : addable_ribbons(lam, s1)) {
                    const Partition mu = apply_ribbon(lam, r);
                    out.push_back({mu, mu, lam});  // D3 square
                    out.push_back({mu, lam, lam});  // D4 squares
                    out.push_back({lam, mu, lam});
                    for (int s2 = 1; s2 <= max_ribbon; ++s2)
                        for (const Ribbon& r2 : addable_ribbons(lam, s2)) {
                            const Partition nu = apply_ribbon(lam, r2);
                            if (nu == mu) continue;
                            out.push_back({mu, nu, lam});  // D5/D6/S squares
                        }
                }
        }
    return out;
}
}  // namespace

TEST_CASE("totality, inversion and the sign law over all small squares") {
    for (const SquareCase& c : forward_cases(8, 4)) {
        const int sign_in = down_sign(c.mu, c.nu, c.lam);
        const RuleOutcome out = apply_direct(SquareIn::direct(c.mu, c.nu, c.lam));
        if (out.rule == Rule::S) {
            // sign-reversing involution inside the same down-set
            CHECK(down_sign(c.mu, c.nu, out.result) == -sign_in);
            const RuleOutcome again = apply_direct(SquareIn::direct(c.mu, c.nu, out.result));
            REQUIRE(again.rule == Rule::S);
            CHECK(again.result == c.lam);
            continue;
        }
        // D-rules land in the up-set, preserve the sign, and invert
        CHECK(up_sign(c.mu, c.nu, out.result) == sign_in);
        const RuleOutcome back = apply_inverse(SquareIn::inverse(c.mu, c.nu, out.result));
        switch (out.rule) {
            case Rule::D1: REQUIRE(back.rule == Rule::I1); break;
            case Rule::D2: REQUIRE(back.rule == Rule::I2); break;
            case Rule::D3: REQUIRE(back.rule == Rule::I3); break;
            case Rule::D4: REQUIRE(back.rule == Rule::I4); break;
            case Rule::D5: REQUIRE(back.rule == Rule::I5); break;
            case Rule::D6: REQUIRE(back.rule == Rule::I6); break;
            default: FAIL("unexpected rule");
        }
        CHECK(back.result == c.lam);
        CHECK_FALSE(back.hook_out.has_value());
    }
}

TEST_CASE("D2/D3 preserve heights, and hooks round-trip through I2") {
    for (int n = 0; n <= 8; ++n)
        for (const Partition& lam : all_partitions(n)) {
            for (int s = 1; s <= 4; ++s)
                for (int h = 0; h < s; ++h) {
                    const RuleOutcome d2 = apply_direct(SquareIn::direct(lam, lam, lam, Hook(s, h)));
                    REQUIRE(d2.rule == Rule::D2);
                    REQUIRE(skew_ribbon_sign(lam, d2.result) == Hook(s, h).sign());
                    const RuleOutcome back = apply_inverse(SquareIn::inverse(lam, lam, d2.result));
                    if (back.rule == Rule::I2) {
                        REQUIRE(*back.hook_out == Hook(s, h));
                        REQUIRE(back.result == lam);
                    }
                }
            for (int s = 1; s <= 4; ++s)
                for (const Ribbon& r : removable_ribbons(lam, s)) {
                    const Partition below = apply_ribbon(lam, r);
                    const RuleOutcome d3 = apply_direct(SquareIn::direct(lam, lam, below));
                    REQUIRE(d3.rule == Rule::D3);
                    REQUIRE(skew_ribbon_sign(lam, d3.result) == r.sign());  // same height class
                    const RuleOutcome back = apply_inverse(SquareIn::inverse(lam, lam, d3.result));
                    REQUIRE(back.rule == Rule::I3);
                    REQUIRE(back.result == below);
                }
        }
}

TEST_CASE("T is a sign-reversing involution on up-sets") {
    for (int n = 0; n <= 8; ++n)
        for (const Partition& xi : all_partitions(n))
            for (int s1 = 1; s1 <= 4; ++s1)
                for (int s2 = 1; s2 <= 4; ++s2)
                    for (const Ribbon& r : removable_ribbons(xi, s1))
                        for (const Ribbon& r2 : removable_ribbons(xi, s2)) {
                            const Partition mu = apply_ribbon(xi, r);
                            const Partition nu = apply_ribbon(xi, r2);
                            if (mu == nu) continue;
                            const RuleOutcome out = apply_inverse(SquareIn::inverse(mu, nu, xi));
                            if (out.rule != Rule::T) continue;
                            CHECK(up_sign(mu, nu, out.result) == -up_sign(mu, nu, xi));
                            const RuleOutcome again = apply_inverse(SquareIn::inverse(mu, nu, out.result));
                            REQUIRE(again.rule == Rule::T);
                            CHECK(again.result == xi);
                        }
}

TEST_CASE("diagonal bijection: heights pair off and the signed deficit is the parity of i") {
    // (mu = empty, i = 3): three addables pair with heights {0,1,2}
    const DiagPairing empty3 = local_bijection_diag(kEmpty, 3);
    CHECK(empty3.to_removable.empty());
    std::set<int> heights;
    for (auto& [xi, h] : empty3.to_height) heights.insert(h);
    CHECK(heights == std::set<int>{0, 1, 2});

    // (mu = (2,1), i = 1): three addables, two pair with removables, one height
    const DiagPairing p21 = local_bijection_diag(P("2,1"), 1);
    CHECK(p21.to_removable.size() == 2);
    CHECK(p21.to_height.size() == 1);

    for (int n = 0; n <= 10; ++n)
        for (const Partition& mu : all_partitions(n))
            for (int i = 1; i <= 5; ++i) {
                const DiagPairing pr = local_bijection_diag(mu, i);
                // bijection: each removable hit exactly once, each height once
                std::set<Partition> removed;
                for (auto& [xi, lam] : pr.to_removable) {
                    REQUIRE(skew_ribbon_sign(lam, mu) == skew_ribbon_sign(mu, xi));  // sign preserving
                    REQUIRE(removed.insert(lam).second);
                }
                REQUIRE(removed.size() == removable_ribbons(mu, i).size());
                std::set<int> hs;
                for (auto& [xi, h] : pr.to_height) {
                    REQUIRE(skew_ribbon_sign(mu, xi) == (h % 2 ? -1 : 1));  // height preserved
                    REQUIRE(hs.insert(h).second);
                }
                REQUIRE(hs.size() == static_cast<std::size_t>(i));
                // signed deficit: |U_i(mu)|± - |D_i(mu)|± = i mod 2
                int up_signed = 0, down_signed = 0;
                for (const Ribbon& r : addable_ribbons(mu, i)) up_signed += r.sign();
                for (const Ribbon& r : removable_ribbons(mu, i)) down_signed += r.sign();
                REQUIRE(up_signed - down_signed == i % 2);
            }
}

TEST_CASE("off-diagonal signed bijection: signed cardinalities match") {
    for (int m = 0; m <= 8; ++m)
        for (const Partition& mu : all_partitions(m))
            for (int n = 0; n <= 8; ++n)
                for (const Partition& nu : all_partitions(n)) {
                    if (mu == nu) continue;
                    for (int i = 1; i <= 4; ++i) {
                        const auto dset = down_set(mu, nu, i);
                        const auto uset = up_set(mu, nu, i);
                        if (dset.empty() && uset.empty()) continue;
                        long long dsum = 0, usum = 0;
                        for (const Partition& lam : dset) dsum += down_sign(mu, nu, lam);
                        for (const Partition& xi : uset) usum += up_sign(mu, nu, xi);
                        REQUIRE(dsum == usum);

                        const OffdiagPairing pr = local_bijection_offdiag(mu, nu, i);
                        // fixed map is a sign-preserving bijection between the fixed sets
                        std::set<Partition> images;
                        for (auto& [lam, xi] : pr.fixed_map) {
                            REQUIRE(down_sign(mu, nu, lam) == up_sign(mu, nu, xi));
                            REQUIRE(images.insert(xi).second);
                        }
                        REQUIRE(pr.fixed_map.size() + 2 * pr.s_pairs.size() == dset.size());
                        REQUIRE(pr.fixed_map.size() + 2 * pr.t_pairs.size() == uset.size());
                    }
                }
}
