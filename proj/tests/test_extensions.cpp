#include <catch2/catch_amalgamated.hpp>

#include <ribbonweave/extensions.hpp>
#include <ribbonweave/operators.hpp>

#include <map>
#include <set>

using namespace ribbonweave;

namespace {
Partition P(const std::string& s) { return Partition::parse(s); }
Composition C(const std::string& s) { return Composition::parse(s); }

// all (lam, mid, xi) chains with |xi| <= max and both steps nonempty ribbons
template <class F>
void for_each_chain(int max_size, F&& f) {
    for (int n = 2; n <= max_size; ++n)
        for (const Partition& xi : all_partitions(n))
            for (int s2 = 1; s2 < n; ++s2)
                for (const Ribbon& r2 : removable_ribbons(xi, s2)) {
                    const Partition mid = apply_ribbon(xi, r2);
                    for (int s1 = 1; s1 <= mid.size(); ++s1)
                        for (const Ribbon& r1 : removable_ribbons(mid, s1))
                            f(apply_ribbon(mid, r1), mid, xi);
                }
}
}  // namespace

TEST_CASE("lozenge rule on rigid and exchangeable chains") {
    const LozengeOutcome rigid = lozenge_rule(P(""), P("1"), P("1,1"));
    CHECK(rigid.tag == LozengeCase::Exchange);
    CHECK(rigid.value == P("1"));

    const LozengeOutcome ex = lozenge_rule(P(""), P("3"), P("3,2"));
    CHECK(ex.tag == LozengeCase::Exchange);
    CHECK(ex.value == P("1,1"));  // the unique nu with steps (2,3)
}

TEST_CASE("lozenge rule agrees with brute force and has the stated signs") {
    long long blocked_count = 0;
    for_each_chain(8, [&](const Partition& lam, const Partition& mid, const Partition& xi) {
        const int s1 = mid.size() - lam.size();
        const int s2 = xi.size() - mid.size();
        const int sign_in = skew_ribbon_sign(lam, mid) * skew_ribbon_sign(mid, xi);
        const LozengeOutcome out = lozenge_rule(lam, mid, xi);

        // brute-force candidate sets
        std::vector<Partition> swapped, blocked;
        for (const Partition& rho : all_partitions(lam.size() + s2)) {
            if (!(ribbon_interval(lam, rho) && !(rho == lam))) continue;
            if (!(ribbon_interval(rho, xi) && !(rho == xi))) continue;
            swapped.push_back(rho);
        }
        for (const Partition& rho : all_partitions(mid.size())) {
            if (rho == mid) continue;
            if (!(ribbon_interval(lam, rho) && ribbon_interval(rho, xi))) continue;
            blocked.push_back(rho);
        }

        if (out.tag == LozengeCase::Exchange) {
            REQUIRE(std::count(swapped.begin(), swapped.end(), out.value) == 1);
            REQUIRE(xi.size() - out.value.size() == s1);
            REQUIRE(skew_ribbon_sign(lam, out.value) * skew_ribbon_sign(out.value, xi) == sign_in);
            // the canonical exchange is involutive
            const LozengeOutcome back = lozenge_rule(lam, out.value, xi);
            REQUIRE(back.tag == LozengeCase::Exchange);
            REQUIRE(back.value == mid);
            // the strict dichotomy holds when the step sizes differ
            if (s1 != s2) REQUIRE(blocked.empty());
        } else {
            ++blocked_count;
            REQUIRE(swapped.empty());  // exactly-one dichotomy
            REQUIRE(std::count(blocked.begin(), blocked.end(), out.value) == 1);
            REQUIRE(out.value.size() - lam.size() == s1);
            REQUIRE(skew_ribbon_sign(lam, out.value) * skew_ribbon_sign(out.value, xi) == -sign_in);
            const LozengeOutcome back = lozenge_rule(lam, out.value, xi);
            REQUIRE(back.tag == LozengeCase::Blocked);
            REQUIRE(back.value == mid);
        }
    });
    CHECK(blocked_count > 0);
}

TEST_CASE("lozenge marking") {
    CHECK(mark_lozenges({1, 2, 3, 4}, 4).empty());
    CHECK(mark_lozenges({2, 1}, 2) == std::set<std::pair<int, int>>{{1, 1}});
    // the 3142 marking from the worked example
    CHECK(mark_lozenges({3, 1, 4, 2}, 4) ==
          std::set<std::pair<int, int>>{{1, 1}, {1, 3}, {2, 3}});
    // reverse permutations mark the full triangle
    for (int ell = 2; ell <= 5; ++ell) {
        std::vector<int> rev(ell);
        for (int i = 0; i < ell; ++i) rev[i] = ell - i;
        CHECK(mark_lozenges(rev, ell).size() == static_cast<std::size_t>(ell * (ell - 1) / 2));
    }
}

TEST_CASE("marking realizes the permutation on contents (token model)") {
    // simulate the sweep on distinct tokens: trivial moves deposit the
    // pending token, marked cells let the upper one drop past it
    auto realize = [](const std::vector<int>& sigma, int ell) {
        const auto marks = mark_lozenges(sigma, ell);
        std::vector<int> tokens(static_cast<std::size_t>(ell));
        std::iota(tokens.begin(), tokens.end(), 1);
        std::vector<int> output(static_cast<std::size_t>(ell) + 1, 0);
        for (int d = 1; d <= ell - 1; ++d) {
            std::vector<int> next;
            int pending = tokens[0];
            for (int k = 1; k <= ell - d; ++k) {
                const bool marked = marks.count({d, d + k - 1}) > 0;
                if (marked) {
                    next.push_back(tokens[static_cast<std::size_t>(k)]);
                } else {
                    next.push_back(pending);
                    pending = tokens[static_cast<std::size_t>(k)];
                }
            }
            output[static_cast<std::size_t>(ell - d + 1)] = pending;
            tokens = next;
        }
        output[1] = tokens[0];
        return output;
    };
    for (int ell = 1; ell <= 5; ++ell) {
        std::vector<int> sigma(static_cast<std::size_t>(ell));
        std::iota(sigma.begin(), sigma.end(), 1);
        do {
            const auto out = realize(sigma, ell);
            for (int x = 1; x <= ell; ++x)
                REQUIRE(out[static_cast<std::size_t>(sigma[static_cast<std::size_t>(x - 1)])] == x);
        } while (std::next_permutation(sigma.begin(), sigma.end()));
    }
}

TEST_CASE("permute_content on whole ranges is a signed bijection") {
    for (int n = 2; n <= 6; ++n)
        for (const Partition& shape : all_partitions(n))
            for (int parts = 2; parts <= std::min(n, 3); ++parts)
                for (const Composition& c : compositions_exact(n, parts)) {
                    const auto dom = enumerate_tableaux(shape, c);
                    if (dom.empty()) continue;
                    std::vector<int> sigma(static_cast<std::size_t>(parts));
                    std::iota(sigma.begin(), sigma.end(), 1);
                    do {
                        const Composition target = permute_composition(c, sigma);
                        const auto codom = enumerate_tableaux(shape, target);
                        std::set<std::vector<Partition>> images;
                        std::map<std::vector<Partition>, std::vector<Partition>> matched;
                        long long converted_signed = 0;
                        for (const RibbonTableau& t : dom) {
                            const PermuteResult res = permute_content(t, sigma);
                            if (res.end == PermuteEnd::Converted) {
                                REQUIRE(res.tableau.shape() == shape);
                                REQUIRE(res.tableau.content() == target);
                                REQUIRE(res.tableau.sign() == t.sign());
                                REQUIRE(images.insert(res.tableau.chain).second);
                                converted_signed += t.sign();
                                // the reverse sweep inverts it
                                const PermuteResult back = permute_content_inverse(res.tableau, sigma);
                                REQUIRE(back.end == PermuteEnd::Converted);
                                REQUIRE(back.tableau.chain == t.chain);
                            } else {
                                REQUIRE(res.tableau.content() == c);
                                REQUIRE(res.tableau.sign() == -t.sign());
                                REQUIRE(!(res.tableau.chain == t.chain));
                                matched.emplace(t.chain, res.tableau.chain);
                            }
                        }
                        for (const auto& [a, b] : matched) {
                            REQUIRE(matched.count(b) == 1);
                            REQUIRE(matched.at(b) == a);
                        }
                        // backward from the target side: non-images pair off
                        long long codom_signed = 0, dom_signed = 0;
                        for (const RibbonTableau& t : dom) dom_signed += t.sign();
                        for (const RibbonTableau& t : codom) {
                            codom_signed += t.sign();
                            if (images.count(t.chain)) continue;
                            const PermuteResult res = permute_content_inverse(t, sigma);
                            REQUIRE(res.end == PermuteEnd::Matched);
                            REQUIRE(res.tableau.content() == target);
                            REQUIRE(res.tableau.sign() == -t.sign());
                        }
                        REQUIRE(dom_signed == codom_signed);
                    } while (std::next_permutation(sigma.begin(), sigma.end()));
                }
}

TEST_CASE("signed tableau counts are invariant under content rearrangement") {
    for (int n = 1; n <= 7; ++n)
        for (const Partition& shape : all_partitions(n))
            for (int parts = 1; parts <= std::min(n, 4); ++parts)
                for (const Composition& c : compositions_exact(n, parts)) {
                    std::vector<int> sorted = c.parts;
                    std::sort(sorted.rbegin(), sorted.rend());
                    REQUIRE(signed_tableau_count(shape, c) ==
                            signed_tableau_count(shape, Composition{sorted}));
                }
}

TEST_CASE("standard-content sweeps act on standard tableaux") {
    // all ribbon sizes 1: outputs are again standard-content tableaux
    const Composition ones = C("1,1,1,1");
    for (const Partition& shape : all_partitions(4))
        for (const RibbonTableau& t : enumerate_tableaux(shape, ones)) {
            const std::vector<int> rev{4, 3, 2, 1};
            const PermuteResult res = permute_content(t, rev);
            REQUIRE(res.end == PermuteEnd::Converted);  // all signs +1, no matching possible
            REQUIRE(res.tableau.content() == ones);
            REQUIRE(res.tableau.shape() == shape);
        }
}

TEST_CASE("oscillating tableaux enumerate and count") {
    const auto o11 = enumerate_oscillating(1, 1);
    REQUIRE(o11.size() == 1);
    CHECK(o11[0].chain == std::vector<Partition>{P(""), P("1"), P("")});
    CHECK(o11[0].sign() == 1);

    const auto o21 = enumerate_oscillating(2, 1);
    REQUIRE(o21.size() == 2);
    CHECK(o21[0].sign() + o21[1].sign() == 2);

    // the closed form is pinned against brute force
    for (int ell = 1; ell <= 3; ++ell)
        for (int n = ell; n <= 6; ++n)
            REQUIRE(BigInt(signed_count_oscillating_brute(n, ell)) == signed_count_oscillating(n, ell));
}

TEST_CASE("oscillating counts agree across two enumeration strategies") {
    // second route: the coefficient of q^{2n} in <empty, (D+U)^{2 ell} empty>
    for (int ell = 1; ell <= 3; ++ell) {
        const int max_n = 6;
        const int trunc = 2 * max_n;
        PartitionVector<QPoly> v = unit_vector(Partition{}, QPoly::one(trunc));
        for (int s = 0; s < 2 * ell; ++s) {
            PartitionVector<QPoly> next = up_q(v, max_n, trunc);
            for (auto& [p, coeff] : down_q(v, trunc)) opdetail::add_term(next, p, coeff);
            v = next;
        }
        auto it = v.find(Partition{});
        const QPoly series = it == v.end() ? QPoly(trunc) : it->second;
        for (int n = ell; n <= max_n; ++n)
            REQUIRE(series.coef(2 * n) == BigInt(signed_count_oscillating_brute(n, ell)));
    }
}

TEST_CASE("oscillating correspondence on a single pair") {
    const SquareOrder order = SquareOrder::staircase(1);
    for (int k = 1; k <= 4; ++k)
        for (int h = 0; h < k; ++h) {
            const HookMatching m({{1, 2}}, {Hook(k, h)});
            const OscillatingTableau t = oscillating_correspondence(m, order);
            REQUIRE(t.chain == std::vector<Partition>{P(""), Hook(k, h).shape(), P("")});
            const auto back = oscillating_correspondence_inverse(t, order);
            REQUIRE(std::holds_alternative<HookMatching>(back));
            REQUIRE(std::get<HookMatching>(back) == m);
        }
}

TEST_CASE("oscillating correspondence is a signed bijection for small sizes") {
    for (int ell = 1; ell <= 2; ++ell) {
        const SquareOrder order = SquareOrder::staircase(ell);
        for (int n = ell; n <= 4; ++n) {
            const auto matchings = enumerate_hook_matchings(n, ell);
            const auto oscs = enumerate_oscillating(n, ell);
            std::set<std::vector<Partition>> image;
            for (const HookMatching& m : matchings) {
                const OscillatingTableau t = oscillating_correspondence(m, order);
                REQUIRE(t.size() == n);
                REQUIRE(t.length() == ell);
                REQUIRE(image.insert(t.chain).second);  // injective
                const auto back = oscillating_correspondence_inverse(t, order);
                REQUIRE(std::holds_alternative<HookMatching>(back));
                REQUIRE(std::get<HookMatching>(back) == m);
            }
            long long osc_signed = 0;
            for (const OscillatingTableau& t : oscs) {
                osc_signed += t.sign();
                if (image.count(t.chain)) continue;
                const auto out = oscillating_correspondence_inverse(t, order);
                REQUIRE(std::holds_alternative<OscillatingTableau>(out));
                const OscillatingTableau& other = std::get<OscillatingTableau>(out);
                REQUIRE(other.sign() == -t.sign());
                const auto again = oscillating_correspondence_inverse(other, order);
                REQUIRE(std::holds_alternative<OscillatingTableau>(again));
                REQUIRE(std::get<OscillatingTableau>(again).chain == t.chain);
            }
            REQUIRE(osc_signed == static_cast<long long>(matchings.size()));
        }
    }
}

TEST_CASE("the worked length-3 matching runs through the staircase") {
    const SquareOrder order = SquareOrder::staircase(3);
    const HookMatching m({{1, 3}, {2, 6}, {4, 5}}, {Hook(2, 0), Hook(1, 0), Hook(2, 1)});
    const OscillatingTableau t = oscillating_correspondence(m, order);
    CHECK(t.length() == 3);
    CHECK(t.size() == 5);
    const auto back = oscillating_correspondence_inverse(t, order);
    REQUIRE(std::holds_alternative<HookMatching>(back));
    CHECK(std::get<HookMatching>(back) == m);
}
