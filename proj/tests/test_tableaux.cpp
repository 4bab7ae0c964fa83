#include <catch2/catch_amalgamated.hpp>

#include <ribbonweave/tableaux.hpp>

#include "oracles.hpp"

#include <set>

using namespace ribbonweave;

namespace {
Partition P(const std::string& s) { return Partition::parse(s); }
Composition C(const std::string& s) { return Composition::parse(s); }
}  // namespace

TEST_CASE("tableau enumeration on small shapes") {
    const auto whole = enumerate_tableaux(P("2,1"), C("3"));
    REQUIRE(whole.size() == 1);
    CHECK(whole[0].sign() == -1);

    const auto two = enumerate_tableaux(P("2,1"), C("2,1"));
    REQUIRE(two.size() == 2);
    std::multiset<int> signs{two[0].sign(), two[1].sign()};
    CHECK(signs == std::multiset<int>{-1, 1});
    CHECK(two[0].content().parts == std::vector<int>{2, 1});

    CHECK_THROWS_AS(enumerate_tableaux(P("2,1"), C("2,2")), std::invalid_argument);
}

TEST_CASE("the paper-sized tableau set of shape (8,6,6,2,1) and content (1,6,6,3,7)") {
    const auto ts = enumerate_tableaux(P("8,6,6,2,1"), C("1,6,6,3,7"));
    REQUIRE(!ts.empty());
    bool has_negative = false;
    for (const auto& t : ts) has_negative = has_negative || t.sign() == -1;
    CHECK(has_negative);
}

TEST_CASE("enumeration agrees with the geometric second enumerator") {
    for (int n = 1; n <= 7; ++n)
        for (const Partition& shape : all_partitions(n))
            for (int parts = 1; parts <= std::min(n, 3); ++parts)
                for (const Composition& c : compositions_exact(n, parts)) {
                    const auto mine = enumerate_tableaux(shape, c);
                    const auto other = oracles::enumerate_chains_geometric(shape, c);
                    REQUIRE(mine.size() == other.size());
                    std::set<std::vector<Partition>> a, b;
                    for (const auto& t : mine) a.insert(t.chain);
                    for (const auto& ch : other) b.insert(ch);
                    REQUIRE(a == b);
                    for (const auto& t : mine) REQUIRE(t.sign() == oracles::chain_sign(t.chain));
                }
}

TEST_CASE("enumeration by length") {
    CHECK(enumerate_tableaux_by_length(2, 1).size() == 2);
    CHECK(enumerate_tableaux_by_length(2, 2).size() == 2);
    const auto t31 = enumerate_tableaux_by_length(3, 1);
    CHECK(t31.size() == 3);
    long long signed_sum = 0;
    for (const auto& t : t31) signed_sum += t.sign();
    CHECK(signed_sum == 1);
}

TEST_CASE("hook sequence <-> subset bijection") {
    // the length-5 size-23 sequence with sizes (6,4,6,2,5), heights (3,1,0,1,3)
    const std::vector<Hook> hooks{Hook(6, 3), Hook(4, 1), Hook(6, 0), Hook(2, 1), Hook(5, 3)};
    CHECK(hooks_to_subset(hooks) == std::set<int>{4, 7, 9, 12, 13, 19, 21, 22, 26});
    CHECK(subset_to_hooks(std::set<int>{4, 7, 9, 12, 13, 19, 21, 22, 26}, 23, 5) == hooks);

    // single hook round trip
    for (int k = 1; k <= 6; ++k)
        for (int h = 0; h < k; ++h) {
            const std::vector<Hook> one{Hook(k, h)};
            CHECK(subset_to_hooks(hooks_to_subset(one), k, 1) == one);
        }

    // full round trip across all hook sequences of given size and length
    for (int n = 1; n <= 7; ++n)
        for (int ell = 1; ell <= std::min(3, n); ++ell) {
            std::set<std::set<int>> seen;
            long long count = 0;
            HookPermutationEnumerator en(n, ell);
            HookPermutation hp;
            while (en.next(hp)) {
                ++count;
                const auto sub = hooks_to_subset(hp.hooks);
                REQUIRE(static_cast<int>(sub.size()) == 2 * ell - 1);
                REQUIRE(*sub.rbegin() <= n + ell - 1);
                REQUIRE(subset_to_hooks(sub, n, ell) == hp.hooks);
                seen.insert(sub);
            }
            // count = C(n+ell-1, 2 ell-1) * ell!
            long long fact = 1;
            for (int t = 2; t <= ell; ++t) fact *= t;
            REQUIRE(count == static_cast<long long>(seen.size()) * fact);
        }
}

TEST_CASE("hook permutation counting") {
    CHECK(HookPermutationEnumerator(2, 1).collect().size() == 2);
    CHECK(HookPermutationEnumerator(2, 2).collect().size() == 2);
    CHECK(HookPermutationEnumerator(3, 2).collect().size() == 8);
    const auto two = HookPermutationEnumerator(2, 1).collect();
    std::set<Hook> hks{two[0].hooks[0], two[1].hooks[0]};
    CHECK(hks == std::set<Hook>{Hook(2, 0), Hook(2, 1)});
}

TEST_CASE("hook involutions of small content") {
    const auto h2 = enumerate_hook_involutions(C("2"));
    REQUIRE(h2.size() == 2);
    CHECK(h2[0].sign() + h2[1].sign() == 0);

    const auto h11 = enumerate_hook_involutions(C("1,1"));
    REQUIRE(h11.size() == 2);
    CHECK(h11[0].sign() + h11[1].sign() == 2);

    const auto h3 = enumerate_hook_involutions(C("3"));
    REQUIRE(h3.size() == 3);
    long long s = 0;
    for (const auto& inv : h3) s += inv.sign();
    CHECK(s == 1);
}

TEST_CASE("special involutions and the height-toggling involution") {
    // fixed hook 2:0 <-> 2:1 and 3:1 <-> 3:2
    const HookInvolution even0(HookPermutation({Hook(2, 0)}, {1}));
    const HookInvolution even1 = spec_involution(even0);
    CHECK(even1.hp.hooks[0] == Hook(2, 1));
    CHECK(spec_involution(even1) == even0);

    const HookInvolution odd1(HookPermutation({Hook(3, 1)}, {1}));
    CHECK(spec_involution(odd1).hp.hooks[0] == Hook(3, 2));

    CHECK(is_special(HookInvolution(HookPermutation({Hook(1, 0)}, {1}))));
    CHECK_FALSE(is_special(even0));
    CHECK(is_special(HookInvolution(HookPermutation({Hook(4, 2), Hook(4, 2)}, {2, 1}))));
    CHECK_THROWS_AS(spec_involution(HookInvolution(HookPermutation({Hook(1, 0)}, {1}))),
                    std::invalid_argument);
}

TEST_CASE("the signed count of hook involutions is the size of the special set") {
    for (int n = 1; n <= 8; ++n)
        for (int parts = 1; parts <= std::min(n, 3); ++parts)
            for (const Composition& mu : compositions_exact(n, parts)) {
                const auto all = enumerate_hook_involutions(mu);
                long long signed_sum = 0, specials = 0;
                for (const HookInvolution& inv : all) {
                    signed_sum += inv.sign();
                    if (is_special(inv)) {
                        ++specials;
                        REQUIRE(inv.sign() == 1);
                    } else {
                        const HookInvolution other = spec_involution(inv);
                        REQUIRE(other.sign() == -inv.sign());
                        REQUIRE(spec_involution(other) == inv);
                        REQUIRE(other.content() == inv.content());
                    }
                }
                REQUIRE(signed_sum == specials);
            }
}
