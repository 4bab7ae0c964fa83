#include <catch2/catch_amalgamated.hpp>

#include <ribbonweave/json_io.hpp>

using namespace ribbonweave;
using nlohmann::json;

TEST_CASE("JSON forms are the documented schemas") {
    CHECK(json(Partition::parse("4,2,2,1")).dump() == "[4,2,2,1]");
    CHECK(json(Partition{}).dump() == "[]");
    CHECK(json(Hook(3, 1)).dump() == "[3,1]");

    const HookPermutation hp({Hook(1, 0), Hook(2, 1)}, {2, 1});
    CHECK(json(hp).dump() == R"({"hooks":[[1,0],[2,1]],"sigma":[2,1]})");

    const RibbonTableau t({Partition{}, Partition::parse("1"), Partition::parse("2")});
    CHECK(json(t).dump() == R"({"chain":[[],[1],[2]]})");

    const HookMatching m({{1, 3}, {2, 4}}, {Hook(2, 0), Hook(1, 0)});
    CHECK(json(m).dump() == R"({"hooks":[[2,0],[1,0]],"pairs":[[1,3],[2,4]]})");
}

TEST_CASE("JSON round trips") {
    const HookPermutation hp({Hook(3, 2), Hook(1, 0), Hook(3, 2)}, {3, 2, 1});
    CHECK(json(hp).get<HookPermutation>() == hp);

    const HookInvolution inv(hp);
    CHECK(json(inv).get<HookInvolution>() == inv);

    const RibbonTableau t({Partition{}, Partition::parse("2,1")});
    CHECK(json(t).get<RibbonTableau>() == t);

    const OscillatingTableau osc({Partition{}, Partition::parse("2"), Partition{}});
    CHECK(json(osc).get<OscillatingTableau>() == osc);

    const HookMatching m({{1, 4}, {2, 3}}, {Hook(2, 1), Hook(3, 0)});
    CHECK(json(m).get<HookMatching>() == m);

    // parsing validates: a chain with a non-ribbon step is rejected
    CHECK_THROWS_AS(json::parse(R"({"chain":[[],[2,2]]})").get<RibbonTableau>(),
                    std::invalid_argument);
    CHECK_THROWS_AS(json::parse(R"({"hooks":[[1,0]],"sigma":[2]})").get<HookPermutation>(),
                    std::invalid_argument);
}
