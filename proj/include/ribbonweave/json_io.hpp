#pragma once

// JSON forms of the exchange types.
//   partition       [4,2,2,1]
//   hook            [size, height]
//   tableau         {"chain": [[parts...], ...]}
//   hook perm       {"hooks": [[size,height], ...], "sigma": [1-indexed images]}
//   hook matching   {"pairs": [[i,j], ...], "hooks": [[size,height], ...]}

#include <json.hpp>

#include "extensions.hpp"
#include "partition.hpp"
#include "tableaux.hpp"

namespace ribbonweave {

inline void to_json(nlohmann::json& j, const Partition& p) { j = p.parts(); }
inline void from_json(const nlohmann::json& j, Partition& p) {
    p = Partition(j.get<std::vector<int>>());
}

inline void to_json(nlohmann::json& j, const Hook& h) { j = nlohmann::json::array({h.size, h.height}); }
inline void from_json(const nlohmann::json& j, Hook& h) {
    if (!j.is_array() || j.size() != 2) throw std::invalid_argument("hook JSON form is [size, height]");
    h = Hook(j[0].get<int>(), j[1].get<int>());
}

inline void to_json(nlohmann::json& j, const Composition& c) { j = c.parts; }
inline void from_json(const nlohmann::json& j, Composition& c) {
    c = Composition(j.get<std::vector<int>>());
}

inline void to_json(nlohmann::json& j, const RibbonTableau& t) { j = nlohmann::json{{"chain", t.chain}}; }
inline void from_json(const nlohmann::json& j, RibbonTableau& t) {
    t = RibbonTableau(j.at("chain").get<std::vector<Partition>>());
}

inline void to_json(nlohmann::json& j, const HookPermutation& hp) {
    j = nlohmann::json{{"hooks", hp.hooks}, {"sigma", hp.sigma}};
}
inline void from_json(const nlohmann::json& j, HookPermutation& hp) {
    hp = HookPermutation(j.at("hooks").get<std::vector<Hook>>(), j.at("sigma").get<std::vector<int>>());
}

inline void to_json(nlohmann::json& j, const HookInvolution& inv) { to_json(j, inv.hp); }
inline void from_json(const nlohmann::json& j, HookInvolution& inv) {
    HookPermutation hp;
    from_json(j, hp);
    inv = HookInvolution(std::move(hp));
}

inline void to_json(nlohmann::json& j, const OscillatingTableau& t) {
    j = nlohmann::json{{"chain", t.chain}};
}
inline void from_json(const nlohmann::json& j, OscillatingTableau& t) {
    t = OscillatingTableau(j.at("chain").get<std::vector<Partition>>());
}

inline void to_json(nlohmann::json& j, const HookMatching& m) {
    auto pairs = nlohmann::json::array();
    for (auto& [a, b] : m.pairs) pairs.push_back(nlohmann::json::array({a, b}));
    j = nlohmann::json{{"pairs", pairs}, {"hooks", m.hooks}};
}
inline void from_json(const nlohmann::json& j, HookMatching& m) {
    std::vector<std::pair<int, int>> pairs;
    for (const auto& pr : j.at("pairs")) pairs.emplace_back(pr[0].get<int>(), pr[1].get<int>());
    m = HookMatching(std::move(pairs), j.at("hooks").get<std::vector<Hook>>());
}

}  // namespace ribbonweave
