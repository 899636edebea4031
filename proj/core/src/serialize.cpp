#include "k3o/serialize.hpp"

namespace k3o {

json to_json(const EigenProfile& p) {
    json orbits = json::object();
    for (auto [d, m] : p.orbits()) orbits[std::to_string(d)] = m;
    return json{{"orbits", orbits}, {"dim", p.dimension()}};
}

EigenProfile profile_from_json(const json& j) {
    std::vector<std::pair<Int, Int>> entries;
    for (auto it = j.at("orbits").begin(); it != j.at("orbits").end(); ++it)
        entries.emplace_back(std::stoll(it.key()), it.value().get<Int>());
    return make_profile(entries, j.at("dim").get<Int>());
}

json to_json(const Certificate& c) {
    json j{{"rule", rule_name(c.rule)},
           {"shape", {{"m", c.shape.m}, {"n", c.shape.n}}},
           {"divisor", c.divisor},
           {"value", c.value},
           {"note", c.note}};
    if (c.profile) j["profile"] = to_json(*c.profile);
    return j;
}

json to_json(const ShapeVerdict& v) {
    json witnesses = json::array();
    for (const auto& w : v.witnesses) {
        json jw = to_json(w);
        jw["bracket"] = format_bracket(w);
        witnesses.push_back(jw);
    }
    json certs = json::array();
    for (const auto& c : v.certificates) certs.push_back(to_json(c));
    return json{{"m", v.shape.m},
                {"n", v.shape.n},
                {"verdict", v.feasible ? "feasible" : "infeasible"},
                {"witnesses", witnesses},
                {"certificates", certs}};
}

json to_json(const OrderVerdict& v) {
    json shapes = json::array();
    for (const auto& s : v.shapes) shapes.push_back(to_json(s));
    return json{{"order", v.order},
                {"characteristic", v.characteristic},
                {"verdict", v.feasible ? "feasible" : "infeasible"},
                {"shapes", shapes}};
}

json to_json(const ReplayReport& r) {
    json rows = json::array();
    for (const auto& a : r.assertions) {
        std::string status = a.status == AssertStatus::Pass ? "pass"
                             : a.status == AssertStatus::Fail
                                 ? "fail"
                                 : "geometry_input";
        rows.push_back(json{{"claim", a.claim},
                            {"computed", a.computed},
                            {"status", status}});
    }
    return json{{"lemma", r.lemma}, {"title", r.title}, {"assertions", rows}};
}

json to_json(const WildClassEntry& e) {
    json cands = json::array();
    for (const auto& [p, tag] : e.candidates) {
        json jc = to_json(p);
        jc["bracket"] = format_bracket(p);
        jc["case"] = tag;
        cands.push_back(jc);
    }
    json j{{"n", e.n},
           {"status", wild_status_name(e.status)},
           {"candidates", cands},
           {"lemmas", e.lemmas},
           {"flags", e.flags}};
    if (!e.example_id.empty()) j["example"] = e.example_id;
    if (!e.note.empty()) j["note"] = e.note;
    return j;
}

json wild_classification_json(Int p) {
    json entries = json::array();
    for (const auto& [n, e] : classify_wild(p)) entries.push_back(to_json(e));
    return json{{"p", p}, {"orders", entries}};
}

json to_json(const VerificationReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks)
        checks.push_back(json{{"name", c.name},
                              {"passed", c.passed},
                              {"skipped", c.skipped},
                              {"detail", c.detail}});
    return json{{"id", r.id},
                {"characteristic", r.characteristic},
                {"checks", checks},
                {"all_pass", r.all_pass()}};
}

json to_json(const VerifySummary& s) {
    json reports = json::array();
    for (const auto& r : s.reports) reports.push_back(to_json(r));
    return json{{"characteristic", s.characteristic},
                {"entries", s.entries},
                {"passed", s.passed},
                {"reports", reports}};
}

json table1_json() {
    json by_phi = json::object();
    for (const auto& [phi, ns] : table1()) by_phi[std::to_string(phi)] = ns;
    return json{{"phi_classes", by_phi}};
}

json sets_json(Int characteristic) {
    json j;
    j["characteristic"] = characteristic;
    std::set<Int> orders = ord_set(characteristic);
    j["ord"] = std::vector<Int>(orders.begin(), orders.end());
    j["ord_max"] = orders.empty() ? 0 : *orders.rbegin();
    if (characteristic == 2 || characteristic == 3)
        j["tame_only"] = true;
    if (characteristic > 0) {
        std::set<Int> tv = tv_set(characteristic);
        j["tv"] = std::vector<Int>(tv.begin(), tv.end());
        j["tv_max"] = *tv.rbegin();
        std::set<Int> b = b_set(characteristic);
        j["b"] = std::vector<Int>(b.begin(), b.end());
        j["beta"] = beta(characteristic);
    }
    j["note_60"] =
        "order 60 is purely-non-symplectically infeasible by external input; "
        "the eigenvalue engine reports shape (1,60) as spectrally feasible "
        "and TV excludes 60 by definition";
    return j;
}

json bounds_json(Int p) {
    GroupBound g = group_bound(p);
    json j{{"p", g.p}, {"beta", g.beta_p}};
    if (p == 11) {
        j["m22_bound"] = g.m22_bound;
        j["m22_order"] = kM22Order;
    } else {
        j["exceptional"] = g.exceptional;
        j["non_exceptional"] = g.non_exceptional;
        j["m20_order"] = kM20Order;
        j["m21_order"] = kM21Order;
    }
    return j;
}

} // namespace k3o
