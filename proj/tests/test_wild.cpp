#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "k3o/errors.hpp"
#include "k3o/serialize.hpp"
#include "k3o/wild.hpp"

#include <algorithm>

using namespace k3o;

TEST_CASE("wild spectra") {
    auto w11 = wild_spectra(11);
    REQUIRE(w11.size() == 1);
    CHECK(w11[0].profile == make_profile({{1, 2}, {11, 2}}, 22));

    auto w7 = wild_spectra(7);
    REQUIRE(w7.size() == 2);
    CHECK(w7[0].profile == make_profile({{1, 10}, {7, 2}}, 22));
    CHECK(w7[1].profile == make_profile({{1, 4}, {7, 3}}, 22));

    auto w5 = wild_spectra(5);
    REQUIRE(w5.size() == 3);
    CHECK(w5[0].profile == make_profile({{1, 6}, {5, 4}}, 22));
    CHECK(w5[1].profile == make_profile({{1, 10}, {5, 3}}, 22));
    CHECK(w5[2].profile == make_profile({{1, 14}, {5, 2}}, 22));

    CHECK_THROWS_AS(wild_spectra(13), UnsupportedCharacteristic);

    for (Int p : {5LL, 7LL, 11LL})
        for (const auto& w : wild_spectra(p)) {
            CHECK(lefschetz(w.profile, 1) >= 0);
            CHECK(profile_order(w.profile) == p);
        }
}

TEST_CASE("wild enumeration examples") {
    auto e114 = wild_enumerate(11, 4);
    REQUIRE(e114.size() == 2);
    CHECK(e114[0].first == make_profile({{1, 1}, {2, 1}, {44, 1}}, 22));
    CHECK(e114[1].first == make_profile({{1, 2}, {44, 1}}, 22));

    CHECK(wild_enumerate(11, 5).empty());
    CHECK(wild_enumerate(11, 12).empty());

    auto e71 = wild_enumerate(7, 1);
    REQUIRE(e71.size() == 2);
    CHECK(e71[0].first == make_profile({{1, 4}, {7, 3}}, 22));
    CHECK(e71[1].first == make_profile({{1, 10}, {7, 2}}, 22));

    // determinism of the knapsack enumeration
    auto again = wild_enumerate(11, 4);
    REQUIRE(again.size() == e114.size());
    for (std::size_t i = 0; i < again.size(); ++i)
        CHECK(again[i].first == e114[i].first);
}

TEST_CASE("curve H^1 trace sets") {
    CHECK(curve_h1_traces(9, 11) == std::set<Int>{18, 7});
    CHECK(curve_h1_traces(0, 7) == std::set<Int>{0});
    CHECK(curve_h1_traces(5, 7) == std::set<Int>{10, 3});
    CHECK(curve_h1_traces(6, 7) == std::set<Int>{12, 5, -2});
    CHECK(curve_h1_traces(8, 7) == std::set<Int>{16, 9, 2});

    // the trivial action is always possible and traces are bounded by 2r
    for (Int r = 0; r <= 10; ++r)
        for (Int q : {5LL, 7LL, 11LL}) {
            auto ts = curve_h1_traces(r, q);
            CHECK(ts.count(2 * r) == 1);
            for (Int t : ts) CHECK(std::abs(t) <= 2 * r);
        }
}

TEST_CASE("fixed locus traces") {
    FixedLocusHypothesis c9;
    c9.big_curve_genus = 9;
    c9.action_order = 11;
    CHECK(fixed_locus_trace(c9, 11) == std::set<Int>{-16, -5});

    FixedLocusHypothesis empty;
    empty.action_order = 11;
    CHECK(fixed_locus_trace(empty, 11) == std::set<Int>{0});

    FixedLocusHypothesis c0c6;
    c0c6.rational_curves = 5;
    c0c6.fixed_rationals = 5;
    c0c6.big_curve_genus = 6;
    c0c6.action_order = 7;
    CHECK(fixed_locus_trace(c0c6, 7) == std::set<Int>{0, 7, 14});

    FixedLocusHypothesis bad;
    bad.isolated_points = 3; // not a multiple of 7, none fixed
    bad.action_order = 7;
    CHECK_THROWS_AS(fixed_locus_trace(bad, 7), InconsistentHypothesis);
}

TEST_CASE("deligne-lusztig comparison") {
    EigenProfile p44 = make_profile({{1, 2}, {44, 1}}, 22);
    FixedLocusHypothesis c9;
    c9.big_curve_genus = 9;
    c9.action_order = 11;
    auto r = dl_check(p44, 22, 4, c9);
    CHECK_FALSE(r.consistent);
    CHECK(r.lhs == 6);
    CHECK(r.rhs == std::set<Int>{-16, -5});

    EigenProfile identity = make_profile({{1, 22}}, 22);
    FixedLocusHypothesis whole;
    whole.isolated_points = 24; // e = 24 hypothesis, all fixed
    whole.fixed_isolated = 24;
    whole.action_order = 1;
    auto r2 = dl_check(identity, 1, 0, whole);
    // combined exponent 1: the identity profile has Tr = 24
    CHECK(r2.lhs == 24);
    CHECK(r2.consistent);

    // the order-84 first-family profile at k = 54
    EigenProfile p84 =
        make_profile({{1, 1}, {2, 1}, {3, 1}, {28, 1}, {7, 1}}, 22);
    FixedLocusHypothesis h7;
    h7.rational_curves = 7;
    h7.big_curve_genus = 8;
    h7.action_order = 7;
    auto r3 = dl_check(p84, 42, 12, h7);
    CHECK_FALSE(r3.consistent);
    CHECK(r3.lhs == 7);
    CHECK(r3.rhs == std::set<Int>{-14, -7, 0});
}

TEST_CASE("axiom table is consistent") {
    for (const auto& a : axiom_table()) {
        CHECK_FALSE(a.id.empty());
        CHECK_FALSE(a.statement.empty());
        CHECK(axiom(a.id).statement == a.statement);
    }
    CHECK_THROWS_AS(axiom("AX_NOPE"), Error);
}

TEST_CASE("replay catalog runs clean") {
    for (const auto& id : replay_catalog()) {
        ReplayReport r = replay_lemma(id);
        CAPTURE(id);
        CHECK(r.all_ok());
        for (const auto& a : r.assertions) {
            if (a.status == AssertStatus::Fail) {
                MESSAGE(id, ": ", a.claim, " -- ", a.computed);
            }
        }
        // deterministic: re-running gives the identical report
        ReplayReport again = replay_lemma(id);
        CHECK(to_json(r).dump() == to_json(again).dump());
    }
    CHECK_THROWS_AS(replay_lemma("L1.1"), UnknownLemma);
}

TEST_CASE("key replay assertions") {
    auto find = [](const ReplayReport& r, const std::string& needle) {
        for (const auto& a : r.assertions)
            if (a.claim.find(needle) != std::string::npos) return true;
        return false;
    };

    ReplayReport l73 = replay_lemma("L7.3");
    CHECK(find(l73, "Tr(g^26*|H^*) = 6"));
    CHECK(find(l73, "6 is not in {-16,-5}"));
    CHECK(find(l73, "trace 18 or 7"));
    CHECK(!l73.geometry_flags().empty());

    ReplayReport l82 = replay_lemma("L8.2");
    CHECK(find(l82, "[g^18*] = [1,1.9,(z14:6).2]"));
    CHECK(find(l82, "Tr(g^18*|H^*) = 14"));
    CHECK(find(l82, "genus-5"));

    ReplayReport l83 = replay_lemma("L8.3");
    CHECK(find(l83, "Tr(g^54*|H^*) = 7"));

    ReplayReport l97 = replay_lemma("L9.7_1pt");
    CHECK(find(l97, "510t1 + 690t2 + 750t3 + 450t4 + 150t5 = 1278"));

    ReplayReport l93 = replay_lemma("L9.3_25");
    CHECK(find(l93, "[1.2,(z25:20)]"));
}

TEST_CASE("wild classification per the main theorems") {
    auto realized = [](Int p) {
        std::set<Int> out;
        for (const auto& [n, e] : classify_wild(p))
            if (e.status == WildStatus::Realized) out.insert(n);
        return out;
    };
    CHECK(realized(11) == std::set<Int>{1, 2, 3, 6});
    CHECK(realized(7) == std::set<Int>{1, 2, 3, 4, 6});
    CHECK(realized(5) == std::set<Int>{1, 2, 3, 4, 6, 8});

    auto w11 = classify_wild(11);
    CHECK(w11.at(4).status == WildStatus::ExcludedWithGeometryFlag);
    CHECK_FALSE(w11.at(4).flags.empty());
    CHECK(std::find(w11.at(4).lemmas.begin(), w11.at(4).lemmas.end(),
                    "L7.3") != w11.at(4).lemmas.end());
    for (Int n : {5LL, 7LL, 9LL, 12LL})
        CHECK(w11.at(n).status == WildStatus::SpectrallyInfeasible);

    auto w5 = classify_wild(5);
    CHECK(w5.at(5).status == WildStatus::SpectrallyInfeasible);
    CHECK(w5.at(10).status == WildStatus::SpectrallyInfeasible);
    CHECK(w5.at(12).status == WildStatus::ExcludedWithGeometryFlag);

    auto w7 = classify_wild(7);
    CHECK(w7.at(12).status == WildStatus::ExcludedWithGeometryFlag);
    CHECK(w7.at(5).status == WildStatus::ExcludedWithGeometryFlag);

    CHECK_THROWS_AS(classify_wild(13), UnsupportedCharacteristic);
}

TEST_CASE("classification entries carry their kill trail") {
    for (Int p : {5LL, 7LL, 11LL}) {
        for (const auto& [n, e] : classify_wild(p)) {
            if (e.status == WildStatus::Realized) {
                CHECK_FALSE(e.example_id.empty());
            } else if (e.status == WildStatus::ExcludedWithGeometryFlag) {
                CHECK_FALSE(e.flags.empty());
            } else if (e.status == WildStatus::SpectrallyInfeasible) {
                CHECK(e.candidates.empty());
            }
        }
    }
}
