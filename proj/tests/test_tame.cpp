#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "k3o/errors.hpp"
#include "k3o/serialize.hpp"
#include "k3o/tame.hpp"

#include <algorithm>
#include <thread>

using namespace k3o;

TEST_CASE("orbit universe") {
    CHECK(orbit_universe(44) == std::vector<Int>{1, 2, 4, 11, 22, 44});
    CHECK(orbit_universe(1) == std::vector<Int>{1});
    CHECK(orbit_universe(23) == std::vector<Int>{1}); // phi(23) = 22
}

TEST_CASE("enumerate shapes") {
    auto s60 = enumerate_shapes(60);
    std::vector<OrderShape> want60 = {{1, 60}, {2, 30}, {3, 20},
                                      {4, 15}, {5, 12}, {6, 10}};
    CHECK(s60 == want60);
    CHECK(enumerate_shapes(1) == std::vector<OrderShape>{{1, 1}});
    std::vector<OrderShape> want66 = {{1, 66}, {2, 33}, {3, 22}, {6, 11}};
    CHECK(enumerate_shapes(66) == want66);
}

TEST_CASE("profile enumeration under the symplectic power rule") {
    // (2,16): the -1.8 part of S_2 has no preimage.
    auto e216 = enumerate_profiles({2, 16});
    CHECK(e216.profiles.empty());
    CHECK(e216.empty_rule == Rule::R2_symplectic_power);

    auto e11 = enumerate_profiles({1, 1});
    REQUIRE(e11.profiles.size() == 1);
    CHECK(e11.profiles[0] == make_profile({{1, 22}}, 22));

    auto e512 = enumerate_profiles({5, 12});
    EigenProfile witness = make_profile({{60, 1}, {12, 1}, {1, 2}}, 22);
    CHECK(std::find(e512.profiles.begin(), e512.profiles.end(), witness) !=
          e512.profiles.end());

    // every enumerated profile satisfies the structural rules
    for (const auto& p : e512.profiles) {
        CHECK(p.multiplicity(1) >= 1);
        CHECK(p.multiplicity(12) >= 1);
        CHECK(profile_order(p) == 60);
        CHECK(power(p, 12) == symplectic_profile(5).profile);
    }
}

TEST_CASE("orbit consistency") {
    // replay vector for the order-28 elimination
    std::map<Int, Int> e1{{1, 1}, {2, 1}, {7, -5}, {14, 8}};
    auto r1 = orbit_consistency(e1, 14);
    CHECK_FALSE(r1.ok);
    CHECK(r1.fail_divisor == 7);
    CHECK(r1.fail_value == -6);

    std::map<Int, Int> e2;
    for (Int i : divisors(12)) e2[i] = 4;
    auto r2 = orbit_consistency(e2, 12);
    CHECK(r2.ok);
    CHECK(r2.orbit_counts.at(1) == 4);
    for (Int s : divisors(12))
        if (s > 1) CHECK(r2.orbit_counts.at(s) == 0);

    std::map<Int, Int> e3{{1, 0}, {2, 8}};
    auto r3 = orbit_consistency(e3, 2);
    CHECK(r3.ok);
    CHECK(r3.orbit_counts.at(1) == 0);
    CHECK(r3.orbit_counts.at(2) == 4);
}

TEST_CASE("check_profile examples") {
    // (3,15): trace bound fails at the cube.
    EigenProfile p = make_profile({{9, 2}, {15, 1}, {1, 2}}, 22);
    auto cert = check_profile(p, {3, 15});
    REQUIRE(cert.has_value());
    CHECK(cert->rule == Rule::R3_trace_bound);
    CHECK(cert->divisor == 3);
    CHECK(cert->value == -4);

    // m = 1 has no eigenvalue-level obstructions.
    EigenProfile q = make_profile({{66, 1}, {1, 2}}, 22);
    CHECK_FALSE(check_profile(q, {1, 66}).has_value());
}

TEST_CASE("classify_shape on key examples") {
    CHECK_FALSE(classify_shape({8, 2}, 0).feasible);
    CHECK(classify_shape({5, 12}, 0).feasible);
    CHECK(classify_shape({1, 60}, 0).feasible);
    CHECK(classify_shape({1, 66}, 0).feasible);

    // (8,2) dies by the symplectic power rule.
    auto v = classify_shape({8, 2}, 0);
    REQUIRE(v.certificates.size() == 1);
    CHECK(v.certificates[0].rule == Rule::R2_symplectic_power);
    CHECK(v.certificates[0].divisor == 4);

    // (2,14): infeasible, and the surviving trace-clean profile is killed by
    // the orbit-count rule.
    auto v214 = classify_shape({2, 14}, 0);
    CHECK_FALSE(v214.feasible);
    bool has_r5 = false;
    for (const auto& c : v214.certificates)
        if (c.rule == Rule::R5_orbit_consistency) has_r5 = true;
    CHECK(has_r5);
}

TEST_CASE("certificate replay soundness") {
    std::vector<OrderShape> shapes = {{2, 14}, {3, 15}, {8, 2}, {2, 16},
                                      {4, 9},  {2, 22}, {6, 6}, {2, 44}};
    for (const auto& s : shapes) {
        auto v = classify_shape(s, 0);
        CHECK_FALSE(v.feasible);
        for (const auto& c : v.certificates) CHECK(replay_certificate(c));
    }
}

TEST_CASE("every certificate in the candidate universe replays") {
    for (Int n : candidate_orders()) {
        if (n > 132) continue; // the larger orders die the same ways
        for (const auto& shape : enumerate_shapes(n)) {
            auto v = classify_shape(shape, 0);
            for (const auto& c : v.certificates) {
                CAPTURE(shape.m);
                CAPTURE(shape.n);
                CHECK(replay_certificate(c));
            }
        }
    }
}

TEST_CASE("classification is safe to run from several threads") {
    auto serial = classify_order(60, 0);
    std::vector<std::thread> workers;
    std::vector<OrderVerdict> results(8);
    for (int i = 0; i < 8; ++i)
        workers.emplace_back(
            [&results, i] { results[i] = classify_order(60, 0); });
    for (auto& w : workers) w.join();
    for (const auto& r : results) {
        CHECK(r.feasible == serial.feasible);
        CHECK(to_json(r).dump() == to_json(serial).dump());
    }
}

TEST_CASE("wild orders are rejected by the tame classifier") {
    CHECK_THROWS_AS(classify_shape({1, 22}, 11), WildOrder);
    CHECK_THROWS_AS(classify_order(35, 5), WildOrder);
    CHECK_NOTHROW(classify_order(35, 11));
}

TEST_CASE("classify_order examples") {
    CHECK(classify_order(66, 0).feasible);
    CHECK(classify_order(1, 0).feasible);
    CHECK_FALSE(classify_order(88, 0).feasible);
}

TEST_CASE("tame shape exclusion matrix") {
    auto infeasible = [](Int m, Int n) {
        auto v = classify_shape({m, n}, 0);
        CAPTURE(m);
        CAPTURE(n);
        CHECK_FALSE(v.feasible);
    };

    // phi(n) > 13 and m >= 2
    for (Int n : {60, 48, 40, 34, 32, 17, 54, 38, 27, 19, 66, 50, 44, 33, 25})
        for (Int m = 2; m <= 8; ++m) infeasible(m, n);
    // phi(n) = 12
    for (Int n : {42, 36, 28, 26}) infeasible(2, n);
    for (Int n : {42, 36, 28, 26, 21, 13})
        for (Int m = 3; m <= 8; ++m) infeasible(m, n);
    // phi(n) = 10
    infeasible(2, 22);
    for (Int n : {22, 11})
        for (Int m = 3; m <= 8; ++m) infeasible(m, n);
    // phi(n) = 8
    infeasible(2, 16);
    infeasible(3, 16);
    infeasible(3, 15);
    infeasible(3, 30);
    infeasible(3, 24);
    infeasible(2, 24);
    infeasible(3, 20);
    infeasible(2, 20);
    infeasible(2, 30);
    for (Int n : {30, 24, 20, 16, 15})
        for (Int m = 4; m <= 8; ++m) infeasible(m, n);
    // phi(n) = 6
    infeasible(2, 18);
    infeasible(4, 9);
    infeasible(4, 7);
    infeasible(2, 14);
    infeasible(3, 9);
    infeasible(3, 18);
    for (Int n : {18, 14, 9, 7})
        for (Int m = 5; m <= 8; ++m) infeasible(m, n);
    // phi(n) = 4
    infeasible(6, 12);
    infeasible(4, 12);
    infeasible(6, 5);
    infeasible(4, 10);
    infeasible(6, 8);
    infeasible(4, 8);
    // phi(n) <= 2
    infeasible(6, 6);
    infeasible(8, 2);
    infeasible(8, 4);
    infeasible(8, 6);
    infeasible(4, 4);
    infeasible(6, 4);
    infeasible(6, 3);
}

TEST_CASE("realized shapes are feasible") {
    for (Int n : {66, 50, 44, 54, 38, 48, 40, 34, 32, 42, 36, 28, 26, 30})
        CHECK(classify_shape({1, n}, 0).feasible);
    CHECK(classify_shape({5, 12}, 0).feasible);
}

TEST_CASE("complex order set is the totient-bound set") {
    std::set<Int> want;
    for (Int n = 1; n <= 1000; ++n)
        if (euler_phi(n) <= 20) want.insert(n);
    CHECK(ord_set(0) == want);
    CHECK(*ord_set(0).rbegin() == 66);
}

TEST_CASE("ord sets per characteristic") {
    auto base = ord_set(0);
    auto minus = [&](std::vector<Int> out) {
        std::set<Int> s = base;
        for (Int v : out) s.erase(v);
        return s;
    };
    CHECK(ord_set(7) == base);
    CHECK(ord_set(23) == base);
    CHECK(ord_set(13) == minus({13, 26}));
    CHECK(ord_set(17) == minus({17, 34}));
    CHECK(ord_set(19) == minus({19, 38}));
    CHECK(ord_set(11) == minus({44}));
    CHECK(ord_set(5) == minus({25, 50, 60}));
}

TEST_CASE("transcendental value sets") {
    CHECK(*tv_set(11).rbegin() == 54);
    CHECK(*tv_set(7).rbegin() == 66);
    CHECK(*tv_set(3).rbegin() == 50);
    CHECK(*tv_set(2).rbegin() == 33);
    CHECK(tv_set(7).count(60) == 0);
}

TEST_CASE("beta values") {
    CHECK(beta(59) == 30);
    CHECK(beta(61) == 2);
    CHECK(beta(73) == 2);
    CHECK(beta(67) == 34);
    CHECK(beta(71) == 36);
    for (Int p = 2; p <= 53; ++p)
        if (is_prime(p)) CHECK(beta(p) == p + 1);
}

TEST_CASE("group bounds") {
    auto g11 = group_bound(11);
    CHECK(g11.beta_p == 12);
    CHECK(g11.m22_bound == 5322240);
    auto g13 = group_bound(13);
    CHECK(g13.non_exceptional == 63360);
    auto g67 = group_bound(67);
    CHECK(g67.exceptional == 34 * 20160);
    CHECK_THROWS_AS(group_bound(7), UnsupportedCharacteristic);
}

TEST_CASE("table 1") {
    auto t = table1();
    CHECK(t.at(20) == std::vector<Int>{66, 50, 44, 33, 25});
    CHECK(t.at(1) == std::vector<Int>{2, 1});
    CHECK(t.find(21) == t.end());
    CHECK(t.at(18) == std::vector<Int>{54, 38, 27, 19});
    CHECK(t.at(16) == std::vector<Int>{60, 48, 40, 34, 32, 17});
    CHECK(t.at(12) == std::vector<Int>{42, 36, 28, 26, 21, 13});
    CHECK(t.at(10) == std::vector<Int>{22, 11});
    CHECK(t.at(8) == std::vector<Int>{30, 24, 20, 16, 15});
    CHECK(t.at(6) == std::vector<Int>{18, 14, 9, 7});
    CHECK(t.at(4) == std::vector<Int>{12, 10, 8, 5});
    CHECK(t.at(2) == std::vector<Int>{6, 4, 3});
}

TEST_CASE("shape report json is deterministic") {
    auto v = classify_shape({2, 14}, 0);
    CHECK(to_json(v).dump() == to_json(classify_shape({2, 14}, 0)).dump());
    json j = to_json(v);
    CHECK(j.at("verdict") == "infeasible");
    CHECK(j.at("m") == 2);
    CHECK(j.at("n") == 14);
}
