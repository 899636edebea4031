#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "k3o/arith.hpp"

#include <cmath>
#include <numbers>

using namespace k3o;

TEST_CASE("euler phi values") {
    CHECK(euler_phi(66) == 20);
    CHECK(euler_phi(1) == 1);
    // brute force oracle for 45
    Int count = 0;
    for (Int k = 1; k < 45; ++k)
        if (gcd(k, 45) == 1) ++count;
    CHECK(count == 24);
    CHECK(euler_phi(45) == 24);
}

TEST_CASE("moebius values") {
    CHECK(moebius(6) == 1);
    CHECK(moebius(4) == 0);
    CHECK(moebius(1) == 1);
    CHECK(moebius(30) == -1);
}

TEST_CASE("divisors") {
    CHECK(divisors(14) == std::vector<Int>{1, 2, 7, 14});
    CHECK(divisors(1) == std::vector<Int>{1});
    CHECK(divisors(60) ==
          std::vector<Int>{1, 2, 3, 4, 5, 6, 10, 12, 15, 20, 30, 60});
}

TEST_CASE("ramanujan sums") {
    CHECK(ramanujan_sum(11, 1) == -1);
    for (Int k = 1; k <= 5; ++k) CHECK(ramanujan_sum(1, k) == 1);
    CHECK(ramanujan_sum(44, 26) == 2);
}

TEST_CASE("phi divisor-sum identity up to 1000") {
    for (Int n = 1; n <= 1000; ++n) {
        Int total = 0;
        for (Int d : divisors(n)) total += euler_phi(d);
        CHECK(total == n);
    }
}

TEST_CASE("ramanujan sum depends only on gcd with the exponent") {
    for (Int d = 1; d <= 100; ++d)
        for (Int k = 1; k <= 200; k += 7)
            CHECK(ramanujan_sum(d, k) == ramanujan_sum(d, gcd(d, k)));
}

TEST_CASE("ramanujan sums match the floating-point root sums") {
    const double pi = std::numbers::pi;
    for (Int d = 1; d <= 66; ++d) {
        for (Int k = 1; k <= 132; k += 5) {
            double sum = 0;
            for (Int j = 1; j <= d; ++j) {
                if (gcd(j, d) != 1) continue;
                sum += std::cos(2 * pi * j * k / d);
            }
            CHECK(std::abs(sum - static_cast<double>(ramanujan_sum(d, k))) <
                  1e-6);
        }
    }
}

TEST_CASE("ramanujan indicator identity") {
    for (Int n = 1; n <= 200; ++n) {
        for (Int k : {1LL, 7LL, 12LL, 100LL}) {
            Int total = 0;
            for (Int d : divisors(n)) total += ramanujan_sum(d, k);
            CHECK(total == (k % n == 0 ? n : 0));
        }
    }
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_poly(1) == std::vector<Int>{-1, 1});
    CHECK(cyclotomic_poly(2) == std::vector<Int>{1, 1});
    CHECK(cyclotomic_poly(12) == std::vector<Int>{1, 0, -1, 0, 1});
    for (Int n = 1; n <= 120; ++n) {
        auto phi_n = cyclotomic_poly(n);
        CHECK(static_cast<Int>(phi_n.size()) - 1 == euler_phi(n));
        // exact division of x^n - 1 by Phi_n leaves no remainder
        std::vector<Int> num(n + 1, 0);
        num[0] = -1;
        num[n] = 1;
        Int dn = n, dd = static_cast<Int>(phi_n.size()) - 1;
        for (Int i = dn; i >= dd; --i) {
            Int c = num[i];
            if (c == 0) continue;
            for (Int j = 0; j <= dd; ++j) num[i - dd + j] -= c * phi_n[j];
        }
        for (Int c : num) CHECK(c == 0);
    }
}
