#include "k3o/arith.hpp"

#include "k3o/errors.hpp"

#include <cassert>
#include <map>
#include <mutex>

namespace k3o {

std::vector<std::pair<Int, Int>> factorize(Int n) {
    assert(n >= 1);
    std::vector<std::pair<Int, Int>> out;
    for (Int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            Int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            out.emplace_back(p, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

Int euler_phi(Int n) {
    assert(n >= 1);
    Int r = n;
    for (auto [p, e] : factorize(n)) r = r / p * (p - 1);
    return r;
}

Int moebius(Int n) {
    assert(n >= 1);
    Int sign = 1;
    for (auto [p, e] : factorize(n)) {
        if (e > 1) return 0;
        sign = -sign;
    }
    return sign;
}

std::vector<Int> divisors(Int n) {
    assert(n >= 1);
    std::vector<Int> small, large;
    for (Int d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
    return small;
}

bool is_prime(Int n) {
    if (n < 2) return false;
    for (Int p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

Int ramanujan_sum(Int d, Int k) {
    assert(d >= 1 && k >= 1);
    Int g = std::gcd(d, k);
    Int q = d / g;
    Int mu = moebius(q);
    if (mu == 0) return 0;
    return mu * (euler_phi(d) / euler_phi(q));
}

namespace {

// Exact division of polynomials with integer coefficients; the divisor is
// monic so the quotient is integral. Coefficients ascending.
std::vector<Int> divide_exact(std::vector<Int> num, const std::vector<Int>& den) {
    assert(!den.empty() && den.back() == 1);
    Int dn = static_cast<Int>(num.size()) - 1;
    Int dd = static_cast<Int>(den.size()) - 1;
    assert(dn >= dd);
    std::vector<Int> quot(dn - dd + 1, 0);
    for (Int i = dn; i >= dd; --i) {
        Int c = num[i];
        if (c == 0) continue;
        quot[i - dd] = c;
        for (Int j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    for (Int c : num) {
        (void)c;
        assert(c == 0);
    }
    return quot;
}

} // namespace

namespace {

std::vector<Int> cyclotomic_uncached(Int n) {
    // x^n - 1
    std::vector<Int> poly(n + 1, 0);
    poly[0] = -1;
    poly[n] = 1;
    for (Int d : divisors(n)) {
        if (d == n) continue;
        poly = divide_exact(std::move(poly), cyclotomic_poly(d));
    }
    return poly;
}

} // namespace

std::vector<Int> cyclotomic_poly(Int n) {
    assert(n >= 1);
    static std::map<Int, std::vector<Int>> cache;
    static std::mutex cache_mutex;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    auto poly = cyclotomic_uncached(n);
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.emplace(n, poly);
    return poly;
}

} // namespace k3o
