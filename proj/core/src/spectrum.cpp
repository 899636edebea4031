#include "k3o/spectrum.hpp"

#include "k3o/errors.hpp"

#include <cassert>
#include <sstream>

namespace k3o {

EigenProfile make_profile(const std::vector<std::pair<Int, Int>>& entries,
                          Int dimension) {
    EigenProfile p;
    Int total = 0;
    for (auto [d, m] : entries) {
        assert(d >= 1 && m >= 0);
        if (m == 0) continue;
        p.orbits_[d] += m;
        total += m * euler_phi(d);
    }
    if (total != dimension) throw DimensionMismatch(total, dimension);
    p.dim_ = dimension;
    return p;
}

SymplecticSpectrum symplectic_profile(Int m) {
    switch (m) {
    case 1: return {1, make_profile({{1, 22}}, 22)};
    case 2: return {2, make_profile({{1, 14}, {2, 8}}, 22)};
    case 3: return {3, make_profile({{1, 10}, {3, 6}}, 22)};
    case 4: return {4, make_profile({{1, 8}, {4, 4}, {2, 6}}, 22)};
    case 5: return {5, make_profile({{1, 6}, {5, 4}}, 22)};
    case 6: return {6, make_profile({{1, 6}, {3, 4}, {6, 2}, {2, 4}}, 22)};
    case 7: return {7, make_profile({{1, 4}, {7, 3}}, 22)};
    case 8: return {8, make_profile({{1, 4}, {8, 2}, {4, 3}, {2, 4}}, 22)};
    default:
        throw UnsupportedOrder("no symplectic automorphism of order " +
                               std::to_string(m));
    }
}

Int symplectic_fixed_points(Int m) {
    switch (m) {
    case 2: return 8;
    case 3: return 6;
    case 4: return 4;
    case 5: return 4;
    case 6: return 2;
    case 7: return 3;
    case 8: return 2;
    default:
        throw UnsupportedOrder("no fixed-point count for symplectic order " +
                               std::to_string(m));
    }
}

EigenProfile power(const EigenProfile& p, Int k) {
    assert(k >= 1);
    EigenProfile out;
    out.dim_ = p.dimension();
    for (auto [d, m] : p.orbits()) {
        Int dp = d / gcd(d, k);
        out.orbits_[dp] += m * (euler_phi(d) / euler_phi(dp));
    }
    return out;
}

Int trace_power(const EigenProfile& p, Int k) {
    assert(k >= 1);
    Int t = 0;
    for (auto [d, m] : p.orbits()) t += m * ramanujan_sum(d, k);
    return t;
}

Int lefschetz(const EigenProfile& p, Int k) {
    if (p.dimension() != 22)
        throw DimensionMismatch(p.dimension(), 22);
    return 2 + trace_power(p, k);
}

Int profile_order(const EigenProfile& p) {
    Int l = 1;
    for (auto [d, m] : p.orbits()) {
        (void)m;
        l = lcm(l, d);
    }
    return l;
}

std::string format_bracket(const EigenProfile& p) {
    std::ostringstream os;
    os << '[';
    bool first = true;
    for (auto [d, m] : p.orbits()) {
        if (!first) os << ", ";
        first = false;
        if (d == 1)
            os << '1';
        else if (d == 2)
            os << "-1";
        else
            os << "(z" << d << ':' << euler_phi(d) << ')';
        if (m > 1) os << '.' << m;
    }
    os << ']';
    return os.str();
}

} // namespace k3o
