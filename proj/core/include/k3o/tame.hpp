#pragma once

#include "k3o/spectrum.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace k3o {

/// Order decomposition N = m.n: kernel order m of the action on 2-forms
/// (symplectic part) and image order n.
struct OrderShape {
    Int m = 1;
    Int n = 1;
    Int order() const { return m * n; }
    bool operator==(const OrderShape& o) const { return m == o.m && n == o.n; }
    bool operator<(const OrderShape& o) const {
        return m != o.m ? m < o.m : n < o.n;
    }
};

enum class Rule {
    R1_structure,        // 1 and zeta_n cannot both fit / faithfulness
    R2_symplectic_power, // no preimage multiset for a symplectic target orbit
    R3_trace_bound,      // some e(g^i) outside [0, e(g^n)]
    R5_orbit_consistency,// negative or fractional orbit count on Fix(g^n)
    EXHAUSTED            // preimage combinations exist but none is admissible
};

std::string rule_name(Rule r);

/// Machine-checkable elimination record. Replaying `rule` on `profile`
/// (when present) reproduces the failure described by the detail fields.
struct Certificate {
    OrderShape shape;
    std::optional<EigenProfile> profile;
    Rule rule;
    // R3: divisor = i, value = e(g^i). R5: divisor = s, value = s*o_s.
    // R1/R2: divisor = the target orbit label that has no admissible
    // preimage (0 when the obstruction is global), value unused.
    Int divisor = 0;
    Int value = 0;
    std::string note;
};

struct ShapeVerdict {
    OrderShape shape;
    bool feasible = false;
    std::vector<EigenProfile> witnesses;
    std::vector<Certificate> certificates;
};

struct OrderVerdict {
    Int order = 1;
    Int characteristic = 0;
    bool feasible = false;
    std::vector<ShapeVerdict> shapes;
};

/// Divisors d of N with phi(d) <= 21; the only orbit labels that can appear
/// on a 22-dimensional space alongside the invariant ample eigenvalue.
std::vector<Int> orbit_universe(Int order);

/// All (m, n) with m*n = N, m <= 8, phi(n) <= 21.
std::vector<OrderShape> enumerate_shapes(Int order);

/// Outcome of the structural enumeration: profiles P of degree 22 with
/// m_1 >= 1, m_n >= 1, profile_order(P) = N, power(P, n) = S_m.
struct ProfileEnumeration {
    std::vector<EigenProfile> profiles;
    // When empty, why: which rule failed first and at which target orbit.
    Rule empty_rule = Rule::EXHAUSTED;
    Int empty_target = 0;
    std::string empty_note;
};
ProfileEnumeration enumerate_profiles(const OrderShape& shape);

/// Moebius inversion of per-divisor fixed-point counts into orbit counts of
/// the cyclic action on Fix(g^n). Ok iff every orbit count is a nonnegative
/// integer.
struct OrbitCheck {
    bool ok = true;
    Int fail_divisor = 0; // first divisor s with bad count
    Int fail_value = 0;   // s * o_s at the failure
    std::map<Int, Int> orbit_counts;
};
OrbitCheck orbit_consistency(const std::map<Int, Int>& e_values, Int n);

/// R3 + R5 for a profile already satisfying R1-R2. Empty optional = pass.
std::optional<Certificate> check_profile(const EigenProfile& p,
                                         const OrderShape& shape);

/// Certificate soundness: re-run the cited rule and confirm it reproduces
/// the recorded failure.
bool replay_certificate(const Certificate& c);

ShapeVerdict classify_shape(const OrderShape& shape, Int characteristic);
OrderVerdict classify_order(Int order, Int characteristic);

/// Candidate orders {m*n : m <= 8, phi(n) <= 21}, ascending. Any K3
/// automorphism order lies here: the symplectic part is bounded by 8 and the
/// non-symplectic image needs a phi(n) <= 21 orbit next to the ample class.
std::vector<Int> candidate_orders();

/// All finite orders in the given characteristic (0, or a prime).
/// For p in {5,7,11} this includes the wild orders from the replay module.
/// For p in {2,3} only the tame orders are known; the result carries them.
std::set<Int> ord_set(Int characteristic);

/// Transcendental values in characteristic p: p coprime orders N != 60 with
/// phi(N) <= 20.
std::set<Int> tv_set(Int p);
/// Subset of TV_p dividing p+1, and its maximum.
std::set<Int> b_set(Int p);
Int beta(Int p);

/// Group-order bounds for characteristic p >= 11.
struct GroupBound {
    Int p = 0;
    Int beta_p = 0;
    // p = 11: single bound beta_11 * |M22|. p > 11: both branches.
    Int exceptional = 0;     // beta_p * |M21|  (supersingular, Artin inv. 1)
    Int non_exceptional = 0; // 66 * |M20|
    Int m22_bound = 0;       // only for p = 11
};
GroupBound group_bound(Int p);

inline constexpr Int kM20Order = 960;
inline constexpr Int kM21Order = 20160;
inline constexpr Int kM22Order = 443520;

/// phi-value -> all n with that totient, phi(n) <= 21, listed descending.
std::map<Int, std::vector<Int>> table1();

} // namespace k3o
