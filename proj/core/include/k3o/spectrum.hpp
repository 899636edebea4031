#pragma once

#include "k3o/arith.hpp"

#include <map>
#include <string>
#include <vector>

namespace k3o {

/// Multiset of full Galois orbits of roots of unity acting on a fixed-
/// dimensional space. orbits[d] counts orbits of primitive d-th roots,
/// each contributing phi(d) eigenvalues. Keys with zero multiplicity are
/// never stored.
class EigenProfile {
  public:
    EigenProfile() = default;

    const std::map<Int, Int>& orbits() const { return orbits_; }
    Int dimension() const { return dim_; }
    Int multiplicity(Int d) const {
        auto it = orbits_.find(d);
        return it == orbits_.end() ? 0 : it->second;
    }

    bool operator==(const EigenProfile& o) const {
        return dim_ == o.dim_ && orbits_ == o.orbits_;
    }
    bool operator<(const EigenProfile& o) const {
        if (dim_ != o.dim_) return dim_ < o.dim_;
        return orbits_ < o.orbits_;
    }

    friend EigenProfile make_profile(const std::vector<std::pair<Int, Int>>&, Int);
    friend EigenProfile power(const EigenProfile&, Int);

  private:
    std::map<Int, Int> orbits_;
    Int dim_ = 0;
};

/// Validated constructor; throws DimensionMismatch unless the orbit degrees
/// sum to `dimension`.
EigenProfile make_profile(const std::vector<std::pair<Int, Int>>& entries,
                          Int dimension);

/// Canonical eigenvalue list of a tame symplectic automorphism of order m.
/// Only m in 1..8 exist; the first eigenvalue 1 (an invariant ample class)
/// is folded into the multiplicity of orbit 1.
struct SymplecticSpectrum {
    Int order;
    EigenProfile profile;
};
SymplecticSpectrum symplectic_profile(Int m);

/// Fixed-point count f(m) of a symplectic automorphism of order m in 2..8.
Int symplectic_fixed_points(Int m);

/// Profile of the k-th power: orbit d maps to d/gcd(d,k) with multiplicity
/// scaled by phi(d)/phi(d').
EigenProfile power(const EigenProfile& p, Int k);

/// Exact integer trace of the k-th power on the represented space.
Int trace_power(const EigenProfile& p, Int k);

/// 2 + trace on H^2: the full alternating trace for a K3 surface
/// (b1 = b3 = 0). Requires dimension 22.
Int lefschetz(const EigenProfile& p, Int k);

/// lcm of the orbit labels: the order of the automorphism when the
/// representation is faithful.
Int profile_order(const EigenProfile& p);

/// Bracket rendering, orbits ascending by label, 1 and -1 written plainly:
/// e.g. "[1.14, -1.8]" or "[1.2, (z11:10).2]".
std::string format_bracket(const EigenProfile& p);

} // namespace k3o
