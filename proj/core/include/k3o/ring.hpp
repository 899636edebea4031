#pragma once

#include "k3o/arith.hpp"

#include <string>
#include <vector>

namespace k3o {

/// Z[z]/(Phi_N, p): residues of integer polynomials in a primitive N-th root
/// of unity, reduced mod the N-th cyclotomic polynomial and, when the
/// characteristic p is positive, mod p. Elements are dense coefficient
/// vectors of length phi(N).
class CyclotomicRing {
  public:
    using Elem = std::vector<Int>;

    CyclotomicRing(Int root_order, Int characteristic);

    Int root_order() const { return n_; }
    Int characteristic() const { return p_; }
    Int degree() const { return deg_; }

    Elem zero() const { return Elem(deg_, 0); }
    Elem one() const { return from_int(1); }
    Elem from_int(Int v) const;
    /// zeta^k, k may be any integer.
    Elem zeta_pow(Int k) const;

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    bool is_zero(const Elem& a) const;
    bool equal(const Elem& a, const Elem& b) const;

    /// Multiplicative order of z in the ring, or 0 if no power of z up to
    /// 2N is the identity. Equals N whenever gcd(N, p) = 1.
    Int zeta_multiplicative_order() const;

    /// Reduce an arbitrary-degree coefficient vector into the ring.
    Elem reduce(std::vector<Int> poly) const;

    std::string to_string(const Elem& a) const;

  private:
    Int n_, p_, deg_;
    std::vector<Int> modulus_; // Phi_N, ascending, monic
    Int norm(Int v) const;
};

} // namespace k3o
