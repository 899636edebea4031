#pragma once

#include "k3o/ring.hpp"

#include <map>
#include <string>
#include <vector>

namespace k3o {

/// Exponent vector over a fixed variable list.
using Monomial = std::vector<int>;

/// Multivariate polynomial over a cyclotomic coefficient ring. The variable
/// list lives with the caller; polynomials only know its length.
class MultiPoly {
  public:
    MultiPoly() = default;
    MultiPoly(const CyclotomicRing* ring, std::size_t nvars)
        : ring_(ring), nvars_(nvars) {}

    static MultiPoly constant(const CyclotomicRing& ring, std::size_t nvars,
                              CyclotomicRing::Elem c);
    static MultiPoly variable(const CyclotomicRing& ring, std::size_t nvars,
                              std::size_t index);

    const CyclotomicRing* ring() const { return ring_; }
    std::size_t nvars() const { return nvars_; }
    const std::map<Monomial, CyclotomicRing::Elem>& terms() const {
        return terms_;
    }

    bool is_zero() const { return terms_.empty(); }
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly pow(Int e) const;
    MultiPoly scaled(const CyclotomicRing::Elem& c) const;
    bool operator==(const MultiPoly& o) const;

    /// Degree in one variable (0 for the zero polynomial).
    int degree_in(std::size_t var) const;
    int total_degree() const;

    /// Coefficient of x^i y^j (vars named by index) as a polynomial in the
    /// remaining variables.
    MultiPoly coefficient_of(std::size_t var, int exp) const;

    void add_term(Monomial m, CyclotomicRing::Elem c);

    std::string to_string(const std::vector<std::string>& vars) const;

  private:
    const CyclotomicRing* ring_ = nullptr;
    std::size_t nvars_ = 0;
    std::map<Monomial, CyclotomicRing::Elem> terms_;
};

/// Invertible affine substitution: each variable maps to a degree <= 1
/// polynomial. Covers diagonal root-of-unity maps and the wild shifts
/// t -> t + 1, y -> c x + y.
struct AffineMap {
    std::vector<MultiPoly> images; // one per variable, degree <= 1

    bool operator==(const AffineMap& o) const { return images == o.images; }
};

AffineMap identity_map(const CyclotomicRing& ring, std::size_t nvars);
bool is_identity(const AffineMap& m);
AffineMap compose(const AffineMap& first, const AffineMap& then);

/// Substitute the map into the polynomial and fully expand.
MultiPoly apply_map(const MultiPoly& p, const AffineMap& g);

/// Smallest k >= 1 with the k-fold composition equal to the identity, or 0
/// if none is found up to `bound`.
Int map_order(const AffineMap& g, Int bound);

/// Parse ascii math over the given variables: integers, variable names,
/// "zeta" (the ring's root of unity), +, -, *, ^ and parentheses. Explicit
/// '*' is required between factors.
MultiPoly parse_poly(const std::string& text, const CyclotomicRing& ring,
                     const std::vector<std::string>& vars);

/// Parse "v -> expr ; w -> expr ; ..." with every image of degree <= 1.
AffineMap parse_map(const std::string& text, const CyclotomicRing& ring,
                    const std::vector<std::string>& vars);

} // namespace k3o
