#include "k3o/ring.hpp"

#include "k3o/errors.hpp"

#include <cassert>
#include <sstream>

namespace k3o {

CyclotomicRing::CyclotomicRing(Int root_order, Int characteristic)
    : n_(root_order), p_(characteristic), modulus_(cyclotomic_poly(root_order)) {
    assert(n_ >= 1);
    assert(p_ == 0 || p_ >= 2);
    deg_ = static_cast<Int>(modulus_.size()) - 1;
}

Int CyclotomicRing::norm(Int v) const {
    if (p_ == 0) return v;
    return ((v % p_) + p_) % p_;
}

CyclotomicRing::Elem CyclotomicRing::from_int(Int v) const {
    Elem e = zero();
    e[0] = norm(v);
    return e;
}

CyclotomicRing::Elem CyclotomicRing::zeta_pow(Int k) const {
    k %= n_;
    if (k < 0) k += n_;
    std::vector<Int> poly(k + 1, 0);
    poly[k] = 1;
    return reduce(std::move(poly));
}

CyclotomicRing::Elem CyclotomicRing::add(const Elem& a, const Elem& b) const {
    Elem c = zero();
    for (Int i = 0; i < deg_; ++i) c[i] = norm(a[i] + b[i]);
    return c;
}

CyclotomicRing::Elem CyclotomicRing::sub(const Elem& a, const Elem& b) const {
    Elem c = zero();
    for (Int i = 0; i < deg_; ++i) c[i] = norm(a[i] - b[i]);
    return c;
}

CyclotomicRing::Elem CyclotomicRing::neg(const Elem& a) const {
    Elem c = zero();
    for (Int i = 0; i < deg_; ++i) c[i] = norm(-a[i]);
    return c;
}

CyclotomicRing::Elem CyclotomicRing::mul(const Elem& a, const Elem& b) const {
    std::vector<Int> t(2 * deg_ - 1, 0);
    for (Int i = 0; i < deg_; ++i) {
        if (a[i] == 0) continue;
        for (Int j = 0; j < deg_; ++j) t[i + j] += a[i] * b[j];
    }
    return reduce(std::move(t));
}

bool CyclotomicRing::is_zero(const Elem& a) const {
    for (Int c : a)
        if (norm(c) != 0) return false;
    return true;
}

bool CyclotomicRing::equal(const Elem& a, const Elem& b) const {
    return is_zero(sub(a, b));
}

CyclotomicRing::Elem CyclotomicRing::reduce(std::vector<Int> poly) const {
    if (static_cast<Int>(poly.size()) < deg_) poly.resize(deg_, 0);
    for (Int i = static_cast<Int>(poly.size()) - 1; i >= deg_; --i) {
        Int c = poly[i];
        if (c == 0) continue;
        for (Int j = 0; j <= deg_; ++j) poly[i - deg_ + j] -= c * modulus_[j];
    }
    Elem out = zero();
    for (Int i = 0; i < deg_; ++i) out[i] = norm(poly[i]);
    return out;
}

Int CyclotomicRing::zeta_multiplicative_order() const {
    Elem acc = zeta_pow(1);
    Elem unit = one();
    for (Int k = 1; k <= 2 * n_; ++k) {
        if (equal(acc, unit)) return k;
        acc = mul(acc, zeta_pow(1));
    }
    return 0;
}

std::string CyclotomicRing::to_string(const Elem& a) const {
    std::ostringstream os;
    bool any = false;
    for (Int i = 0; i < deg_; ++i) {
        Int c = p_ == 0 ? a[i] : norm(a[i]);
        if (c == 0) continue;
        if (any) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << '-';
        Int ab = c < 0 ? -c : c;
        if (ab != 1 || i == 0) os << ab;
        if (i >= 1) {
            if (ab != 1) os << '*';
            os << 'z';
            if (i > 1) os << '^' << i;
        }
        any = true;
    }
    if (!any) os << '0';
    return os.str();
}

} // namespace k3o
