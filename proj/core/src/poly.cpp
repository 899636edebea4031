#include "k3o/poly.hpp"

#include "k3o/errors.hpp"

#include <cassert>
#include <cctype>
#include <sstream>

namespace k3o {

MultiPoly MultiPoly::constant(const CyclotomicRing& ring, std::size_t nvars,
                              CyclotomicRing::Elem c) {
    MultiPoly p(&ring, nvars);
    p.add_term(Monomial(nvars, 0), std::move(c));
    return p;
}

MultiPoly MultiPoly::variable(const CyclotomicRing& ring, std::size_t nvars,
                              std::size_t index) {
    assert(index < nvars);
    MultiPoly p(&ring, nvars);
    Monomial m(nvars, 0);
    m[index] = 1;
    p.add_term(std::move(m), ring.one());
    return p;
}

void MultiPoly::add_term(Monomial m, CyclotomicRing::Elem c) {
    assert(ring_);
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (!ring_->is_zero(c)) terms_.emplace(std::move(m), std::move(c));
        return;
    }
    it->second = ring_->add(it->second, c);
    if (ring_->is_zero(it->second)) terms_.erase(it);
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    MultiPoly out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, ring_->neg(c));
    return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    assert(ring_ == o.ring_ && nvars_ == o.nvars_);
    MultiPoly out(ring_, nvars_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) {
            Monomial m(nvars_);
            for (std::size_t i = 0; i < nvars_; ++i) m[i] = m1[i] + m2[i];
            out.add_term(std::move(m), ring_->mul(c1, c2));
        }
    return out;
}

MultiPoly MultiPoly::pow(Int e) const {
    assert(e >= 0);
    MultiPoly acc = constant(*ring_, nvars_, ring_->one());
    MultiPoly base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

MultiPoly MultiPoly::scaled(const CyclotomicRing::Elem& c) const {
    MultiPoly out(ring_, nvars_);
    for (const auto& [m, coef] : terms_) out.add_term(m, ring_->mul(coef, c));
    return out;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    return (*this - o).is_zero();
}

int MultiPoly::degree_in(std::size_t var) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
    return d;
}

int MultiPoly::total_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) {
        int s = 0;
        for (int e : m) s += e;
        d = std::max(d, s);
    }
    return d;
}

MultiPoly MultiPoly::coefficient_of(std::size_t var, int exp) const {
    MultiPoly out(ring_, nvars_);
    for (const auto& [m, c] : terms_) {
        if (m[var] != exp) continue;
        Monomial reduced = m;
        reduced[var] = 0;
        out.add_term(std::move(reduced), c);
    }
    return out;
}

std::string MultiPoly::to_string(const std::vector<std::string>& vars) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << '(' << ring_->to_string(c) << ')';
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (m[i] == 0) continue;
            os << '*' << vars[i];
            if (m[i] > 1) os << '^' << m[i];
        }
    }
    return os.str();
}

AffineMap identity_map(const CyclotomicRing& ring, std::size_t nvars) {
    AffineMap g;
    for (std::size_t i = 0; i < nvars; ++i)
        g.images.push_back(MultiPoly::variable(ring, nvars, i));
    return g;
}

bool is_identity(const AffineMap& m) {
    for (std::size_t i = 0; i < m.images.size(); ++i) {
        const MultiPoly& im = m.images[i];
        MultiPoly v =
            MultiPoly::variable(*im.ring(), m.images.size(), i);
        if (!(im == v)) return false;
    }
    return true;
}

MultiPoly apply_map(const MultiPoly& p, const AffineMap& g) {
    if (p.nvars() != g.images.size())
        throw VariableMismatch("substitution has " +
                               std::to_string(g.images.size()) +
                               " images for " + std::to_string(p.nvars()) +
                               " variables");
    const CyclotomicRing& ring = *p.ring();
    MultiPoly out(&ring, p.nvars());
    for (const auto& [m, c] : p.terms()) {
        MultiPoly term = MultiPoly::constant(ring, p.nvars(), c);
        for (std::size_t i = 0; i < p.nvars(); ++i)
            if (m[i] > 0) term = term * g.images[i].pow(m[i]);
        out = out + term;
    }
    return out;
}

AffineMap compose(const AffineMap& first, const AffineMap& then) {
    AffineMap out;
    for (const MultiPoly& im : first.images)
        out.images.push_back(apply_map(im, then));
    return out;
}

Int map_order(const AffineMap& g, Int bound) {
    AffineMap acc = g;
    for (Int k = 1; k <= bound; ++k) {
        if (is_identity(acc)) return k;
        acc = compose(acc, g);
    }
    return 0;
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;
    const CyclotomicRing& ring;
    const std::vector<std::string>& vars;

    Parser(const std::string& text, const CyclotomicRing& r,
           const std::vector<std::string>& v)
        : s(text), ring(r), vars(v) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
            ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw ParseError(what + " at position " + std::to_string(pos) +
                         " in \"" + s + "\"");
    }

    Int parse_int() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            ++pos;
        if (start == pos) fail("expected integer");
        return std::stoll(s.substr(start, pos - start));
    }

    std::string parse_ident() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        if (start == pos) fail("expected identifier");
        return s.substr(start, pos - start);
    }

    MultiPoly parse_expr() {
        skip_ws();
        bool negate = false;
        while (true) {
            if (eat('+')) continue;
            if (eat('-')) {
                negate = !negate;
                continue;
            }
            break;
        }
        MultiPoly acc = parse_term();
        if (negate) acc = acc.scaled(ring.from_int(-1));
        for (;;) {
            skip_ws();
            if (eat('+')) {
                acc = acc + parse_term();
            } else if (eat('-')) {
                acc = acc - parse_term();
            } else {
                break;
            }
        }
        return acc;
    }

    MultiPoly parse_term() {
        MultiPoly acc = parse_factor();
        for (;;) {
            skip_ws();
            if (eat('*')) acc = acc * parse_factor();
            else break;
        }
        return acc;
    }

    MultiPoly parse_factor() {
        MultiPoly base = parse_base();
        skip_ws();
        if (eat('^')) {
            Int e = parse_int();
            if (e < 0) fail("negative exponent");
            return base.pow(e);
        }
        return base;
    }

    MultiPoly parse_base() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of input");
        if (eat('(')) {
            MultiPoly e = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (eat('-')) {
            return parse_base().scaled(ring.from_int(-1));
        }
        char c = s[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return MultiPoly::constant(ring, vars.size(),
                                       ring.from_int(parse_int()));
        }
        std::string id = parse_ident();
        if (id == "zeta")
            return MultiPoly::constant(ring, vars.size(), ring.zeta_pow(1));
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == id) return MultiPoly::variable(ring, vars.size(), i);
        fail("unknown identifier '" + id + "'");
    }
};

} // namespace

MultiPoly parse_poly(const std::string& text, const CyclotomicRing& ring,
                     const std::vector<std::string>& vars) {
    Parser p(text, ring, vars);
    MultiPoly out = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return out;
}

AffineMap parse_map(const std::string& text, const CyclotomicRing& ring,
                    const std::vector<std::string>& vars) {
    AffineMap out;
    out.images.resize(vars.size(), MultiPoly(&ring, vars.size()));
    std::vector<bool> seen(vars.size(), false);

    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(';', start);
        std::string piece = text.substr(
            start, end == std::string::npos ? std::string::npos : end - start);
        if (piece.find_first_not_of(" \t\n") != std::string::npos) {
            std::size_t arrow = piece.find("->");
            if (arrow == std::string::npos)
                throw ParseError("expected 'var -> expr' in \"" + piece + "\"");
            std::string name = piece.substr(0, arrow);
            name.erase(0, name.find_first_not_of(" \t\n"));
            name.erase(name.find_last_not_of(" \t\n") + 1);
            std::size_t idx = vars.size();
            for (std::size_t i = 0; i < vars.size(); ++i)
                if (vars[i] == name) idx = i;
            if (idx == vars.size())
                throw VariableMismatch("unknown variable '" + name + "'");
            MultiPoly image = parse_poly(piece.substr(arrow + 2), ring, vars);
            if (image.total_degree() > 1)
                throw ParseError("substitution for '" + name +
                                 "' is not affine-linear");
            out.images[idx] = image;
            seen[idx] = true;
        }
        if (end == std::string::npos) break;
        start = end + 1;
    }
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (!seen[i])
            throw VariableMismatch("no substitution given for '" + vars[i] +
                                   "'");
    return out;
}

} // namespace k3o
