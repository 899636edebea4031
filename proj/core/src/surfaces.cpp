#include "k3o/surfaces.hpp"

#include "k3o/errors.hpp"

#include <cassert>
#include <mutex>
#include <sstream>

namespace k3o {

std::string model_kind_name(ModelKind k) {
    switch (k) {
    case ModelKind::Weierstrass: return "weierstrass";
    case ModelKind::DoublePlane: return "double_plane";
    case ModelKind::WeightedHypersurface: return "weighted_hypersurface";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Catalog parsing
// ---------------------------------------------------------------------------

namespace {

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string w;
    while (is >> w) out.push_back(w);
    return out;
}

} // namespace

std::vector<SurfaceModel> load_catalog(const std::string& text) {
    std::vector<SurfaceModel> out;
    std::istringstream is(text);
    std::string line;
    std::optional<SurfaceModel> cur;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        std::size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;
        std::string body = line.substr(first);

        auto fail = [&](const std::string& what) {
            throw ParseError("catalog line " + std::to_string(lineno) + ": " +
                             what);
        };

        std::size_t sp = body.find(' ');
        std::string key = body.substr(0, sp);
        std::string rest = sp == std::string::npos ? "" : body.substr(sp + 1);

        if (key == "entry") {
            if (cur) fail("nested entry");
            cur = SurfaceModel{};
            cur->id = rest;
            if (cur->id.empty()) fail("entry needs an id");
            continue;
        }
        if (key == "end") {
            if (!cur) fail("end without entry");
            out.push_back(*cur);
            cur.reset();
            continue;
        }
        if (!cur) fail("field outside entry");

        if (key == "kind") {
            if (rest == "weierstrass") cur->kind = ModelKind::Weierstrass;
            else if (rest == "double_plane") cur->kind = ModelKind::DoublePlane;
            else if (rest == "weighted_hypersurface")
                cur->kind = ModelKind::WeightedHypersurface;
            else fail("unknown kind " + rest);
        } else if (key == "ring") {
            cur->ring_order = std::stoll(rest);
        } else if (key == "vars") {
            cur->vars = split_ws(rest);
        } else if (key == "weights") {
            for (const auto& w : split_ws(rest))
                cur->weights.push_back(std::stoll(w));
        } else if (key == "equation") {
            cur->equation_text = rest;
        } else if (key == "map") {
            cur->map_text = rest;
        } else if (key == "order") {
            cur->declared_order = std::stoll(rest);
        } else if (key == "chars") {
            auto words = split_ws(rest);
            if (words.empty()) fail("empty chars");
            if (words[0] == "coprime") {
                if (words.size() != 2) fail("chars coprime N");
                cur->coprime_to = std::stoll(words[1]);
                cur->char0_ok = true;
            } else if (words[0] == "only") {
                for (std::size_t i = 1; i < words.size(); ++i)
                    cur->only.push_back(std::stoll(words[i]));
                if (cur->only.empty()) fail("chars only needs primes");
            } else {
                fail("unknown chars clause " + words[0]);
            }
        } else if (key == "note") {
            cur->note = rest;
        } else {
            fail("unknown key " + key);
        }
    }
    if (cur) throw ParseError("catalog ended inside entry " + cur->id);
    return out;
}

const std::vector<SurfaceModel>& catalog() {
    static const std::vector<SurfaceModel> entries =
        load_catalog(builtin_catalog_text());
    return entries;
}

const SurfaceModel& catalog_entry(const std::string& id) {
    for (const SurfaceModel& m : catalog())
        if (m.id == id) return m;
    throw UnknownEntry("no catalog entry named " + id);
}

bool admissible(const SurfaceModel& m, Int characteristic) {
    if (!m.only.empty()) {
        for (Int p : m.only)
            if (p == characteristic) return true;
        return false;
    }
    if (characteristic == 0) return m.char0_ok;
    if (!is_prime(characteristic)) return false;
    return m.coprime_to == 0 || m.coprime_to % characteristic != 0;
}

std::vector<Int> admissible_characteristics(const SurfaceModel& m, Int bound) {
    std::vector<Int> out;
    if (admissible(m, 0)) out.push_back(0);
    for (Int p = 2; p <= bound; ++p)
        if (is_prime(p) && admissible(m, p)) out.push_back(p);
    return out;
}

InstantiatedModel instantiate(const SurfaceModel& m, Int characteristic) {
    if (!admissible(m, characteristic))
        throw CharacteristicNotAdmissible(
            m.id + " is not admissible in characteristic " +
            std::to_string(characteristic));
    auto ring =
        std::make_shared<const CyclotomicRing>(m.ring_order, characteristic);
    MultiPoly eq = parse_poly(m.equation_text, *ring, m.vars);
    AffineMap g = parse_map(m.map_text, *ring, m.vars);
    return InstantiatedModel{&m, std::move(ring), std::move(eq), std::move(g)};
}

InvarianceScalar invariance_scalar(const InstantiatedModel& m) {
    const CyclotomicRing& ring = m.ring();
    MultiPoly image = apply_map(m.equation, m.map);
    // Plain powers of zeta first; -zeta^j is only a new unit for odd N.
    for (int sign = 0; sign < 2; ++sign) {
        for (Int j = 0; j < ring.root_order(); ++j) {
            CyclotomicRing::Elem lambda = ring.zeta_pow(j);
            if (sign) lambda = ring.neg(lambda);
            if (image == m.equation.scaled(lambda))
                return InvarianceScalar{j, sign == 1, lambda};
        }
    }
    MultiPoly diff = image - m.equation;
    std::string lead = diff.terms().empty()
                           ? "0"
                           : ring.to_string(diff.terms().rbegin()->second);
    throw NotInvariant(m.meta->id +
                       ": no unit scalar relates the substituted equation "
                       "(a leading difference coefficient is " +
                       lead + ")");
}

Int map_order_of(const InstantiatedModel& m) { return map_order(m.map, 264); }

Int map_order_checked(const InstantiatedModel& m) {
    Int found = map_order_of(m);
    if (found != m.meta->declared_order)
        throw OrderMismatch(found, m.meta->declared_order);
    return found;
}

namespace {

// Extract (a2, a4, a6) in t from a Weierstrass equation with trivial
// a1, a3, normalized so the y^2 coefficient is a unit.
struct WeierstrassCoeffs {
    MultiPoly a2, a4, a6;
};

WeierstrassCoeffs extract_weierstrass(const InstantiatedModel& m) {
    const auto& vars = m.meta->vars;
    std::size_t ti = vars.size(), xi = vars.size(), yi = vars.size();
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (vars[i] == "t") ti = i;
        if (vars[i] == "x") xi = i;
        if (vars[i] == "y") yi = i;
    }
    if (ti == vars.size() || xi == vars.size() || yi == vars.size())
        throw UnsupportedShape(m.meta->id + ": expected variables t, x, y");

    const CyclotomicRing& ring = m.ring();
    MultiPoly y2 = m.equation.coefficient_of(yi, 2);
    MultiPoly y1 = m.equation.coefficient_of(yi, 1);
    if (y2.terms().size() != 1 || y2.degree_in(ti) != 0 ||
        y2.degree_in(xi) != 0)
        throw UnsupportedShape(m.meta->id + ": y^2 coefficient is not a unit");
    if (!y1.is_zero())
        throw UnsupportedShape(m.meta->id + ": nonzero a(t)y term");

    // Normalize the y^2 coefficient to 1 by scanning the unit group.
    CyclotomicRing::Elem c = y2.terms().begin()->second;
    CyclotomicRing::Elem inv = ring.zero();
    bool found = false;
    for (Int j = 0; j < ring.root_order() && !found; ++j)
        for (int sign = 0; sign < 2 && !found; ++sign) {
            CyclotomicRing::Elem cand = ring.zeta_pow(j);
            if (sign) cand = ring.neg(cand);
            if (ring.equal(ring.mul(c, cand), ring.one())) {
                inv = cand;
                found = true;
            }
        }
    if (!found)
        throw UnsupportedShape(m.meta->id + ": y^2 coefficient is not a unit");
    MultiPoly f = m.equation.scaled(inv);

    MultiPoly x3 = f.coefficient_of(yi, 0).coefficient_of(xi, 3);
    if (x3.terms().size() != 1 || x3.degree_in(ti) != 0)
        throw UnsupportedShape(m.meta->id + ": x^3 coefficient is not constant");
    CyclotomicRing::Elem s = x3.terms().begin()->second;
    bool plus;
    if (ring.equal(s, ring.one())) plus = true;
    else if (ring.equal(s, ring.from_int(-1))) plus = false;
    else throw UnsupportedShape(m.meta->id + ": x^3 coefficient is not +-1");

    MultiPoly zero_y = f.coefficient_of(yi, 0);
    MultiPoly c2 = zero_y.coefficient_of(xi, 2);
    MultiPoly c1 = zero_y.coefficient_of(xi, 1);
    MultiPoly c0 = zero_y.coefficient_of(xi, 0);

    // Bring f = y^2 + s*x^3 + c2 x^2 + c1 x + c0 to
    // y^2 = x^3 + a2 x^2 + a4 x + a6 (substituting x -> -x when s = +1).
    WeierstrassCoeffs w;
    CyclotomicRing::Elem minus1 = ring.from_int(-1);
    if (plus) {
        w.a2 = c2.scaled(minus1);
        w.a4 = c1;
        w.a6 = c0.scaled(minus1);
    } else {
        w.a2 = c2.scaled(minus1);
        w.a4 = c1.scaled(minus1);
        w.a6 = c0.scaled(minus1);
    }
    return w;
}

} // namespace

MultiPoly weierstrass_discriminant(const InstantiatedModel& m) {
    if (m.meta->kind != ModelKind::Weierstrass)
        throw UnsupportedShape(m.meta->id + ": not a Weierstrass model");
    Int p = m.ring().characteristic();
    if (p == 2 || p == 3)
        throw UnsupportedShape(
            m.meta->id + ": discriminant formula needs characteristic not 2, 3");

    WeierstrassCoeffs w = extract_weierstrass(m);
    const CyclotomicRing& ring = m.ring();
    auto c = [&](Int v) {
        return MultiPoly::constant(ring, m.meta->vars.size(), ring.from_int(v));
    };
    MultiPoly b2 = c(4) * w.a2;
    MultiPoly b4 = c(2) * w.a4;
    MultiPoly b6 = c(4) * w.a6;
    MultiPoly b8 = c(4) * w.a2 * w.a6 - w.a4 * w.a4;
    MultiPoly disc = c(-1) * b2 * b2 * b8 - c(8) * b4 * b4 * b4 -
                     c(27) * b6 * b6 + c(9) * b2 * b4 * b6;
    return disc;
}

VerificationReport verify_entry(const std::string& id, Int characteristic) {
    const SurfaceModel& meta = catalog_entry(id);
    InstantiatedModel m = instantiate(meta, characteristic);

    VerificationReport rep;
    rep.id = id;
    rep.characteristic = characteristic;

    {
        Int zo = m.ring().zeta_multiplicative_order();
        rep.checks.push_back({"zeta_order", zo == meta.ring_order, false,
                              "multiplicative order " + std::to_string(zo)});
    }
    try {
        InvarianceScalar lam = invariance_scalar(m);
        std::string d = (lam.negated ? std::string("-") : std::string("")) +
                        "zeta^" + std::to_string(lam.zeta_exponent);
        rep.checks.push_back({"invariance", true, false, "lambda = " + d});
    } catch (const NotInvariant& e) {
        rep.checks.push_back({"invariance", false, false, e.what()});
    }
    {
        Int found = map_order_of(m);
        rep.checks.push_back(
            {"map_order", found == meta.declared_order, false,
             "order " + std::to_string(found) + " (declared " +
                 std::to_string(meta.declared_order) + ")"});
    }
    if (meta.kind == ModelKind::Weierstrass && characteristic != 2 &&
        characteristic != 3) {
        std::size_t ti = 0;
        for (std::size_t i = 0; i < meta.vars.size(); ++i)
            if (meta.vars[i] == "t") ti = i;
        MultiPoly disc = weierstrass_discriminant(m);
        int dt = disc.degree_in(ti);
        rep.checks.push_back({"discriminant", !disc.is_zero() && dt <= 24,
                              false,
                              "deg_t = " + std::to_string(dt) +
                                  (disc.is_zero() ? ", identically zero" : "")});
    } else {
        std::string why = meta.kind != ModelKind::Weierstrass
                              ? "non-Weierstrass model"
                              : "characteristic " + std::to_string(characteristic);
        rep.checks.push_back({"discriminant", false, true, "skipped: " + why});
    }
    return rep;
}

VerifySummary verify_all(Int characteristic) {
    VerifySummary s;
    s.characteristic = characteristic;
    for (const SurfaceModel& m : catalog()) {
        if (!admissible(m, characteristic)) continue;
        ++s.entries;
        VerificationReport r = verify_entry(m.id, characteristic);
        if (r.all_pass()) ++s.passed;
        s.reports.push_back(std::move(r));
    }
    return s;
}

bool perturbed_map_fails(const std::string& id, Int characteristic) {
    const SurfaceModel& meta = catalog_entry(id);
    InstantiatedModel m = instantiate(meta, characteristic);
    // Scale the last variable's image by an extra zeta.
    AffineMap g = m.map;
    std::size_t last = g.images.size() - 1;
    g.images[last] = g.images[last].scaled(m.ring().zeta_pow(1));
    InstantiatedModel pert{m.meta, m.ring_holder, m.equation, g};
    bool invariant = true;
    try {
        invariance_scalar(pert);
    } catch (const NotInvariant&) {
        invariant = false;
    }
    if (!invariant) return true;
    return map_order(g, 264) != meta.declared_order;
}

} // namespace k3o
