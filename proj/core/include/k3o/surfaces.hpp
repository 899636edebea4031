#pragma once

#include "k3o/poly.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace k3o {

enum class ModelKind { Weierstrass, DoublePlane, WeightedHypersurface };
std::string model_kind_name(ModelKind k);

/// One catalog entry: an explicit surface equation over Z[zeta_N] together
/// with an automorphism given by an affine substitution, its declared order
/// and the characteristics in which the pair makes sense.
struct SurfaceModel {
    std::string id;
    ModelKind kind = ModelKind::Weierstrass;
    Int ring_order = 1; // N: coefficients live in Z[zeta_N] (mod p)
    std::vector<std::string> vars;
    std::vector<Int> weights; // empty for affine Weierstrass charts
    std::string equation_text;
    std::string map_text;
    Int declared_order = 1;
    bool char0_ok = false;
    Int coprime_to = 0;       // admissible p must not divide this (0 = unused)
    std::vector<Int> only;    // when nonempty: exactly these characteristics
    std::string note;
};

/// Parse the structured catalog text (see data/example_catalog.txt).
std::vector<SurfaceModel> load_catalog(const std::string& text);

/// The canonical catalog text and its parsed form.
const std::string& builtin_catalog_text();
const std::vector<SurfaceModel>& catalog();
const SurfaceModel& catalog_entry(const std::string& id);

bool admissible(const SurfaceModel& m, Int characteristic);
/// Admissible characteristics of an entry up to the bound (0 included when
/// allowed).
std::vector<Int> admissible_characteristics(const SurfaceModel& m, Int bound);

/// Entry instantiated over a concrete characteristic. The ring is held
/// behind a stable address because the polynomials point back into it.
struct InstantiatedModel {
    const SurfaceModel* meta = nullptr;
    std::shared_ptr<const CyclotomicRing> ring_holder;
    MultiPoly equation;
    AffineMap map;
    const CyclotomicRing& ring() const { return *ring_holder; }
};
InstantiatedModel instantiate(const SurfaceModel& m, Int characteristic);

/// The unit scalar lambda with equation o map = lambda * equation.
struct InvarianceScalar {
    Int zeta_exponent = 0;
    bool negated = false;
    CyclotomicRing::Elem value;
};
/// Throws NotInvariant when no such scalar exists.
InvarianceScalar invariance_scalar(const InstantiatedModel& m);

/// Exact order of the substitution; throws OrderMismatch when it differs
/// from the declared order.
Int map_order_checked(const InstantiatedModel& m);
Int map_order_of(const InstantiatedModel& m); // 0 if none up to the bound

/// Discriminant of a Weierstrass entry (a-terms absent, char not 2 or 3),
/// as a polynomial in the parameter t. Throws UnsupportedShape otherwise.
MultiPoly weierstrass_discriminant(const InstantiatedModel& m);

struct CheckResult {
    std::string name;
    bool passed = false;
    bool skipped = false;
    std::string detail;
};

struct VerificationReport {
    std::string id;
    Int characteristic = 0;
    std::vector<CheckResult> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.skipped && !c.passed) return false;
        return true;
    }
};

/// Runs zeta-order, invariance, order and (where applicable) discriminant
/// checks. Throws UnknownEntry / CharacteristicNotAdmissible.
VerificationReport verify_entry(const std::string& id, Int characteristic);

struct VerifySummary {
    Int characteristic = 0;
    Int entries = 0;
    Int passed = 0;
    std::vector<VerificationReport> reports;
};
/// Every catalog entry admissible in the given characteristic.
VerifySummary verify_all(Int characteristic);

/// Negative control: the entry's map with the last variable's image scaled
/// by an extra zeta. Returns true when the perturbed map fails invariance
/// or no longer has the declared order.
bool perturbed_map_fails(const std::string& id, Int characteristic);

} // namespace k3o
