#pragma once

#include "k3o/spectrum.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace k3o {

/// Admissible eigenvalue list of an order-p wild automorphism, tagged with
/// the fixed-locus case it belongs to. Orbits live at d in {1, p} only.
struct WildSpectrum {
    Int p = 0;
    EigenProfile profile;
    std::string geometric_tag;
};

/// The admissible order-p spectra; p in {5, 7, 11}.
std::vector<WildSpectrum> wild_spectra(Int p);

/// All 22-dim profiles P with m_1 >= 1, profile_order(P) = p*n and
/// power(P, n) equal to one of the wild spectra, paired with that spectrum.
std::vector<std::pair<EigenProfile, WildSpectrum>> wild_enumerate(Int p, Int n);

/// Shared preimage search: 22-dim profiles over orbit_universe(order) whose
/// exponent-th power equals `target`, of full order, obeying the given
/// minimum orbit multiplicities.
std::vector<EigenProfile>
profiles_powering_to(Int order, Int exponent, const EigenProfile& target,
                     const std::map<Int, Int>& lower_bounds);

/// Possible traces of an automorphism of order dividing q on the 2r-dim H^1
/// of a genus-r curve, assuming integrality (full Galois orbits).
std::set<Int> curve_h1_traces(Int genus, Int q);

/// A candidate fixed locus of the tame part s, together with how the
/// residual order-q action u moves its pieces. Parts not marked fixed form
/// free q-orbits.
struct FixedLocusHypothesis {
    Int isolated_points = 0;
    Int rational_curves = 0;
    std::optional<Int> big_curve_genus; // at most one curve of genus >= 2
    Int action_order = 1;               // order q of u on the locus
    Int fixed_isolated = 0;             // isolated points fixed by u
    Int fixed_rationals = 0;            // rational curves preserved by u
    bool big_curve_preserved = true;
    std::string label;

    Int euler() const {
        Int e = isolated_points + 2 * rational_curves;
        if (big_curve_genus) e += 2 - 2 * *big_curve_genus;
        return e;
    }
};

/// Possible values of Tr(u^* | H^*(X^s)) under the hypothesis: fixed points
/// give 1, preserved rational curves 2, free orbits 0, a preserved genus-r
/// curve 2 - t over t in curve_h1_traces(r, q).
std::set<Int> fixed_locus_trace(const FixedLocusHypothesis& h, Int q);

/// Deligne-Lusztig comparison for g^{s_exponent + u_exponent} = s u:
/// lhs = 2 + Tr on H^2 of the combined power, rhs = the hypothesis traces.
struct DlResult {
    bool consistent = false;
    Int lhs = 0;
    std::set<Int> rhs;
};
DlResult dl_check(const EigenProfile& p, Int s_exponent, Int u_exponent,
                  const FixedLocusHypothesis& h);

/// Named geometric input imported as an assumption rather than re-derived.
struct Axiom {
    std::string id;
    std::string statement;
};
const std::vector<Axiom>& axiom_table();
const Axiom& axiom(const std::string& id);

enum class AssertStatus { Pass, Fail, GeometryInput };

struct ReplayAssertion {
    std::string claim;
    std::string computed;
    AssertStatus status = AssertStatus::Pass;
    std::string axiom_id; // set on GeometryInput rows
};

struct ReplayReport {
    std::string lemma;
    std::string title;
    std::vector<ReplayAssertion> assertions;
    bool all_ok() const {
        for (const auto& a : assertions)
            if (a.status == AssertStatus::Fail) return false;
        return true;
    }
    std::vector<std::string> geometry_flags() const {
        std::vector<std::string> f;
        for (const auto& a : assertions)
            if (a.status == AssertStatus::GeometryInput) f.push_back(a.axiom_id);
        return f;
    }
};

/// Scripted re-derivations of the wild-case eliminations. Known ids:
/// L7.2 L7.3 L7.5 L8.2 L8.3 L9.3_25 L9.4 L9.5_kod1 L9.6_2pts L9.7_1pt.
const std::vector<std::string>& replay_catalog();
ReplayReport replay_lemma(const std::string& id);

enum class WildStatus {
    SpectrallyInfeasible,
    ExcludedByReplay,
    ExcludedWithGeometryFlag,
    Realized
};
std::string wild_status_name(WildStatus s);

struct WildClassEntry {
    Int n = 1;
    WildStatus status = WildStatus::SpectrallyInfeasible;
    std::vector<std::pair<EigenProfile, std::string>> candidates; // profile, tag
    std::string example_id;            // witness for Realized
    std::vector<std::string> lemmas;   // replay scripts in the kill chain
    std::vector<std::string> flags;    // geometry axioms in the kill chain
    std::string note;
};

/// For every n with p*n in the candidate order universe. Realized entries
/// match the wild main theorems; every exclusion carries its trail.
std::map<Int, WildClassEntry> classify_wild(Int p);

} // namespace k3o
