#pragma once

#include <map>
#include <string>
#include <vector>

#include "symint/sympair.hpp"

namespace symint {

struct ThetaParabolic {
    std::vector<std::size_t> J;           // positions in Δ^{G/H}, sorted
    std::vector<std::size_t> I;           // root indices of Δ^G, in Δ^G order
    std::vector<std::size_t> complement;  // positions in Δ^{G/H} not in J
    std::vector<RatVec> DeltaGH_M;        // complement projected onto (span J)^⊥
};

constexpr std::size_t kMaxParabolicRank = 20;

ThetaParabolic theta_parabolic(const DescendentSystem& ds, std::vector<std::size_t> J);
std::vector<ThetaParabolic> theta_parabolics(const DescendentSystem& ds);

struct PositivityResult {
    bool holds = false;
    bool in_span = true;
    std::vector<Rational> coefficients;  // parallel to par.complement
    std::string reason;
};

// Relative positivity of λ on the face J, computed by restricting to the
// J-orthogonal subspace and solving on Δ^{G/H}(M).
PositivityResult relative_positivity(const DescendentSystem& ds, const RatVec& lambda, const ThetaParabolic& par,
                                     bool strict);

enum class Coordinates { Full, Restricted };

struct ExponentEntry {
    std::vector<std::size_t> J;
    std::vector<RatVec> exponents;
};

struct ExponentProfile {
    Coordinates coordinates = Coordinates::Full;
    std::vector<ExponentEntry> entries;
};

struct IngestedExponent {
    RatVec given;
    RatVec used;               // +1-projection with its central part removed
    RatVec minus_discarded;    // θ-(−1) part of a full-coordinate input
    RatVec central_discarded;  // part orthogonal to span Δ^{G/H}
};

IngestedExponent ingest_exponent(const DescendentSystem& ds, const RatVec& v, Coordinates c);

// Validates J keys and dimensions; throws InvalidProfile / DimensionMismatch.
void validate_profile(const DescendentSystem& ds, const ExponentProfile& profile);

enum class VerdictKind {
    Integrable,
    NotIntegrable,
    SquareIntegrable,
    Tempered,
    NeitherTemperedNorSI,
    StronglyTempered,
    StronglyDiscrete,
    Inconclusive,
};
const char* verdict_name(VerdictKind k);

struct Witness {
    std::string w;                // label of the transversal element ("" if n/a)
    std::vector<std::size_t> J;   // face (positions in Δ^{G/H}, or Δ^G for Casselman)
    std::size_t chi = 0;          // index of the exponent in its list
    RatVec value;                 // the vector whose coefficient failed
    std::size_t simple = 0;       // position of the failing simple root
    Rational coefficient;
};

struct Verdict {
    VerdictKind kind = VerdictKind::Inconclusive;
    std::vector<Witness> witnesses;
    std::vector<std::string> warnings;
};

struct CoefficientRow {
    std::size_t w = 0;      // position in the transversal
    std::size_t entry = 0;  // profile entry
    std::size_t chi = 0;
    std::vector<Rational> coefficients;  // on par.complement
    bool pass = false;
};

struct IntegrabilityReport {
    Verdict verdict;
    std::vector<CoefficientRow> rows;
    std::vector<std::vector<IngestedExponent>> ingested;  // per entry, per χ
    std::vector<std::vector<std::size_t>> missing;         // faces without exponents
    std::size_t missing_count = 0;
};

IntegrabilityReport h_integrability(const DescendentSystem& ds, const CosetReps& reps,
                                    const ExponentProfile& profile, bool strict = true);

// Keys are subsets of positions in Δ^G; exponents in full coordinates.
using CasselmanExponents = std::map<std::vector<std::size_t>, std::vector<RatVec>>;
Verdict casselman_classify(const RootDatumG& datum, const CasselmanExponents& exponents);

Verdict classify_pair(const DescendentSystem& ds, const CosetReps& reps);

}  // namespace symint
