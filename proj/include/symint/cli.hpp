#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "symint/conelattice.hpp"
#include "symint/families.hpp"

namespace symint {

using json = nlohmann::json;

struct PairInput {
    std::string name;
    json source;  // the descriptor as given
    RootDatumG datum;
    InvolutionData inv;
};

// Structural checks only; throws InvalidDescriptor / InvalidProfile.
void check_descriptor_schema(const json& j);
void check_profile_schema(const json& j);

PairInput parse_descriptor(const json& j);
ExponentProfile parse_profile(const json& j);

struct Analysis {
    PairInput input;
    DescendentSystem ds;
    CosetReps reps;
    Verdict verdict;
};

Analysis analyze(const PairInput& in);

json rational_json(const Rational& x);
json vec_json(const RatVec& v);

json analyze_report(const Analysis& a);
json check_report(const Analysis& a, const ExponentProfile& p, const IntegrabilityReport& r, bool strict);
json oracle_report(const Analysis& a, const ExponentProfile& p, const ConeDecomposition& cone,
                   const ConvergenceReport& oracle, const IntegrabilityReport& crit, long box);

std::string analyze_table(const Analysis& a);
std::string check_table(const Analysis& a, const IntegrabilityReport& r);
std::string oracle_table(const Analysis& a, const ConvergenceReport& oracle);

// Entry point behind the executable. Returns the process exit code:
// 0 success, 2 input error, 3 internal consistency failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symint
