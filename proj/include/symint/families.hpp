#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "symint/sympair.hpp"

namespace symint {

struct FamilySpec {
    std::string tag;
    std::map<std::string, long> params;  // n, r, n1, n2, quasi_split (0/1), and type for galois/group_case
    std::string type;                    // "A", "B", "C", "D" where relevant
};

struct FamilyInfo {
    std::string tag;
    std::string params;
    std::string description;
};

const std::vector<FamilyInfo>& family_catalog();

std::pair<RootDatumG, InvolutionData> instantiate(const FamilySpec& spec);

// Split root datum: A_n as GL_{n+1} on Z^{n+1}, B_n/C_n/D_n on Z^n.
RootDatumG split_datum(const std::string& type, long n, int mult = 1);

// (H x H, swap) for a root datum of H.
std::pair<RootDatumG, InvolutionData> doubled_pair(const RootDatumG& h);

std::string describe(const FamilySpec& spec);

}  // namespace symint
