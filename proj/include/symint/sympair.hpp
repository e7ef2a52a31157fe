#pragma once

#include <map>
#include <vector>

#include "symint/rootsys.hpp"

namespace symint {

// Roots are integer column vectors in X^*(A_0) = Z^rank.
struct RootDatumG {
    std::size_t rank = 0;
    std::vector<IntVec> roots;
    std::vector<std::size_t> simple;  // indices into roots
    std::vector<int> mult;
    std::vector<bool> positive;       // filled by make_root_datum

    long index_of(const IntVec& v) const;
};

RootDatumG make_root_datum(std::size_t rank, std::vector<IntVec> roots, std::vector<std::size_t> simple,
                           std::vector<int> mult);

struct InvolutionData {
    IntMat theta;                           // acts on characters: β ↦ Θβ
    std::map<std::size_t, int> fixed_trace; // θ-fixed root index -> t_β
};

void validate_involution(const RootDatumG& datum, const InvolutionData& inv);

struct RestrictedRoot {
    RatVec vec;
    std::vector<std::size_t> fiber;  // indices into datum.roots
    int MG = 0;
    int MH = 0;
    int m_theta = 0;
    bool positive = false;
};

struct DescendentSystem {
    RootDatumG datum;
    InvolutionData inv;

    // positives ordered by height on Δ^{G/H}, then the negatives in the same order
    std::vector<RestrictedRoot> restricted;
    RootSystem sigma_GH;
    std::vector<std::size_t> delta_GH;       // indices into restricted
    std::vector<std::size_t> sigma_H;        // indices into restricted with M^H > 0
    std::vector<std::size_t> delta_H;        // indices into restricted
    std::vector<std::size_t> delta_G_minus;  // Δ^G[θ=-1], root indices
    std::vector<std::size_t> delta_G_rest;   // Δ^G[θ≠-1], root indices
    std::map<std::size_t, std::size_t> p;    // Δ^G[θ≠-1] root index -> position in delta_GH
    RatVec rhoG_plus;
    RatVec rhoH;
    std::vector<RatVec> dual;                // dual basis to Δ^{G/H} inside its span

    std::size_t dim() const { return datum.rank; }
    std::vector<RatVec> delta_GH_vecs() const;
    std::vector<RatVec> delta_H_vecs() const;
    std::vector<RatVec> sigma_GH_positive_vecs() const;
    std::vector<RatVec> sigma_H_positive_vecs() const;
    long restricted_index(const RatVec& v) const;
    // coefficients on Δ^{G/H} of the part of v inside span Δ^{G/H}
    std::vector<Rational> coefficients(const RatVec& v) const;
    RatVec strip_center(const RatVec& v) const;
    bool in_plus_space(const RatVec& v) const;

    std::map<RatVec, std::size_t> lookup;
};

DescendentSystem build_descendent(const RootDatumG& datum, const InvolutionData& inv);

// α ↦ β with θ(α) − β in the span of Δ^G[θ=−1]; keyed by root index.
std::map<std::size_t, std::size_t> theta_minus_permutation(const RootDatumG& datum, const InvolutionData& inv);

struct CosetReps {
    WeylGroup WGH;
    WeylGroup WH;
    std::vector<std::size_t> transversal;  // elements of WGH, identity first
    std::vector<RatVec> rho;               // ρ^w, parallel to transversal
    std::vector<std::string> labels;       // reduced words in the simple reflections of Δ^{G/H}
};

CosetReps coset_transversal(const DescendentSystem& ds, std::size_t cap = kDefaultWeylCap);

// Both formulas for ρ^w; throws FormulaMismatch if they differ. Fills reps.rho.
const std::vector<RatVec>& relative_test_characters(const DescendentSystem& ds, CosetReps& reps);

RatVec rho_w_shifted(const DescendentSystem& ds, const CosetReps& reps, std::size_t w);  // (ρ_0^G)^+ − 2w(ρ_0^H)
RatVec rho_w_as_sum(const DescendentSystem& ds, const CosetReps& reps, std::size_t w);   // −½ Σ m_{w⁻¹α} α

}  // namespace symint
