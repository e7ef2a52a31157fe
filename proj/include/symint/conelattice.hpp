#pragma once

#include <map>
#include <optional>
#include <vector>

#include "symint/criteria.hpp"

namespace symint {

// X_* = X_*(A_0^+)/X_*(A_G^+) is coordinatized by a basis whose pairings with
// Δ^{G/H} form the lower-triangular matrix `pairing_basis`; `lifts` are
// integer cocharacters representing that basis.
struct ConeDecomposition {
    std::size_t rank = 0;                // t = |Δ^{G/H}|
    std::vector<RatVec> simple;          // Δ^{G/H}
    ZMat pairing_basis;                  // t x t, column j = <Δ, basis_j>
    std::vector<ZVec> lifts;             // t vectors in Z^n
    std::vector<ZVec> central;           // basis of X_*(A_G^+) in Z^n
    std::vector<ZVec> generators;        // y_α in X_* coordinates
    std::vector<Integer> scale;          // <α, y_α>
    ZMat pairing_table;                  // [i][j] = <α_i, y_j>
    LatticeQuotient quotient;            // Y inside X_*
    std::vector<ZVec> E;                 // transversal moved into the dominant cone

    ZVec pairings(const ZVec& u) const;
    ZVec lift(const ZVec& u) const;
    bool dominant(const ZVec& u) const;
    // number of e in E with u - e in Y^{>=0}
    std::size_t cover_count(const ZVec& u) const;
};

// Builds Y, E and the pairing table from generators already known.
ConeDecomposition make_cone(const ZMat& pairing_basis, const std::vector<ZVec>& generators);

ConeDecomposition dual_generators(const DescendentSystem& ds);

// Z^n ∩ ker(Θ^T − I)
std::vector<ZVec> fixed_cocharacters(const IntMat& theta);

struct OracleEntry {
    std::size_t w = 0;      // position in the transversal
    std::size_t entry = 0;  // profile entry
    std::size_t chi = 0;
    std::vector<std::size_t> directions;     // positions in Δ^{G/H} outside J
    std::vector<Rational> exponents;         // <λ, y_α>
    std::vector<std::vector<double>> partial_sums;  // per direction, depth 0..depth
    bool converges = false;
};

struct ConvergenceReport {
    std::vector<OracleEntry> entries;
    bool all_converge = true;
    long q = 2;
    long depth = 0;
};

ConvergenceReport convergence_oracle(const DescendentSystem& ds, const CosetReps& reps, const ConeDecomposition& cone,
                                     const ExponentProfile& profile, long q, long depth);

// Σ q^{-x} kept symbolically as exponent -> multiplicity.
struct ExponentSum {
    std::map<Rational, Integer> terms;

    void add(const Rational& exponent, const Integer& count = 1);
    Integer count() const;
    std::optional<Rational> exact(long q) const;  // when every exponent is an integer
    double approx(long q) const;
    bool operator==(const ExponentSum& o) const { return terms == o.terms; }
};

ExponentSum weighted_cone_sum(const ConeDecomposition& cone, const RatVec& weight, long q, long box);

}  // namespace symint
