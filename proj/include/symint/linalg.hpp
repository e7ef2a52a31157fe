#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "symint/errors.hpp"

namespace symint {

using Rational = mpq_class;
using Integer = mpz_class;
using RatVec = std::vector<Rational>;
using IntVec = std::vector<long long>;
using IntMat = std::vector<IntVec>;  // row-major, square for involutions
using ZVec = std::vector<Integer>;
using ZMat = std::vector<ZVec>;      // row-major

// Canonical p/q; mpq_class(p, q) alone leaves the fraction unreduced.
inline Rational frac(const Integer& p, const Integer& q) {
    Rational r(p, q);
    r.canonicalize();
    return r;
}

// "p/q", or "p" for integers.
std::string to_string(const Rational& x);
std::string to_string(const RatVec& v);
Rational parse_rational(const std::string& s);

RatVec to_rat(const IntVec& v);
RatVec zero_vec(std::size_t d);
RatVec operator+(const RatVec& a, const RatVec& b);
RatVec operator-(const RatVec& a, const RatVec& b);
RatVec operator-(const RatVec& a);
RatVec operator*(const Rational& s, const RatVec& v);
RatVec& operator+=(RatVec& a, const RatVec& b);
RatVec& operator-=(RatVec& a, const RatVec& b);
Rational dot(const RatVec& a, const RatVec& b);
bool is_zero(const RatVec& v);

RatVec act(const IntMat& m, const RatVec& v);
bool is_involution(const IntMat& m);

// (v ± θv)/2
RatVec eigenprojection(const RatVec& v, const IntMat& theta, int sign);

std::size_t rank_of(const std::vector<RatVec>& vs);
bool linearly_independent(const std::vector<RatVec>& vs);

// Unique c with target = Σ c_i g_i, or nullopt when target is outside the span.
std::optional<std::vector<Rational>> solve_in_span(const RatVec& target,
                                                   const std::vector<RatVec>& generators);

// Basis of {x : <g, x> = 0 for all g}, as vectors of dimension dim.
std::vector<RatVec> orthogonal_complement(const std::vector<RatVec>& gens, std::size_t dim);

// Orthogonal projection onto span(gens) (gens need not be independent).
RatVec project_onto_span(const RatVec& v, const std::vector<RatVec>& gens);

// Column Hermite form: A·U = [H | 0] with H lower-trapezoidal, positive
// pivots, and U unimodular.
struct ColumnHermite {
    ZMat H;  // same shape as A
    ZMat U;  // cols(A) x cols(A)
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_rows;  // row of the pivot in column j < rank
};
ColumnHermite column_hermite(const ZMat& A);

// Basis of {x in Z^n : A x = 0}.
std::vector<ZVec> integer_kernel(const ZMat& A, std::size_t n);

struct LatticeQuotient {
    std::size_t ambient_rank = 0;
    std::vector<ZVec> generators;
    ZMat hermite;  // p x p lower triangular basis of the sublattice, columns
    Integer index;
    std::vector<ZVec> transversal;

    // Canonical representative in the transversal box.
    ZVec reduce(const ZVec& x) const;
    bool contains(const ZVec& x) const;
};
LatticeQuotient lattice_quotient(std::size_t ambient_rank, const std::vector<ZVec>& sublattice_gens);

ZVec to_z(const IntVec& v);
RatVec to_rat(const ZVec& v);

}  // namespace symint
