#include "symint/conelattice.hpp"

#include <cmath>
#include <functional>

namespace symint {

ZVec ConeDecomposition::pairings(const ZVec& u) const {
    ZVec p(rank, Integer(0));
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < rank; ++j) p[i] += pairing_basis[i][j] * u[j];
    return p;
}

ZVec ConeDecomposition::lift(const ZVec& u) const {
    if (lifts.empty()) return {};
    ZVec x(lifts[0].size(), Integer(0));
    for (std::size_t j = 0; j < rank; ++j)
        for (std::size_t i = 0; i < x.size(); ++i) x[i] += u[j] * lifts[j][i];
    return x;
}

bool ConeDecomposition::dominant(const ZVec& u) const {
    for (const auto& p : pairings(u))
        if (p < 0) return false;
    return true;
}

std::size_t ConeDecomposition::cover_count(const ZVec& u) const {
    std::size_t hits = 0;
    for (const auto& e : E) {
        ZVec d(rank);
        for (std::size_t i = 0; i < rank; ++i) d[i] = u[i] - e[i];
        auto p = pairings(d);
        bool ok = true;
        for (std::size_t a = 0; a < rank && ok; ++a) ok = p[a] >= 0 && mpz_divisible_p(p[a].get_mpz_t(), scale[a].get_mpz_t());
        if (ok) ++hits;
    }
    return hits;
}

ConeDecomposition make_cone(const ZMat& H, const std::vector<ZVec>& generators) {
    ConeDecomposition c;
    c.rank = H.size();
    c.pairing_basis = H;
    c.generators = generators;
    if (generators.size() != c.rank) throw EngineError(ErrorKind::DimensionMismatch, "one generator per simple root required");
    c.pairing_table.assign(c.rank, ZVec(c.rank));
    for (std::size_t j = 0; j < c.rank; ++j) {
        auto p = c.pairings(generators[j]);
        for (std::size_t i = 0; i < c.rank; ++i) {
            c.pairing_table[i][j] = p[i];
            if (i != j && p[i] != 0) throw EngineError(ErrorKind::NotARootSystem, "generators are not dual to the simple roots");
        }
        if (p[j] <= 0) throw EngineError(ErrorKind::NotARootSystem, "generator pairs nonpositively with its simple root");
        c.scale.push_back(p[j]);
    }
    c.quotient = lattice_quotient(c.rank, generators);
    for (const auto& e0 : c.quotient.transversal) {
        ZVec e = e0;
        auto p = c.pairings(e0);
        for (std::size_t a = 0; a < c.rank; ++a) {
            // minimal m with <α, e' + m y_α> >= 0
            Integer m, neg = -p[a];
            mpz_cdiv_q(m.get_mpz_t(), neg.get_mpz_t(), c.scale[a].get_mpz_t());
            for (std::size_t i = 0; i < c.rank; ++i) e[i] += m * generators[a][i];
        }
        c.E.push_back(e);
    }
    return c;
}

std::vector<ZVec> fixed_cocharacters(const IntMat& theta) {
    std::size_t n = theta.size();
    ZMat A(n, ZVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) A[i][j] = Integer(static_cast<long>(theta[j][i] - (i == j ? 1 : 0)));
    return integer_kernel(A, n);
}

ConeDecomposition dual_generators(const DescendentSystem& ds) {
    auto simple = ds.delta_GH_vecs();
    std::size_t t = simple.size();
    if (t == 0) throw EngineError(ErrorKind::EmptySimpleSet, "no restricted simple roots: the pair is anisotropic modulo the centre");
    auto L = fixed_cocharacters(ds.inv.theta);
    std::size_t k = L.size();
    ZMat phi(t, ZVec(k));
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            Rational v = dot(simple[i], to_rat(L[j]));
            if (v.get_den() != 1) throw EngineError(ErrorKind::NotARootSystem, "restricted root pairs non-integrally with a cocharacter");
            phi[i][j] = v.get_num();
        }
    auto ch = column_hermite(phi);
    if (ch.rank != t) throw EngineError(ErrorKind::NotARootSystem, "restricted simple roots are dependent on cocharacters");
    ZMat H(t, ZVec(t));
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = 0; j < t; ++j) H[i][j] = ch.H[i][j];
    std::size_t n = ds.dim();
    std::vector<ZVec> lifts, central;
    for (std::size_t j = 0; j < k; ++j) {
        ZVec x(n, Integer(0));
        for (std::size_t l = 0; l < k; ++l)
            for (std::size_t i = 0; i < n; ++i) x[i] += ch.U[l][j] * L[l][i];
        (j < t ? lifts : central).push_back(x);
    }
    // y_α = c_α H^{-1} e_α with c_α minimal
    std::vector<ZVec> gens;
    for (std::size_t a = 0; a < t; ++a) {
        RatVec u = zero_vec(t);
        for (std::size_t i = 0; i < t; ++i) {
            Rational s = (i == a) ? 1 : 0;
            for (std::size_t j = 0; j < i; ++j) s -= Rational(H[i][j]) * u[j];
            u[i] = s / Rational(H[i][i]);
        }
        Integer den = 1;
        for (auto& x : u) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
        ZVec y(t);
        for (std::size_t i = 0; i < t; ++i) y[i] = Rational(u[i] * den).get_num();
        gens.push_back(y);
    }
    auto c = make_cone(H, gens);
    c.simple = simple;
    c.lifts = lifts;
    c.central = central;
    return c;
}

ConvergenceReport convergence_oracle(const DescendentSystem& ds, const CosetReps& reps, const ConeDecomposition& cone,
                                     const ExponentProfile& profile, long q, long depth) {
    if (q < 2) throw EngineError(ErrorKind::BadParameters, "q must be at least 2");
    if (depth < 0) throw EngineError(ErrorKind::BadParameters, "depth must be nonnegative");
    validate_profile(ds, profile);
    if (reps.rho.size() != reps.transversal.size())
        throw EngineError(ErrorKind::CountMismatch, "relative test characters have not been computed");
    ConvergenceReport rep;
    rep.q = q;
    rep.depth = depth;
    std::vector<RatVec> ylift;
    for (const auto& y : cone.generators) ylift.push_back(to_rat(cone.lift(y)));
    for (std::size_t i = 0; i < reps.transversal.size(); ++i) {
        for (std::size_t e = 0; e < profile.entries.size(); ++e) {
            const auto& entry = profile.entries[e];
            std::vector<bool> inJ(cone.rank, false);
            for (auto j : entry.J) inJ[j] = true;
            for (std::size_t x = 0; x < entry.exponents.size(); ++x) {
                RatVec lambda = reps.rho[i] + ingest_exponent(ds, entry.exponents[x], profile.coordinates).used;
                OracleEntry oe;
                oe.w = i;
                oe.entry = e;
                oe.chi = x;
                oe.converges = true;
                for (std::size_t a = 0; a < cone.rank; ++a) {
                    if (inJ[a]) continue;
                    Rational ex = dot(lambda, ylift[a]);
                    oe.directions.push_back(a);
                    oe.exponents.push_back(ex);
                    if (ex <= 0) oe.converges = false;
                    std::vector<double> sums;
                    double s = 0, r = std::pow(static_cast<double>(q), -ex.get_d());
                    double term = 1;
                    for (long d = 0; d <= depth; ++d) {
                        s += term;
                        term *= r;
                        sums.push_back(s);
                    }
                    oe.partial_sums.push_back(std::move(sums));
                }
                rep.all_converge = rep.all_converge && oe.converges;
                rep.entries.push_back(std::move(oe));
            }
        }
    }
    return rep;
}

void ExponentSum::add(const Rational& exponent, const Integer& count) { terms[exponent] += count; }

Integer ExponentSum::count() const {
    Integer c = 0;
    for (const auto& [e, k] : terms) c += k;
    return c;
}

std::optional<Rational> ExponentSum::exact(long q) const {
    Rational s = 0;
    for (const auto& [e, k] : terms) {
        if (e.get_den() != 1) return std::nullopt;
        long ex = e.get_num().get_si();
        Integer p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(std::labs(ex)));
        s += ex >= 0 ? frac(k, p) : Rational(k * p);
    }
    s.canonicalize();
    return s;
}

double ExponentSum::approx(long q) const {
    double s = 0;
    for (const auto& [e, k] : terms) s += k.get_d() * std::pow(static_cast<double>(q), -e.get_d());
    return s;
}

ExponentSum weighted_cone_sum(const ConeDecomposition& cone, const RatVec& weight, long q, long box) {
    if (q < 2) throw EngineError(ErrorKind::BadParameters, "q must be at least 2");
    if (box < 0) throw EngineError(ErrorKind::BadParameters, "box must be nonnegative");
    std::size_t t = cone.rank;
    RatVec wt = cone.simple.empty() ? weight : project_onto_span(weight, cone.simple);
    ExponentSum sum;
    for (const auto& e : cone.E) {
        auto pe = cone.pairings(e);
        std::vector<Integer> bound(t);
        for (std::size_t a = 0; a < t; ++a) {
            Integer reach = 0;
            for (std::size_t j = 0; j < t; ++j) reach += abs(cone.pairing_basis[a][j]) * box;
            Integer num = reach - pe[a];
            if (num < 0) {
                bound[a] = -1;
                continue;
            }
            mpz_fdiv_q(bound[a].get_mpz_t(), num.get_mpz_t(), cone.scale[a].get_mpz_t());
        }
        if (std::any_of(bound.begin(), bound.end(), [](const Integer& b) { return b < 0; })) continue;
        ZVec n(t, Integer(0));
        std::function<void(std::size_t)> rec = [&](std::size_t a) {
            if (a == t) {
                ZVec u = e;
                for (std::size_t b = 0; b < t; ++b)
                    for (std::size_t i = 0; i < t; ++i) u[i] += n[b] * cone.generators[b][i];
                for (const auto& x : u)
                    if (abs(x) > box) return;
                Rational ex = cone.lifts.empty() ? Rational(0) : dot(wt, to_rat(cone.lift(u)));
                sum.add(ex);
                return;
            }
            for (n[a] = 0; n[a] <= bound[a]; ++n[a]) rec(a + 1);
        };
        rec(0);
    }
    return sum;
}

}  // namespace symint
