#include "symint/sympair.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace symint {

long RootDatumG::index_of(const IntVec& v) const {
    for (std::size_t i = 0; i < roots.size(); ++i)
        if (roots[i] == v) return static_cast<long>(i);
    return -1;
}

RootDatumG make_root_datum(std::size_t rank, std::vector<IntVec> roots, std::vector<std::size_t> simple,
                           std::vector<int> mult) {
    RootDatumG d;
    d.rank = rank;
    d.roots = std::move(roots);
    d.simple = std::move(simple);
    d.mult = std::move(mult);
    if (d.mult.size() != d.roots.size())
        throw EngineError(ErrorKind::DimensionMismatch, "one multiplicity per root required");
    std::vector<RatVec> rroots;
    for (const auto& r : d.roots) {
        if (r.size() != rank) throw EngineError(ErrorKind::DimensionMismatch, "root of wrong length");
        rroots.push_back(to_rat(r));
    }
    std::vector<RatVec> simple_vecs;
    for (auto s : d.simple) {
        if (s >= d.roots.size()) throw EngineError(ErrorKind::DimensionMismatch, "simple root index out of range");
        simple_vecs.push_back(rroots[s]);
    }
    if (!linearly_independent(simple_vecs)) throw EngineError(ErrorKind::NotARootSystem, "simple roots are dependent");
    d.positive.assign(d.roots.size(), false);
    for (std::size_t i = 0; i < d.roots.size(); ++i) {
        auto c = solve_in_span(rroots[i], simple_vecs);
        if (!c) throw EngineError(ErrorKind::NotPositiveSystem, "root outside the span of the simple roots");
        bool nonneg = true, nonpos = true;
        for (const auto& x : *c) {
            if (x.get_den() != 1) throw EngineError(ErrorKind::NotPositiveSystem, "non-integral simple-root coefficients");
            nonneg = nonneg && x >= 0;
            nonpos = nonpos && x <= 0;
        }
        if (!nonneg && !nonpos)
            throw EngineError(ErrorKind::NotPositiveSystem, "root " + to_string(rroots[i]) + " has mixed-sign coefficients");
        d.positive[i] = nonneg;
    }
    auto rs = make_root_system(rank, rroots, d.positive, d.mult);
    std::set<std::size_t> extracted(rs.simple.begin(), rs.simple.end());
    std::set<std::size_t> given(d.simple.begin(), d.simple.end());
    if (extracted != given) throw EngineError(ErrorKind::NotPositiveSystem, "given simple roots are not the indecomposable positives");
    for (std::size_t i = 0; i < d.roots.size(); ++i) {
        long j = rs.index_of(-rroots[i]);
        if (d.mult[i] != d.mult[j]) throw EngineError(ErrorKind::NotARootSystem, "mult(-β) != mult(β)");
    }
    return d;
}

void validate_involution(const RootDatumG& d, const InvolutionData& inv) {
    if (inv.theta.size() != d.rank) throw EngineError(ErrorKind::DimensionMismatch, "theta has the wrong size");
    for (const auto& row : inv.theta)
        if (row.size() != d.rank) throw EngineError(ErrorKind::DimensionMismatch, "theta is not square");
    if (!is_involution(inv.theta)) throw EngineError(ErrorKind::InvolutionInvalid, "theta^2 != I");
    std::set<std::size_t> fixed;
    for (std::size_t i = 0; i < d.roots.size(); ++i) {
        IntVec img(d.rank, 0);
        for (std::size_t r = 0; r < d.rank; ++r)
            for (std::size_t c = 0; c < d.rank; ++c) img[r] += inv.theta[r][c] * d.roots[i][c];
        long j = d.index_of(img);
        if (j < 0) throw EngineError(ErrorKind::InvolutionInvalid, "theta does not preserve the roots");
        if (d.mult[j] != d.mult[i]) throw EngineError(ErrorKind::InvolutionInvalid, "theta does not preserve multiplicities");
        if (static_cast<std::size_t>(j) == i) fixed.insert(i);
    }
    for (const auto& [idx, t] : inv.fixed_trace) {
        if (!fixed.count(idx))
            throw EngineError(ErrorKind::InvolutionInvalid, "trace given for root " + std::to_string(idx) + " which is not theta-fixed");
    }
    for (auto i : fixed) {
        auto it = inv.fixed_trace.find(i);
        if (it == inv.fixed_trace.end())
            throw EngineError(ErrorKind::InvolutionInvalid, "missing trace for theta-fixed root " + std::to_string(i));
        int t = it->second, m = d.mult[i];
        if (std::abs(t) > m) throw EngineError(ErrorKind::InvolutionInvalid, "|trace| exceeds multiplicity at root " + std::to_string(i));
        if ((m - t) % 2 != 0) throw EngineError(ErrorKind::ParityViolation, "trace and multiplicity differ in parity at root " + std::to_string(i));
        IntVec neg = d.roots[i];
        for (auto& x : neg) x = -x;
        auto jt = inv.fixed_trace.find(static_cast<std::size_t>(d.index_of(neg)));
        if (jt == inv.fixed_trace.end())
            throw EngineError(ErrorKind::InvolutionInvalid, "missing trace for the negative of root " + std::to_string(i));
        if (jt->second != t)
            throw EngineError(ErrorKind::InvolutionInvalid, "traces of β and −β differ at root " + std::to_string(i));
    }
}

std::vector<RatVec> DescendentSystem::delta_GH_vecs() const {
    std::vector<RatVec> out;
    for (auto i : delta_GH) out.push_back(restricted[i].vec);
    return out;
}

std::vector<RatVec> DescendentSystem::delta_H_vecs() const {
    std::vector<RatVec> out;
    for (auto i : delta_H) out.push_back(restricted[i].vec);
    return out;
}

std::vector<RatVec> DescendentSystem::sigma_GH_positive_vecs() const {
    std::vector<RatVec> out;
    for (const auto& r : restricted)
        if (r.positive) out.push_back(r.vec);
    return out;
}

std::vector<RatVec> DescendentSystem::sigma_H_positive_vecs() const {
    std::vector<RatVec> out;
    for (auto i : sigma_H)
        if (restricted[i].positive) out.push_back(restricted[i].vec);
    return out;
}

long DescendentSystem::restricted_index(const RatVec& v) const {
    auto it = lookup.find(v);
    return it == lookup.end() ? -1 : static_cast<long>(it->second);
}

std::vector<Rational> DescendentSystem::coefficients(const RatVec& v) const {
    std::vector<Rational> c;
    for (const auto& f : dual) c.push_back(dot(f, v));
    return c;
}

RatVec DescendentSystem::strip_center(const RatVec& v) const {
    RatVec out = zero_vec(dim());
    auto c = coefficients(v);
    for (std::size_t k = 0; k < c.size(); ++k) out += c[k] * restricted[delta_GH[k]].vec;
    return out;
}

bool DescendentSystem::in_plus_space(const RatVec& v) const { return act(inv.theta, v) == v; }

DescendentSystem build_descendent(const RootDatumG& datum, const InvolutionData& inv) {
    validate_involution(datum, inv);
    DescendentSystem ds;
    ds.datum = datum;
    ds.inv = inv;
    std::size_t n = datum.rank;

    // Δ^G split by θ
    std::vector<RatVec> x0;
    for (auto s : datum.simple) {
        RatVec b = to_rat(datum.roots[s]);
        if (act(inv.theta, b) == -b) {
            ds.delta_G_minus.push_back(s);
            x0.push_back(b);
        } else {
            ds.delta_G_rest.push_back(s);
        }
    }

    // fibers of the restriction map
    std::map<RatVec, RestrictedRoot> fibers;
    for (std::size_t i = 0; i < datum.roots.size(); ++i) {
        RatVec b = to_rat(datum.roots[i]);
        RatVec a = eigenprojection(b, inv.theta, +1);
        if (is_zero(a)) {
            // zero restriction: must lie in the span of Δ^G[θ=−1]
            if (x0.empty() || !solve_in_span(b, x0))
                throw EngineError(ErrorKind::IncompatiblePositiveSystem,
                                  "root " + to_string(b) + " restricts to zero but is not spanned by Δ^G[θ=−1]");
            continue;
        }
        auto [it, fresh] = fibers.try_emplace(a);
        auto& rr = it->second;
        if (fresh) {
            rr.vec = a;
            rr.positive = datum.positive[i];
        } else if (rr.positive != datum.positive[i]) {
            throw EngineError(ErrorKind::IncompatiblePositiveSystem,
                              "fiber over " + to_string(a) + " mixes positive and negative roots");
        }
        rr.fiber.push_back(i);
        rr.MG += datum.mult[i];
        auto tr = inv.fixed_trace.find(i);
        if (tr != inv.fixed_trace.end()) rr.m_theta += tr->second;
    }
    for (auto& [a, rr] : fibers) {
        if ((rr.MG + rr.m_theta) % 2 != 0 || rr.MG + rr.m_theta < 0)
            throw EngineError(ErrorKind::ParityViolation, "M^H over " + to_string(a) + " is not a nonnegative integer");
        rr.MH = (rr.MG + rr.m_theta) / 2;
    }

    // Δ^{G/H} = restrictions of Δ^G[θ≠−1], ordered by first occurrence
    std::vector<RatVec> dgh;
    for (auto s : ds.delta_G_rest) {
        RatVec a = eigenprojection(to_rat(datum.roots[s]), inv.theta, +1);
        auto pos = std::find(dgh.begin(), dgh.end(), a);
        if (pos == dgh.end()) {
            ds.p[s] = dgh.size();
            dgh.push_back(a);
        } else {
            ds.p[s] = static_cast<std::size_t>(pos - dgh.begin());
        }
    }
    if (!linearly_independent(dgh)) throw EngineError(ErrorKind::NotARootSystem, "restricted simple roots are dependent");

    // order: positives by (height, coefficients), then negatives likewise
    struct Keyed {
        std::vector<Rational> key;
        RestrictedRoot rr;
    };
    std::vector<Keyed> pos, neg;
    for (auto& [a, rr] : fibers) {
        auto c = solve_in_span(a, dgh);
        if (!c) throw EngineError(ErrorKind::NotARootSystem, "restricted root outside the span of Δ^{G/H}");
        Rational h = 0;
        for (auto& x : *c) {
            if (x.get_den() != 1) throw EngineError(ErrorKind::NotARootSystem, "non-integral coefficients on Δ^{G/H}");
            if ((rr.positive && x < 0) || (!rr.positive && x > 0))
                throw EngineError(ErrorKind::NotARootSystem, "restricted root is not ± a nonnegative combination of Δ^{G/H}");
            h += rr.positive ? x : -x;
        }
        std::vector<Rational> key{h};
        for (auto& x : *c) key.push_back(rr.positive ? -x : x);
        (rr.positive ? pos : neg).push_back({key, rr});
    }
    auto by_key = [](const Keyed& a, const Keyed& b) { return a.key < b.key; };
    std::sort(pos.begin(), pos.end(), by_key);
    std::sort(neg.begin(), neg.end(), by_key);
    for (auto& k : pos) ds.restricted.push_back(k.rr);
    for (auto& k : neg) ds.restricted.push_back(k.rr);
    for (std::size_t i = 0; i < ds.restricted.size(); ++i) ds.lookup[ds.restricted[i].vec] = i;
    for (const auto& a : dgh) ds.delta_GH.push_back(ds.lookup.at(a));

    std::vector<RatVec> rvecs;
    std::vector<bool> rpos;
    std::vector<int> rmult;
    for (const auto& rr : ds.restricted) {
        rvecs.push_back(rr.vec);
        rpos.push_back(rr.positive);
        rmult.push_back(rr.MG);
    }
    ds.sigma_GH = make_root_system(n, rvecs, rpos, rmult);
    {
        std::set<RatVec> a(dgh.begin(), dgh.end());
        auto ex = ds.sigma_GH.simple_roots();
        std::set<RatVec> b(ex.begin(), ex.end());
        if (a != b) throw EngineError(ErrorKind::NotARootSystem, "restrictions of Δ^G[θ≠−1] are not a simple system");
    }

    // Σ^H and Δ^H
    std::vector<RatVec> hpos, hvecs;
    std::vector<bool> hsign;
    std::vector<int> hmult;
    for (std::size_t i = 0; i < ds.restricted.size(); ++i) {
        const auto& rr = ds.restricted[i];
        if (rr.MH <= 0) continue;
        ds.sigma_H.push_back(i);
        hvecs.push_back(rr.vec);
        hsign.push_back(rr.positive);
        hmult.push_back(rr.MH);
        if (rr.positive) hpos.push_back(rr.vec);
    }
    if (!hvecs.empty()) make_root_system(n, hvecs, hsign, hmult);
    for (const auto& d : simple_roots_of(hpos)) ds.delta_H.push_back(ds.lookup.at(d));

    // half sums
    RatVec rhoG = zero_vec(n);
    for (std::size_t i = 0; i < datum.roots.size(); ++i)
        if (datum.positive[i]) rhoG += Rational(datum.mult[i]) * to_rat(datum.roots[i]);
    ds.rhoG_plus = eigenprojection(Rational(1, 2) * rhoG, inv.theta, +1);
    ds.rhoH = zero_vec(n);
    for (auto i : ds.sigma_H)
        if (ds.restricted[i].positive) ds.rhoH += frac(ds.restricted[i].MH, 2) * ds.restricted[i].vec;

    // dual basis through the Gram matrix
    std::size_t r = dgh.size();
    ds.dual.assign(r, zero_vec(n));
    if (r) {
        std::vector<RatVec> cols(r, RatVec(r));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) cols[j][i] = dot(dgh[i], dgh[j]);
        for (std::size_t k = 0; k < r; ++k) {
            RatVec ek = zero_vec(r);
            ek[k] = 1;
            auto x = solve_in_span(ek, cols);
            for (std::size_t i = 0; i < r; ++i) ds.dual[k] += (*x)[i] * dgh[i];
        }
    }
    return ds;
}

std::map<std::size_t, std::size_t> theta_minus_permutation(const RootDatumG& datum, const InvolutionData& inv) {
    auto ds = build_descendent(datum, inv);
    std::vector<RatVec> x0;
    for (auto s : ds.delta_G_minus) x0.push_back(to_rat(datum.roots[s]));
    std::map<std::size_t, std::size_t> perm;
    for (auto a : ds.delta_G_rest) {
        RatVec ta = act(inv.theta, to_rat(datum.roots[a]));
        std::vector<std::size_t> hits;
        for (auto b : ds.delta_G_rest) {
            RatVec diff = ta - to_rat(datum.roots[b]);
            if (is_zero(diff) || (!x0.empty() && solve_in_span(diff, x0))) hits.push_back(b);
        }
        if (hits.size() != 1)
            throw EngineError(ErrorKind::NoSolution, "no unique partner for simple root " + std::to_string(a));
        perm[a] = hits[0];
    }
    for (auto [a, b] : perm)
        if (perm.at(b) != a) throw EngineError(ErrorKind::NoSolution, "theta permutation is not an involution");
    return perm;
}

CosetReps coset_transversal(const DescendentSystem& ds, std::size_t cap) {
    CosetReps reps;
    reps.WGH = weyl_closure(ds.delta_GH_vecs(), cap);
    reps.WH = weyl_closure(ds.delta_H_vecs(), cap);
    const auto& W = reps.WGH;

    // w ∈ [W^{G/H}/W^H] iff <δ, w⁻¹(probe)> = <w(δ), probe> > 0 for every δ ∈ Δ^H
    RatVec probe = ds.sigma_GH.probe();
    std::vector<Rational> pr;
    Integer den = 1;
    for (const auto& r : W.roots()) {
        pr.push_back(dot(r, probe));
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), pr.back().get_den_mpz_t());
    }
    std::vector<long long> pairing;
    for (auto& x : pr) pairing.push_back(Rational(x * den).get_num().get_si());
    std::vector<std::vector<long>> dh_coords;
    auto simple = W.simple_roots();
    for (const auto& d : ds.delta_H_vecs()) {
        auto c = solve_in_span(d, simple);
        std::vector<long> ci;
        for (auto& x : *c) ci.push_back(x.get_num().get_si());
        dh_coords.push_back(ci);
    }
    std::size_t r = W.rank();
    for (std::size_t w = 0; w < W.order(); ++w) {
        const auto* img = W.images(w);
        bool ok = true;
        for (const auto& c : dh_coords) {
            long long s = 0;
            for (std::size_t k = 0; k < r; ++k) s += c[k] * pairing[img[k]];
            if (s <= 0) {
                ok = false;
                break;
            }
        }
        if (ok) reps.transversal.push_back(w);
    }
    if (reps.transversal.size() * reps.WH.order() != W.order())
        throw EngineError(ErrorKind::CountMismatch,
                          "|transversal| * |W^H| = " + std::to_string(reps.transversal.size()) + " * " +
                              std::to_string(reps.WH.order()) + " != |W^{G/H}| = " + std::to_string(W.order()));
    for (auto w : reps.transversal) reps.labels.push_back(W.label(w));
    return reps;
}

RatVec rho_w_shifted(const DescendentSystem& ds, const CosetReps& reps, std::size_t w) {
    return ds.rhoG_plus - Rational(2) * reps.WGH.apply(w, ds.rhoH);
}

RatVec rho_w_as_sum(const DescendentSystem& ds, const CosetReps& reps, std::size_t w) {
    RatVec s = zero_vec(ds.dim());
    for (const auto& rr : ds.restricted) {
        if (!rr.positive) continue;
        long j = ds.restricted_index(reps.WGH.apply_inverse(w, rr.vec));
        if (j < 0) throw EngineError(ErrorKind::FormulaMismatch, "Weyl element does not permute the restricted roots");
        int m = ds.restricted[j].m_theta;
        if (m) s += Rational(m) * rr.vec;
    }
    return Rational(-1, 2) * s;
}

const std::vector<RatVec>& relative_test_characters(const DescendentSystem& ds, CosetReps& reps) {
    reps.rho.clear();
    for (std::size_t i = 0; i < reps.transversal.size(); ++i) {
        auto w = reps.transversal[i];
        RatVec a = rho_w_shifted(ds, reps, w);
        RatVec b = rho_w_as_sum(ds, reps, w);
        if (a != b)
            throw EngineError(ErrorKind::FormulaMismatch, "rho^w for w = " + reps.labels[i] + ": " + to_string(a) +
                                                              " (shifted half-sums) vs " + to_string(b) + " (trace sum)");
        reps.rho.push_back(a);
    }
    return reps.rho;
}

}  // namespace symint
