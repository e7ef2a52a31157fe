#include "symint/criteria.hpp"

#include <algorithm>
#include <set>

namespace symint {

const char* verdict_name(VerdictKind k) {
    switch (k) {
        case VerdictKind::Integrable: return "Integrable";
        case VerdictKind::NotIntegrable: return "NotIntegrable";
        case VerdictKind::SquareIntegrable: return "SquareIntegrable";
        case VerdictKind::Tempered: return "Tempered";
        case VerdictKind::NeitherTemperedNorSI: return "NeitherTemperedNorSI";
        case VerdictKind::StronglyTempered: return "StronglyTempered";
        case VerdictKind::StronglyDiscrete: return "StronglyDiscrete";
        case VerdictKind::Inconclusive: return "Inconclusive";
    }
    return "Unknown";
}

static void check_subset(const std::vector<std::size_t>& J, std::size_t r, ErrorKind kind) {
    for (std::size_t i = 0; i < J.size(); ++i) {
        if (J[i] >= r) throw EngineError(kind, "index " + std::to_string(J[i]) + " out of range (" + std::to_string(r) + " simple roots)");
        if (i && J[i] <= J[i - 1]) throw EngineError(kind, "indices must be sorted and distinct");
    }
}

ThetaParabolic theta_parabolic(const DescendentSystem& ds, std::vector<std::size_t> J) {
    std::sort(J.begin(), J.end());
    J.erase(std::unique(J.begin(), J.end()), J.end());
    std::size_t r = ds.delta_GH.size();
    check_subset(J, r, ErrorKind::InvalidProfile);
    ThetaParabolic par;
    par.J = J;
    std::set<std::size_t> inJ(J.begin(), J.end());
    for (auto s : ds.datum.simple) {
        bool minus = std::find(ds.delta_G_minus.begin(), ds.delta_G_minus.end(), s) != ds.delta_G_minus.end();
        if (minus || inJ.count(ds.p.at(s))) par.I.push_back(s);
    }
    std::vector<RatVec> jvecs;
    for (auto j : J) jvecs.push_back(ds.restricted[ds.delta_GH[j]].vec);
    for (std::size_t k = 0; k < r; ++k) {
        if (inJ.count(k)) continue;
        par.complement.push_back(k);
        const RatVec& g = ds.restricted[ds.delta_GH[k]].vec;
        par.DeltaGH_M.push_back(g - project_onto_span(g, jvecs));
    }
    return par;
}

std::vector<ThetaParabolic> theta_parabolics(const DescendentSystem& ds) {
    std::size_t r = ds.delta_GH.size();
    if (r > kMaxParabolicRank)
        throw EngineError(ErrorKind::SizeCapExceeded, "more than " + std::to_string(kMaxParabolicRank) + " restricted simple roots");
    std::vector<ThetaParabolic> out;
    for (std::size_t mask = 0; mask < (std::size_t(1) << r); ++mask) {
        std::vector<std::size_t> J;
        for (std::size_t k = 0; k < r; ++k)
            if (mask >> k & 1) J.push_back(k);
        out.push_back(theta_parabolic(ds, J));
    }
    return out;
}

PositivityResult relative_positivity(const DescendentSystem& ds, const RatVec& lambda, const ThetaParabolic& par,
                                     bool strict) {
    if (lambda.size() != ds.dim()) throw EngineError(ErrorKind::DimensionMismatch, "lambda has the wrong dimension");
    PositivityResult res;
    RatVec l = ds.in_plus_space(lambda) ? lambda : eigenprojection(lambda, ds.inv.theta, +1);
    l = project_onto_span(l, ds.delta_GH_vecs());
    std::vector<RatVec> jvecs;
    for (auto j : par.J) jvecs.push_back(ds.restricted[ds.delta_GH[j]].vec);
    l -= project_onto_span(l, jvecs);
    auto c = solve_in_span(l, par.DeltaGH_M);
    if (!c) {
        res.in_span = false;
        res.reason = "outside the span of the restricted simple roots of M";
        return res;
    }
    res.coefficients = *c;
    res.holds = std::all_of(c->begin(), c->end(), [&](const Rational& x) { return strict ? x > 0 : x >= 0; });
    return res;
}

IngestedExponent ingest_exponent(const DescendentSystem& ds, const RatVec& v, Coordinates coords) {
    if (v.size() != ds.dim())
        throw EngineError(ErrorKind::DimensionMismatch,
                          "exponent has dimension " + std::to_string(v.size()) + ", expected " + std::to_string(ds.dim()));
    IngestedExponent e;
    e.given = v;
    RatVec plus;
    if (coords == Coordinates::Full) {
        plus = eigenprojection(v, ds.inv.theta, +1);
        e.minus_discarded = v - plus;
    } else {
        if (!ds.in_plus_space(v))
            throw EngineError(ErrorKind::InvalidProfile, "restricted-coordinate exponent " + to_string(v) + " is not theta-fixed");
        plus = v;
        e.minus_discarded = zero_vec(v.size());
    }
    e.used = ds.strip_center(plus);
    e.central_discarded = plus - e.used;
    return e;
}

void validate_profile(const DescendentSystem& ds, const ExponentProfile& profile) {
    for (const auto& entry : profile.entries) {
        auto J = entry.J;
        std::sort(J.begin(), J.end());
        if (std::adjacent_find(J.begin(), J.end()) != J.end())
            throw EngineError(ErrorKind::InvalidProfile, "repeated index in a parabolic key");
        for (auto j : J)
            if (j >= ds.delta_GH.size())
                throw EngineError(ErrorKind::InvalidProfile, "unknown parabolic key: index " + std::to_string(j) + " but only " +
                                                                 std::to_string(ds.delta_GH.size()) + " restricted simple roots");
        for (const auto& v : entry.exponents)
            if (v.size() != ds.dim())
                throw EngineError(ErrorKind::DimensionMismatch, "exponent has dimension " + std::to_string(v.size()) +
                                                                    ", expected " + std::to_string(ds.dim()));
    }
}

IntegrabilityReport h_integrability(const DescendentSystem& ds, const CosetReps& reps, const ExponentProfile& profile,
                                    bool strict) {
    validate_profile(ds, profile);
    if (reps.rho.size() != reps.transversal.size())
        throw EngineError(ErrorKind::CountMismatch, "relative test characters have not been computed");
    IntegrabilityReport rep;
    std::size_t r = ds.delta_GH.size();
    std::set<std::vector<std::size_t>> present;
    std::vector<ThetaParabolic> pars;
    for (const auto& entry : profile.entries) {
        pars.push_back(theta_parabolic(ds, entry.J));
        present.insert(pars.back().J);
        std::vector<IngestedExponent> ing;
        for (const auto& v : entry.exponents) ing.push_back(ingest_exponent(ds, v, profile.coordinates));
        rep.ingested.push_back(std::move(ing));
    }
    for (std::size_t i = 0; i < reps.transversal.size(); ++i) {
        for (std::size_t e = 0; e < profile.entries.size(); ++e) {
            for (std::size_t x = 0; x < rep.ingested[e].size(); ++x) {
                RatVec lambda = reps.rho[i] + rep.ingested[e][x].used;
                auto all = ds.coefficients(lambda);
                CoefficientRow row{i, e, x, {}, true};
                for (auto k : pars[e].complement) {
                    row.coefficients.push_back(all[k]);
                    bool ok = strict ? all[k] > 0 : all[k] >= 0;
                    if (!ok) {
                        if (row.pass)
                            rep.verdict.witnesses.push_back({reps.labels[i], pars[e].J, x, lambda, k, all[k]});
                        row.pass = false;
                    }
                }
                rep.rows.push_back(std::move(row));
            }
        }
    }
    rep.verdict.kind = rep.verdict.witnesses.empty() ? VerdictKind::Integrable : VerdictKind::NotIntegrable;

    std::size_t total = std::size_t(1) << std::min<std::size_t>(r, 63);
    rep.missing_count = total - present.size();
    if (r <= 8) {
        for (std::size_t mask = 0; mask < total; ++mask) {
            std::vector<std::size_t> J;
            for (std::size_t k = 0; k < r; ++k)
                if (mask >> k & 1) J.push_back(k);
            if (!present.count(J)) rep.missing.push_back(J);
        }
    }
    if (profile.entries.empty())
        rep.verdict.warnings.push_back("WARNING: empty exponent profile; the verdict is vacuous");
    if (rep.missing_count)
        rep.verdict.warnings.push_back("WARNING: no exponents supplied for " + std::to_string(rep.missing_count) + " of " +
                                       std::to_string(total) +
                                       " theta-stable standard parabolics; they were treated as vacuously passing");
    return rep;
}

Verdict casselman_classify(const RootDatumG& datum, const CasselmanExponents& exponents) {
    std::vector<RatVec> simple;
    for (auto s : datum.simple) simple.push_back(to_rat(datum.roots[s]));
    Verdict v;
    bool si = true, tempered = true;
    std::vector<Witness> zeros, negatives;
    for (const auto& [I, chis] : exponents) {
        check_subset(I, simple.size(), ErrorKind::InvalidProfile);
        std::vector<RatVec> ivecs, deltaM;
        std::vector<std::size_t> comp;
        for (auto i : I) ivecs.push_back(simple[i]);
        for (std::size_t k = 0; k < simple.size(); ++k) {
            if (std::find(I.begin(), I.end(), k) != I.end()) continue;
            comp.push_back(k);
            deltaM.push_back(simple[k] - project_onto_span(simple[k], ivecs));
        }
        for (std::size_t x = 0; x < chis.size(); ++x) {
            if (chis[x].size() != datum.rank) throw EngineError(ErrorKind::DimensionMismatch, "exponent of wrong dimension");
            RatVec l = project_onto_span(chis[x], simple);
            l -= project_onto_span(l, ivecs);
            auto c = solve_in_span(l, deltaM);
            for (std::size_t k = 0; k < comp.size(); ++k) {
                const Rational& ck = (*c)[k];
                if (ck <= 0) si = false;
                if (ck < 0) {
                    tempered = false;
                    negatives.push_back({"", I, x, chis[x], comp[k], ck});
                } else if (ck == 0) {
                    zeros.push_back({"", I, x, chis[x], comp[k], ck});
                }
            }
        }
    }
    if (si) {
        v.kind = VerdictKind::SquareIntegrable;
    } else if (tempered) {
        v.kind = VerdictKind::Tempered;
        v.witnesses = zeros;
    } else {
        v.kind = VerdictKind::NeitherTemperedNorSI;
        v.witnesses = negatives;
    }
    return v;
}

Verdict classify_pair(const DescendentSystem& ds, const CosetReps& reps) {
    if (reps.rho.size() != reps.transversal.size())
        throw EngineError(ErrorKind::CountMismatch, "relative test characters have not been computed");
    Verdict v;
    std::vector<Witness> zeros, negatives;
    for (std::size_t i = 0; i < reps.transversal.size(); ++i) {
        auto c = ds.coefficients(reps.rho[i]);
        for (std::size_t k = 0; k < c.size(); ++k) {
            if (c[k] < 0) negatives.push_back({reps.labels[i], {}, 0, reps.rho[i], k, c[k]});
            else if (c[k] == 0) zeros.push_back({reps.labels[i], {}, 0, reps.rho[i], k, c[k]});
        }
    }
    if (!negatives.empty()) {
        v.kind = VerdictKind::Inconclusive;
        v.witnesses = negatives;
        v.warnings.push_back("the positivity test is only a sufficient condition; Inconclusive is not a negative answer");
    } else if (!zeros.empty()) {
        v.kind = VerdictKind::StronglyDiscrete;
        v.witnesses = zeros;
    } else {
        v.kind = VerdictKind::StronglyTempered;
    }
    if (ds.delta_GH.empty())
        v.warnings.push_back("no restricted simple roots (anisotropic modulo the centre); positivity holds vacuously");
    return v;
}

}  // namespace symint
