#include <set>

#include "support.hpp"

using namespace symint;
using namespace symint::testing;

namespace {

ExponentProfile profile_of(std::vector<ExponentEntry> entries, Coordinates c = Coordinates::Full) {
    ExponentProfile p;
    p.coordinates = c;
    p.entries = std::move(entries);
    return p;
}

// Σ (1 + k mod 3)·δ_k over Δ^{G/H}: strictly dominant.
RatVec dominant(const DescendentSystem& ds) {
    RatVec v = zero_vec(ds.dim());
    long k = 0;
    for (const auto& d : ds.delta_GH_vecs()) v += Rational(1 + k++ % 3) * d;
    return v;
}

std::vector<std::vector<std::size_t>> all_subsets(std::size_t r) {
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << r); ++mask) {
        std::vector<std::size_t> J;
        for (std::size_t j = 0; j < r; ++j)
            if (mask >> j & 1) J.push_back(j);
        out.push_back(J);
    }
    return out;
}

}  // namespace

TEST_CASE("theta_parabolics: one per subset, J -> I injective and monotone") {
    for (const auto& g : golden_instances()) {
        auto a = analyze_family(g.spec);
        std::size_t r = a.ds.delta_GH.size();
        if (r > 5) continue;
        CAPTURE(describe(g.spec));
        auto pars = theta_parabolics(a.ds);
        REQUIRE(pars.size() == (std::size_t{1} << r));
        std::set<std::vector<std::size_t>> Is;
        for (const auto& p : pars) {
            Is.insert(p.I);
            CHECK(p.DeltaGH_M.size() == p.complement.size());
            CHECK(p.J.size() + p.complement.size() == r);
            if (!p.DeltaGH_M.empty()) CHECK(linearly_independent(p.DeltaGH_M));
            std::set<std::size_t> minus(a.ds.delta_G_minus.begin(), a.ds.delta_G_minus.end());
            for (auto m : minus) CHECK(std::count(p.I.begin(), p.I.end(), m) == 1);
            if (p.J.empty()) CHECK(std::set<std::size_t>(p.I.begin(), p.I.end()) == minus);
            if (p.J.size() == r) {
                CHECK(std::set<std::size_t>(p.I.begin(), p.I.end()) ==
                      std::set<std::size_t>(a.ds.datum.simple.begin(), a.ds.datum.simple.end()));
                CHECK(p.DeltaGH_M.empty());
            }
        }
        CHECK(Is.size() == pars.size());
        for (const auto& p : pars)
            for (const auto& q2 : pars)
                if (std::includes(q2.J.begin(), q2.J.end(), p.J.begin(), p.J.end()))
                    CHECK(std::includes(q2.I.begin(), q2.I.end(), p.I.begin(), p.I.end()));
    }
}

TEST_CASE("theta_parabolic on GL_4/O_{2,2}") {
    auto a = analyze_family(fam("gl_orthogonal", {{"n", 4}, {"r", 2}}));
    auto p = theta_parabolic(a.ds, {0});
    REQUIRE(p.DeltaGH_M.size() == 1);
    // 2η2 restricted to the wall η1 = η2 is η1 + η2
    RatVec e1 = {q(1, 2), 0, 0, q(-1, 2)}, e2 = {0, q(1, 2), q(-1, 2), 0};
    CHECK(p.DeltaGH_M[0] == e1 + e2);
    CHECK(p.complement == std::vector<std::size_t>{1});
    CHECK_KIND(theta_parabolic(a.ds, {7}), ErrorKind::InvalidProfile);
}

TEST_CASE("relative_positivity examples on C_2") {
    auto a = analyze_family(fam("gl_orthogonal", {{"n", 4}, {"r", 2}}));
    RatVec e1 = {q(1, 2), 0, 0, q(-1, 2)}, e2 = {0, q(1, 2), q(-1, 2), 0};
    auto none = theta_parabolic(a.ds, {});
    auto r = relative_positivity(a.ds, e1 + e2, none, true);
    CHECK(r.holds);
    CHECK(r.coefficients == std::vector<Rational>{1, 1});

    for (const auto& J : all_subsets(2)) {
        auto p = theta_parabolic(a.ds, J);
        CHECK(relative_positivity(a.ds, zero_vec(4), p, false).holds);
        CHECK(relative_positivity(a.ds, zero_vec(4), p, true).holds == (J.size() == 2));
    }

    auto neg = relative_positivity(a.ds, -(e1 - e2), none, true);
    CHECK_FALSE(neg.holds);
    CHECK(neg.coefficients == std::vector<Rational>{-1, 0});

    // θ-antiinvariant and central parts are projected away: ε1 acts as η1 = (η1−η2) + ½·2η2
    auto off = relative_positivity(a.ds, RatVec{1, 0, 0, 0}, none, true);
    CHECK(off.in_span);
    CHECK(off.holds);
    CHECK(off.coefficients == std::vector<Rational>{1, q(1, 2)});
    auto gl2 = analyze_family(fam("gl_linear", {{"n1", 1}, {"n2", 1}}));
    auto p0 = theta_parabolic(gl2.ds, {});
    CHECK(relative_positivity(gl2.ds, RatVec{q(1, 2), q(-1, 2)}, p0, true).coefficients ==
          relative_positivity(gl2.ds, RatVec{q(7, 2), q(5, 2)}, p0, true).coefficients);
}

TEST_CASE("relative_positivity agrees with direct coefficient extraction") {
    std::mt19937 rng(23);
    for (const auto& g : golden_instances()) {
        auto a = analyze_family(g.spec);
        std::size_t r = a.ds.delta_GH.size();
        if (r == 0 || r > 4) continue;
        CAPTURE(describe(g.spec));
        auto pars = theta_parabolics(a.ds);
        for (int it = 0; it < 10; ++it) {
            RatVec lambda = ingest_exponent(a.ds, random_exponent(a.ds, rng), Coordinates::Full).used;
            auto direct = a.ds.coefficients(lambda);
            auto s = solve_in_span(lambda, a.ds.delta_GH_vecs());
            REQUIRE(s);
            CHECK(*s == direct);
            for (const auto& p : pars) {
                auto res = relative_positivity(a.ds, lambda, p, true);
                REQUIRE(res.in_span);
                std::vector<Rational> expect;
                for (auto k : p.complement) expect.push_back(direct[k]);
                CHECK(res.coefficients == expect);
                bool strict = std::all_of(expect.begin(), expect.end(), [](const Rational& x) { return x > 0; });
                bool weak = std::all_of(expect.begin(), expect.end(), [](const Rational& x) { return x >= 0; });
                CHECK(res.holds == strict);
                CHECK(relative_positivity(a.ds, lambda, p, false).holds == weak);
            }
        }
    }
}

TEST_CASE("ingestion splits an exponent into used, antiinvariant and central parts") {
    std::mt19937 rng(29);
    for (const auto& spec : {fam("gl_linear", {{"n1", 2}, {"n2", 3}}), fam("gl_orthogonal", {{"n", 5}, {"r", 2}}),
                             fam("galois_doubling", {{"n", 2}}, "B")}) {
        auto a = analyze_family(spec);
        for (int it = 0; it < 20; ++it) {
            RatVec v = random_ratvec(rng, a.ds.dim());
            auto e = ingest_exponent(a.ds, v, Coordinates::Full);
            CHECK(e.used + e.minus_discarded + e.central_discarded == v);
            CHECK(act(a.ds.inv.theta, e.used) == e.used);
            CHECK(act(a.ds.inv.theta, e.minus_discarded) == -e.minus_discarded);
            for (const auto& d : a.ds.delta_GH_vecs()) CHECK(dot(e.central_discarded, d) == 0);
            CHECK(ingest_exponent(a.ds, e.used, Coordinates::Restricted).used == e.used);
            if (!is_zero(e.minus_discarded))
                CHECK_KIND(ingest_exponent(a.ds, v, Coordinates::Restricted), ErrorKind::InvalidProfile);
        }
        CHECK_KIND(ingest_exponent(a.ds, RatVec(a.ds.dim() + 1), Coordinates::Full), ErrorKind::DimensionMismatch);
    }
}

TEST_CASE("h_integrability examples") {
    SUBCASE("Galois pair, strictly dominant exponents everywhere") {
        auto a = analyze_family(fam("galois_doubling", {{"n", 2}}, "A"));
        std::vector<ExponentEntry> entries;
        for (const auto& J : all_subsets(a.ds.delta_GH.size())) entries.push_back({J, {dominant(a.ds)}});
        auto rep = h_integrability(a.ds, a.reps, profile_of(entries));
        CHECK(rep.verdict.kind == VerdictKind::Integrable);
        CHECK(rep.verdict.witnesses.empty());
        CHECK(rep.missing_count == 0);
    }
    SUBCASE("exponent cancelling a test character") {
        auto a = analyze_family(fam("gl_orthogonal", {{"n", 4}, {"r", 2}}));
        for (std::size_t i = 0; i < a.reps.transversal.size(); ++i) {
            auto rep = h_integrability(a.ds, a.reps, profile_of({{{}, {-a.reps.rho[i]}}}));
            CHECK(rep.verdict.kind == VerdictKind::NotIntegrable);
            REQUIRE(!rep.verdict.witnesses.empty());
            bool found = false;
            for (const auto& w : rep.verdict.witnesses) found = found || (w.w == a.reps.labels[i] && w.coefficient == 0);
            CHECK(found);
            CHECK(h_integrability(a.ds, a.reps, profile_of({{{}, {-a.reps.rho[i]}}}), false).verdict.kind ==
                  VerdictKind::Integrable);
        }
    }
    SUBCASE("GL_2/GL_1xGL_1, zero exponent") {
        auto a = analyze_family(fam("gl_linear", {{"n1", 1}, {"n2", 1}}));
        auto rep = h_integrability(a.ds, a.reps, profile_of({{{}, {zero_vec(2)}}}));
        CHECK(rep.verdict.kind == VerdictKind::Integrable);
        REQUIRE(rep.rows.size() == 2);
        for (const auto& row : rep.rows) CHECK(row.coefficients == std::vector<Rational>{q(1, 2)});
    }
    SUBCASE("missing faces are vacuous but reported") {
        auto a = analyze_family(fam("gl_orthogonal", {{"n", 4}, {"r", 2}}));
        auto rep = h_integrability(a.ds, a.reps, profile_of({}));
        CHECK(rep.verdict.kind == VerdictKind::Integrable);
        CHECK(rep.missing_count == 4);
        CHECK(!rep.verdict.warnings.empty());
    }
    SUBCASE("malformed profiles") {
        auto a = analyze_family(fam("gl_orthogonal", {{"n", 4}, {"r", 2}}));
        CHECK_KIND(h_integrability(a.ds, a.reps, profile_of({{{0, 0}, {zero_vec(4)}}})), ErrorKind::InvalidProfile);
        CHECK_KIND(h_integrability(a.ds, a.reps, profile_of({{{5}, {zero_vec(4)}}})), ErrorKind::InvalidProfile);
        CHECK_KIND(h_integrability(a.ds, a.reps, profile_of({{{}, {zero_vec(3)}}})), ErrorKind::DimensionMismatch);
    }
}

TEST_CASE("negative verdicts carry witnesses; adding a dominant vector is monotone") {
    std::mt19937 rng(31);
    for (const auto& g : golden_instances()) {
        auto a = analyze_family(g.spec);
        if (a.ds.delta_GH.empty() || a.reps.transversal.size() > 40) continue;
        CAPTURE(describe(g.spec));
        RatVec dom = dominant(a.ds);
        for (int it = 0; it < 15; ++it) {
            auto p = random_profile(a.ds, rng);
            auto before = h_integrability(a.ds, a.reps, p);
            if (before.verdict.kind == VerdictKind::NotIntegrable) CHECK(!before.verdict.witnesses.empty());
            for (auto& e : p.entries)
                for (auto& x : e.exponents) x += dom;
            auto after = h_integrability(a.ds, a.reps, p);
            if (before.verdict.kind == VerdictKind::Integrable) CHECK(after.verdict.kind == VerdictKind::Integrable);
            for (std::size_t i = 0; i < before.rows.size(); ++i)
                if (before.rows[i].pass) CHECK(after.rows[i].pass);
        }
    }
}

TEST_CASE("casselman_classify examples") {
    auto gl2 = split_datum("A", 1);
    RatVec alpha = to_rat(gl2.roots[gl2.simple[0]]);
    CasselmanExponents si = {{{}, {q(1, 2) * alpha}}};
    CHECK(casselman_classify(gl2, si).kind == VerdictKind::SquareIntegrable);
    CasselmanExponents tempered = {{{}, {zero_vec(2)}}, {{0}, {zero_vec(2)}}};
    CHECK(casselman_classify(gl2, tempered).kind == VerdictKind::Tempered);
    CasselmanExponents bad = {{{}, {-alpha}}};
    auto v = casselman_classify(gl2, bad);
    CHECK(v.kind == VerdictKind::NeitherTemperedNorSI);
    REQUIRE(v.witnesses.size() == 1);
    CHECK(v.witnesses[0].coefficient == -1);
    // central part is ignored
    CasselmanExponents shifted = {{{}, {q(1, 2) * alpha + RatVec{5, 5}}}};
    CHECK(casselman_classify(gl2, shifted).kind == VerdictKind::SquareIntegrable);
}

TEST_CASE("classify_pair on small pairs") {
    CHECK(classify_pair(analyze_family(fam("gl_linear", {{"n1", 1}, {"n2", 1}})).ds,
                        analyze_family(fam("gl_linear", {{"n1", 1}, {"n2", 1}})).reps)
              .kind == VerdictKind::StronglyTempered);
    auto g = analyze_family(fam("galois_doubling", {{"n", 2}}, "C"));
    auto v = classify_pair(g.ds, g.reps);
    CHECK(v.kind == VerdictKind::StronglyDiscrete);
    CHECK(!v.witnesses.empty());
    for (const auto& w : v.witnesses) CHECK(w.coefficient == 0);
    for (auto k : {VerdictKind::Integrable, VerdictKind::Inconclusive, VerdictKind::StronglyDiscrete})
        CHECK(std::string(verdict_name(k)).size() > 0);
}
