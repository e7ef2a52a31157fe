#include "support.hpp"

using namespace symint;
using namespace symint::testing;

TEST_CASE("rationals print and parse canonically") {
    CHECK(to_string(q(6, 4)) == "3/2");
    CHECK(to_string(q(-4, 2)) == "-2");
    CHECK(to_string(rv({1, 0, -2})) == "(1,0,-2)");
    CHECK(parse_rational("6/4") == q(3, 2));
    CHECK(to_string(parse_rational("-10/4")) == "-5/2");
    CHECK(parse_rational("+7") == 7);
    CHECK_KIND(parse_rational("1/0"), ErrorKind::InvalidProfile);
    CHECK_KIND(parse_rational("x"), ErrorKind::InvalidProfile);
    CHECK_KIND(parse_rational("1/"), ErrorKind::InvalidProfile);
    CHECK(frac(4, 2) == 2);
    CHECK(frac(4, 2).get_den() == 1);
}

TEST_CASE("solve_in_span examples") {
    auto c = solve_in_span(rv({1, 1}), {rv({1, -1}), rv({0, 2})});
    REQUIRE(c);
    CHECK(*c == std::vector<Rational>{1, 1});
    auto z = solve_in_span(rv({0, 0, 0}), {rv({1, 2, 3}), rv({0, 1, 1})});
    REQUIRE(z);
    CHECK(*z == std::vector<Rational>{0, 0});
    CHECK_FALSE(solve_in_span(rv({1, 0, 0}), {rv({0, 1, 0})}));
    CHECK_KIND(solve_in_span(rv({1, 0}), {rv({1, 1}), rv({2, 2})}), ErrorKind::DependentGenerators);
}

TEST_CASE("solve_in_span round-trips on random independent generators") {
    std::mt19937 rng(11);
    for (int it = 0; it < 200; ++it) {
        std::size_t d = 1 + rng() % 5, k = 1 + rng() % d;
        std::vector<RatVec> gens;
        while (gens.size() < k) {
            gens.push_back(random_ratvec(rng, d));
            if (!linearly_independent(gens)) gens.pop_back();
        }
        std::vector<Rational> coef(k);
        RatVec target = zero_vec(d);
        for (std::size_t i = 0; i < k; ++i) {
            coef[i] = frac(static_cast<long>(rng() % 13) - 6, 1 + rng() % 4);
            target += coef[i] * gens[i];
        }
        auto c = solve_in_span(target, gens);
        REQUIRE(c);
        CHECK(*c == coef);
        if (k < d) {
            auto perp = orthogonal_complement(gens, d);
            REQUIRE(!perp.empty());
            CHECK_FALSE(solve_in_span(target + perp[0], gens));
        }
    }
}

TEST_CASE("eigenprojection") {
    IntMat swap = {{0, 1}, {1, 0}};
    CHECK(eigenprojection(rv({1, 0}), swap, +1) == RatVec{q(1, 2), q(1, 2)});
    CHECK(eigenprojection(rv({3, 3}), swap, +1) == rv({3, 3}));
    CHECK_KIND(eigenprojection(rv({1, 0}), IntMat{{1, 1}, {0, 1}}, +1), ErrorKind::InvolutionInvalid);

    std::mt19937 rng(5);
    std::vector<IntMat> thetas = {swap, {{-1, 0}, {0, 1}}, {{0, -1}, {-1, 0}}, {{1, 0}, {0, 1}}};
    for (int it = 0; it < 100; ++it) {
        const auto& t = thetas[it % thetas.size()];
        RatVec v = random_ratvec(rng, 2);
        RatVec p = eigenprojection(v, t, +1), m = eigenprojection(v, t, -1);
        CHECK(p + m == v);
        CHECK(act(t, p) == p);
        CHECK(act(t, m) == -m);
    }
}

TEST_CASE("projection and complement") {
    std::vector<RatVec> g = {rv({1, -1, 0})};
    CHECK(project_onto_span(rv({1, 0, 0}), g) == RatVec{q(1, 2), q(-1, 2), 0});
    auto perp = orthogonal_complement(g, 3);
    CHECK(perp.size() == 2);
    for (const auto& p : perp) CHECK(dot(p, g[0]) == 0);
    CHECK(rank_of({rv({1, 2}), rv({2, 4})}) == 1);
}

namespace {

ZVec mat_vec(const ZMat& A, const ZVec& x) {
    ZVec y(A.size(), 0);
    for (std::size_t i = 0; i < A.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) y[i] += A[i][j] * x[j];
    return y;
}

Integer det(ZMat m) {
    // Bareiss fraction-free elimination
    std::size_t n = m.size();
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && m[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

}  // namespace

TEST_CASE("column Hermite form") {
    std::mt19937 rng(3);
    for (int it = 0; it < 100; ++it) {
        std::size_t r = 1 + rng() % 3, c = 1 + rng() % 4;
        ZMat A(r, ZVec(c));
        for (auto& row : A)
            for (auto& x : row) x = static_cast<long>(rng() % 11) - 5;
        auto h = column_hermite(A);
        CHECK(abs(det(h.U)) == 1);
        for (std::size_t j = 0; j < c; ++j) {
            ZVec col(c, 0);
            for (std::size_t i = 0; i < c; ++i) col[i] = h.U[i][j];
            ZVec img = mat_vec(A, col);
            for (std::size_t i = 0; i < r; ++i) CHECK(img[i] == h.H[i][j]);
            if (j >= h.rank)
                for (const auto& x : img) CHECK(x == 0);
        }
        for (std::size_t j = 0; j < h.rank; ++j) {
            CHECK(h.H[h.pivot_rows[j]][j] > 0);
            for (std::size_t i = 0; i < h.pivot_rows[j]; ++i) CHECK(h.H[i][j] == 0);
        }
        auto ker = integer_kernel(A, c);
        CHECK(ker.size() == c - h.rank);
        for (const auto& k : ker)
            for (const auto& x : mat_vec(A, k)) CHECK(x == 0);
    }
}

TEST_CASE("lattice_quotient examples") {
    auto a = lattice_quotient(1, {zv({2})});
    CHECK(a.index == 2);
    CHECK(a.transversal == std::vector<ZVec>{zv({0}), zv({1})});
    auto b = lattice_quotient(2, {zv({1, 0}), zv({0, 1})});
    CHECK(b.index == 1);
    CHECK(b.transversal == std::vector<ZVec>{zv({0, 0})});
    auto c = lattice_quotient(2, {zv({2, 0}), zv({0, 3})});
    CHECK(c.index == 6);
    CHECK(c.transversal.size() == 6);
    CHECK_KIND(lattice_quotient(2, {zv({1, 1})}), ErrorKind::InfiniteIndex);
    CHECK_KIND(lattice_quotient(2, {zv({1, 1}), zv({2, 2})}), ErrorKind::InfiniteIndex);
}

TEST_CASE("lattice_quotient covers the box exactly once") {
    std::mt19937 rng(17);
    for (int it = 0; it < 40; ++it) {
        std::size_t p = 1 + rng() % 2;
        std::vector<ZVec> gens;
        for (std::size_t g = 0; g < p + rng() % 2; ++g) {
            ZVec v(p);
            for (auto& x : v) x = static_cast<long>(rng() % 7) - 3;
            gens.push_back(v);
        }
        ZMat M(p, ZVec(gens.size()));
        for (std::size_t i = 0; i < p; ++i)
            for (std::size_t j = 0; j < gens.size(); ++j) M[i][j] = gens[j][i];
        if (column_hermite(M).rank < p) continue;
        auto Lq = lattice_quotient(p, gens);
        CHECK(Lq.index == static_cast<long>(Lq.transversal.size()));
        // distinct cosets
        for (std::size_t i = 0; i < Lq.transversal.size(); ++i)
            for (std::size_t j = i + 1; j < Lq.transversal.size(); ++j) {
                ZVec d(p);
                for (std::size_t k = 0; k < p; ++k) d[k] = Lq.transversal[i][k] - Lq.transversal[j][k];
                CHECK_FALSE(Lq.contains(d));
            }
        // every box point is congruent to exactly one transversal element
        ZVec x(p, -6);
        while (true) {
            int hits = 0;
            for (const auto& t : Lq.transversal) {
                ZVec d(p);
                for (std::size_t k = 0; k < p; ++k) d[k] = x[k] - t[k];
                hits += Lq.contains(d);
            }
            CHECK(hits == 1);
            auto r = Lq.reduce(x);
            CHECK(std::find(Lq.transversal.begin(), Lq.transversal.end(), r) != Lq.transversal.end());
            std::size_t i = 0;
            while (i < p && x[i] == 6) x[i++] = -6;
            if (i == p) break;
            ++x[i];
        }
    }
}
