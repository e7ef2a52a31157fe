#include <set>

#include "support.hpp"

using namespace symint;
using namespace symint::testing;

namespace {

using Mat = std::vector<RatVec>;  // rows

Mat identity(std::size_t d) {
    Mat m(d, zero_vec(d));
    for (std::size_t i = 0; i < d; ++i) m[i][i] = 1;
    return m;
}

Mat mul(const Mat& a, const Mat& b) {
    std::size_t d = a.size();
    Mat c(d, zero_vec(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k)
            if (a[i][k] != 0)
                for (std::size_t j = 0; j < d; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

Mat reflection_matrix(const RatVec& a) {
    std::size_t d = a.size();
    Mat m(d, zero_vec(d));
    for (std::size_t j = 0; j < d; ++j) {
        RatVec e = zero_vec(d);
        e[j] = 1;
        RatVec r = reflect(e, a);
        for (std::size_t i = 0; i < d; ++i) m[i][j] = r[i];
    }
    return m;
}

// Plain matrix closure, the representation the engine deliberately avoids.
std::set<Mat> brute_closure(const std::vector<RatVec>& simple) {
    std::size_t d = simple.at(0).size();
    std::vector<Mat> gens;
    for (const auto& s : simple) gens.push_back(reflection_matrix(s));
    std::set<Mat> seen = {identity(d)};
    std::vector<Mat> frontier = {identity(d)};
    while (!frontier.empty()) {
        std::vector<Mat> next;
        for (const auto& m : frontier)
            for (const auto& g : gens) {
                Mat x = mul(g, m);
                if (seen.insert(x).second) next.push_back(x);
            }
        frontier = std::move(next);
    }
    return seen;
}

std::vector<RatVec> simple_of(const std::string& type, long n) {
    RootDatumG d = split_datum(type, n);
    std::vector<RatVec> s;
    for (auto i : d.simple) s.push_back(to_rat(d.roots[i]));
    return s;
}

long factorial(long n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

TEST_CASE("simple_roots_of examples") {
    CHECK(simple_roots_of({rv({1, -1})}) == std::vector<RatVec>{rv({1, -1})});
    auto c2 = simple_roots_of({rv({1, -1}), rv({0, 2}), rv({1, 1}), rv({2, 0})});
    CHECK(std::set<RatVec>(c2.begin(), c2.end()) == std::set<RatVec>{rv({1, -1}), rv({0, 2})});
    CHECK(simple_roots_of({rv({1}), rv({2})}) == std::vector<RatVec>{rv({1})});
    CHECK_KIND(simple_roots_of({rv({1, 0}), rv({-1, 0})}), ErrorKind::NotPositiveSystem);
}

TEST_CASE("make_root_system validation") {
    auto bc1 = make_root_system(1, {rv({1}), rv({2}), rv({-1}), rv({-2})}, {true, true, false, false}, {2, 1, 2, 1});
    CHECK(bc1.simple_roots() == std::vector<RatVec>{rv({1})});
    CHECK(bc1.probe() == rv({3}));
    CHECK(bc1.index_of(rv({2})) == 1);
    CHECK(bc1.index_of(rv({3})) == -1);
    // not closed: reflecting (1,1) in (1,0) gives (-1,1)
    CHECK_KIND(make_root_system(2, {rv({1, 0}), rv({1, 1}), rv({-1, 0}), rv({-1, -1})}, {true, true, false, false},
                                {1, 1, 1, 1}),
               ErrorKind::NotARootSystem);
    // Cartan number 2(b,a)/(a,a) = 2*1/3 is not an integer
    CHECK_KIND(make_root_system(2, {rv({1, 1}), rv({1, 0}), rv({-1, -1}), rv({-1, 0})}, {true, true, false, false},
                                {1, 1, 1, 1}),
               ErrorKind::NotARootSystem);
    CHECK_KIND(make_root_system(1, {rv({1}), rv({1})}, {true, false}, {1, 1}), ErrorKind::NotARootSystem);
    CHECK_KIND(make_root_system(1, {rv({1}), rv({-1})}, {true, true}, {1, 1}), ErrorKind::NotPositiveSystem);
}

TEST_CASE("weyl_closure examples") {
    CHECK(weyl_closure({rv({1, -1})}).order() == 2);
    CHECK(weyl_closure({rv({1, -1}), rv({0, 2})}).order() == 8);
    CHECK(weyl_closure({rv({1, -1}), rv({1, 1})}).order() == 4);
    CHECK(weyl_closure({}).order() == 1);
    CHECK_KIND(weyl_closure({rv({1, -1}), rv({2, -2})}), ErrorKind::NotARootSystem);
    CHECK_KIND(weyl_closure(simple_of("A", 5), 100), ErrorKind::SizeCapExceeded);
}

TEST_CASE("weyl_closure agrees with a brute-force matrix closure") {
    std::vector<std::pair<std::string, long>> types = {{"A", 1}, {"A", 2}, {"A", 3}, {"B", 2}, {"B", 3},
                                                       {"C", 3}, {"D", 3}, {"D", 4}};
    std::vector<std::vector<RatVec>> systems;
    for (const auto& [t, n] : types) systems.push_back(simple_of(t, n));
    systems.push_back({rv({1, -1, 0}), rv({-2, 1, 1})});  // G_2
    for (const auto& simple : systems) {
        auto W = weyl_closure(simple);
        auto brute = brute_closure(simple);
        REQUIRE(W.order() == brute.size());
        std::set<Mat> mats;
        std::set<RatVec> roots(W.roots().begin(), W.roots().end());
        std::mt19937 vrng(7);
        for (std::size_t w = 0; w < W.order(); ++w) {
            Mat m = W.matrix(w);
            mats.insert(m);
            // word and length agree with the matrix
            Mat prod = identity(simple[0].size());
            for (auto s : W.word(w)) prod = mul(prod, reflection_matrix(simple[s]));
            CHECK(prod == m);
            CHECK(W.word(w).size() == W.length(w));
            // permutes the roots
            std::set<RatVec> img;
            for (const auto& r : W.roots()) img.insert(W.apply(w, r));
            CHECK(img == roots);
            // inverse
            RatVec v = random_ratvec(vrng, simple[0].size());
            CHECK(W.apply_inverse(w, W.apply(w, v)) == v);
        }
        CHECK(mats == brute);
        // closed under composition
        std::mt19937 rng(1);
        for (int k = 0; k < 50; ++k) {
            std::size_t a = rng() % W.order(), b = rng() % W.order();
            CHECK(mats.count(mul(W.matrix(a), W.matrix(b))) == 1);
        }
    }
}

TEST_CASE("hyperoctahedral and symmetric group orders") {
    for (long n = 1; n <= 5; ++n) {
        CHECK(weyl_closure(simple_of("A", n)).order() == static_cast<std::size_t>(factorial(n + 1)));
        if (n >= 2) {
            CHECK(weyl_closure(simple_of("B", n)).order() == static_cast<std::size_t>((1L << n) * factorial(n)));
            CHECK(weyl_closure(simple_of("C", n)).order() == static_cast<std::size_t>((1L << n) * factorial(n)));
        }
        if (n >= 3) CHECK(weyl_closure(simple_of("D", n)).order() == static_cast<std::size_t>((1L << (n - 1)) * factorial(n)));
    }
}

TEST_CASE("non-reduced systems: reflections in a and 2a coincide") {
    // BC_2 = B_2 ∪ C_2 long roots
    std::vector<RatVec> pos = {rv({1, -1}), rv({0, 1}), rv({1, 1}), rv({1, 0}), rv({0, 2}), rv({2, 0})};
    CHECK(reflect(rv({3, 5}), rv({0, 1})) == reflect(rv({3, 5}), rv({0, 2})));
    auto s = simple_roots_of(pos);
    CHECK(std::set<RatVec>(s.begin(), s.end()) == std::set<RatVec>{rv({1, -1}), rv({0, 1})});
    CHECK(brute_closure({rv({1, -1}), rv({0, 1})}) == brute_closure({rv({1, -1}), rv({0, 2})}));
    CHECK(weyl_closure({rv({1, -1}), rv({0, 1})}).order() == 8);
}

TEST_CASE("chamber_test examples") {
    std::vector<RatVec> c2 = {rv({1, -1}), rv({0, 2})};
    auto W = weyl_closure(c2);
    RatVec probe = rv({3, 1});  // regular dominant for C_2
    CHECK(chamber_test(W, 0, probe, c2, true));
    for (std::size_t w = 0; w < W.order(); ++w)
        if (W.length(w) == 1) {
            std::size_t s = W.word(w)[0];
            CHECK_FALSE(chamber_test(W, w, probe, {c2[s]}, true));
        }
    // D_2 inside C_2: exactly e and the reflection in 2η_2 survive
    std::vector<RatVec> d2 = {rv({1, -1}), rv({1, 1})};
    std::vector<std::string> pass;
    for (std::size_t w = 0; w < W.order(); ++w)
        if (chamber_test_inverse(W, w, probe, d2, true)) pass.push_back(W.label(w));
    CHECK(pass == std::vector<std::string>{"e", "s2"});
}
