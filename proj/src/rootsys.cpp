#include "symint/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_set>

namespace symint {

Rational cartan_number(const RatVec& b, const RatVec& a) { return 2 * dot(b, a) / dot(a, a); }

RatVec reflect(const RatVec& v, const RatVec& alpha) { return v - cartan_number(v, alpha) * alpha; }

long RootSystem::index_of(const RatVec& v) const {
    auto it = lookup.find(v);
    return it == lookup.end() ? -1 : static_cast<long>(it->second);
}

std::vector<RatVec> RootSystem::positive_roots() const {
    std::vector<RatVec> out;
    for (std::size_t i = 0; i < roots.size(); ++i)
        if (positive[i]) out.push_back(roots[i]);
    return out;
}

std::vector<RatVec> RootSystem::simple_roots() const {
    std::vector<RatVec> out;
    for (auto i : simple) out.push_back(roots[i]);
    return out;
}

RatVec RootSystem::probe() const {
    RatVec p = zero_vec(dim);
    for (std::size_t i = 0; i < roots.size(); ++i)
        if (positive[i]) p += roots[i];
    return p;
}

std::vector<RatVec> simple_roots_of(const std::vector<RatVec>& positives) {
    std::set<RatVec> pos(positives.begin(), positives.end());
    for (const auto& p : positives)
        if (pos.count(-p)) throw EngineError(ErrorKind::NotPositiveSystem, "contains a root and its negative: " + to_string(p));
    std::vector<RatVec> out;
    for (const auto& p : positives) {
        bool decomposable = false;
        for (const auto& a : positives) {
            if (pos.count(p - a)) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable && std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
    }
    return out;
}

RootSystem make_root_system(std::size_t dim, const std::vector<RatVec>& roots,
                            const std::vector<bool>& positive, const std::vector<int>& mult) {
    RootSystem rs;
    rs.dim = dim;
    rs.roots = roots;
    rs.positive = positive;
    rs.mult = mult;
    if (positive.size() != roots.size() || mult.size() != roots.size())
        throw EngineError(ErrorKind::DimensionMismatch, "root/positivity/multiplicity lists differ in length");
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (roots[i].size() != dim) throw EngineError(ErrorKind::DimensionMismatch, "root of wrong dimension");
        if (is_zero(roots[i])) throw EngineError(ErrorKind::NotARootSystem, "zero root");
        if (mult[i] <= 0) throw EngineError(ErrorKind::NotARootSystem, "nonpositive multiplicity");
        if (!rs.lookup.emplace(roots[i], i).second)
            throw EngineError(ErrorKind::NotARootSystem, "duplicate root " + to_string(roots[i]));
    }
    for (std::size_t i = 0; i < roots.size(); ++i) {
        long j = rs.index_of(-roots[i]);
        if (j < 0) throw EngineError(ErrorKind::NotARootSystem, "negative of " + to_string(roots[i]) + " missing");
        if (positive[i] == positive[j])
            throw EngineError(ErrorKind::NotPositiveSystem, "root and negative have the same sign: " + to_string(roots[i]));
    }
    for (const auto& a : roots)
        for (const auto& b : roots) {
            Rational c = cartan_number(b, a);
            if (c.get_den() != 1)
                throw EngineError(ErrorKind::NotARootSystem,
                                  "Cartan number of " + to_string(b) + " on " + to_string(a) + " is " + to_string(c));
            if (rs.index_of(b - c * a) < 0)
                throw EngineError(ErrorKind::NotARootSystem, "not closed under reflection in " + to_string(a));
        }
    auto simple = simple_roots_of(rs.positive_roots());
    if (!linearly_independent(simple)) throw EngineError(ErrorKind::NotARootSystem, "simple roots are dependent");
    for (const auto& s : simple) rs.simple.push_back(rs.lookup.at(s));
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (!positive[i]) continue;
        auto c = solve_in_span(roots[i], simple);
        if (!c) throw EngineError(ErrorKind::NotARootSystem, "root outside the span of the simple roots");
        for (const auto& x : *c)
            if (x < 0 || x.get_den() != 1)
                throw EngineError(ErrorKind::NotPositiveSystem,
                                  to_string(roots[i]) + " is not a nonnegative integer combination of simple roots");
    }
    return rs;
}

std::vector<RatVec> WeylGroup::simple_roots() const {
    std::vector<RatVec> out;
    for (auto i : simple_) out.push_back(roots_[i]);
    return out;
}

RatVec WeylGroup::apply(std::size_t w, const RatVec& v) const {
    RatVec out = v;
    const auto* img = images(w);
    for (std::size_t k = 0; k < rank(); ++k) {
        if (img[k] == simple_[k]) continue;
        Rational c = dot(dual_[k], v);
        if (c != 0) out += c * (roots_[img[k]] - roots_[simple_[k]]);
    }
    return out;
}

std::vector<RatVec> WeylGroup::matrix(std::size_t w) const {
    std::vector<RatVec> cols;
    for (std::size_t j = 0; j < dim_; ++j) {
        RatVec e = zero_vec(dim_);
        e[j] = 1;
        cols.push_back(apply(w, e));
    }
    std::vector<RatVec> rows(dim_, RatVec(dim_));
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) rows[i][j] = cols[j][i];
    return rows;
}

RatVec WeylGroup::apply_inverse(std::size_t w, const RatVec& v) const {
    if (rank() == 0) return v;
    // elements are orthogonal, so w^{-1} is the transpose
    auto m = matrix(w);
    RatVec out = zero_vec(dim_);
    for (std::size_t j = 0; j < dim_; ++j)
        for (std::size_t i = 0; i < dim_; ++i) out[j] += m[i][j] * v[i];
    return out;
}

std::size_t WeylGroup::root_image(std::size_t w, std::size_t root) const {
    RatVec img = zero_vec(dim_);
    const auto* im = images(w);
    for (std::size_t k = 0; k < rank(); ++k)
        if (coords_[root][k]) img += Rational(coords_[root][k]) * roots_[im[k]];
    return lookup_.at(img);
}

std::vector<std::size_t> WeylGroup::word(std::size_t w) const {
    std::vector<std::size_t> out;
    while (w != 0) {
        out.push_back(gen_[w]);
        w = parent_[w];
    }
    return out;
}

std::string WeylGroup::label(std::size_t w) const {
    auto wd = word(w);
    if (wd.empty()) return "e";
    std::string s;
    for (std::size_t i = 0; i < wd.size(); ++i) {
        if (i) s += ".";
        s += "s" + std::to_string(wd[i] + 1);
    }
    return s;
}

WeylGroup weyl_closure(const std::vector<RatVec>& simple_roots, std::size_t cap) {
    WeylGroup W;
    std::size_t r = simple_roots.size();
    W.dim_ = simple_roots.empty() ? 0 : simple_roots[0].size();
    if (!linearly_independent(simple_roots))
        throw EngineError(ErrorKind::NotARootSystem, "simple roots are linearly dependent");
    if (r > 255) throw EngineError(ErrorKind::SizeCapExceeded, "rank too large");
    for (const auto& a : simple_roots)
        for (const auto& b : simple_roots)
            if (cartan_number(b, a).get_den() != 1)
                throw EngineError(ErrorKind::NotARootSystem, "simple roots fail the crystallographic check");

    // roots = orbit of ±simple roots
    std::deque<RatVec> queue;
    auto add_root = [&](const RatVec& v) {
        if (W.lookup_.emplace(v, W.roots_.size()).second) {
            W.roots_.push_back(v);
            queue.push_back(v);
            if (W.roots_.size() > 100000) throw EngineError(ErrorKind::SizeCapExceeded, "root orbit too large");
        }
    };
    for (const auto& a : simple_roots) add_root(a);
    for (const auto& a : simple_roots) add_root(-a);
    while (!queue.empty()) {
        RatVec v = queue.front();
        queue.pop_front();
        for (const auto& a : simple_roots) add_root(reflect(v, a));
    }
    for (std::size_t k = 0; k < r; ++k) W.simple_.push_back(k);

    // dual functionals through the inverse Gram matrix
    W.dual_.assign(r, zero_vec(W.dim_));
    for (std::size_t k = 0; k < r; ++k) {
        std::vector<RatVec> gram(r, RatVec(r + 1));
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t j = 0; j < r; ++j) gram[i][j] = dot(simple_roots[i], simple_roots[j]);
            gram[i][r] = (i == k) ? 1 : 0;
        }
        // solve G x = e_k
        std::vector<RatVec> cols(r, RatVec(r));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) cols[j][i] = gram[i][j];
        RatVec ek = zero_vec(r);
        ek[k] = 1;
        auto x = solve_in_span(ek, cols);
        for (std::size_t i = 0; i < r; ++i) W.dual_[k] += (*x)[i] * simple_roots[i];
    }
    W.coords_.assign(W.roots_.size(), std::vector<long>(r));
    for (std::size_t i = 0; i < W.roots_.size(); ++i)
        for (std::size_t k = 0; k < r; ++k) {
            Rational c = dot(W.dual_[k], W.roots_[i]);
            if (c.get_den() != 1) throw EngineError(ErrorKind::NotARootSystem, "non-integral root coordinates");
            W.coords_[i][k] = c.get_num().get_si();
        }

    W.reflection_.assign(r, std::vector<std::uint32_t>(W.roots_.size()));
    for (std::size_t k = 0; k < r; ++k)
        for (std::size_t i = 0; i < W.roots_.size(); ++i)
            W.reflection_[k][i] = static_cast<std::uint32_t>(W.lookup_.at(reflect(W.roots_[i], simple_roots[k])));

    const auto& images = W.images_;
    auto hash = [&images, r](std::uint32_t e) {
        std::size_t h = 1469598103934665603ull;
        for (std::size_t k = 0; k < r; ++k) h = (h ^ images[e * r + k]) * 1099511628211ull;
        return h;
    };
    auto eq = [&images, r](std::uint32_t a, std::uint32_t b) {
        return std::equal(images.begin() + a * r, images.begin() + a * r + r, images.begin() + b * r);
    };
    std::unordered_set<std::uint32_t, decltype(hash), decltype(eq)> seen(1024, hash, eq);

    for (std::size_t k = 0; k < r; ++k) W.images_.push_back(static_cast<std::uint32_t>(k));
    W.parent_.push_back(0);
    W.gen_.push_back(0);
    W.depth_.push_back(0);
    seen.insert(0);
    for (std::size_t cur = 0; cur < W.parent_.size(); ++cur) {
        for (std::size_t s = 0; s < r; ++s) {
            auto id = static_cast<std::uint32_t>(W.parent_.size());
            for (std::size_t k = 0; k < r; ++k) W.images_.push_back(W.reflection_[s][W.images_[cur * r + k]]);
            if (seen.count(id)) {
                W.images_.resize(W.images_.size() - r);
                continue;
            }
            seen.insert(id);
            W.parent_.push_back(static_cast<std::uint32_t>(cur));
            W.gen_.push_back(static_cast<std::uint8_t>(s));
            W.depth_.push_back(W.depth_[cur] + 1);
            if (W.parent_.size() > cap)
                throw EngineError(ErrorKind::SizeCapExceeded,
                                  "Weyl group exceeds the cap of " + std::to_string(cap) + " elements");
        }
    }
    return W;
}

bool chamber_test(const WeylGroup& W, std::size_t w, const RatVec& probe,
                  const std::vector<RatVec>& simple_roots, bool strict) {
    RatVec wp = W.apply(w, probe);
    for (const auto& a : simple_roots) {
        Rational p = dot(a, wp);
        if (strict ? p <= 0 : p < 0) return false;
    }
    return true;
}

bool chamber_test_inverse(const WeylGroup& W, std::size_t w, const RatVec& probe,
                          const std::vector<RatVec>& simple_roots, bool strict) {
    RatVec wp = W.apply_inverse(w, probe);
    for (const auto& a : simple_roots) {
        Rational p = dot(a, wp);
        if (strict ? p <= 0 : p < 0) return false;
    }
    return true;
}

}  // namespace symint
