#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "symint/linalg.hpp"

namespace symint {

// Finite (possibly non-reduced) root system in an ambient Q^dim with the
// standard dot product.
struct RootSystem {
    std::size_t dim = 0;
    std::vector<RatVec> roots;
    std::vector<bool> positive;
    std::vector<std::size_t> simple;  // indices into roots
    std::vector<int> mult;

    long index_of(const RatVec& v) const;  // -1 if absent
    std::vector<RatVec> positive_roots() const;
    std::vector<RatVec> simple_roots() const;
    RatVec probe() const;  // sum of positive roots

    std::map<RatVec, std::size_t> lookup;
};

// Validates: roots = pos ⊔ -pos, Cartan integrality, closure under
// reflections, positives are nonnegative integer combinations of the
// simple roots. Simple roots are extracted with simple_roots_of.
RootSystem make_root_system(std::size_t dim, const std::vector<RatVec>& roots,
                            const std::vector<bool>& positive, const std::vector<int>& mult);

// Positive roots that are not a sum of two (not necessarily distinct)
// positive roots.
std::vector<RatVec> simple_roots_of(const std::vector<RatVec>& positive_roots);

// 2(b,a)/(a,a)
Rational cartan_number(const RatVec& b, const RatVec& a);
RatVec reflect(const RatVec& v, const RatVec& alpha);

// Elements are stored by the images of the simple roots; the linear action is
// recovered on demand (identity on the orthogonal complement of the span).
class WeylGroup {
public:
    std::size_t dim() const { return dim_; }
    std::size_t rank() const { return simple_.size(); }
    std::size_t order() const { return parent_.size(); }
    const std::vector<RatVec>& roots() const { return roots_; }
    std::vector<RatVec> simple_roots() const;

    RatVec apply(std::size_t w, const RatVec& v) const;
    RatVec apply_inverse(std::size_t w, const RatVec& v) const;
    std::vector<RatVec> matrix(std::size_t w) const;  // rows
    std::size_t root_image(std::size_t w, std::size_t root) const;
    const std::uint32_t* images(std::size_t w) const { return &images_[w * rank()]; }

    // w = s_{word[0]} s_{word[1]} ... ; identity has the empty word.
    std::vector<std::size_t> word(std::size_t w) const;
    std::size_t length(std::size_t w) const { return depth_[w]; }
    std::string label(std::size_t w) const;

    // Coordinates of the root system's roots on the simple roots.
    const std::vector<std::vector<long>>& root_coords() const { return coords_; }

    friend WeylGroup weyl_closure(const std::vector<RatVec>& simple_roots, std::size_t cap);

private:
    std::size_t dim_ = 0;
    std::vector<RatVec> roots_;
    std::vector<std::size_t> simple_;
    std::vector<std::vector<std::uint32_t>> reflection_;
    std::vector<std::uint32_t> images_;
    std::vector<std::uint32_t> parent_;
    std::vector<std::uint8_t> gen_;
    std::vector<std::uint32_t> depth_;
    std::vector<RatVec> dual_;  // c_k(v) = <dual_k, v> on span of simple roots
    std::vector<std::vector<long>> coords_;
    std::map<RatVec, std::size_t> lookup_;
};

constexpr std::size_t kDefaultWeylCap = 10'000'000;

WeylGroup weyl_closure(const std::vector<RatVec>& simple_roots, std::size_t cap = kDefaultWeylCap);

// true iff <a, w(probe)> > 0 (>= 0 when !strict) for all a in simple_roots
bool chamber_test(const WeylGroup& W, std::size_t w, const RatVec& probe,
                  const std::vector<RatVec>& simple_roots, bool strict);
bool chamber_test_inverse(const WeylGroup& W, std::size_t w, const RatVec& probe,
                          const std::vector<RatVec>& simple_roots, bool strict);

}  // namespace symint
