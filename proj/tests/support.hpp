#pragma once

#include <doctest.h>

#include <initializer_list>
#include <random>

#include "instances.hpp"

#define CHECK_KIND(expr, k)                                   \
    do {                                                      \
        try {                                                 \
            (void)(expr);                                     \
            FAIL_CHECK("expected " << symint::kind_name(k));  \
        } catch (const symint::EngineError& e__) {            \
            CHECK_MESSAGE(e__.kind() == (k), e__.what());     \
        }                                                     \
    } while (0)

namespace symint::testing {

inline RatVec rv(std::initializer_list<long> xs) {
    RatVec v;
    for (long x : xs) v.push_back(Rational(x));
    return v;
}

inline Rational q(long p, long d = 1) { return frac(p, d); }

inline ZVec zv(std::initializer_list<long> xs) {
    ZVec v;
    for (long x : xs) v.push_back(Integer(x));
    return v;
}

inline RatVec random_ratvec(std::mt19937& rng, std::size_t d, int span = 4, int den = 3) {
    std::uniform_int_distribution<int> num(-span * den, span * den), dd(1, den);
    RatVec v(d);
    for (auto& x : v) x = frac(num(rng), dd(rng));
    return v;
}

}  // namespace symint::testing
