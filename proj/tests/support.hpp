#pragma once

// Random generators shared by the test binaries.

#include "conext/rational.hpp"
#include "conext/tensor.hpp"

#include <random>
#include <vector>

namespace conext::testing {

inline Rational random_rational(std::mt19937_64& rng, long max_num = 20, long max_den = 9) {
    std::uniform_int_distribution<long> num(-max_num, max_num);
    std::uniform_int_distribution<long> den(1, max_den);
    return Rational(num(rng), den(rng));
}

inline Rational random_nonneg(std::mt19937_64& rng, long max_num = 9, long max_den = 5) {
    std::uniform_int_distribution<long> num(0, max_num);
    std::uniform_int_distribution<long> den(1, max_den);
    return Rational(num(rng), den(rng));
}

inline RationalVector random_vector(std::mt19937_64& rng, std::size_t n) {
    RationalVector v(n);
    for (auto& x : v) x = random_rational(rng);
    return v;
}

inline Tensor random_tensor(std::mt19937_64& rng, std::vector<Slot> slots) {
    Tensor t(std::move(slots));
    for (auto& x : t.mutable_entries()) x = random_rational(rng);
    return t;
}

inline QuadScalar random_quad(std::mt19937_64& rng) {
    return {random_rational(rng), random_rational(rng)};
}

}  // namespace conext::testing
