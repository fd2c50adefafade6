#pragma once

#include <cstdint>
#include <vector>

#include "laukit/algebra.hpp"
#include "laukit/rng.hpp"

namespace laukit::testing {

inline Scalar sc(long re_num, long re_den = 1, long im_num = 0, long im_den = 1) {
    return Scalar(make_rational(re_num, re_den), make_rational(im_num, im_den));
}

/// Small seeded scalar with numerators in [-5,5], denominators in [1,3] —
/// for hand-rolled property tests.
inline Scalar seeded_scalar(std::uint64_t key, std::uint64_t index) {
    auto small = [&](std::uint64_t salt) {
        std::uint64_t w = counter_stream(key ^ salt, index);
        long num = static_cast<long>(w % 11) - 5;
        long den = 1 + static_cast<long>((w >> 32) % 3);
        return make_rational(num, den);
    };
    return Scalar(small(0x1111), small(0x2222));
}

/// Independent product evaluator used as an oracle against the library's
/// multiply and associativity checker: nothing shared with the library path
/// beyond reading the tensor.
inline std::vector<Scalar> oracle_product(const Algebra& a, const std::vector<Scalar>& x,
                                          const std::vector<Scalar>& y) {
    const std::size_t n = a.dim();
    std::vector<Scalar> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        Scalar acc;
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[j] * a.c(i, j, k);
        out[k] = acc;
    }
    return out;
}

inline std::vector<Scalar> oracle_basis(std::size_t n, std::size_t i) {
    std::vector<Scalar> v(n);
    v[i] = Scalar::one();
    return v;
}

/// Brute-force associativity verdict over all basis triples, via the oracle
/// evaluator only.
inline bool oracle_associative(const Algebra& a) {
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                auto lhs = oracle_product(a, oracle_product(a, oracle_basis(n, i), oracle_basis(n, j)),
                                          oracle_basis(n, k));
                auto rhs = oracle_product(a, oracle_basis(n, i),
                                          oracle_product(a, oracle_basis(n, j), oracle_basis(n, k)));
                if (lhs != rhs) return false;
            }
    return true;
}

}  // namespace laukit::testing
