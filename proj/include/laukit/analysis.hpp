#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "laukit/algebra.hpp"

namespace laukit {

/// Isomorphism invariants used as non-isomorphism certificates. All fields
/// are computed exactly.
struct Fingerprint {
    std::size_t dim = 0;
    bool unital = false;
    bool commutative = false;
    std::size_t center_dim = 0;
    std::size_t radical_dim = 0;

    bool semisimple() const { return radical_dim == 0; }

    friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

/// Unitality via the identity solve, commutativity on basis pairs, center by
/// exact kernel computation, and the radical by the characteristic-zero
/// trace-form criterion of the left regular representation — evaluated in
/// the unitization when A has no identity (the radical is unchanged by
/// adjoining a unit).
Fingerprint fingerprint(const AlgebraPtr& a);

/// First fingerprint field on which A and B differ, under the fixed order
/// dim, unital, commutative, center_dim, radical_dim.
struct Certificate {
    std::string field;
    std::string left, right;

    std::string to_string() const { return field + ": " + left + " vs " + right; }
};

/// A certificate proves no isomorphism can exist. Absence of a certificate
/// means "not distinguished by these invariants", never "isomorphic".
std::optional<Certificate> distinguish(const AlgebraPtr& a, const AlgebraPtr& b);

/// Float-only check of the renorming aside: with M = max over basis pairs of
/// the l1 norm of e_i e_j and renorm_factor = max(M, 1), the scaled norm
/// ||.||' = renorm_factor * ||.||_1 is submultiplicative. Sampling is
/// deterministic given (samples, seed); coefficients are drawn from
/// [-1,1] + [-1,1]i.
struct NormReport {
    double mult_constant = 0.0;   // M
    double renorm_factor = 1.0;   // max(M, 1)
    long samples_checked = 0;
    double max_violation = 0.0;   // max over samples of ||xy||' - ||x||'||y||'

    bool pass() const { return max_violation <= 1e-9; }
};

NormReport norm_report(const AlgebraPtr& a, long samples, std::uint64_t seed);

/// l1 norm with complex-modulus coefficients, as a double.
double l1_norm(const Element& x);

}  // namespace laukit
