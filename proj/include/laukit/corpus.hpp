#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "laukit/linear_map.hpp"

namespace laukit {

// Deterministic desk-scale catalog. Random structure tensors are never
// generated (a random tensor is almost never associative); randomness enters
// only through element coefficients and through composing verified
// constructions, so everything the tests touch is a genuine algebra.

enum class Family { zero, pointwise, trunc_poly, matrix, cyclic_group };

struct CatalogSpec {
    Family family;
    int parameter;

    /// CLI address: "zero:1", "pointwise:2", "poly:3", "matrix:2", "cyclic:4".
    std::string to_string() const;
    static CatalogSpec parse(const std::string& text);

    friend bool operator==(const CatalogSpec&, const CatalogSpec&) = default;
};

/// Families:
///   zero:n       all products vanish (the non-unital exemplar)
///   pointwise:n  e_i e_j = delta_ij e_i (C^n with coordinatewise product)
///   poly:k       basis 1, x, ..., x^{k-1} with x^a x^b = x^{a+b} truncated
///   matrix:n     full matrix algebra on matrix units
///   cyclic:k     group algebra of Z/k, g^a g^b = g^{(a+b) mod k}
/// Parameter bounds: n, k <= 8.
AlgebraPtr catalog_algebra(const CatalogSpec& spec);

/// Named characters on catalog algebras, re-verified before release:
///   "id"       identity on a one-dimensional unital algebra
///   "coord:k"  k-th coordinate functional on pointwise:n (1-based)
///   "eval0"    evaluation at 0 on poly:k (constant coefficient)
///   "aug"      augmentation (sum of coefficients) on cyclic:k
LinearMap catalog_character(const CatalogSpec& algebra, const std::string& which);

/// Where verified homomorphisms come from. Every generated map is passed
/// through is_homomorphism before release; a failure there is a generator
/// bug and surfaces as a MathError.
struct HomSpec {
    enum class Strategy { zero, unital_scalar, inclusion, projection, composition };

    Strategy strategy;
    CatalogSpec domain;            // B
    CatalogSpec codomain;          // A
    std::string character;         // unital_scalar only: character name on B
    std::vector<HomSpec> chain;    // composition only, applied first-to-last

    std::string to_string() const;  // CLI address: "zero", "scalar:eval0", "incl", "proj"

    static HomSpec zero(CatalogSpec b, CatalogSpec a);
    static HomSpec unital_scalar(CatalogSpec b, CatalogSpec a, std::string character);
    static HomSpec inclusion(CatalogSpec b, CatalogSpec a);
    static HomSpec projection(CatalogSpec b, CatalogSpec a);
    static HomSpec composition(std::vector<HomSpec> chain);
};

LinearMap catalog_homomorphism(const HomSpec& spec);

/// Deterministic element with numerators in [-bound, bound] and denominators
/// in [1, bound], drawn from the counter-based stream keyed by
/// (algebra name, seed). Identical inputs give identical elements on every
/// platform.
Element random_element(const AlgebraPtr& a, std::uint64_t seed, long bound);

/// A verified (A, B, T) triple ready for product constructions.
struct VerifiedTriple {
    AlgebraPtr a;
    AlgebraPtr b;
    LinearMap t;
    std::string description;
};

/// The acceptance corpus: every (A, B, T) with A, B drawn from catalog
/// families at dimensions <= 3 and T from the applicable strategies.
/// Guaranteed to contain at least 50 distinct verified triples.
std::vector<VerifiedTriple> acceptance_corpus();

/// The catalog algebras the acceptance corpus draws from.
std::vector<CatalogSpec> acceptance_algebras();

}  // namespace laukit
