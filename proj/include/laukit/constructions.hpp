#pragma once

#include "laukit/linear_map.hpp"
#include "laukit/morphisms.hpp"

namespace laukit {

// Every construction here places the A-block first and the B-block second in
// the product basis, and unitization appends the adjoined unit last. That
// ordering is what makes the trivializing isomorphism block-unitriangular
// and keeps serialized tensors reproducible bit for bit.

/// A (+) B with coordinatewise product: block-diagonal structure tensor,
/// all cross products zero. Label collisions between the factors are
/// resolved by prefixing "L." / "R.".
AlgebraPtr direct_sum(const AlgebraPtr& a, const AlgebraPtr& b);

struct Unitization {
    AlgebraPtr algebra;    // A with one adjoined unit u: u*u = u, u*x = x*u = x
    LinearMap inclusion;   // A -> A#, the identity on the A-block
};

Unitization unitization(const AlgebraPtr& a);

/// The product space A (+) B with multiplication
///   (a1,b1) * (a2,b2) = (a1 a2 + T(b1) a2 + a1 T(b2), b1 b2)
/// for a verified homomorphism T : B -> A. Throws MathError("not a
/// homomorphism ...") with the witness pair when T fails verification.
AlgebraPtr generalized_lau_product(const AlgebraPtr& a, const AlgebraPtr& b, const LinearMap& t);

/// The same product space with a character chi : B -> C in place of T:
///   (a1,b1) * (a2,b2) = (a1 a2 + chi(b1) a2 + chi(b2) a1, b1 b2).
/// Does not require A to be unital.
AlgebraPtr lau_product(const AlgebraPtr& a, const AlgebraPtr& b, const LinearMap& chi);

/// T(b) = chi(b) e_A, the homomorphism a character induces when A has an
/// identity. Throws MathError("requires unital A ...") otherwise — for
/// non-unital A the character product is genuinely not a special case of the
/// generalized product.
LinearMap character_to_hom(const AlgebraPtr& a, const LinearMap& chi);

/// The map (a,b) |-> (a + T(b), b) from the generalized product onto the
/// direct sum. Its matrix is block upper-unitriangular [[I, M_T], [0, I]],
/// so it is bijective with determinant 1; it is verified multiplicative by
/// the isomorphism checker in tests and in the CLI `collapse` command.
LinearMap trivializing_isomorphism(const AlgebraPtr& a, const AlgebraPtr& b, const LinearMap& t);

/// psi(a,b) = ((a, chi(b)), b), embedding the character product into
/// unitization(A) (+) B. The image is a codimension-one subalgebra of the
/// target (and not, in general, an ideal).
LinearMap unitization_embedding(const AlgebraPtr& a, const AlgebraPtr& b, const LinearMap& chi);

}  // namespace laukit
