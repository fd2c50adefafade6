#pragma once

#include <optional>
#include <string>
#include <vector>

#include "laukit/linear_map.hpp"

namespace laukit {

// All verdicts here are exact: a report either passes or carries a concrete
// witness that can be replayed. Continuity clauses from the Banach-algebra
// setting are recorded as automatically satisfied rather than dropped, since
// every linear map between finite-dimensional spaces is continuous.
inline constexpr const char* kContinuityNote = "continuity automatic at finite dimension";

struct MultiplicativityWitness {
    std::size_t i, j;  // 0-based domain basis indices
    Element lhs, rhs;  // T(e_i e_j) and T(e_i) T(e_j), in the codomain
    std::string to_string() const;
};

struct HomReport {
    bool pass = false;
    std::optional<MultiplicativityWitness> witness;
    std::string note = kContinuityNote;
};

/// T(e_i e_j) = T(e_i) T(e_j) on all basis pairs (sufficient by bilinearity).
HomReport is_homomorphism(const LinearMap& t);

struct CharReport {
    bool pass = false;
    bool nonzero = false;
    bool multiplicative = false;
    std::optional<MultiplicativityWitness> witness;
};

/// A character is a nonzero multiplicative functional into the canonical
/// one-dimensional algebra C. Throws Error("character codomain must be C")
/// when the codomain is not structurally C.
CharReport is_character(const LinearMap& chi);

struct IsoReport {
    bool pass = false;
    bool square = false;
    bool bijective = false;
    bool multiplicative = false;
    Scalar determinant;  // meaningful when square
    std::optional<MultiplicativityWitness> witness;
    std::string failed_clause;  // empty on pass
    std::string note = kContinuityNote;
};

/// Bijective (exact rank = dimension) plus multiplicative on basis pairs.
IsoReport verify_isomorphism(const LinearMap& f);

/// Subspace of an algebra given by spanning vectors (not necessarily
/// independent). A canonical reduced basis — the nonzero rows of the exact
/// row-reduced echelon form of the spanning matrix — is computed at
/// construction and cached; it is invariant under permuting, duplicating, or
/// rescaling the spanning set.
class Subspace {
public:
    Subspace(AlgebraPtr ambient, std::vector<Element> spanning);

    const AlgebraPtr& ambient() const { return ambient_; }
    const std::vector<Element>& spanning() const { return spanning_; }
    std::size_t rank() const { return basis_.size(); }
    std::size_t codimension() const { return ambient_->dim() - rank(); }
    const std::vector<Element>& reduced_basis() const { return basis_; }

    bool contains(const Element& x) const;

    /// Coordinates of a member in the reduced basis; nullopt for non-members.
    std::optional<std::vector<Scalar>> coordinates(const Element& x) const;

private:
    AlgebraPtr ambient_;
    std::vector<Element> spanning_;
    std::vector<Element> basis_;
    std::vector<std::size_t> pivots_;
};

struct ClosureWitness {
    Element left, right, product;  // product = left*right, not in the span
    std::string to_string() const;
};

struct SubspaceReport {
    std::size_t rank = 0;
    std::size_t codimension = 0;
    bool is_subalgebra = false;
    bool is_left_ideal = false;
    bool is_right_ideal = false;
    bool is_ideal = false;
    std::optional<ClosureWitness> subalgebra_witness;
    std::optional<ClosureWitness> left_ideal_witness;
    std::optional<ClosureWitness> right_ideal_witness;
};

/// Closure verdicts by exact membership tests: subalgebra on reduced-basis
/// pairs, ideal on ambient-basis times reduced-basis products from both
/// sides. The ideal verdict distinguishes left and right; is_ideal means
/// two-sided.
SubspaceReport subspace_report(const Subspace& s);

/// The subspace as an algebra in its own right, with structure constants
/// written in the reduced basis. Throws MathError when the subspace is not
/// closed under multiplication.
AlgebraPtr subspace_algebra(const Subspace& s, const std::string& name);

}  // namespace laukit
