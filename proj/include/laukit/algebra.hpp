#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "laukit/scalar.hpp"

namespace laukit {

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Element of a structure-constant algebra: a coefficient vector over the
/// algebra's basis. Elements are immutable values; the arithmetic on them is
/// exact. Two elements interoperate only when their algebras agree
/// structurally (same dimension and multiplication table).
class Element {
public:
    Element(AlgebraPtr algebra, std::vector<Scalar> coeffs);

    const AlgebraPtr& algebra() const { return algebra_; }
    const std::vector<Scalar>& coeffs() const { return coeffs_; }
    const Scalar& operator[](std::size_t i) const { return coeffs_[i]; }
    std::size_t dim() const { return coeffs_.size(); }

    bool is_zero() const;

    /// Rendered as a linear combination of basis labels, e.g. "2*e1 - i*e2".
    std::string to_string() const;

    Element operator+(const Element& o) const;
    Element operator-(const Element& o) const;
    Element operator-() const;
    friend Element operator*(const Scalar& s, const Element& x);

    /// Exact equality; throws Error("algebra mismatch") when the two
    /// elements do not belong to structurally identical algebras.
    bool operator==(const Element& o) const;
    bool operator!=(const Element& o) const { return !(*this == o); }

private:
    AlgebraPtr algebra_;
    std::vector<Scalar> coeffs_;
};

/// Finite-dimensional algebra over Q(i) presented by structure constants:
/// e_i * e_j = sum_k c[i][j][k] e_k. The tensor convention is fixed once and
/// used by every construction and serializer: the first index is the left
/// factor, the second the right factor, the third the coordinate of the
/// product.
///
/// Instances are immutable after construction and always handled through
/// shared_ptr<const Algebra>, so any value may be shared across threads.
class Algebra : public std::enable_shared_from_this<Algebra> {
public:
    /// Checked constructor: validates shapes, label distinctness, and
    /// associativity of the table. Throws NotAssociativeError (with the
    /// violating triple) for tables that are not associative.
    static AlgebraPtr make(std::string name, std::vector<std::string> basis_labels,
                           std::vector<Scalar> tensor);

    /// Shape-checked only. Exists so the associativity checker itself can be
    /// exercised on bad tables; everything user-facing goes through make().
    static AlgebraPtr make_unchecked(std::string name, std::vector<std::string> basis_labels,
                                     std::vector<Scalar> tensor);

    const std::string& name() const { return name_; }
    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& basis_labels() const { return labels_; }

    const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const {
        return tensor_[(i * dim_ + j) * dim_ + k];
    }
    const std::vector<Scalar>& tensor() const { return tensor_; }

    Element zero() const;
    Element basis_element(std::size_t i) const;
    Element element(std::vector<Scalar> coeffs) const;

    /// Same dimension and same multiplication table; names and labels may
    /// differ. This is the compatibility notion used by element arithmetic
    /// and by map endpoint validation.
    bool same_structure(const Algebra& o) const {
        return dim_ == o.dim_ && tensor_ == o.tensor_;
    }

    /// Full structural equality including name and labels (what canonical
    /// serialization round-trips preserve).
    friend bool operator==(const Algebra& a, const Algebra& b) {
        return a.name_ == b.name_ && a.labels_ == b.labels_ && a.tensor_ == b.tensor_;
    }

private:
    Algebra(std::string name, std::vector<std::string> labels, std::vector<Scalar> tensor);

    std::string name_;
    std::size_t dim_;
    std::vector<std::string> labels_;
    std::vector<Scalar> tensor_;  // flat, (i*dim + j)*dim + k
};

/// Product through the structure tensor; exact.
/// Throws Error("algebra mismatch") when x and y live in different algebras.
Element multiply(const Element& x, const Element& y);
inline Element operator*(const Element& x, const Element& y) { return multiply(x, y); }

struct AssociativityWitness {
    std::size_t i, j, k;  // 0-based basis indices
    Element lhs, rhs;     // (e_i e_j) e_k and e_i (e_j e_k)
    std::string to_string() const;
};

struct AssociativityReport {
    bool pass = false;
    std::optional<AssociativityWitness> witness;
};

/// Checks (e_i e_j) e_k = e_i (e_j e_k) on all basis triples, which is
/// sufficient by trilinearity. Scans triples in lexicographic order and
/// reports the first violation.
AssociativityReport is_associative(const AlgebraPtr& a);

/// The unique two-sided identity, if the exact linear system u*e_j = e_j,
/// e_j*u = e_j (all j) is solvable.
std::optional<Element> find_identity(const AlgebraPtr& a);

/// The canonical one-dimensional unital algebra C (basis "1", 1*1 = 1).
/// Characters take values here.
AlgebraPtr complex_algebra();

}  // namespace laukit
