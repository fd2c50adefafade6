#pragma once

#include <optional>
#include <string>

#include "laukit/algebra.hpp"
#include "laukit/linalg.hpp"

namespace laukit {

/// Linear map between algebras. Column j of the matrix is the coefficient
/// vector of the image of domain basis vector j, so the matrix has
/// dim(codomain) rows and dim(domain) columns.
class LinearMap {
public:
    LinearMap(AlgebraPtr domain, AlgebraPtr codomain, Mat matrix);

    static LinearMap zero_map(AlgebraPtr domain, AlgebraPtr codomain);
    static LinearMap identity(AlgebraPtr algebra);

    const AlgebraPtr& domain() const { return domain_; }
    const AlgebraPtr& codomain() const { return codomain_; }
    const Mat& matrix() const { return matrix_; }

    Element apply(const Element& x) const;
    Element operator()(const Element& x) const { return apply(x); }

    /// Image of domain basis vector j, as a codomain element.
    Element image_of_basis(std::size_t j) const;

    /// Exact inverse when the matrix is square and invertible.
    std::optional<LinearMap> inverse() const;

    std::string to_string() const;

private:
    AlgebraPtr domain_;
    AlgebraPtr codomain_;
    Mat matrix_;
};

/// f after g (defined only when g's codomain matches f's domain structurally).
LinearMap compose(const LinearMap& f, const LinearMap& g);

}  // namespace laukit
