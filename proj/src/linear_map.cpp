#include "laukit/linear_map.hpp"

#include <utility>

#include "laukit/error.hpp"

namespace laukit {

LinearMap::LinearMap(AlgebraPtr domain, AlgebraPtr codomain, Mat matrix)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), matrix_(std::move(matrix)) {
    if (!domain_ || !codomain_) throw Error("linear map without endpoints");
    if (matrix_.rows != codomain_->dim() || matrix_.cols != domain_->dim())
        throw Error("linear map matrix shape does not match its endpoints");
}

LinearMap LinearMap::zero_map(AlgebraPtr domain, AlgebraPtr codomain) {
    Mat m(codomain->dim(), domain->dim());
    return LinearMap(std::move(domain), std::move(codomain), std::move(m));
}

LinearMap LinearMap::identity(AlgebraPtr algebra) {
    Mat m = Mat::identity(algebra->dim());
    AlgebraPtr codomain = algebra;
    return LinearMap(std::move(algebra), std::move(codomain), std::move(m));
}

Element LinearMap::apply(const Element& x) const {
    if (x.algebra() != domain_ && !x.algebra()->same_structure(*domain_))
        throw Error("algebra mismatch");
    return codomain_->element(matrix_.apply(x.coeffs()));
}

Element LinearMap::image_of_basis(std::size_t j) const {
    std::vector<Scalar> out(matrix_.rows);
    for (std::size_t i = 0; i < matrix_.rows; ++i) out[i] = matrix_.at(i, j);
    return codomain_->element(std::move(out));
}

std::optional<LinearMap> LinearMap::inverse() const {
    if (matrix_.rows != matrix_.cols) return std::nullopt;
    std::optional<Mat> inv = laukit::inverse(matrix_);
    if (!inv) return std::nullopt;
    return LinearMap(codomain_, domain_, std::move(*inv));
}

std::string LinearMap::to_string() const {
    return domain_->name() + " -> " + codomain_->name();
}

LinearMap compose(const LinearMap& f, const LinearMap& g) {
    if (!g.codomain()->same_structure(*f.domain()))
        throw Error("composition endpoints do not match");
    return LinearMap(g.domain(), f.codomain(), f.matrix() * g.matrix());
}

}  // namespace laukit
