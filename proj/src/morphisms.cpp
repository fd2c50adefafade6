#include "laukit/morphisms.hpp"

#include <utility>

#include "laukit/error.hpp"

namespace laukit {

std::string MultiplicativityWitness::to_string() const {
    return "witness pair (" + std::to_string(i) + "," + std::to_string(j) + "): image of e_i*e_j = " +
           lhs.to_string() + " but product of images = " + rhs.to_string();
}

HomReport is_homomorphism(const LinearMap& t) {
    const AlgebraPtr& dom = t.domain();
    const std::size_t n = dom->dim();
    std::vector<Element> images;
    images.reserve(n);
    for (std::size_t j = 0; j < n; ++j) images.push_back(t.image_of_basis(j));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Element lhs = t.apply(multiply(dom->basis_element(i), dom->basis_element(j)));
            Element rhs = multiply(images[i], images[j]);
            if (!(lhs == rhs)) return {false, MultiplicativityWitness{i, j, lhs, rhs}};
        }
    return {true, std::nullopt};
}

CharReport is_character(const LinearMap& chi) {
    if (!chi.codomain()->same_structure(*complex_algebra()))
        throw Error("character codomain must be C");
    CharReport rep;
    rep.nonzero = false;
    for (std::size_t j = 0; j < chi.domain()->dim(); ++j)
        if (!chi.matrix().at(0, j).is_zero()) rep.nonzero = true;
    HomReport hom = is_homomorphism(chi);
    rep.multiplicative = hom.pass;
    rep.witness = hom.witness;
    rep.pass = rep.nonzero && rep.multiplicative;
    return rep;
}

IsoReport verify_isomorphism(const LinearMap& f) {
    IsoReport rep;
    rep.square = f.matrix().rows == f.matrix().cols;
    if (!rep.square) {
        rep.failed_clause = "matrix not square";
        return rep;
    }
    rep.determinant = determinant(f.matrix());
    rep.bijective = !rep.determinant.is_zero();
    HomReport hom = is_homomorphism(f);
    rep.multiplicative = hom.pass;
    rep.witness = hom.witness;
    rep.pass = rep.bijective && rep.multiplicative;
    if (!rep.bijective)
        rep.failed_clause = "matrix singular";
    else if (!rep.multiplicative)
        rep.failed_clause = "not multiplicative";
    return rep;
}

// ---------------------------------------------------------------- Subspace

Subspace::Subspace(AlgebraPtr ambient, std::vector<Element> spanning)
    : ambient_(std::move(ambient)), spanning_(std::move(spanning)) {
    const std::size_t n = ambient_->dim();
    for (const Element& v : spanning_)
        if (v.algebra() != ambient_ && !v.algebra()->same_structure(*ambient_))
            throw Error("spanning vector outside the ambient algebra");
    Mat m(spanning_.size(), n);
    for (std::size_t r = 0; r < spanning_.size(); ++r)
        for (std::size_t c = 0; c < n; ++c) m.at(r, c) = spanning_[r][c];
    Echelon e = rref(std::move(m));
    pivots_ = e.pivot_cols;
    basis_.reserve(e.rank);
    for (std::size_t r = 0; r < e.rank; ++r) {
        std::vector<Scalar> row(n);
        for (std::size_t c = 0; c < n; ++c) row[c] = e.reduced.at(r, c);
        basis_.push_back(ambient_->element(std::move(row)));
    }
}

std::optional<std::vector<Scalar>> Subspace::coordinates(const Element& x) const {
    if (x.algebra() != ambient_ && !x.algebra()->same_structure(*ambient_))
        throw Error("algebra mismatch");
    // Reduce against the echelon basis: each basis row has a unit pivot and
    // zeros in every other pivot column, so the coordinate of x along row t
    // is just the residual entry at pivot column t.
    std::vector<Scalar> residual = x.coeffs();
    std::vector<Scalar> coords(basis_.size());
    for (std::size_t t = 0; t < basis_.size(); ++t) {
        Scalar c = residual[pivots_[t]];
        coords[t] = c;
        if (c.is_zero()) continue;
        for (std::size_t k = 0; k < residual.size(); ++k)
            residual[k] -= c * basis_[t][k];
    }
    for (const Scalar& r : residual)
        if (!r.is_zero()) return std::nullopt;
    return coords;
}

bool Subspace::contains(const Element& x) const {
    return coordinates(x).has_value();
}

std::string ClosureWitness::to_string() const {
    return "(" + left.to_string() + ") * (" + right.to_string() + ") = " + product.to_string() +
           ", which is outside the span";
}

SubspaceReport subspace_report(const Subspace& s) {
    SubspaceReport rep;
    rep.rank = s.rank();
    rep.codimension = s.codimension();
    const std::vector<Element>& basis = s.reduced_basis();
    const AlgebraPtr& amb = s.ambient();

    rep.is_subalgebra = true;
    for (std::size_t i = 0; i < basis.size() && rep.is_subalgebra; ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) {
            Element p = multiply(basis[i], basis[j]);
            if (!s.contains(p)) {
                rep.is_subalgebra = false;
                rep.subalgebra_witness = ClosureWitness{basis[i], basis[j], p};
                break;
            }
        }

    rep.is_left_ideal = true;  // ambient * span stays in span
    for (std::size_t i = 0; i < amb->dim() && rep.is_left_ideal; ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) {
            Element p = multiply(amb->basis_element(i), basis[j]);
            if (!s.contains(p)) {
                rep.is_left_ideal = false;
                rep.left_ideal_witness = ClosureWitness{amb->basis_element(i), basis[j], p};
                break;
            }
        }

    rep.is_right_ideal = true;  // span * ambient stays in span
    for (std::size_t j = 0; j < basis.size() && rep.is_right_ideal; ++j)
        for (std::size_t i = 0; i < amb->dim(); ++i) {
            Element p = multiply(basis[j], amb->basis_element(i));
            if (!s.contains(p)) {
                rep.is_right_ideal = false;
                rep.right_ideal_witness = ClosureWitness{basis[j], amb->basis_element(i), p};
                break;
            }
        }

    rep.is_ideal = rep.is_left_ideal && rep.is_right_ideal;
    return rep;
}

AlgebraPtr subspace_algebra(const Subspace& s, const std::string& name) {
    const std::vector<Element>& basis = s.reduced_basis();
    const std::size_t r = basis.size();
    std::vector<Scalar> tensor(r * r * r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            std::optional<std::vector<Scalar>> coords = s.coordinates(multiply(basis[i], basis[j]));
            if (!coords)
                throw MathError("subspace is not a subalgebra: " +
                                ClosureWitness{basis[i], basis[j], multiply(basis[i], basis[j])}
                                    .to_string());
            for (std::size_t k = 0; k < r; ++k) tensor[(i * r + j) * r + k] = (*coords)[k];
        }
    std::vector<std::string> labels(r);
    for (std::size_t i = 0; i < r; ++i) labels[i] = "b" + std::to_string(i + 1);
    return Algebra::make(name, std::move(labels), std::move(tensor));
}

}  // namespace laukit
