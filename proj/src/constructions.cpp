#include "laukit/constructions.hpp"

#include <algorithm>
#include <unordered_set>
#include <utility>

#include "laukit/error.hpp"

namespace laukit {

namespace {

std::vector<std::string> merged_labels(const AlgebraPtr& a, const AlgebraPtr& b) {
    std::unordered_set<std::string> left(a->basis_labels().begin(), a->basis_labels().end());
    bool collision = std::any_of(b->basis_labels().begin(), b->basis_labels().end(),
                                 [&](const std::string& l) { return left.count(l) > 0; });
    std::vector<std::string> labels;
    labels.reserve(a->dim() + b->dim());
    for (const std::string& l : a->basis_labels()) labels.push_back(collision ? "L." + l : l);
    for (const std::string& l : b->basis_labels()) labels.push_back(collision ? "R." + l : l);
    return labels;
}

std::size_t flat(std::size_t n, std::size_t i, std::size_t j, std::size_t k) {
    return (i * n + j) * n + k;
}

void validate_hom(const AlgebraPtr& a, const AlgebraPtr& b, const LinearMap& t) {
    if (!t.domain()->same_structure(*b) || !t.codomain()->same_structure(*a))
        throw Error("algebra mismatch: T must map B into A");
    HomReport rep = is_homomorphism(t);
    if (!rep.pass)
        throw MathError("not a homomorphism: " + rep.witness->to_string());
}

void validate_char(const AlgebraPtr& b, const LinearMap& chi) {
    if (!chi.domain()->same_structure(*b))
        throw Error("algebra mismatch: chi must be a functional on B");
    CharReport rep = is_character(chi);
    if (!rep.pass) {
        if (!rep.nonzero) throw MathError("not a character: the zero functional");
        throw MathError("not a character: " + rep.witness->to_string());
    }
}

}  // namespace

AlgebraPtr direct_sum(const AlgebraPtr& a, const AlgebraPtr& b) {
    const std::size_t na = a->dim(), nb = b->dim(), n = na + nb;
    std::vector<Scalar> tensor(n * n * n);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j)
            for (std::size_t k = 0; k < na; ++k) tensor[flat(n, i, j, k)] = a->c(i, j, k);
    for (std::size_t i = 0; i < nb; ++i)
        for (std::size_t j = 0; j < nb; ++j)
            for (std::size_t k = 0; k < nb; ++k)
                tensor[flat(n, na + i, na + j, na + k)] = b->c(i, j, k);
    return Algebra::make("dsum(" + a->name() + "," + b->name() + ")", merged_labels(a, b),
                         std::move(tensor));
}

Unitization unitization(const AlgebraPtr& a) {
    const std::size_t na = a->dim(), n = na + 1;
    std::vector<Scalar> tensor(n * n * n);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j)
            for (std::size_t k = 0; k < na; ++k) tensor[flat(n, i, j, k)] = a->c(i, j, k);
    for (std::size_t i = 0; i < na; ++i) {
        tensor[flat(n, i, na, i)] = Scalar::one();  // e_i * u = e_i
        tensor[flat(n, na, i, i)] = Scalar::one();  // u * e_i = e_i
    }
    tensor[flat(n, na, na, na)] = Scalar::one();  // u * u = u

    std::vector<std::string> labels = a->basis_labels();
    std::string unit = "u";
    while (std::find(labels.begin(), labels.end(), unit) != labels.end()) unit += "'";
    labels.push_back(unit);

    AlgebraPtr sharp = Algebra::make("unitize(" + a->name() + ")", std::move(labels),
                                     std::move(tensor));
    Mat incl(n, na);
    for (std::size_t i = 0; i < na; ++i) incl.at(i, i) = Scalar::one();
    return Unitization{sharp, LinearMap(a, sharp, std::move(incl))};
}

AlgebraPtr generalized_lau_product(const AlgebraPtr& a, const AlgebraPtr& b, const LinearMap& t) {
    validate_hom(a, b, t);
    const std::size_t na = a->dim(), nb = b->dim(), n = na + nb;
    std::vector<Scalar> tensor(n * n * n);
    // A-block: a1 a2.
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j)
            for (std::size_t k = 0; k < na; ++k) tensor[flat(n, i, j, k)] = a->c(i, j, k);
    std::vector<Element> timg;
    timg.reserve(nb);
    for (std::size_t j = 0; j < nb; ++j) timg.push_back(a->element(t.image_of_basis(j).coeffs()));
    // Cross terms land purely in the A-part: e_i^A * e_j^B = e_i^A T(e_j^B)
    // and e_i^B * e_j^A = T(e_i^B) e_j^A.
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nb; ++j) {
            Element p = multiply(a->basis_element(i), timg[j]);
            for (std::size_t k = 0; k < na; ++k) tensor[flat(n, i, na + j, k)] = p[k];
        }
    for (std::size_t i = 0; i < nb; ++i)
        for (std::size_t j = 0; j < na; ++j) {
            Element p = multiply(timg[i], a->basis_element(j));
            for (std::size_t k = 0; k < na; ++k) tensor[flat(n, na + i, j, k)] = p[k];
        }
    // B-block: b1 b2, purely in the B-part.
    for (std::size_t i = 0; i < nb; ++i)
        for (std::size_t j = 0; j < nb; ++j)
            for (std::size_t k = 0; k < nb; ++k)
                tensor[flat(n, na + i, na + j, na + k)] = b->c(i, j, k);
    return Algebra::make("genlau(" + a->name() + "," + b->name() + ")", merged_labels(a, b),
                         std::move(tensor));
}

AlgebraPtr lau_product(const AlgebraPtr& a, const AlgebraPtr& b, const LinearMap& chi) {
    validate_char(b, chi);
    const std::size_t na = a->dim(), nb = b->dim(), n = na + nb;
    std::vector<Scalar> tensor(n * n * n);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j)
            for (std::size_t k = 0; k < na; ++k) tensor[flat(n, i, j, k)] = a->c(i, j, k);
    // Cross terms are scalar multiples: e_i^A * e_j^B = chi(e_j^B) e_i^A,
    // e_i^B * e_j^A = chi(e_i^B) e_j^A.
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nb; ++j) {
            tensor[flat(n, i, na + j, i)] = chi.matrix().at(0, j);
            tensor[flat(n, na + j, i, i)] = chi.matrix().at(0, j);
        }
    for (std::size_t i = 0; i < nb; ++i)
        for (std::size_t j = 0; j < nb; ++j)
            for (std::size_t k = 0; k < nb; ++k)
                tensor[flat(n, na + i, na + j, na + k)] = b->c(i, j, k);
    return Algebra::make("lau(" + a->name() + "," + b->name() + ")", merged_labels(a, b),
                         std::move(tensor));
}

LinearMap character_to_hom(const AlgebraPtr& a, const LinearMap& chi) {
    validate_char(chi.domain(), chi);
    std::optional<Element> e = find_identity(a);
    if (!e)
        throw MathError("requires unital A: a character induces T(b) = chi(b) e_A only when A "
                        "has an identity element");
    const std::size_t nb = chi.domain()->dim();
    Mat m(a->dim(), nb);
    for (std::size_t j = 0; j < nb; ++j) {
        const Scalar& v = chi.matrix().at(0, j);
        for (std::size_t i = 0; i < a->dim(); ++i) m.at(i, j) = v * (*e)[i];
    }
    return LinearMap(chi.domain(), a, std::move(m));
}

LinearMap trivializing_isomorphism(const AlgebraPtr& a, const AlgebraPtr& b, const LinearMap& t) {
    AlgebraPtr product = generalized_lau_product(a, b, t);
    AlgebraPtr sum = direct_sum(a, b);
    const std::size_t na = a->dim(), nb = b->dim(), n = na + nb;
    // (a,b) |-> (a + T(b), b): block upper-unitriangular [[I, M_T],[0, I]].
    Mat m = Mat::identity(n);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nb; ++j) m.at(i, na + j) = t.matrix().at(i, j);
    return LinearMap(product, sum, std::move(m));
}

LinearMap unitization_embedding(const AlgebraPtr& a, const AlgebraPtr& b, const LinearMap& chi) {
    AlgebraPtr product = lau_product(a, b, chi);
    AlgebraPtr target = direct_sum(unitization(a).algebra, b);
    const std::size_t na = a->dim(), nb = b->dim();
    // psi(a,b) = ((a, chi(b)), b); the unit coordinate of the A#-block sits
    // at index na, the B-block starts at na+1.
    Mat m(na + 1 + nb, na + nb);
    for (std::size_t i = 0; i < na; ++i) m.at(i, i) = Scalar::one();
    for (std::size_t j = 0; j < nb; ++j) {
        m.at(na, na + j) = chi.matrix().at(0, j);
        m.at(na + 1 + j, na + j) = Scalar::one();
    }
    return LinearMap(product, target, std::move(m));
}

}  // namespace laukit
