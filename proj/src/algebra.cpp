#include "laukit/algebra.hpp"

#include <unordered_set>
#include <utility>

#include "laukit/error.hpp"
#include "laukit/linalg.hpp"

namespace laukit {

// ---------------------------------------------------------------- Element

Element::Element(AlgebraPtr algebra, std::vector<Scalar> coeffs)
    : algebra_(std::move(algebra)), coeffs_(std::move(coeffs)) {
    if (!algebra_) throw Error("element without an algebra");
    if (coeffs_.size() != algebra_->dim())
        throw Error("coefficient vector length does not match algebra dimension");
}

bool Element::is_zero() const {
    for (const Scalar& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

std::string Element::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + laukit::to_string(coeffs_[i]) + ")*" + algebra_->basis_labels()[i];
    }
    return out.empty() ? "0" : out;
}

namespace {

const Algebra& common_algebra(const Element& x, const Element& y) {
    const AlgebraPtr& a = x.algebra();
    const AlgebraPtr& b = y.algebra();
    if (a != b && !a->same_structure(*b)) throw Error("algebra mismatch");
    return *a;
}

}  // namespace

Element Element::operator+(const Element& o) const {
    common_algebra(*this, o);
    std::vector<Scalar> out(coeffs_);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += o.coeffs_[i];
    return Element(algebra_, std::move(out));
}

Element Element::operator-(const Element& o) const {
    common_algebra(*this, o);
    std::vector<Scalar> out(coeffs_);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= o.coeffs_[i];
    return Element(algebra_, std::move(out));
}

Element Element::operator-() const {
    std::vector<Scalar> out(coeffs_);
    for (Scalar& c : out) c = -c;
    return Element(algebra_, std::move(out));
}

Element operator*(const Scalar& s, const Element& x) {
    std::vector<Scalar> out(x.coeffs());
    for (Scalar& c : out) c *= s;
    return Element(x.algebra(), std::move(out));
}

bool Element::operator==(const Element& o) const {
    common_algebra(*this, o);
    return coeffs_ == o.coeffs_;
}

Element multiply(const Element& x, const Element& y) {
    const Algebra& alg = common_algebra(x, y);
    const std::size_t n = alg.dim();
    std::vector<Scalar> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j].is_zero()) continue;
            Scalar xy = x[i] * y[j];
            for (std::size_t k = 0; k < n; ++k) {
                const Scalar& c = alg.c(i, j, k);
                if (c.is_zero()) continue;
                if (c.is_one())
                    out[k] += xy;
                else
                    out[k] += xy * c;
            }
        }
    }
    return Element(x.algebra(), std::move(out));
}

// ---------------------------------------------------------------- Algebra

Algebra::Algebra(std::string name, std::vector<std::string> labels, std::vector<Scalar> tensor)
    : name_(std::move(name)), dim_(labels.size()), labels_(std::move(labels)),
      tensor_(std::move(tensor)) {
    if (dim_ == 0) throw ParseError("algebra dimension must be positive");
    if (tensor_.size() != dim_ * dim_ * dim_)
        throw ParseError("structure tensor has wrong size for dimension " + std::to_string(dim_));
    std::unordered_set<std::string> seen;
    for (const std::string& l : labels_)
        if (!seen.insert(l).second) throw ParseError("duplicate basis label \"" + l + "\"");
}

AlgebraPtr Algebra::make_unchecked(std::string name, std::vector<std::string> labels,
                                   std::vector<Scalar> tensor) {
    return AlgebraPtr(new Algebra(std::move(name), std::move(labels), std::move(tensor)));
}

AlgebraPtr Algebra::make(std::string name, std::vector<std::string> labels,
                         std::vector<Scalar> tensor) {
    AlgebraPtr a = make_unchecked(std::move(name), std::move(labels), std::move(tensor));
    AssociativityReport rep = is_associative(a);
    if (!rep.pass) {
        const AssociativityWitness& w = *rep.witness;
        throw NotAssociativeError("multiplication table of \"" + a->name() +
                                      "\" is not associative: " + w.to_string(),
                                  w.i, w.j, w.k);
    }
    return a;
}

Element Algebra::zero() const {
    return Element(shared_from_this(), std::vector<Scalar>(dim_));
}

Element Algebra::basis_element(std::size_t i) const {
    if (i >= dim_) throw Error("basis index out of range");
    std::vector<Scalar> coeffs(dim_);
    coeffs[i] = Scalar::one();
    return Element(shared_from_this(), std::move(coeffs));
}

Element Algebra::element(std::vector<Scalar> coeffs) const {
    return Element(shared_from_this(), std::move(coeffs));
}

std::string AssociativityWitness::to_string() const {
    const std::vector<std::string>& l = lhs.algebra()->basis_labels();
    return "(" + l[i] + "*" + l[j] + ")*" + l[k] + " = " + lhs.to_string() + " but " + l[i] +
           "*(" + l[j] + "*" + l[k] + ") = " + rhs.to_string();
}

AssociativityReport is_associative(const AlgebraPtr& a) {
    const std::size_t n = a->dim();
    // (e_i e_j) e_k and e_i (e_j e_k), both expanded through the tensor.
    std::vector<Scalar> lhs(n), rhs(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                for (std::size_t t = 0; t < n; ++t) {
                    lhs[t] = Scalar::zero();
                    rhs[t] = Scalar::zero();
                }
                for (std::size_t m = 0; m < n; ++m) {
                    const Scalar& cm = a->c(i, j, m);
                    if (!cm.is_zero())
                        for (std::size_t t = 0; t < n; ++t)
                            if (!a->c(m, k, t).is_zero()) lhs[t] += cm * a->c(m, k, t);
                    const Scalar& dm = a->c(j, k, m);
                    if (!dm.is_zero())
                        for (std::size_t t = 0; t < n; ++t)
                            if (!a->c(i, m, t).is_zero()) rhs[t] += dm * a->c(i, m, t);
                }
                if (lhs != rhs)
                    return {false, AssociativityWitness{i, j, k, a->element(lhs), a->element(rhs)}};
            }
    return {true, std::nullopt};
}

std::optional<Element> find_identity(const AlgebraPtr& a) {
    const std::size_t n = a->dim();
    // Unknown u with u*e_j = e_j and e_j*u = e_j for all j: 2n^2 exact linear
    // equations in n unknowns. u*e_j coordinate k: sum_i u_i c[i][j][k];
    // e_j*u coordinate k: sum_i u_i c[j][i][k].
    Mat sys(2 * n * n, n);
    std::vector<Scalar> rhs(2 * n * n);
    std::size_t row = 0;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t i = 0; i < n; ++i) sys.at(row, i) = a->c(i, j, k);
            rhs[row] = (j == k) ? Scalar::one() : Scalar::zero();
            ++row;
            for (std::size_t i = 0; i < n; ++i) sys.at(row, i) = a->c(j, i, k);
            rhs[row] = (j == k) ? Scalar::one() : Scalar::zero();
            ++row;
        }
    std::optional<std::vector<Scalar>> u = solve(sys, rhs);
    if (!u) return std::nullopt;
    return a->element(std::move(*u));
}

AlgebraPtr complex_algebra() {
    static const AlgebraPtr c =
        Algebra::make("C", {"1"}, std::vector<Scalar>{Scalar::one()});
    return c;
}

}  // namespace laukit
