#include "laukit/analysis.hpp"

#include <algorithm>

#include "laukit/constructions.hpp"
#include "laukit/linalg.hpp"
#include "laukit/rng.hpp"

namespace laukit {

namespace {

bool commutative_on_basis(const Algebra& a) {
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (a.c(i, j, k) != a.c(j, i, k)) return false;
    return true;
}

std::size_t center_dimension(const Algebra& a) {
    const std::size_t n = a.dim();
    // x central iff x e_i = e_i x for all i: rows indexed by (i,k), unknowns x_j.
    Mat sys(n * n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j)
                sys.at(i * n + k, j) = a.c(j, i, k) - a.c(i, j, k);
    return kernel_basis(sys).size();
}

// Gram matrix of the trace form (x,y) |-> trace(L_{xy}) over the given
// algebra's basis. trace(L_z) = sum_m z_m t_m with t_m = sum_k c[m][k][k].
Mat trace_gram(const Algebra& a) {
    const std::size_t n = a.dim();
    std::vector<Scalar> t(n);
    for (std::size_t m = 0; m < n; ++m)
        for (std::size_t k = 0; k < n; ++k) t[m] += a.c(m, k, k);
    Mat g(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t m = 0; m < n; ++m)
                if (!a.c(i, j, m).is_zero()) g.at(i, j) += a.c(i, j, m) * t[m];
    return g;
}

std::size_t radical_dimension(const AlgebraPtr& a, bool unital) {
    if (unital) return kernel_basis(trace_gram(*a)).size();
    // Evaluate the criterion in A# and cut the kernel down to A. The radical
    // of A# already lies inside A, so the extra constraint only guards the
    // computation, it cannot change the mathematical answer.
    AlgebraPtr sharp = unitization(a).algebra;
    const std::size_t n = sharp->dim();
    Mat g = trace_gram(*sharp);
    Mat sys(n + 1, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) sys.at(i, j) = g.at(i, j);
    sys.at(n, n - 1) = Scalar::one();  // the u-coordinate must vanish
    return kernel_basis(sys).size();
}

}  // namespace

Fingerprint fingerprint(const AlgebraPtr& a) {
    Fingerprint fp;
    fp.dim = a->dim();
    fp.unital = find_identity(a).has_value();
    fp.commutative = commutative_on_basis(*a);
    fp.center_dim = center_dimension(*a);
    fp.radical_dim = radical_dimension(a, fp.unital);
    return fp;
}

std::optional<Certificate> distinguish(const AlgebraPtr& a, const AlgebraPtr& b) {
    Fingerprint fa = fingerprint(a), fb = fingerprint(b);
    auto num = [](std::size_t v) { return std::to_string(v); };
    auto yn = [](bool v) { return std::string(v ? "true" : "false"); };
    if (fa.dim != fb.dim) return Certificate{"dim", num(fa.dim), num(fb.dim)};
    if (fa.unital != fb.unital) return Certificate{"unital", yn(fa.unital), yn(fb.unital)};
    if (fa.commutative != fb.commutative)
        return Certificate{"commutative", yn(fa.commutative), yn(fb.commutative)};
    if (fa.center_dim != fb.center_dim)
        return Certificate{"center_dim", num(fa.center_dim), num(fb.center_dim)};
    if (fa.radical_dim != fb.radical_dim)
        return Certificate{"radical_dim", num(fa.radical_dim), num(fb.radical_dim)};
    return std::nullopt;
}

double l1_norm(const Element& x) {
    double s = 0.0;
    for (const Scalar& c : x.coeffs()) s += abs_double(c);
    return s;
}

NormReport norm_report(const AlgebraPtr& a, long samples, std::uint64_t seed) {
    NormReport rep;
    const std::size_t n = a->dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            rep.mult_constant =
                std::max(rep.mult_constant, l1_norm(multiply(a->basis_element(i), a->basis_element(j))));
    rep.renorm_factor = std::max(rep.mult_constant, 1.0);

    const std::uint64_t key = stream_key(a->name(), seed);
    std::uint64_t counter = 0;
    auto draw_element = [&] {
        std::vector<Scalar> coeffs(n);
        std::vector<double> values(2 * n);
        for (double& v : values) v = unit_double(counter_stream(key, counter++));
        // Keep exact arithmetic downstream happy: round the sampled doubles
        // to rationals with denominator 2^20. The sampled set is still dense
        // enough in [-1,1]^2 for a norm check.
        for (std::size_t i = 0; i < n; ++i) {
            auto q = [](double v) {
                return make_rational(static_cast<long>(v * 1048576.0), 1048576L);
            };
            coeffs[i] = Scalar(q(values[2 * i]), q(values[2 * i + 1]));
        }
        return a->element(std::move(coeffs));
    };

    rep.max_violation = -1e300;
    for (long s = 0; s < samples; ++s) {
        Element x = draw_element();
        Element y = draw_element();
        double lhs = rep.renorm_factor * l1_norm(multiply(x, y));
        double rhs = (rep.renorm_factor * l1_norm(x)) * (rep.renorm_factor * l1_norm(y));
        rep.max_violation = std::max(rep.max_violation, lhs - rhs);
        ++rep.samples_checked;
    }
    if (samples <= 0) rep.max_violation = 0.0;
    return rep;
}

}  // namespace laukit
