#include "laukit/corpus.hpp"

#include <utility>

#include "laukit/constructions.hpp"
#include "laukit/error.hpp"
#include "laukit/morphisms.hpp"
#include "laukit/rng.hpp"

namespace laukit {

namespace {

constexpr int kMaxParameter = 8;

const char* family_name(Family f) {
    switch (f) {
        case Family::zero: return "zero";
        case Family::pointwise: return "pointwise";
        case Family::trunc_poly: return "poly";
        case Family::matrix: return "matrix";
        case Family::cyclic_group: return "cyclic";
    }
    return "?";
}

}  // namespace

std::string CatalogSpec::to_string() const {
    return std::string(family_name(family)) + ":" + std::to_string(parameter);
}

CatalogSpec CatalogSpec::parse(const std::string& text) {
    std::size_t colon = text.find(':');
    if (colon == std::string::npos)
        throw ParseError("catalog spec must look like \"family:n\", got \"" + text + "\"");
    std::string fam = text.substr(0, colon);
    Family family;
    if (fam == "zero") family = Family::zero;
    else if (fam == "pointwise") family = Family::pointwise;
    else if (fam == "poly") family = Family::trunc_poly;
    else if (fam == "matrix") family = Family::matrix;
    else if (fam == "cyclic") family = Family::cyclic_group;
    else throw ParseError("unknown catalog family \"" + fam + "\"");
    int parameter = 0;
    try {
        std::size_t used = 0;
        parameter = std::stoi(text.substr(colon + 1), &used);
        if (used != text.size() - colon - 1) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw ParseError("bad catalog parameter in \"" + text + "\"");
    }
    return CatalogSpec{family, parameter};
}

AlgebraPtr catalog_algebra(const CatalogSpec& spec) {
    const int p = spec.parameter;
    if (p < 1 || p > kMaxParameter)
        throw ParseError("catalog parameter out of bounds (1.." +
                         std::to_string(kMaxParameter) + "): " + spec.to_string());
    const std::string name = spec.to_string();
    auto flat = [](std::size_t n, std::size_t i, std::size_t j, std::size_t k) {
        return (i * n + j) * n + k;
    };
    switch (spec.family) {
        case Family::zero: {
            std::size_t n = static_cast<std::size_t>(p);
            std::vector<std::string> labels(n);
            for (std::size_t i = 0; i < n; ++i) labels[i] = "z" + std::to_string(i + 1);
            return Algebra::make(name, std::move(labels), std::vector<Scalar>(n * n * n));
        }
        case Family::pointwise: {
            std::size_t n = static_cast<std::size_t>(p);
            std::vector<Scalar> tensor(n * n * n);
            for (std::size_t i = 0; i < n; ++i) tensor[flat(n, i, i, i)] = Scalar::one();
            std::vector<std::string> labels(n);
            for (std::size_t i = 0; i < n; ++i) labels[i] = "e" + std::to_string(i + 1);
            return Algebra::make(name, std::move(labels), std::move(tensor));
        }
        case Family::trunc_poly: {
            std::size_t n = static_cast<std::size_t>(p);  // basis 1, x, ..., x^{n-1}
            std::vector<Scalar> tensor(n * n * n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (i + j < n) tensor[flat(n, i, j, i + j)] = Scalar::one();
            std::vector<std::string> labels(n);
            labels[0] = "1";
            if (n > 1) labels[1] = "x";
            for (std::size_t i = 2; i < n; ++i) labels[i] = "x" + std::to_string(i);
            return Algebra::make(name, std::move(labels), std::move(tensor));
        }
        case Family::matrix: {
            std::size_t m = static_cast<std::size_t>(p);
            std::size_t n = m * m;  // basis e_{rc}, row-major
            std::vector<Scalar> tensor(n * n * n);
            for (std::size_t r = 0; r < m; ++r)
                for (std::size_t c = 0; c < m; ++c)
                    for (std::size_t s = 0; s < m; ++s)
                        for (std::size_t d = 0; d < m; ++d)
                            if (c == s)  // e_{rc} e_{sd} = delta_{cs} e_{rd}
                                tensor[flat(n, r * m + c, s * m + d, r * m + d)] = Scalar::one();
            std::vector<std::string> labels(n);
            for (std::size_t r = 0; r < m; ++r)
                for (std::size_t c = 0; c < m; ++c)
                    labels[r * m + c] = "e" + std::to_string(r + 1) + std::to_string(c + 1);
            return Algebra::make(name, std::move(labels), std::move(tensor));
        }
        case Family::cyclic_group: {
            std::size_t k = static_cast<std::size_t>(p);
            std::vector<Scalar> tensor(k * k * k);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) tensor[flat(k, i, j, (i + j) % k)] = Scalar::one();
            std::vector<std::string> labels(k);
            for (std::size_t i = 0; i < k; ++i) labels[i] = "g" + std::to_string(i);
            return Algebra::make(name, std::move(labels), std::move(tensor));
        }
    }
    throw Error("unreachable");
}

LinearMap catalog_character(const CatalogSpec& algebra, const std::string& which) {
    AlgebraPtr b = catalog_algebra(algebra);
    AlgebraPtr c = complex_algebra();
    Mat m(1, b->dim());
    if (which == "id") {
        if (!b->same_structure(*c))
            throw ParseError("character \"id\" needs a one-dimensional unital algebra, got " +
                             algebra.to_string());
        m.at(0, 0) = Scalar::one();
    } else if (which.rfind("coord:", 0) == 0) {
        if (algebra.family != Family::pointwise)
            throw ParseError("character \"" + which + "\" is defined on pointwise:n only");
        int k = 0;
        try {
            k = std::stoi(which.substr(6));
        } catch (const std::exception&) {
            throw ParseError("bad coordinate in character \"" + which + "\"");
        }
        if (k < 1 || static_cast<std::size_t>(k) > b->dim())
            throw ParseError("coordinate out of range in character \"" + which + "\"");
        m.at(0, static_cast<std::size_t>(k - 1)) = Scalar::one();
    } else if (which == "eval0") {
        if (algebra.family != Family::trunc_poly)
            throw ParseError("character \"eval0\" is defined on poly:k only");
        m.at(0, 0) = Scalar::one();
    } else if (which == "aug") {
        if (algebra.family != Family::cyclic_group)
            throw ParseError("character \"aug\" is defined on cyclic:k only");
        for (std::size_t j = 0; j < b->dim(); ++j) m.at(0, j) = Scalar::one();
    } else {
        throw ParseError("unknown character \"" + which + "\"");
    }
    LinearMap chi(b, c, std::move(m));
    CharReport rep = is_character(chi);
    if (!rep.pass)
        throw MathError("catalog character \"" + which + "\" failed verification on " +
                        algebra.to_string());
    return chi;
}

HomSpec HomSpec::zero(CatalogSpec b, CatalogSpec a) {
    return HomSpec{Strategy::zero, b, a, {}, {}};
}
HomSpec HomSpec::unital_scalar(CatalogSpec b, CatalogSpec a, std::string character) {
    return HomSpec{Strategy::unital_scalar, b, a, std::move(character), {}};
}
HomSpec HomSpec::inclusion(CatalogSpec b, CatalogSpec a) {
    return HomSpec{Strategy::inclusion, b, a, {}, {}};
}
HomSpec HomSpec::projection(CatalogSpec b, CatalogSpec a) {
    return HomSpec{Strategy::projection, b, a, {}, {}};
}
HomSpec HomSpec::composition(std::vector<HomSpec> chain) {
    if (chain.empty()) throw ParseError("empty composition chain");
    CatalogSpec dom = chain.front().domain;
    CatalogSpec cod = chain.back().codomain;
    return HomSpec{Strategy::composition, dom, cod, {}, std::move(chain)};
}

std::string HomSpec::to_string() const {
    switch (strategy) {
        case Strategy::zero: return "zero";
        case Strategy::unital_scalar: return "scalar:" + character;
        case Strategy::inclusion: return "incl";
        case Strategy::projection: return "proj";
        case Strategy::composition: {
            std::string out = "comp(";
            for (std::size_t i = 0; i < chain.size(); ++i) {
                if (i) out += ";";
                out += chain[i].to_string();
            }
            return out + ")";
        }
    }
    return "?";
}

namespace {

LinearMap build_hom(const HomSpec& spec) {
    AlgebraPtr b = catalog_algebra(spec.domain);
    AlgebraPtr a = catalog_algebra(spec.codomain);
    const std::string what = spec.to_string() + " from " + spec.domain.to_string() + " to " +
                             spec.codomain.to_string();
    switch (spec.strategy) {
        case HomSpec::Strategy::zero:
            return LinearMap::zero_map(b, a);
        case HomSpec::Strategy::unital_scalar:
            return character_to_hom(a, catalog_character(spec.domain, spec.character));
        case HomSpec::Strategy::inclusion: {
            if (spec.domain.family != spec.codomain.family)
                throw ParseError("inapplicable strategy: " + what);
            Mat m(a->dim(), b->dim());
            switch (spec.domain.family) {
                case Family::zero:
                case Family::pointwise:
                    if (spec.domain.parameter > spec.codomain.parameter)
                        throw ParseError("inapplicable strategy: " + what);
                    for (std::size_t j = 0; j < b->dim(); ++j) m.at(j, j) = Scalar::one();
                    break;
                case Family::matrix: {
                    // Corner embedding of matrix units.
                    int small = spec.domain.parameter, big = spec.codomain.parameter;
                    if (small > big) throw ParseError("inapplicable strategy: " + what);
                    for (int r = 0; r < small; ++r)
                        for (int c = 0; c < small; ++c)
                            m.at(static_cast<std::size_t>(r * big + c),
                                 static_cast<std::size_t>(r * small + c)) = Scalar::one();
                    break;
                }
                case Family::cyclic_group: {
                    // Z/j -> Z/k for j | k, g |-> g^{k/j}.
                    int j = spec.domain.parameter, k = spec.codomain.parameter;
                    if (j > k || k % j != 0) throw ParseError("inapplicable strategy: " + what);
                    for (int t = 0; t < j; ++t)
                        m.at(static_cast<std::size_t>(t * (k / j)), static_cast<std::size_t>(t)) =
                            Scalar::one();
                    break;
                }
                case Family::trunc_poly:
                    // x |-> x does not respect truncation; no canonical inclusion.
                    throw ParseError("inapplicable strategy: " + what);
            }
            return LinearMap(b, a, std::move(m));
        }
        case HomSpec::Strategy::projection: {
            if (spec.domain.family != spec.codomain.family)
                throw ParseError("inapplicable strategy: " + what);
            if (spec.codomain.parameter > spec.domain.parameter)
                throw ParseError("inapplicable strategy: " + what);
            Mat m(a->dim(), b->dim());
            switch (spec.domain.family) {
                case Family::zero:
                case Family::pointwise:
                case Family::trunc_poly:
                    // Drop the tail coordinates; for poly this is the
                    // quotient by the ideal (x^j).
                    for (std::size_t i = 0; i < a->dim(); ++i) m.at(i, i) = Scalar::one();
                    break;
                case Family::cyclic_group: {
                    int k = spec.domain.parameter, j = spec.codomain.parameter;
                    if (k % j != 0) throw ParseError("inapplicable strategy: " + what);
                    for (int t = 0; t < k; ++t)
                        m.at(static_cast<std::size_t>(t % j), static_cast<std::size_t>(t)) =
                            Scalar::one();
                    break;
                }
                case Family::matrix:
                    throw ParseError("inapplicable strategy: " + what);
            }
            return LinearMap(b, a, std::move(m));
        }
        case HomSpec::Strategy::composition: {
            LinearMap t = build_hom(spec.chain.front());
            for (std::size_t i = 1; i < spec.chain.size(); ++i)
                t = compose(build_hom(spec.chain[i]), t);
            return t;
        }
    }
    throw Error("unreachable");
}

}  // namespace

LinearMap catalog_homomorphism(const HomSpec& spec) {
    LinearMap t = build_hom(spec);
    HomReport rep = is_homomorphism(t);
    if (!rep.pass)
        throw MathError("catalog homomorphism " + spec.to_string() +
                        " failed verification (generator bug): " + rep.witness->to_string());
    return t;
}

Element random_element(const AlgebraPtr& a, std::uint64_t seed, long bound) {
    if (bound < 1) throw Error("random element bound must be >= 1");
    const std::uint64_t key = stream_key(a->name(), seed);
    std::uint64_t counter = 0;
    auto draw_rational = [&] {
        std::uint64_t w1 = counter_stream(key, counter++);
        std::uint64_t w2 = counter_stream(key, counter++);
        long num = static_cast<long>(w1 % (2 * static_cast<std::uint64_t>(bound) + 1)) - bound;
        long den = 1 + static_cast<long>(w2 % static_cast<std::uint64_t>(bound));
        return make_rational(num, den);
    };
    std::vector<Scalar> coeffs(a->dim());
    for (Scalar& c : coeffs) {
        Rational re = draw_rational();
        Rational im = draw_rational();
        c = Scalar(std::move(re), std::move(im));
    }
    return a->element(std::move(coeffs));
}

std::vector<CatalogSpec> acceptance_algebras() {
    using F = Family;
    return {
        {F::zero, 1},      {F::zero, 2},      {F::zero, 3},
        {F::pointwise, 1}, {F::pointwise, 2}, {F::pointwise, 3},
        {F::trunc_poly, 2}, {F::trunc_poly, 3},
        {F::cyclic_group, 2}, {F::cyclic_group, 3},
    };
}

std::vector<VerifiedTriple> acceptance_corpus() {
    std::vector<VerifiedTriple> out;
    const std::vector<CatalogSpec> algebras = acceptance_algebras();

    auto push = [&out](const CatalogSpec& a, const CatalogSpec& b, const HomSpec& t) {
        out.push_back(VerifiedTriple{catalog_algebra(a), catalog_algebra(b),
                                     catalog_homomorphism(t),
                                     "A=" + a.to_string() + " B=" + b.to_string() +
                                         " T=" + t.to_string()});
    };

    // Zero homomorphism between every ordered pair.
    for (const CatalogSpec& a : algebras)
        for (const CatalogSpec& b : algebras) push(a, b, HomSpec::zero(b, a));

    // Characters scaled into every unital algebra.
    std::vector<std::pair<CatalogSpec, std::string>> characters = {
        {{Family::pointwise, 1}, "coord:1"}, {{Family::pointwise, 2}, "coord:1"},
        {{Family::pointwise, 2}, "coord:2"}, {{Family::pointwise, 3}, "coord:1"},
        {{Family::pointwise, 3}, "coord:2"}, {{Family::pointwise, 3}, "coord:3"},
        {{Family::trunc_poly, 2}, "eval0"},  {{Family::trunc_poly, 3}, "eval0"},
        {{Family::cyclic_group, 2}, "aug"},  {{Family::cyclic_group, 3}, "aug"},
    };
    std::vector<CatalogSpec> unital = {
        {Family::pointwise, 1},   {Family::pointwise, 2}, {Family::pointwise, 3},
        {Family::trunc_poly, 2},  {Family::trunc_poly, 3},
        {Family::cyclic_group, 2}, {Family::cyclic_group, 3},
    };
    for (const CatalogSpec& a : unital)
        for (const auto& [b, chi] : characters) push(a, b, HomSpec::unital_scalar(b, a, chi));

    // Same-family inclusions.
    for (Family f : {Family::zero, Family::pointwise}) {
        push({f, 2}, {f, 1}, HomSpec::inclusion({f, 1}, {f, 2}));
        push({f, 3}, {f, 1}, HomSpec::inclusion({f, 1}, {f, 3}));
        push({f, 3}, {f, 2}, HomSpec::inclusion({f, 2}, {f, 3}));
    }

    // Quotient projections.
    for (Family f : {Family::zero, Family::pointwise}) {
        push({f, 1}, {f, 2}, HomSpec::projection({f, 2}, {f, 1}));
        push({f, 1}, {f, 3}, HomSpec::projection({f, 3}, {f, 1}));
        push({f, 2}, {f, 3}, HomSpec::projection({f, 3}, {f, 2}));
    }
    push({Family::trunc_poly, 2}, {Family::trunc_poly, 3},
         HomSpec::projection({Family::trunc_poly, 3}, {Family::trunc_poly, 2}));

    // A few composites.
    push({Family::pointwise, 3}, {Family::pointwise, 3},
         HomSpec::composition({HomSpec::projection({Family::pointwise, 3}, {Family::pointwise, 2}),
                               HomSpec::inclusion({Family::pointwise, 2}, {Family::pointwise, 3})}));
    push({Family::cyclic_group, 2}, {Family::trunc_poly, 3},
         HomSpec::composition(
             {HomSpec::projection({Family::trunc_poly, 3}, {Family::trunc_poly, 2}),
              HomSpec::unital_scalar({Family::trunc_poly, 2}, {Family::cyclic_group, 2}, "eval0")}));
    push({Family::zero, 3}, {Family::zero, 1},
         HomSpec::composition({HomSpec::inclusion({Family::zero, 1}, {Family::zero, 2}),
                               HomSpec::inclusion({Family::zero, 2}, {Family::zero, 3})}));

    return out;
}

}  // namespace laukit
