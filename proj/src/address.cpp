#include "laukit/address.hpp"

#include <utility>

#include "laukit/constructions.hpp"
#include "laukit/error.hpp"
#include "laukit/io.hpp"

namespace laukit {

namespace {

struct ExprCursor {
    const std::string& text;
    std::size_t pos = 0;

    bool done() const { return pos >= text.size(); }
    bool lookahead(const std::string& word) const {
        return text.compare(pos, word.size(), word) == 0;
    }
    bool accept(const std::string& word) {
        if (!lookahead(word)) return false;
        pos += word.size();
        return true;
    }
    void expect(char c) {
        if (done() || text[pos] != c)
            throw ParseError("expected '" + std::string(1, c) + "' in algebra expression", pos);
        ++pos;
    }
    /// Token up to the next ',' or ')' at this nesting level.
    std::string balanced_token() {
        std::size_t depth = 0, start = pos;
        while (!done()) {
            char c = text[pos];
            if (c == '(') ++depth;
            if (c == ')') {
                if (depth == 0) break;
                --depth;
            }
            if (c == ',' && depth == 0) break;
            ++pos;
        }
        return text.substr(start, pos - start);
    }
};

ResolvedAlgebra parse_expr(ExprCursor& cur);

ResolvedAlgebra parse_expr(ExprCursor& cur) {
    if (cur.accept("dsum(")) {
        ResolvedAlgebra a = parse_expr(cur);
        cur.expect(',');
        ResolvedAlgebra b = parse_expr(cur);
        cur.expect(')');
        return {direct_sum(a.algebra, b.algebra), std::nullopt};
    }
    if (cur.accept("unitize(")) {
        ResolvedAlgebra a = parse_expr(cur);
        cur.expect(')');
        return {unitization(a.algebra).algebra, std::nullopt};
    }
    if (cur.accept("lau(")) {
        ResolvedAlgebra a = parse_expr(cur);
        cur.expect(',');
        ResolvedAlgebra b = parse_expr(cur);
        cur.expect(',');
        LinearMap chi = resolve_character(b, cur.balanced_token());
        cur.expect(')');
        return {lau_product(a.algebra, b.algebra, chi), std::nullopt};
    }
    if (cur.accept("genlau(")) {
        ResolvedAlgebra a = parse_expr(cur);
        cur.expect(',');
        ResolvedAlgebra b = parse_expr(cur);
        cur.expect(',');
        std::string hom = cur.balanced_token();
        cur.expect(')');
        return {generalized_lau_product(a.algebra, b.algebra, resolve_hom(b, a, hom)), std::nullopt};
    }
    if (cur.accept("sub(")) {
        std::string name = cur.balanced_token();
        cur.expect(')');
        H3Instance inst = h3_instance(name);
        return {subspace_algebra(inst.subspace, "sub(" + inst.name + ")"), std::nullopt};
    }
    // catalog spec: family:parameter
    std::size_t start = cur.pos;
    std::string token = cur.balanced_token();
    try {
        CatalogSpec spec = CatalogSpec::parse(token);
        return {catalog_algebra(spec), spec};
    } catch (const ParseError& e) {
        throw ParseError("bad algebra expression \"" + token + "\" (" + e.what() + ")", start);
    }
}

bool looks_like_expression(const std::string& arg) {
    for (const char* head : {"dsum(", "unitize(", "lau(", "genlau(", "sub("})
        if (arg.rfind(head, 0) == 0) return true;
    // family:n — a colon with no path separator or dot before it
    std::size_t colon = arg.find(':');
    return colon != std::string::npos && arg.find('/') == std::string::npos &&
           arg.find('.') == std::string::npos;
}

}  // namespace

ResolvedAlgebra resolve_algebra(const std::string& arg) {
    if (looks_like_expression(arg)) {
        ExprCursor cur{arg};
        ResolvedAlgebra r = parse_expr(cur);
        if (!cur.done()) throw ParseError("trailing characters in algebra expression", cur.pos);
        return r;
    }
    return {load_algebra_file(arg), std::nullopt};
}

LinearMap resolve_character(const ResolvedAlgebra& b, const std::string& arg) {
    if (arg == "id" || arg == "eval0" || arg == "aug" || arg.rfind("coord:", 0) == 0) {
        if (!b.spec)
            throw ParseError("named characters need a catalog algebra; \"" + arg +
                             "\" cannot apply to a file-defined one (use a map file)");
        return catalog_character(*b.spec, arg);
    }
    LinearMap chi = load_map_file(arg);
    if (!chi.domain()->same_structure(*b.algebra))
        throw ParseError("character file domain does not match B");
    return chi;
}

LinearMap resolve_hom(const ResolvedAlgebra& b, const ResolvedAlgebra& a, const std::string& arg) {
    auto need_specs = [&](const char* what) {
        if (!b.spec || !a.spec)
            throw ParseError(std::string("strategy \"") + what +
                             "\" needs catalog endpoints (use a map file otherwise)");
    };
    if (arg == "zero") return LinearMap::zero_map(b.algebra, a.algebra);
    if (arg.rfind("scalar:", 0) == 0) {
        LinearMap chi = resolve_character(b, arg.substr(7));
        return character_to_hom(a.algebra, chi);
    }
    if (arg == "incl") {
        need_specs("incl");
        return catalog_homomorphism(HomSpec::inclusion(*b.spec, *a.spec));
    }
    if (arg == "proj") {
        need_specs("proj");
        return catalog_homomorphism(HomSpec::projection(*b.spec, *a.spec));
    }
    LinearMap t = load_map_file(arg);
    if (!t.domain()->same_structure(*b.algebra) || !t.codomain()->same_structure(*a.algebra))
        throw ParseError("map file endpoints do not match B -> A");
    return t;
}

std::vector<LauTriple> shipped_lau_triples() {
    using F = Family;
    return {
        {{F::zero, 1}, {F::pointwise, 1}, "coord:1"},
        {{F::pointwise, 1}, {F::pointwise, 1}, "coord:1"},
        {{F::pointwise, 2}, {F::pointwise, 2}, "coord:1"},
        {{F::trunc_poly, 2}, {F::trunc_poly, 2}, "eval0"},
        {{F::cyclic_group, 2}, {F::cyclic_group, 2}, "aug"},
    };
}

namespace {

Subspace column_span(const AlgebraPtr& ambient, const LinearMap& map) {
    std::vector<Element> cols;
    cols.reserve(map.matrix().cols);
    for (std::size_t j = 0; j < map.matrix().cols; ++j) cols.push_back(map.image_of_basis(j));
    return Subspace(ambient, std::move(cols));
}

H3Instance psi_instance(const LauTriple& t) {
    AlgebraPtr a = catalog_algebra(t.a);
    AlgebraPtr b = catalog_algebra(t.b);
    LinearMap chi = catalog_character(t.b, t.character);
    LinearMap psi = unitization_embedding(a, b, chi);
    std::string name =
        "psi(" + t.a.to_string() + "," + t.b.to_string() + "," + t.character + ")";
    return H3Instance{name, psi.codomain(), column_span(psi.codomain(), psi),
                      "image of the unitization embedding of lau(" + t.a.to_string() + "," +
                          t.b.to_string() + ")"};
}

}  // namespace

H3Instance h3_instance(const std::string& name) {
    if (name == "upper2") {
        AlgebraPtr m2 = catalog_algebra({Family::matrix, 2});
        // span{e11, e12, e22}
        Subspace s(m2, {m2->basis_element(0), m2->basis_element(1), m2->basis_element(3)});
        return H3Instance{name, m2, std::move(s), "upper-triangular subalgebra of matrix:2"};
    }
    if (name == "diag2") {
        AlgebraPtr m2 = catalog_algebra({Family::matrix, 2});
        Subspace s(m2, {m2->basis_element(0), m2->basis_element(3)});
        return H3Instance{name, m2, std::move(s), "diagonal subalgebra of matrix:2"};
    }
    if (name == "xpoly2") {
        AlgebraPtr p2 = catalog_algebra({Family::trunc_poly, 2});
        Subspace s(p2, {p2->basis_element(1)});
        return H3Instance{name, p2, std::move(s), "span of x inside poly:2"};
    }
    if (name.rfind("psi(", 0) == 0 && name.back() == ')') {
        std::string inner = name.substr(4, name.size() - 5);
        std::size_t c1 = inner.find(',');
        std::size_t c2 = inner.find(',', c1 == std::string::npos ? 0 : c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos)
            throw ParseError("psi instance must look like psi(A,B,char): " + name);
        LauTriple t{CatalogSpec::parse(inner.substr(0, c1)),
                    CatalogSpec::parse(inner.substr(c1 + 1, c2 - c1 - 1)),
                    inner.substr(c2 + 1)};
        return psi_instance(t);
    }
    throw ParseError("unknown subalgebra instance \"" + name + "\"");
}

std::vector<H3Instance> shipped_h3_instances() {
    std::vector<H3Instance> out;
    for (const LauTriple& t : shipped_lau_triples()) out.push_back(psi_instance(t));
    out.push_back(h3_instance("upper2"));
    out.push_back(h3_instance("diag2"));
    out.push_back(h3_instance("xpoly2"));
    return out;
}

}  // namespace laukit
