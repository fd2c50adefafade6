#include "laukit/io.hpp"

#include <fstream>
#include <sstream>

#include "laukit/error.hpp"

namespace laukit {

// ------------------------------------------------------------ scalar text

namespace {

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;

    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }
    bool accept(char c) {
        if (!done() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
};

Integer parse_digits(Cursor& cur, const char* what) {
    const std::size_t start = cur.pos;
    while (!cur.done() && cur.peek() >= '0' && cur.peek() <= '9') ++cur.pos;
    if (cur.pos == start)
        throw ParseError(std::string("expected ") + what, start, ParseError::Kind::bad_scalar);
    return Integer(cur.text.substr(start, cur.pos - start));
}

// rational := ["-"] digits ["/" digits]
Rational parse_rational(Cursor& cur) {
    bool negative = cur.accept('-');
    Integer num = parse_digits(cur, "digits");
    if (negative) num = -num;
    if (cur.accept('/')) {
        const std::size_t den_pos = cur.pos;
        Integer den = parse_digits(cur, "denominator digits");
        if (den == 0) throw ParseError("zero denominator", den_pos, ParseError::Kind::bad_scalar);
        return make_rational(std::move(num), std::move(den));
    }
    return Rational(std::move(num));
}

}  // namespace

Scalar parse_scalar(const std::string& text) {
    Cursor cur{text};
    if (text.empty()) throw ParseError("empty scalar", 0, ParseError::Kind::bad_scalar);

    Rational re, im;
    // Leading pure-imaginary forms "i" / "-i" / "rational i".
    if (cur.accept('i')) {
        im = 1;
    } else if (text.size() >= 2 && text[0] == '-' && text[1] == 'i') {
        cur.pos = 2;
        im = -1;
    } else {
        Rational first = parse_rational(cur);
        if (cur.accept('i')) {
            im = first;
        } else if (!cur.done() && (cur.peek() == '+' || cur.peek() == '-')) {
            bool minus = cur.peek() == '-';
            ++cur.pos;
            if (cur.accept('i')) {
                im = 1;
            } else {
                im = parse_rational(cur);
                if (!cur.accept('i'))
                    throw ParseError("expected 'i'", cur.pos, ParseError::Kind::bad_scalar);
            }
            if (minus) im = -im;
            re = first;
        } else {
            re = first;
        }
    }
    if (!cur.done()) throw ParseError("trailing characters", cur.pos, ParseError::Kind::bad_scalar);
    return Scalar(std::move(re), std::move(im));
}

// -------------------------------------------------------------- algebra io

namespace {

const Json& require_field(const Json& j, const char* field) {
    auto it = j.find(field);
    if (it == j.end()) throw ParseError(std::string("missing field \"") + field + "\"");
    return *it;
}

Scalar parse_table_scalar(const Json& entry, const std::string& where) {
    if (!entry.is_string()) throw ParseError("scalar at " + where + " must be a string");
    try {
        return parse_scalar(entry.get<std::string>());
    } catch (const ParseError& e) {
        throw ParseError("bad scalar at " + where + ": " + e.what(), ParseError::Kind::bad_scalar);
    }
}

}  // namespace

Json algebra_to_json(const Algebra& a) {
    Json j;
    j["name"] = a.name();
    j["dim"] = a.dim();
    j["basis"] = a.basis_labels();
    Json table = Json::array();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        Json row = Json::array();
        for (std::size_t jcol = 0; jcol < a.dim(); ++jcol) {
            Json cell = Json::array();
            for (std::size_t k = 0; k < a.dim(); ++k) cell.push_back(to_string(a.c(i, jcol, k)));
            row.push_back(std::move(cell));
        }
        table.push_back(std::move(row));
    }
    j["table"] = std::move(table);
    return j;
}

AlgebraPtr algebra_from_json(const Json& j, bool checked) {
    if (!j.is_object()) throw ParseError("algebra file must be a JSON object");
    const Json& jname = require_field(j, "name");
    const Json& jdim = require_field(j, "dim");
    const Json& jbasis = require_field(j, "basis");
    const Json& jtable = require_field(j, "table");
    if (!jname.is_string()) throw ParseError("\"name\" must be a string");
    if (!jdim.is_number_unsigned() || jdim.get<std::size_t>() == 0)
        throw ParseError("\"dim\" must be a positive integer");
    const std::size_t n = jdim.get<std::size_t>();
    if (!jbasis.is_array() || jbasis.size() != n)
        throw ParseError("dimension mismatch: \"basis\" must list exactly " + std::to_string(n) +
                         " labels", ParseError::Kind::dimension_mismatch);
    std::vector<std::string> labels;
    for (const Json& l : jbasis) {
        if (!l.is_string()) throw ParseError("basis labels must be strings");
        labels.push_back(l.get<std::string>());
    }
    if (!jtable.is_array() || jtable.size() != n)
        throw ParseError("dimension mismatch: \"table\" must have " + std::to_string(n) + " rows", ParseError::Kind::dimension_mismatch);
    std::vector<Scalar> tensor(n * n * n);
    for (std::size_t i = 0; i < n; ++i) {
        const Json& row = jtable[i];
        if (!row.is_array() || row.size() != n)
            throw ParseError("dimension mismatch: table row " + std::to_string(i) + " must have " +
                             std::to_string(n) + " entries", ParseError::Kind::dimension_mismatch);
        for (std::size_t jcol = 0; jcol < n; ++jcol) {
            const Json& cell = row[jcol];
            if (!cell.is_array() || cell.size() != n)
                throw ParseError("dimension mismatch: table[" + std::to_string(i) + "][" +
                                 std::to_string(jcol) + "] must have " + std::to_string(n) +
                                 " coefficients", ParseError::Kind::dimension_mismatch);
            for (std::size_t k = 0; k < n; ++k)
                tensor[(i * n + jcol) * n + k] = parse_table_scalar(
                    cell[k], "table[" + std::to_string(i) + "][" + std::to_string(jcol) + "][" +
                                 std::to_string(k) + "]");
        }
    }
    return checked ? Algebra::make(jname.get<std::string>(), std::move(labels), std::move(tensor))
                   : Algebra::make_unchecked(jname.get<std::string>(), std::move(labels),
                                             std::move(tensor));
}

std::string dump_canonical(const Json& j) {
    return j.dump(2) + "\n";
}

std::string write_algebra(const Algebra& a) {
    return dump_canonical(algebra_to_json(a));
}

namespace {

Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file \"" + path + "\"", ParseError::Kind::io);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write file \"" + path + "\"");
    out << text;
}

}  // namespace

AlgebraPtr read_algebra(const std::string& text, bool checked) {
    return algebra_from_json(parse_json_text(text), checked);
}

AlgebraPtr load_algebra_file(const std::string& path, bool checked) {
    return read_algebra(read_file(path), checked);
}

void save_algebra_file(const std::string& path, const Algebra& a) {
    write_file(path, write_algebra(a));
}

// ------------------------------------------------------------------ map io

Json map_to_json(const LinearMap& t) {
    Json j;
    j["domain"] = algebra_to_json(*t.domain());
    j["codomain"] = algebra_to_json(*t.codomain());
    Json rows = Json::array();
    for (std::size_t i = 0; i < t.matrix().rows; ++i) {
        Json row = Json::array();
        for (std::size_t c = 0; c < t.matrix().cols; ++c) row.push_back(to_string(t.matrix().at(i, c)));
        rows.push_back(std::move(row));
    }
    j["matrix"] = std::move(rows);
    return j;
}

LinearMap map_from_json(const Json& j, bool checked) {
    if (!j.is_object()) throw ParseError("map file must be a JSON object");
    AlgebraPtr domain = algebra_from_json(require_field(j, "domain"), checked);
    AlgebraPtr codomain = algebra_from_json(require_field(j, "codomain"), checked);
    const Json& jmat = require_field(j, "matrix");
    if (!jmat.is_array() || jmat.size() != codomain->dim())
        throw ParseError("dimension mismatch: \"matrix\" must have " +
                         std::to_string(codomain->dim()) + " rows", ParseError::Kind::dimension_mismatch);
    Mat m(codomain->dim(), domain->dim());
    for (std::size_t i = 0; i < m.rows; ++i) {
        const Json& row = jmat[i];
        if (!row.is_array() || row.size() != domain->dim())
            throw ParseError("dimension mismatch: matrix row " + std::to_string(i) +
                             " must have " + std::to_string(domain->dim()) + " entries", ParseError::Kind::dimension_mismatch);
        for (std::size_t c = 0; c < m.cols; ++c)
            m.at(i, c) = parse_table_scalar(row[c], "matrix[" + std::to_string(i) + "][" +
                                                        std::to_string(c) + "]");
    }
    return LinearMap(domain, codomain, std::move(m));
}

std::string write_map(const LinearMap& t) {
    return dump_canonical(map_to_json(t));
}

LinearMap read_map(const std::string& text, bool checked) {
    return map_from_json(parse_json_text(text), checked);
}

LinearMap load_map_file(const std::string& path, bool checked) {
    return read_map(read_file(path), checked);
}

void save_map_file(const std::string& path, const LinearMap& t) {
    write_file(path, write_map(t));
}

// ------------------------------------------------------------- report json

Json element_to_json(const Element& x) {
    Json coeffs = Json::array();
    for (const Scalar& c : x.coeffs()) coeffs.push_back(to_string(c));
    return Json{{"coeffs", std::move(coeffs)}, {"pretty", x.to_string()}};
}

Json fingerprint_to_json(const AlgebraPtr& a, const Fingerprint& fp) {
    Json j;
    j["name"] = a->name();
    j["dim"] = fp.dim;
    j["associative"] = true;
    j["unital"] = fp.unital;
    j["commutative"] = fp.commutative;
    j["center_dim"] = fp.center_dim;
    j["radical_dim"] = fp.radical_dim;
    j["semisimple"] = fp.semisimple();
    return j;
}

Json associativity_to_json(const AssociativityReport& rep) {
    Json j;
    j["pass"] = rep.pass;
    if (rep.witness) {
        const AssociativityWitness& w = *rep.witness;
        j["witness"] = Json{{"i", w.i},
                            {"j", w.j},
                            {"k", w.k},
                            {"lhs", element_to_json(w.lhs)},
                            {"rhs", element_to_json(w.rhs)},
                            {"pretty", w.to_string()}};
    }
    return j;
}

namespace {

Json mult_witness_to_json(const MultiplicativityWitness& w) {
    return Json{{"i", w.i},
                {"j", w.j},
                {"lhs", element_to_json(w.lhs)},
                {"rhs", element_to_json(w.rhs)},
                {"pretty", w.to_string()}};
}

Json closure_witness_to_json(const ClosureWitness& w) {
    return Json{{"left", element_to_json(w.left)},
                {"right", element_to_json(w.right)},
                {"product", element_to_json(w.product)},
                {"pretty", w.to_string()}};
}

}  // namespace

Json hom_report_to_json(const HomReport& rep) {
    Json j;
    j["pass"] = rep.pass;
    if (rep.witness) j["witness"] = mult_witness_to_json(*rep.witness);
    j["note"] = rep.note;
    return j;
}

Json char_report_to_json(const CharReport& rep) {
    Json j;
    j["pass"] = rep.pass;
    j["nonzero"] = rep.nonzero;
    j["multiplicative"] = rep.multiplicative;
    if (rep.witness) j["witness"] = mult_witness_to_json(*rep.witness);
    return j;
}

Json iso_report_to_json(const IsoReport& rep) {
    Json j;
    j["pass"] = rep.pass;
    j["square"] = rep.square;
    j["bijective"] = rep.bijective;
    j["multiplicative"] = rep.multiplicative;
    if (rep.square) j["determinant"] = to_string(rep.determinant);
    if (!rep.failed_clause.empty()) j["failed_clause"] = rep.failed_clause;
    if (rep.witness) j["witness"] = mult_witness_to_json(*rep.witness);
    j["note"] = rep.note;
    return j;
}

Json subspace_report_to_json(const SubspaceReport& rep) {
    Json j;
    j["rank"] = rep.rank;
    j["codimension"] = rep.codimension;
    j["is_subalgebra"] = rep.is_subalgebra;
    j["is_left_ideal"] = rep.is_left_ideal;
    j["is_right_ideal"] = rep.is_right_ideal;
    j["is_ideal"] = rep.is_ideal;
    if (rep.subalgebra_witness) j["subalgebra_witness"] = closure_witness_to_json(*rep.subalgebra_witness);
    if (rep.left_ideal_witness) j["left_ideal_witness"] = closure_witness_to_json(*rep.left_ideal_witness);
    if (rep.right_ideal_witness)
        j["right_ideal_witness"] = closure_witness_to_json(*rep.right_ideal_witness);
    return j;
}

Json norm_report_to_json(const NormReport& rep) {
    Json j;
    j["mult_constant"] = rep.mult_constant;
    j["renorm_factor"] = rep.renorm_factor;
    j["samples_checked"] = rep.samples_checked;
    j["max_violation"] = rep.max_violation;
    j["pass"] = rep.pass();
    return j;
}

Json certificate_to_json(const Certificate& c) {
    return Json{{"field", c.field}, {"left", c.left}, {"right", c.right}, {"pretty", c.to_string()}};
}

}  // namespace laukit
