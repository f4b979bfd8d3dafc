#include "coalg/io.hpp"

#include <fstream>
#include <sstream>

#include "coalg/errors.hpp"

namespace coalg::io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ParseError((where.empty() ? std::string("/") : where) + ": " + what);
}

const json& member(const json& j, const std::string& where, const char* key) {
    if (!j.is_object()) fail(where, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(where, std::string("missing key '") + key + "'");
    return *it;
}

std::size_t count(const json& j, const std::string& where) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
        fail(where, "expected a non-negative integer");
    return j.get<std::size_t>();
}

std::size_t index_below(const json& j, const std::string& where, std::size_t bound) {
    const std::size_t i = count(j, where);
    if (i >= bound) fail(where, "index " + std::to_string(i) + " out of range (< " + std::to_string(bound) + ")");
    return i;
}

Field field_of(const json& j, const std::string& where, Field fallback) {
    if (!j.is_object() || !j.contains("field")) return fallback;
    const json& f = j["field"];
    if (!f.is_string()) fail(where + "/field", "expected a string");
    try {
        return Field::parse(f.get<std::string>());
    } catch (const Error& e) {
        fail(where + "/field", e.what());
    }
}

Scalar scalar(const json& j, const std::string& where, Field f) {
    try {
        if (j.is_string()) return Scalar::parse(f, j.get<std::string>());
        if (j.is_number_integer()) return Scalar(f, j.get<long>());
    } catch (const Error& e) {
        fail(where, e.what());
    }
    fail(where, "expected a scalar string or integer");
}

Vec vec(const json& j, const std::string& where, Field f, std::size_t expected) {
    if (!j.is_array()) fail(where, "expected an array of scalars");
    if (j.size() != expected)
        fail(where, "expected " + std::to_string(expected) + " entries, found " + std::to_string(j.size()));
    Vec out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(scalar(j[i], where + "/" + std::to_string(i), f));
    return out;
}

Matrix matrix(const json& j, const std::string& where, Field f, std::size_t rows, std::size_t cols) {
    if (!j.is_array()) fail(where, "expected an array of {row, col, value} triples");
    Matrix m(f, rows, cols);
    for (std::size_t t = 0; t < j.size(); ++t) {
        const std::string at = where + "/" + std::to_string(t);
        const std::size_t r = index_below(member(j[t], at, "row"), at + "/row", rows);
        const std::size_t c = index_below(member(j[t], at, "col"), at + "/col", cols);
        m(r, c) += scalar(member(j[t], at, "value"), at + "/value", f);
    }
    return m;
}

std::vector<StructureTriple> triples(const json& j, const std::string& where, Field f, std::size_t dim) {
    if (!j.is_array()) fail(where, "expected an array of {i, j, k, c} triples");
    std::vector<StructureTriple> out;
    for (std::size_t t = 0; t < j.size(); ++t) {
        const std::string at = where + "/" + std::to_string(t);
        out.push_back({index_below(member(j[t], at, "i"), at + "/i", dim), index_below(member(j[t], at, "j"), at + "/j", dim),
                       index_below(member(j[t], at, "k"), at + "/k", dim), scalar(member(j[t], at, "c"), at + "/c", f)});
    }
    return out;
}

void expect_kind(const json& j, const std::string& where, const char* kind) {
    const json& k = member(j, where, "kind");
    if (!k.is_string() || k.get<std::string>() != kind) fail(where + "/kind", std::string("expected \"") + kind + "\"");
}

Algebra algebra_at(const json& j, const std::string& where, Field fallback) {
    if (j.is_string()) {
        try {
            return named_algebra(fallback, j.get<std::string>());
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            fail(where, e.what());
        }
    }
    expect_kind(j, where, "algebra");
    const Field f = field_of(j, where, fallback);
    const std::size_t dim = count(member(j, where, "dim"), where + "/dim");
    Vec unit = vec(member(j, where, "unit"), where + "/unit", f, dim);
    return Algebra::from_triples(f, dim, triples(member(j, where, "mult"), where + "/mult", f, dim), std::move(unit));
}

Coalgebra coalgebra_at(const json& j, const std::string& where, Field fallback) {
    if (j.is_string()) {
        try {
            return named_coalgebra(fallback, j.get<std::string>());
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            fail(where, e.what());
        }
    }
    expect_kind(j, where, "coalgebra");
    const Field f = field_of(j, where, fallback);
    const std::size_t dim = count(member(j, where, "dim"), where + "/dim");
    Vec counit = vec(member(j, where, "counit"), where + "/counit", f, dim);
    return Coalgebra::from_triples(f, dim, triples(member(j, where, "comult"), where + "/comult", f, dim), std::move(counit));
}

bool is_algebra_ref(const json& j) {
    if (j.is_object()) return j.value("kind", "") == "algebra";
    return false;
}

std::size_t parse_size(const std::string& digits, const std::string& name) {
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 4)
        throw ParseError("bad size in name '" + name + "'");
    const std::size_t n = std::stoul(digits);
    if (n == 0) throw ParseError("size must be positive in '" + name + "'");
    return n;
}

}  // namespace

json to_json(const Scalar& s) { return s.to_string(); }

json to_json(const Vec& v) {
    json out = json::array();
    for (const auto& s : v) out.push_back(to_json(s));
    return out;
}

json to_json(const Matrix& m) {
    json out = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (!m(r, c).is_zero()) out.push_back({{"row", r}, {"col", c}, {"value", to_json(m(r, c))}});
    return out;
}

json to_json(const Subspace& s) {
    json vectors = json::array();
    for (const auto& v : s.basis_vectors()) vectors.push_back(to_json(v));
    return {{"kind", "subspace"}, {"field", s.field().name()}, {"ambient", s.ambient_dim()}, {"basis", vectors}};
}

json to_json(const Algebra& a) {
    json mult = json::array();
    for (const auto& t : a.triples()) mult.push_back({{"i", t.i}, {"j", t.j}, {"k", t.k}, {"c", to_json(t.c)}});
    return {{"kind", "algebra"}, {"field", a.field().name()}, {"dim", a.dim()}, {"unit", to_json(a.unit())}, {"mult", mult}};
}

json to_json(const Coalgebra& c) {
    json comult = json::array();
    for (const auto& t : c.triples()) comult.push_back({{"i", t.i}, {"j", t.j}, {"k", t.k}, {"c", to_json(t.c)}});
    return {{"kind", "coalgebra"}, {"field", c.field().name()}, {"dim", c.dim()}, {"counit", to_json(c.counit())},
            {"comult", comult}};
}

json to_json(const Comodule& m) {
    return {{"kind", "comodule"}, {"over", to_json(m.over)}, {"dim", m.dim()}, {"coaction", to_json(m.coaction)}};
}

json to_json(const LeftModule& m) {
    json action = json::array();
    for (const auto& a : m.action) action.push_back(to_json(a));
    return {{"kind", "module"}, {"over", to_json(m.algebra)}, {"dim", m.dim}, {"action", action}};
}

Algebra named_algebra(Field f, const std::string& name) {
    if (name == "k") return matrix_algebra(f, 1);
    if (name.rfind("k[x]/(", 0) == 0 && name.size() > 7 && name.back() == ')') {
        const std::string poly = name.substr(6, name.size() - 7);
        try {
            return quotient_polynomial(Poly::parse(f, poly));
        } catch (const Error& e) {
            throw ParseError("in name '" + name + "': " + e.what());
        }
    }
    if (name.rfind("k[C", 0) == 0 && name.back() == ']')
        return cyclic_group_algebra(f, parse_size(name.substr(3, name.size() - 4), name));
    if (name.rfind("UT", 0) == 0) return upper_triangular(f, parse_size(name.substr(2), name));
    if (name.rfind("M", 0) == 0) return matrix_algebra(f, parse_size(name.substr(1), name));
    if (name.rfind("k^", 0) == 0) {
        const std::size_t n = parse_size(name.substr(2), name);
        Algebra a = matrix_algebra(f, 1);
        for (std::size_t i = 1; i < n; ++i) a = direct_product(a, matrix_algebra(f, 1));
        return a;
    }
    throw ParseError("unknown algebra name '" + name + "'");
}

Coalgebra named_coalgebra(Field f, const std::string& name) {
    if (name.rfind("set:", 0) == 0) return set_coalgebra(f, parse_size(name.substr(4), name));
    if (name.rfind("comatrix:", 0) == 0) return comatrix_coalgebra(f, parse_size(name.substr(9), name));
    return dual_coalgebra(named_algebra(f, name));
}

Algebra algebra_from_json(const json& j, Field fallback) { return algebra_at(j, "", fallback); }

Coalgebra coalgebra_from_json(const json& j, Field fallback) { return coalgebra_at(j, "", fallback); }

Subspace subspace_from_json(const json& j, Field fallback) {
    expect_kind(j, "", "subspace");
    const Field f = field_of(j, "", fallback);
    const std::size_t ambient = count(member(j, "", "ambient"), "/ambient");
    const json& basis = member(j, "", "basis");
    if (!basis.is_array()) fail("/basis", "expected an array of vectors");
    std::vector<Vec> vectors;
    for (std::size_t i = 0; i < basis.size(); ++i) vectors.push_back(vec(basis[i], "/basis/" + std::to_string(i), f, ambient));
    return Subspace::span(f, ambient, vectors);
}

Comodule comodule_from_json(const json& j, Field fallback) {
    expect_kind(j, "", "comodule");
    const Field f = field_of(j, "", fallback);
    Coalgebra over = coalgebra_at(member(j, "", "over"), "/over", f);
    const std::size_t dim = count(member(j, "", "dim"), "/dim");
    Matrix rho = matrix(member(j, "", "coaction"), "/coaction", over.field(), TensorIndex(over.dim(), dim).dim(), dim);
    return {std::move(over), std::move(rho)};
}

LeftModule module_from_json(const json& j, Field fallback) {
    expect_kind(j, "", "module");
    const Field f = field_of(j, "", fallback);
    Algebra over = algebra_at(member(j, "", "over"), "/over", f);
    const std::size_t dim = count(member(j, "", "dim"), "/dim");
    const json& action = member(j, "", "action");
    if (!action.is_array() || action.size() != over.dim())
        fail("/action", "expected one matrix per basis element (" + std::to_string(over.dim()) + ")");
    LeftModule m{over, dim, {}};
    for (std::size_t i = 0; i < action.size(); ++i)
        m.action.push_back(matrix(action[i], "/action/" + std::to_string(i), over.field(), dim, dim));
    return m;
}

AnyMorphism morphism_from_json(const json& j, Field fallback) {
    expect_kind(j, "", "morphism");
    const Field f = field_of(j, "", fallback);
    const json& source = member(j, "", "source");
    const json& target = member(j, "", "target");
    // Names resolve to algebras unless they are coalgebra-only names.
    const auto algebra_like = [](const json& r) {
        if (r.is_string()) {
            const auto s = r.get<std::string>();
            return s.rfind("set:", 0) != 0 && s.rfind("comatrix:", 0) != 0;
        }
        return is_algebra_ref(r);
    };
    if (algebra_like(source) && (j.value("category", "algebra") == "algebra")) {
        Algebra s = algebra_at(source, "/source", f);
        Algebra t = algebra_at(target, "/target", f);
        Matrix m = matrix(member(j, "", "matrix"), "/matrix", s.field(), t.dim(), s.dim());
        return AlgebraMorphism{std::move(s), std::move(t), std::move(m)};
    }
    Coalgebra s = coalgebra_at(source, "/source", f);
    Coalgebra t = coalgebra_at(target, "/target", f);
    Matrix m = matrix(member(j, "", "matrix"), "/matrix", s.field(), t.dim(), s.dim());
    return CoalgebraMorphism{std::move(s), std::move(t), std::move(m)};
}

AnyObject object_from_json(const json& j, Field fallback) {
    const json& kind = member(j, "", "kind");
    if (!kind.is_string()) fail("/kind", "expected a string");
    const std::string k = kind.get<std::string>();
    if (k == "algebra") return algebra_from_json(j, fallback);
    if (k == "coalgebra") return coalgebra_from_json(j, fallback);
    if (k == "comodule") return comodule_from_json(j, fallback);
    if (k == "module") return module_from_json(j, fallback);
    if (k == "subspace") return subspace_from_json(j, fallback);
    if (k == "morphism") return std::visit([](auto&& m) -> AnyObject { return m; }, morphism_from_json(j, fallback));
    fail("/kind", "unknown kind \"" + k + "\"");
}

json parse_text(const std::string& text, const std::string& origin) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        std::size_t line = 1, column = 1;
        const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        for (std::size_t i = 0; i < stop; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw ParseError(origin + ":" + std::to_string(line) + ":" + std::to_string(column) + ": syntax error");
    }
}

json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open file");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_text(buffer.str(), path);
}

}  // namespace coalg::io
