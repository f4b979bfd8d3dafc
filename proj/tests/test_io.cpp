#include <doctest.h>

#include <string>

#include "coalg/errors.hpp"
#include "coalg/io.hpp"

using namespace coalg;
using coalg::io::json;

namespace {
const Field Q = Field::rationals();

std::string error_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const ParseError& e) {
        return e.what();
    }
    return {};
}
}  // namespace

TEST_SUITE("io") {

TEST_CASE("objects survive a roundtrip") {
    const Algebra ut = upper_triangular(Q, 2);
    CHECK(io::algebra_from_json(io::to_json(ut)) == ut);
    const Coalgebra c = dual_coalgebra(matrix_algebra(Field::prime(5), 2));
    CHECK(io::coalgebra_from_json(io::to_json(c)) == c);
    const Subspace s = Subspace::span(Q, 3, {vec_from_ints(Q, {1, 2, 3})});
    CHECK(io::subspace_from_json(io::to_json(s)) == s);
    const LeftModule m = regular_module(ut);
    const LeftModule m2 = io::module_from_json(io::to_json(m));
    CHECK(m2.action == m.action);
    const Comodule cm = module_to_comodule(m);
    CHECK(io::comodule_from_json(io::to_json(cm)).coaction == cm.coaction);
}

TEST_CASE("rational scalars are written exactly") {
    const Subspace s = Subspace::span(Q, 2, {{Scalar(Q, 2), Scalar(Q, 1)}});
    CHECK(io::to_json(s)["basis"][0][1] == "1/2");
}

TEST_CASE("named objects") {
    CHECK(io::named_algebra(Q, "M2") == matrix_algebra(Q, 2));
    CHECK(io::named_algebra(Q, "UT3") == upper_triangular(Q, 3));
    CHECK(io::named_algebra(Q, "k[C2]") == cyclic_group_algebra(Q, 2));
    CHECK(io::named_algebra(Q, "k[x]/(x^3)") == truncated_poly(Q, 3));
    CHECK(io::named_algebra(Q, "k") == matrix_algebra(Q, 1));
    CHECK(io::named_coalgebra(Q, "set:3") == set_coalgebra(Q, 3));
    CHECK(io::named_coalgebra(Q, "comatrix:2") == comatrix_coalgebra(Q, 2));
    CHECK(io::named_coalgebra(Q, "M2") == dual_coalgebra(matrix_algebra(Q, 2)));
    CHECK_THROWS_AS(io::named_algebra(Q, "X7"), ParseError);
}

TEST_CASE("object files reference named objects") {
    const json j = io::parse_text(R"j({"kind": "module", "over": "k[x]/(x^2)", "dim": 1,
        "action": [[{"row": 0, "col": 0, "value": 1}], []]})j",
                                  "inline");
    const LeftModule m = io::module_from_json(j);
    CHECK(m.algebra == truncated_poly(Q, 2));
    CHECK(check_axioms(m).ok());

    const json phi = io::parse_text(R"j({"kind": "morphism", "source": "k[x]/(x^3)", "target": "k[x]/(x^2)",
        "matrix": [{"row": 0, "col": 0, "value": 1}, {"row": 1, "col": 1, "value": 1}]})j",
                                    "inline");
    const auto any = io::morphism_from_json(phi);
    REQUIRE(std::holds_alternative<AlgebraMorphism>(any));
    CHECK(check_morphism(std::get<AlgebraMorphism>(any)).ok());
}

TEST_CASE("syntax errors carry line and column") {
    const std::string msg = error_of([] { io::parse_text("{\n  \"kind\": \"algebra\",\n  oops\n}", "file.json"); });
    CHECK(msg.rfind("file.json:3:", 0) == 0);
}

TEST_CASE("structural errors carry a pointer") {
    const std::string bad_vec = error_of([] {
        io::subspace_from_json(json::parse(R"({"kind": "subspace", "ambient": 2, "basis": [[1, 2, 3]]})"));
    });
    CHECK(bad_vec.find("/basis/0") != std::string::npos);
    const std::string bad_kind = error_of([] { io::object_from_json(json::parse(R"({"kind": "sheaf"})")); });
    CHECK(bad_kind.find("/kind") != std::string::npos);
    const std::string missing = error_of([] { io::algebra_from_json(json::parse(R"({"kind": "algebra", "dim": 2})")); });
    CHECK_FALSE(missing.empty());
    const std::string scalar = error_of([] {
        io::subspace_from_json(json::parse(R"({"kind": "subspace", "ambient": 1, "basis": [["1/0"]]})"));
    });
    CHECK(scalar.find("/basis/0/0") != std::string::npos);
}

TEST_CASE("fixtures parse") {
    const Subspace ks = io::subspace_from_json(io::parse_file(COALG_DATA_DIR "/kS.json"));
    const Subspace kt = io::subspace_from_json(io::parse_file(COALG_DATA_DIR "/kT.json"));
    CHECK(ks.dim() == 2);
    CHECK(kt.dim() == 2);
    CHECK(wedge(set_coalgebra(Q, 4), ks, kt).dim() == 3);
    CHECK_THROWS_AS(io::parse_file(COALG_DATA_DIR "/missing.json"), ParseError);
}

}  // TEST_SUITE
