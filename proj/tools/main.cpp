// coalg: load and validate objects, evaluate operations, run the
// randomized law suite.

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "coalg/errors.hpp"
#include "coalg/io.hpp"
#include "coalg/polydual.hpp"
#include "coalg/ringed.hpp"
#include "coalg/verify.hpp"

namespace {

using coalg::io::json;

namespace exit_code {
constexpr int ok = 0;
constexpr int check_failed = 1;
constexpr int usage = 2;
constexpr int parse_error = 3;
constexpr int unknown_op = 4;
constexpr int arity_mismatch = 5;
constexpr int invalid_argument = 6;
constexpr int internal = 70;
}  // namespace exit_code

struct UnknownOp : coalg::Error {
    using Error::Error;
};
struct ArityMismatch : coalg::Error {
    using Error::Error;
};

enum class Format { text, structured };

struct Value {
    std::string text;
    json data;
};

void emit(const Value& v, Format format) {
    if (format == Format::structured) std::cout << v.data.dump(2) << "\n";
    else std::cout << v.text;
}

std::string basis_text(const std::vector<coalg::Vec>& vectors) {
    std::string out;
    for (const auto& v : vectors) out += "  " + coalg::to_string(v) + "\n";
    return out;
}

Value value_of(const coalg::Subspace& s) {
    return {"subspace of dim " + std::to_string(s.dim()) + " in " + s.field().name() + "^" +
                std::to_string(s.ambient_dim()) + "\n" + basis_text(s.basis_vectors()),
            coalg::io::to_json(s)};
}

Value value_of(bool b) { return {b ? "true\n" : "false\n", b}; }

Value value_of(const coalg::Algebra& a) {
    const json j = coalg::io::to_json(a);
    return {j.dump(2) + "\n", j};
}

Value value_of(const coalg::Coalgebra& c) {
    const json j = coalg::io::to_json(c);
    return {j.dump(2) + "\n", j};
}

Value value_of(const std::vector<coalg::Vec>& points) {
    json arr = json::array();
    for (const auto& g : points) arr.push_back(coalg::io::to_json(g));
    return {std::to_string(points.size()) + " group-like element(s)\n" + basis_text(points),
            {{"kind", "grouplikes"}, {"count", points.size()}, {"elements", arr}}};
}

Value value_of(const std::vector<coalg::Subspace>& chain) {
    std::string text;
    json arr = json::array();
    for (std::size_t i = 0; i < chain.size(); ++i) {
        text += "C_" + std::to_string(i) + ": dim " + std::to_string(chain[i].dim()) + "\n";
        arr.push_back(coalg::io::to_json(chain[i]));
    }
    return {text, {{"kind", "filtration"}, {"terms", arr}}};
}

json report_json(const coalg::Report& r) {
    json arr = json::array();
    for (const auto& v : r.violations()) arr.push_back({{"check", v.check}, {"detail", v.detail}});
    return arr;
}

// An argument is inline JSON, a file, or (for algebras and coalgebras) a name.
std::optional<json> load_json(const std::string& arg) {
    if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) return coalg::io::parse_text(arg, "<argument>");
    if (std::filesystem::is_regular_file(arg)) return coalg::io::parse_file(arg);
    return std::nullopt;
}

json require_json(const std::string& arg) {
    if (auto j = load_json(arg)) return *j;
    throw coalg::ParseError(arg + ": neither a file nor inline JSON");
}

coalg::Algebra load_algebra(const std::string& arg, coalg::Field f) {
    if (auto j = load_json(arg)) return coalg::io::algebra_from_json(*j, f);
    return coalg::io::named_algebra(f, arg);
}

coalg::Coalgebra load_coalgebra(const std::string& arg, coalg::Field f) {
    if (auto j = load_json(arg)) return coalg::io::coalgebra_from_json(*j, f);
    return coalg::io::named_coalgebra(f, arg);
}

coalg::Subspace load_subspace(const std::string& arg, coalg::Field f) {
    return coalg::io::subspace_from_json(require_json(arg), f);
}

coalg::CoalgebraMorphism load_coalgebra_morphism(const std::string& arg, coalg::Field f) {
    const auto m = coalg::io::morphism_from_json(require_json(arg), f);
    if (const auto* phi = std::get_if<coalg::AlgebraMorphism>(&m)) return coalg::dual_morphism(*phi);
    return std::get<coalg::CoalgebraMorphism>(m);
}

coalg::Poly load_poly(const std::string& arg, coalg::Field f) {
    try {
        return coalg::Poly::parse(f, arg);
    } catch (const coalg::ParseError&) {
        throw;
    } catch (const coalg::Error& e) {
        throw coalg::ParseError("polynomial '" + arg + "': " + e.what());
    }
}

json counterexample_json(const coalg::CounterexampleReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"name", c.name}, {"expected", c.expected}, {"computed", c.computed}, {"pass", c.pass}});
    return {{"kind", "counterexample"},
            {"minimal_polynomial", r.q.to_string()},
            {"dim_dagger_d", r.dagger_d},
            {"dim_dagger_d_wedge_d", r.dagger_d_wedge},
            {"dim_wedge_of_daggers", r.wedge_of_daggers},
            {"dim_image_phi", r.image_phi},
            {"dim_ker_f", r.ker_f},
            {"ker_f_subcoalgebra", r.ker_f_subcoalgebra},
            {"dim_preimage_d", r.preimage_d},
            {"preimage_d_subcoalgebra", r.preimage_d_subcoalgebra},
            {"checks", checks},
            {"ok", r.ok()}};
}

using Args = std::vector<std::string>;

struct Op {
    std::size_t arity;
    const char* usage;
    std::function<Value(const Args&, coalg::Field)> run;
};

const std::map<std::string, Op>& ops() {
    using namespace coalg;
    static const std::map<std::string, Op> table = {
        {"wedge", {3, "wedge <coalgebra> <V> <W>", [](const Args& a, Field f) {
             const Coalgebra c = load_coalgebra(a[0], f);
             return value_of(wedge(c, load_subspace(a[1], c.field()), load_subspace(a[2], c.field())));
         }}},
        {"largest-subcoalgebra", {2, "largest-subcoalgebra <coalgebra> <V>", [](const Args& a, Field f) {
             const Coalgebra c = load_coalgebra(a[0], f);
             return value_of(largest_subcoalgebra_in(c, load_subspace(a[1], c.field())));
         }}},
        {"is-subcoalgebra", {2, "is-subcoalgebra <coalgebra> <D>", [](const Args& a, Field f) {
             const Coalgebra c = load_coalgebra(a[0], f);
             return value_of(is_subcoalgebra(c, load_subspace(a[1], c.field())));
         }}},
        {"dual", {1, "dual <algebra>", [](const Args& a, Field f) { return value_of(dual_coalgebra(load_algebra(a[0], f))); }}},
        {"dual-algebra", {1, "dual-algebra <coalgebra>", [](const Args& a, Field f) {
             return value_of(dual_algebra(load_coalgebra(a[0], f)));
         }}},
        {"grouplikes", {1, "grouplikes <coalgebra>", [](const Args& a, Field f) { return value_of(grouplikes(load_coalgebra(a[0], f))); }}},
        {"coradical", {1, "coradical <coalgebra>", [](const Args& a, Field f) { return value_of(coradical(load_coalgebra(a[0], f))); }}},
        {"coradical-filtration", {1, "coradical-filtration <coalgebra>", [](const Args& a, Field f) {
             return value_of(coradical_filtration(load_coalgebra(a[0], f)));
         }}},
        {"pullback", {2, "pullback <morphism> <D>", [](const Args& a, Field f) {
             const CoalgebraMorphism m = load_coalgebra_morphism(a[0], f);
             return value_of(pullback_dagger(m, load_subspace(a[1], m.target.field())));
         }}},
        {"vanishing", {2, "vanishing <algebra> <S>", [](const Args& a, Field f) {
             const Algebra alg = load_algebra(a[0], f);
             return value_of(vanishing_space(alg, load_subspace(a[1], alg.field())));
         }}},
        {"closure", {2, "closure <algebra> <S>", [](const Args& a, Field f) {
             const Algebra alg = load_algebra(a[0], f);
             return value_of(closure(alg, load_subspace(a[1], alg.field())));
         }}},
        {"section", {2, "section <algebra> <C>", [](const Args& a, Field f) {
             const RingedCoalgebraView rc(load_algebra(a[0], f));
             return value_of(section_on_algebraic(rc, load_subspace(a[1], rc.field())).algebra);
         }}},
        {"cotensor", {2, "cotensor <D> <comodule>", [](const Args& a, Field f) {
             const Comodule m = io::comodule_from_json(require_json(a[1]), f);
             return value_of(cotensor(load_subspace(a[0], m.field()), m));
         }}},
        {"wedge-law", {2, "wedge-law <f> <g>", [](const Args& a, Field f) {
             const WedgeLawReport r = wedge_law(load_poly(a[0], f), load_poly(a[1], f));
             const std::string text = "ambient " + std::to_string(r.ambient_dim) + ", Z((f)) " + std::to_string(r.dim_zf) +
                                      ", Z((g)) " + std::to_string(r.dim_zg) + ", wedge " + std::to_string(r.dim_wedge) +
                                      ", Z((f)) + Z((g)) " + std::to_string(r.dim_sum) + "\n" + r.report.to_string() + "\n";
             return Value{text,
                          {{"kind", "wedge_law"},
                           {"ambient_dim", r.ambient_dim},
                           {"dim_zf", r.dim_zf},
                           {"dim_zg", r.dim_zg},
                           {"dim_wedge", r.dim_wedge},
                           {"dim_sum", r.dim_sum},
                           {"ok", r.report.ok()},
                           {"violations", report_json(r.report)}}};
         }}},
        {"counterexample", {0, "counterexample", [](const Args&, Field f) {
             const CounterexampleReport r = counterexample(f);
             return Value{r.to_string(), counterexample_json(r)};
         }}},
    };
    return table;
}

Format parse_format(const std::string& s) { return s == "structured" ? Format::structured : Format::text; }

int cmd_validate(const std::string& path, coalg::Field f, Format format) {
    using namespace coalg;
    const io::AnyObject object = io::object_from_json(require_json(path), f);
    std::string kind;
    Report report;
    std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Algebra>) {
                kind = "algebra";
                report = check_axioms(x);
            } else if constexpr (std::is_same_v<T, Coalgebra>) {
                kind = "coalgebra";
                report = check_axioms(x);
            } else if constexpr (std::is_same_v<T, AlgebraMorphism> || std::is_same_v<T, CoalgebraMorphism>) {
                kind = std::is_same_v<T, AlgebraMorphism> ? "algebra morphism" : "coalgebra morphism";
                report = check_axioms(x.source);
                report.merge(check_axioms(x.target));
                if (report.ok()) report = check_morphism(x);
            } else if constexpr (std::is_same_v<T, Comodule>) {
                kind = "comodule";
                report = check_axioms(x.over);
                if (report.ok()) report = check_axioms(x);
            } else if constexpr (std::is_same_v<T, LeftModule>) {
                kind = "module";
                report = check_axioms(x.algebra);
                if (report.ok()) report = check_axioms(x);
            } else {
                kind = "subspace";
            }
        },
        object);
    const Value v{kind + ": " + report.to_string() + (report.ok() ? "\n" : ""),
                  {{"path", path}, {"kind", kind}, {"ok", report.ok()}, {"violations", report_json(report)}}};
    emit(v, format);
    return report.ok() ? exit_code::ok : exit_code::check_failed;
}

int cmd_eval(const std::string& name, const Args& args, coalg::Field f, Format format) {
    const auto it = ops().find(name);
    if (it == ops().end()) {
        std::string known;
        for (const auto& [op, _] : ops()) known += " " + op;
        throw UnknownOp("unknown op '" + name + "'; known ops:" + known);
    }
    if (args.size() != it->second.arity)
        throw ArityMismatch("op '" + name + "' takes " + std::to_string(it->second.arity) + " argument(s), got " +
                            std::to_string(args.size()) + "; usage: " + it->second.usage);
    emit(it->second.run(args, f), format);
    return exit_code::ok;
}

int cmd_demo(const std::string& name, coalg::Field f, Format format) {
    if (name != "counterexample") throw UnknownOp("unknown demo '" + name + "'; known demos: counterexample");
    const coalg::CounterexampleReport r = coalg::counterexample(f);
    emit({r.to_string(), counterexample_json(r)}, format);
    return r.ok() ? exit_code::ok : exit_code::check_failed;
}

int cmd_verify(coalg::verify::Options options, Format format, const std::string& report_path) {
    const auto result = coalg::verify::run(options);
    const std::string structured = coalg::verify::structured_report(result).dump(2) + "\n";
    if (!report_path.empty()) {
        std::ofstream out(report_path, std::ios::binary);
        if (!out) throw coalg::InvalidArgument("cannot write " + report_path);
        out << structured;
    }
    std::cout << (format == Format::structured ? structured : coalg::verify::text_report(result));
    return result.ok() ? exit_code::ok : exit_code::check_failed;
}

int cmd_replay(const std::string& id, std::uint64_t case_seed, coalg::Field f, std::size_t max_dim) {
    const coalg::verify::Lemma* lemma = coalg::verify::find_lemma(id);
    if (!lemma) throw UnknownOp("unknown lemma '" + id + "'");
    const std::string detail = coalg::verify::replay(*lemma, f, case_seed, max_dim);
    std::cout << (detail.empty() ? "pass" : "FAIL: " + detail) << "\n";
    return detail.empty() ? exit_code::ok : exit_code::check_failed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations with finite-dimensional coalgebras, comodules and their ringed views"};
    app.require_subcommand(1);

    const std::vector<std::string> formats{"text", "structured"};
    std::string field = "q", format = "text";
    const auto common = [&](CLI::App* sub) {
        sub->add_option("--field", field, "Base field: q or fp:<p>");
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember(formats));
    };

    std::string path;
    auto* validate = app.add_subcommand("validate", "Check the axioms of an object file");
    validate->add_option("path", path, "Object file or inline JSON")->required();
    common(validate);

    std::string op;
    Args op_args;
    auto* eval = app.add_subcommand("eval", "Evaluate an operation");
    eval->add_option("op", op, "Operation name")->required();
    eval->add_option("args", op_args, "Operation arguments");
    common(eval);

    std::string coalgebra_ref;
    auto* group = app.add_subcommand("grouplikes", "List the group-like elements of a coalgebra");
    group->add_option("coalgebra", coalgebra_ref, "Coalgebra file or name")->required();
    common(group);

    std::string demo_name;
    auto* demo = app.add_subcommand("demo", "Run a worked example");
    demo->add_option("name", demo_name, "Demo name")->required();
    common(demo);

    coalg::verify::Options options;
    std::vector<std::string> verify_fields;
    std::string report_path;
    auto* verify = app.add_subcommand("verify", "Run the randomized law suite");
    verify->add_option("--seed", options.seed, "Master seed");
    verify->add_option("--cases", options.cases, "Cases per lemma and field");
    verify->add_option("--max-dim", options.max_dim, "Largest generated dimension");
    verify->add_option("--field", verify_fields, "Fields (repeatable; default q and fp:7)");
    verify->add_option("--only", options.only, "Run only lemmas with these id prefixes");
    verify->add_option("--format", format, "Output format")->check(CLI::IsMember(formats));
    verify->add_option("--report", report_path, "Also write the structured report to this file");

    std::string lemma_id;
    std::uint64_t case_seed = 0;
    std::size_t replay_dim = 6;
    auto* replay = app.add_subcommand("replay", "Re-run one case of the law suite");
    replay->add_option("lemma", lemma_id, "Lemma id")->required();
    replay->add_option("case_seed", case_seed, "Case seed from a report")->required();
    replay->add_option("--field", field, "Base field: q or fp:<p>");
    replay->add_option("--max-dim", replay_dim, "Largest generated dimension");

    auto* manifest = app.add_subcommand("manifest", "Print the lemma id to anchor manifest");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_code::usage;
    }

    try {
        const coalg::Field f = coalg::Field::parse(field);
        const Format fmt = parse_format(format);
        if (*validate) return cmd_validate(path, f, fmt);
        if (*eval) return cmd_eval(op, op_args, f, fmt);
        if (*group) return cmd_eval("grouplikes", {coalgebra_ref}, f, fmt);
        if (*demo) return cmd_demo(demo_name, f, fmt);
        if (*verify) {
            if (!verify_fields.empty()) {
                options.fields.clear();
                for (const auto& name : verify_fields) options.fields.push_back(coalg::Field::parse(name));
            }
            return cmd_verify(options, fmt, report_path);
        }
        if (*manifest) {
            std::cout << coalg::verify::manifest().dump(2) << "\n";
            return exit_code::ok;
        }
        if (*replay) return cmd_replay(lemma_id, case_seed, f, replay_dim);
    } catch (const coalg::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return exit_code::parse_error;
    } catch (const UnknownOp& e) {
        std::cerr << e.what() << "\n";
        return exit_code::unknown_op;
    } catch (const ArityMismatch& e) {
        std::cerr << e.what() << "\n";
        return exit_code::arity_mismatch;
    } catch (const coalg::CrossCheckFailure& e) {
        std::cerr << "internal cross-check failed: " << e.what() << "\n";
        return exit_code::internal;
    } catch (const coalg::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code::invalid_argument;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return exit_code::internal;
    }
    return exit_code::usage;
}
