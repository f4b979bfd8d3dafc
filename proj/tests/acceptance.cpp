// Prints one PASS/FAIL line per acceptance criterion and exits nonzero if
// any criterion fails. Optional argv[1]: path of the coalg CLI, used for the
// determinism criterion.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "coalg/polydual.hpp"
#include "coalg/random.hpp"
#include "coalg/rcmodules.hpp"
#include "coalg/verify.hpp"
#include "oracles.hpp"

using namespace coalg;

namespace {

// Pinned limits. Every comparison below is exact; only time is bounded.
constexpr double kCounterexampleSeconds = 1.0;
constexpr double kWedgeSuiteSeconds = 60.0;
constexpr std::size_t kCases = 200;
constexpr std::size_t kMaxDim = 6;
constexpr std::size_t kMinOracleCases = 500;
constexpr std::size_t kRandomSubspaces = 100;
constexpr std::size_t kRandomMorphisms = 50;
constexpr std::size_t kGrouplikeCoalgebras = 100;
constexpr std::size_t kGrouplikeMaxDim = 4;
constexpr std::size_t kSuiteCases = 100;

const Field Q = Field::rationals();

struct Outcome {
    bool pass;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::vector<std::pair<std::string, Algebra>> fixtures() {
    return {{"M2", matrix_algebra(Q, 2)},
            {"k[x]/(x^3)", truncated_poly(Q, 3)},
            {"UT2", upper_triangular(Q, 2)},
            {"k[C2]", cyclic_group_algebra(Q, 2)},
            {"k[x]/(x^2-x)", quotient_polynomial(Poly::parse(Q, "x^2 - x"))}};
}

// Distinct ideals generated by one element with coordinates in {-1, 0, 1}.
std::vector<Subspace> principal_ideals(const Algebra& a, Side side) {
    std::vector<Subspace> out;
    std::vector<long> digits(a.dim(), -1);
    while (true) {
        Vec x;
        for (const long d : digits) x.push_back(Scalar(Q, d));
        const Subspace i = ideal_generated(a, Subspace::span(Q, a.dim(), {x}), side);
        if (std::find(out.begin(), out.end(), i) == out.end()) out.push_back(i);
        std::size_t k = 0;
        while (k < digits.size() && ++digits[k] == 2) digits[k++] = -1;
        if (k == digits.size()) break;
    }
    return out;
}

verify::SuiteResult run_lemmas(const std::vector<std::string>& ids, std::size_t cases) {
    verify::Options o;
    o.cases = cases;
    o.max_dim = kMaxDim;
    o.only = ids;
    return verify::run(o);
}

std::string summarize(const verify::SuiteResult& r) {
    std::ostringstream s;
    std::size_t failed = 0;
    for (const auto& l : r.lemmas) {
        failed += l.failed;
        if (l.first_failure) s << " " << l.id << " failed: " << l.first_failure->detail << ";";
    }
    s << " " << r.lemmas.size() << " lemmas, " << r.cases_run() << " cases, " << failed << " failures";
    return s.str();
}

Outcome counterexample_reproduction() {
    const auto start = std::chrono::steady_clock::now();
    const CounterexampleReport r = counterexample(Q);
    const double t = seconds_since(start);
    std::ostringstream s;
    s << "dims (f_dagger D, f_dagger(D v D), ker f) = (" << r.dagger_d << ", " << r.dagger_d_wedge << ", " << r.ker_f
      << "), expected (0, 4, 3); ker f subcoalgebra: " << (r.ker_f_subcoalgebra ? "yes" : "no")
      << "; f_dagger(D) v f_dagger(D) = " << r.wedge_of_daggers << "-dim vs " << r.dagger_d_wedge << "-dim; " << t << "s";
    const bool pass = r.dagger_d == 0 && r.dagger_d_wedge == 4 && r.ker_f == 3 && !r.ker_f_subcoalgebra &&
                      r.wedge_of_daggers != r.dagger_d_wedge && t < kCounterexampleSeconds;
    return {pass, s.str()};
}

Outcome wedge_suite() {
    const auto start = std::chrono::steady_clock::now();
    const auto r = run_lemmas({"coalgebra.wedge.associative", "coalgebra.wedge.distributive", "coalgebra.wedge.preimage",
                               "coalgebra.wedge.restriction", "coalgebra.pts.union", "coalgebra.wedge.direct_sum",
                               "coalgebra.wedge.image", "coalgebra.dagger.meet", "coalgebra.wedge.subcoalgebra"},
                              kCases);
    const double t = seconds_since(start);
    bool counts = r.lemmas.size() == 9;
    for (const auto& l : r.lemmas) counts = counts && l.passed + l.failed == 2 * kCases;
    return {r.ok() && counts && t < kWedgeSuiteSeconds, summarize(r) + ", " + std::to_string(t) + "s"};
}

Outcome oracle_equivalence() {
    const auto r = run_lemmas({"coalgebra.oracle.wedge", "coalgebra.oracle.largest", "coalgebra.oracle.dagger"}, kCases);
    return {r.ok() && r.cases_run() >= kMinOracleCases && r.lemmas.size() == 3, summarize(r)};
}

Outcome quantale_nullstellensatz() {
    std::size_t checks = 0;
    std::ostringstream fail;
    Rng rng(derive_seed(4, "quantale", 0));
    for (const auto& [name, a] : fixtures()) {
        const Coalgebra c = dual_coalgebra(a);
        const auto two_sided = principal_ideals(a, Side::TwoSided);
        std::vector<Subspace> subspaces = two_sided;
        for (std::size_t i = 0; i < kRandomSubspaces; ++i) subspaces.push_back(random_subspace(rng, Q, a.dim()));
        for (std::size_t i = 0; i < subspaces.size(); ++i) {
            const Subspace& s1 = subspaces[i];
            const Subspace& s2 = subspaces[(i + 1) % subspaces.size()];
            const Subspace z1 = vanishing_space(a, s1), z2 = vanishing_space(a, s2);
            ++checks;
            if (intersect(z1, z2) != vanishing_space(a, sum(s1, s2))) fail << " " << name << ": meet law;";
            if (wedge(c, z1, z2) != vanishing_space(a, subspace_product(a, s1, s2))) fail << " " << name << ": wedge law;";
            if (orthogonal(z1) != s1) fail << " " << name << ": Z(S)^perp != S;";
        }
        for (const auto& i : two_sided) {
            const Subspace t = vanishing_space(a, i);
            if (vanishing_space(a, orthogonal(t)) != t) fail << " " << name << ": Z(T^perp) != T;";
        }
        for (const auto& i : principal_ideals(a, Side::Left)) {
            ++checks;
            if (vanishing_space(a, i).is_zero() && !i.is_full()) fail << " " << name << ": Z(I) = 0 for proper I;";
        }
    }
    const std::string f = fail.str();
    return {f.empty(), std::to_string(checks) + " instances" + (f.empty() ? std::string() : ":" + f)};
}

Outcome section_examples() {
    std::size_t ideals = 0;
    std::ostringstream fail;
    for (const auto& [name, a] : fixtures()) {
        const RingedCoalgebraView rc(a);
        for (const auto& i : principal_ideals(a, Side::TwoSided)) {
            if (i.is_full()) continue;
            ++ideals;
            const SectionAlgebra s = section_on_algebraic(rc, vanishing_space(a, i));
            if (s.algebra != quotient_algebra(a, closure(a, i)).algebra) fail << " " << name << ": A_Z(I) != A/I;";
        }
        if (!global_section_roundtrip(identity_morphism(a)).ok()) fail << " " << name << ": Gamma(A*) != A;";
    }
    Rng rng(derive_seed(5, "sections", 0));
    for (std::size_t k = 0; k < kRandomMorphisms; ++k) {
        const Report r = global_section_roundtrip(random_algebra_morphism(rng, Q, kMaxDim));
        if (!r.ok()) fail << " morphism " << k << ": " << r.to_string();
    }
    const std::string f = fail.str();
    return {f.empty(), std::to_string(ideals) + " proper principal ideals, " + std::to_string(kRandomMorphisms) +
                           " morphisms" + (f.empty() ? std::string() : ":" + f)};
}

Outcome grouplike_completeness() {
    std::size_t mismatches = 0, total_points = 0;
    for (std::size_t k = 0; k < kGrouplikeCoalgebras; ++k) {
        const Field f = Field::prime(k % 2 ? 3 : 2);
        Rng rng(derive_seed(6, "grouplikes", k));
        const Coalgebra c = random_coalgebra(rng, f, kGrouplikeMaxDim);
        const auto expected = oracle::grouplikes(c);
        total_points += expected.size();
        if (oracle::sorted(grouplikes(c)) != expected) ++mismatches;
    }
    return {mismatches == 0, std::to_string(kGrouplikeCoalgebras) + " coalgebras over F2 and F3, " +
                                 std::to_string(total_points) + " group-likes, " + std::to_string(mismatches) + " mismatches"};
}

Outcome comodule_suite() {
    const auto r = run_lemmas({"comodule.cotensor.sum", "comodule.cotensor.monotone", "comodule.dual.roundtrip", "comodule.blocks"},
                              kSuiteCases);
    return {r.ok() && r.lemmas.size() == 4, summarize(r)};
}

Outcome rcmodule_suite() {
    const auto r = run_lemmas({"rcmodules.gamma", "rcmodules.section", "rcmodules.restriction.square"}, kSuiteCases);
    return {r.ok() && r.lemmas.size() == 3, summarize(r)};
}

std::string capture(const std::string& command) {
    std::string out;
    std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(command.c_str(), "r"), pclose);
    if (!pipe) return out;
    std::array<char, 4096> buffer{};
    std::size_t n;
    while ((n = fread(buffer.data(), 1, buffer.size(), pipe.get())) > 0) out.append(buffer.data(), n);
    return out;
}

Outcome determinism(const std::string& cli) {
    verify::Options o;
    o.seed = 2024;
    o.cases = 10;
    const std::string a = verify::structured_report(verify::run(o)).dump(2);
    const std::string b = verify::structured_report(verify::run(o)).dump(2);
    if (a != b) return {false, "library reports differ"};
    if (cli.empty()) return {true, "library reports identical (" + std::to_string(a.size()) + " bytes); CLI not given"};
    const std::string cmd = "'" + cli + "' verify --seed 2024 --cases 10 --format structured";
    const std::string c1 = capture(cmd), c2 = capture(cmd);
    const bool same = !c1.empty() && c1 == c2 && c1 == a + "\n";
    return {same, "library and CLI reports " + std::string(same ? "identical" : "differ") + " (" + std::to_string(c1.size()) + " bytes)"};
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"counterexample reproduction", counterexample_reproduction},
        {"wedge-law suite", wedge_suite},
        {"oracle equivalence", oracle_equivalence},
        {"quantale and nullstellensatz", quantale_nullstellensatz},
        {"section examples", section_examples},
        {"group-like completeness", grouplike_completeness},
        {"comodule suite", comodule_suite},
        {"rc-module suite", rcmodule_suite},
        {"determinism", [&] { return determinism(cli); }},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.pass) ++failures;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << (i + 1) << " (" << criteria[i].first << "): " << o.detail
                  << std::endl;
    }
    std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed" << std::endl;
    return failures == 0 ? 0 : 1;
}
