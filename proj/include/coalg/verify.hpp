#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "coalg/random.hpp"

namespace coalg::verify {

/// One randomized case: returns an empty string on success, otherwise a
/// description of the counterwitness.
using CaseFn = std::function<std::string(Rng&, Field, std::size_t max_dim)>;

struct Lemma {
    std::string id;
    std::string anchor;  // the identity being checked, as a formula
    CaseFn run;
};

/// Every property of the suite, in report order.
const std::vector<Lemma>& lemmas();
const Lemma* find_lemma(const std::string& id);

struct Options {
    std::uint64_t seed = 1;
    std::size_t cases = 200;
    std::size_t max_dim = 6;
    std::vector<Field> fields{Field::rationals(), Field::prime(7)};
    /// Only lemmas whose id starts with one of these prefixes (all if empty).
    std::vector<std::string> only;
};

struct Counterwitness {
    std::string field;
    std::size_t case_index = 0;
    std::uint64_t case_seed = 0;
    std::string detail;
};

struct LemmaResult {
    std::string id;
    std::string anchor;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::optional<Counterwitness> first_failure;
    double seconds = 0;  // text report only
};

struct SuiteResult {
    Options options;
    std::vector<LemmaResult> lemmas;
    double seconds = 0;  // text report only

    bool ok() const;
    std::size_t cases_run() const;
};

/// Case i of lemma L over field F uses derive_seed(seed, L.id + "/" + F.name(), i).
SuiteResult run(const Options& options);
/// Re-runs a single case; the same detail string as the original run.
std::string replay(const Lemma& lemma, Field field, std::uint64_t case_seed, std::size_t max_dim);

/// Deterministic: no timings, fixed key order.
nlohmann::ordered_json structured_report(const SuiteResult& result);
std::string text_report(const SuiteResult& result);

/// id -> anchor for every lemma, as stored in the checked-in manifest.
nlohmann::ordered_json manifest();

}  // namespace coalg::verify
