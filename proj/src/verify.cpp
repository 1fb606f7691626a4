#include "extpow/verify.hpp"

#include <chrono>

#include "extpow/derivation.hpp"
#include "extpow/exterior.hpp"
#include "extpow/group_word.hpp"
#include "extpow/level.hpp"
#include "extpow/linsolve.hpp"
#include "extpow/stabilizer.hpp"
#include "extpow/zfactor.hpp"

#include "verify_helpers.cpp.inc"

namespace extpow::verify {

namespace {

std::vector<Check> build_checks();  // defined in verify_checks.cpp.inc

}  // namespace

const std::vector<Check>& all_checks() {
    static const std::vector<Check> checks = build_checks();
    return checks;
}

const std::vector<std::string>& operation_manifest() {
    static const std::vector<std::string> ops = {
        // rings
        "ideal_generate", "ideal_membership", "solve_linear", "is_unit",
        // linalg
        "det", "minor", "mat_inverse", "word_evaluate",
        "chevalley_commutator", "hall_witt_check",
        // exterior
        "weight_sign", "exterior_power", "ext_transvection_decomposition",
        "height", "classify_commutator",
        // level
        "compute_level", "equalize_witness", "lower_height_witness",
        "raise_height_witness", "relative_generator_factorization",
        "perfectness_witness", "validate_derivation",
        // invariants
        "build_form", "build_partition_ideal", "build_pluecker",
        "substitute_linear", "span_membership", "stabilizer_check",
        "congruence_membership",
    };
    return ops;
}

std::vector<std::string> suite_names() {
    return {"functorial", "formula-m", "commutators", "level", "stabilizer",
            "all"};
}

std::vector<CheckResult> run_suite(const std::string& suite,
                                   std::uint64_t seed) {
    std::vector<CheckResult> out;
    for (const auto& check : all_checks()) {
        bool wanted = suite == "all";
        for (const auto& s : check.suites)
            if (s == suite) wanted = true;
        if (!wanted) continue;
        auto start = std::chrono::steady_clock::now();
        CheckResult r = check.run(seed);
        r.id = check.id;
        r.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                          start)
                .count();
        out.push_back(std::move(r));
    }
    return out;
}

bool coverage_complete(std::string* missing) {
    for (const auto& op : operation_manifest()) {
        bool found = false;
        for (const auto& check : all_checks())
            for (const auto& tag : check.operations)
                if (tag == op) found = true;
        if (!found) {
            if (missing) *missing = op;
            return false;
        }
    }
    return true;
}

}  // namespace extpow::verify

#include "verify_checks.cpp.inc"
