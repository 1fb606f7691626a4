// Acceptance suite: runs every verification check and prints one line per
// acceptance criterion.  Exit code 0 only when everything passes.

#include <chrono>
#include <cstring>
#include <iostream>
#include <map>
#include <vector>

#include "extpow/verify.hpp"

int main(int argc, char** argv) {
    std::uint64_t seed = 42;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc)
            seed = std::strtoull(argv[i + 1], nullptr, 10);
    }

    auto t0 = std::chrono::steady_clock::now();
    auto results = extpow::verify::run_suite("all", seed);
    double total =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();

    std::map<std::string, extpow::verify::CheckResult> by_id;
    for (const auto& r : results) by_id[r.id] = r;

    struct Criterion {
        std::string label;
        std::vector<std::string> ids;
    };
    const std::vector<Criterion> criteria = {
        {"criterion 1: exterior-power functoriality",
         {"criterion-01-functoriality"}},
        {"criterion 2: transvection decomposition formula",
         {"criterion-02-formula-m", "criterion-02b-displays"}},
        {"criterion 3: commutator classifier",
         {"criterion-03-classifier", "criterion-03b-level-steps"}},
        {"criterion 4: level witnesses", {"criterion-04-witnesses"}},
        {"criterion 5: z-generator factorization", {"criterion-05-zfactor"}},
        {"criterion 6: level computation", {"criterion-06-level"}},
        {"criterion 7: stabilizer characterization",
         {"criterion-07-stabilizer"}},
        {"criterion 8: congruence membership", {"criterion-08-congruence"}},
        {"criterion 9: perfectness witnesses",
         {"criterion-09-perfectness"}},
        {"criterion 10: self-tests and wall clock",
         {"criterion-10-selftests"}},
    };

    bool all_pass = true;
    for (const auto& crit : criteria) {
        bool pass = true;
        std::string detail;
        for (const auto& id : crit.ids) {
            auto it = by_id.find(id);
            if (it == by_id.end()) {
                pass = false;
                detail += id + " missing; ";
                continue;
            }
            pass = pass && it->second.pass;
            if (!detail.empty()) detail += " | ";
            detail += it->second.pass ? it->second.detail
                                      : ("FAILED: " + it->second.detail);
        }
        if (crit.label.rfind("criterion 10", 0) == 0) {
            if (total >= 300.0) {
                pass = false;
                detail += " | suite exceeded 5 minutes";
            } else {
                detail += " | full suite in " + std::to_string(total) + "s";
            }
            std::string missing;
            if (!extpow::verify::coverage_complete(&missing)) {
                pass = false;
                detail += " | coverage missing: " + missing;
            } else {
                detail += " | operation coverage complete";
            }
        }
        if (crit.label.rfind("criterion 1:", 0) == 0) {
            auto it = by_id.find("criterion-01-functoriality");
            if (it != by_id.end() && it->second.seconds >= 30.0) {
                pass = false;
                detail += " | exceeded 30s";
            }
        }
        std::cout << (pass ? "PASS " : "FAIL ") << crit.label << "  ("
                  << detail << ")\n";
        all_pass = all_pass && pass;
    }

    // Supporting property checks also gate the exit code.
    for (const auto& r : results) {
        if (r.id.rfind("prop-", 0) != 0) continue;
        std::cout << (r.pass ? "PASS " : "FAIL ") << r.id << "  (" << r.detail
                  << ")\n";
        all_pass = all_pass && r.pass;
    }

    std::cout << (all_pass ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED")
              << " (seed " << seed << ", " << total << "s)\n";
    return all_pass ? 0 : 1;
}
