#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "extpow/matrix.hpp"

namespace extpow::verify {

/// Deterministic generator: identical seeds give identical streams on every
/// platform (no library distributions involved).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

    std::uint64_t next() {
        // splitmix64
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

private:
    std::uint64_t state_;
};

RingElem random_elem(Rng& rng, const RingPtr& ring);
RingElem random_unit(Rng& rng, const RingPtr& ring);
RingElem random_nonzero(Rng& rng, const RingPtr& ring);
Matrix random_matrix(Rng& rng, const RingPtr& ring, std::size_t rows,
                     std::size_t cols);
Matrix random_invertible(Rng& rng, const RingPtr& ring, std::size_t n);

struct CheckResult {
    std::string id;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

struct Check {
    std::string id;
    std::vector<std::string> suites;      // suite tags: functorial, formula-m,
                                          // commutators, level, stabilizer
    std::vector<std::string> operations;  // public operations exercised
    std::function<CheckResult(std::uint64_t seed)> run;
};

const std::vector<Check>& all_checks();
const std::vector<std::string>& operation_manifest();
std::vector<std::string> suite_names();

/// Runs every check tagged with `suite` ("all" runs everything) in
/// declaration order.
std::vector<CheckResult> run_suite(const std::string& suite,
                                   std::uint64_t seed);

/// True when the union of the checks' operation tags covers the manifest.
bool coverage_complete(std::string* missing = nullptr);

}  // namespace extpow::verify
