#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "maymust/framework.hpp"
#include "maymust/generate.hpp"

namespace maymust {

struct Verdict {
    std::string check;
    bool passed = true;
    std::string detail;
    /// Serialized .mmaf reproducer; always set for failures.
    std::string reproducer;
    /// First offending labelling, when one exists.
    std::string counterexample;
};

struct DiffReport {
    std::string instance;  ///< summary line
    std::vector<Verdict> verdicts;

    bool passed() const;
    std::vector<const Verdict*> failures() const;
};

/// Default 12; overridden by MAYMUST_MAX_BRUTE.
std::size_t brute_force_bound();

struct CheckOptions {
    /// Greedily shrink failing instances before archiving them.
    bool minimize = true;
};

/// Runs the differential and invariant checks on one instance. Throws
/// InstanceTooLarge beyond the brute-force bound.
DiffReport check_instance(const Framework& f, const CheckOptions& opts = {});

struct FuzzParams {
    std::size_t count = 500;
    std::size_t max_args = 7;
    std::uint64_t seed = 1;
    Rational edge_prob{3, 10};
    TupleConfig tuples;
    unsigned threads = 1;
};

struct FuzzSummary {
    struct Tally {
        std::string check;
        std::size_t passed = 0;
        std::size_t failed = 0;
    };
    std::size_t instances = 0;
    std::vector<Tally> tallies;         ///< check order of the first report
    std::vector<Verdict> failures;      ///< in instance order

    bool passed() const { return failures.empty(); }
};

/// Instance i is generated with n uniform in [1, max_args] from the i-th
/// SplitMix64 output of `seed`.
GeneratorParams fuzz_instance_params(const FuzzParams& p, std::size_t i);
FuzzSummary fuzz(const FuzzParams& p, const CheckOptions& opts = {});

std::string render_report(const DiffReport& r);
std::string render_summary(const FuzzSummary& s);

}  // namespace maymust
