#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "maymust/framework.hpp"
#include "maymust/labelling.hpp"

namespace maymust {

enum class Engine { Brute, Scc };

std::string_view to_string(Engine e) noexcept;
std::optional<Engine> parse_engine(std::string_view s) noexcept;

enum class Semantics {
    Exact,
    PreMaximallyProper,
    MaxiComplete,
    MaxiPreferred,
    MaxiStable,
    MaxiGrounded,
    AdfComplete,
    AdfPreferred,
    AdfGrounded,
    DungComplete,
    DungPreferred,
    DungStable,
    DungGrounded,
};

/// CLI spelling, e.g. "maxi-complete".
std::string_view to_string(Semantics s) noexcept;
std::optional<Semantics> parse_semantics(std::string_view s) noexcept;

struct SemanticsResult {
    Semantics semantics = Semantics::Exact;
    Engine engine = Engine::Brute;
    /// Total labellings, duplicate-free, canonical order.
    std::vector<Labelling> labellings;
    /// Common proper-argument set of maximally proper results.
    std::optional<std::vector<ArgIndex>> proper_set;

    bool empty() const noexcept { return labellings.empty(); }
    std::size_t size() const noexcept { return labellings.size(); }
    bool contains(const Labelling& l) const;
};

struct SolveOptions {
    Engine engine = Engine::Brute;
    /// Worker threads for exhaustive scans; 0 or 1 runs inline.
    unsigned threads = 1;
};

/// Calls `visit` with every total labelling over `universe` arguments in
/// canonical order.
void enumerate_labellings(std::size_t universe, const std::function<void(const Labelling&)>& visit);
std::vector<Labelling> all_labellings(std::size_t universe);

/// Collects every total labelling satisfying `keep`. With threads > 1 the
/// space is partitioned on the leading arguments; output is canonical either way.
std::vector<Labelling> scan_labellings(std::size_t universe, const std::function<bool(const Labelling&)>& keep,
                                       unsigned threads = 1);

/// Arguments whose label is proper under the total labelling `l`.
std::vector<ArgIndex> proper_arguments(const Framework& f, const Labelling& l);
bool is_exact(const Framework& f, const Labelling& l);
bool is_pre_maximally_proper(const Framework& f, const Labelling& l);

SemanticsResult exact_semantics(const Framework& f, const SolveOptions& opts = {});
SemanticsResult pre_maximally_proper(const Framework& f, const SolveOptions& opts = {});

/// Maximally proper labellings, possibly empty.
SemanticsResult maximally_proper_unchecked(const Framework& f, const SolveOptions& opts = {});
/// As above but throws NoMaximallyProper when empty for a nonempty framework.
SemanticsResult maximally_proper_semantics(const Framework& f, const SolveOptions& opts = {});

/// Semantics derived from a maxi.complete set.
SemanticsResult preferred_of(const SemanticsResult& complete, Semantics name);
SemanticsResult stable_of(const SemanticsResult& complete, Semantics name);
/// Throws NoMaximallyProper if `complete` is empty.
SemanticsResult grounded_of(const SemanticsResult& complete, Semantics name);

SemanticsResult maxi_complete(const Framework& f, const SolveOptions& opts = {});
SemanticsResult maxi_preferred(const Framework& f, const SolveOptions& opts = {});
SemanticsResult maxi_stable(const Framework& f, const SolveOptions& opts = {});
SemanticsResult maxi_grounded(const Framework& f, const SolveOptions& opts = {});

/// Dispatch by name for exact, maxi.* and adf.* semantics. Throws
/// UnknownSemantics for the oracle-only names.
SemanticsResult solve(const Framework& f, Semantics s, const SolveOptions& opts = {});

}  // namespace maymust
