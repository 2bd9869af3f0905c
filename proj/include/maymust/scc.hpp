#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "maymust/framework.hpp"
#include "maymust/labelling.hpp"
#include "maymust/semantics.hpp"

namespace maymust {

struct SccInfo {
    /// Components in topological order of the condensation (attackers first);
    /// members ascending.
    std::vector<std::vector<ArgIndex>> components;
    /// Component id per argument.
    std::vector<std::size_t> component_of;
    /// SCC-depth per argument.
    std::vector<std::size_t> depth;
    /// Arguments grouped by depth; bundles[d] ascending.
    std::vector<std::vector<ArgIndex>> bundles;
    std::size_t max_depth = 0;
};

/// Tarjan condensation plus longest-path depths over the component DAG.
SccInfo sccs(const Framework& f);

struct ReductionPlan {
    /// Kept arguments, ascending; index i of the reduced framework is kept[i].
    std::vector<ArgIndex> kept;
    /// (out_shift, in_shift) for kept arguments attacked from outside.
    std::map<ArgIndex, std::pair<std::size_t, std::size_t>> boundary_shifts;
};

/// Throws FrozenLabelMissing when an external attacker of a kept argument is
/// unlabelled in `frozen`.
ReductionPlan plan_reduction(const Framework& f, std::span<const ArgIndex> keep, const Labelling& frozen);
Framework apply_reduction(const Framework& f, const ReductionPlan& plan);

/// Sub-framework on `keep` whose shifted tuples designate, for every labelling
/// of the kept arguments, what the original designates once composed with the
/// frozen labels outside `keep`.
Framework conservative_reduction(const Framework& f, std::span<const ArgIndex> keep, const Labelling& frozen);

struct BottomUpCandidates {
    /// Every composition of per-depth maximally proper choices, as full
    /// labellings in canonical order.
    std::vector<Labelling> labellings;
    /// Per depth: the distinct restrictions of `labellings` to that bundle.
    std::vector<std::vector<Labelling>> per_depth;
};

/// Composes, depth by depth, the maximally proper labellings of each bundle
/// reduced against every choice made at lower depths.
BottomUpCandidates bottom_up_candidates(const Framework& f);

/// Maximally proper labellings through the SCC engine: bottom-up candidates
/// filtered against the union of proper sets over all pre-maximally proper
/// labellings, the latter found by an SCC-ordered pruned search. Possibly empty.
SemanticsResult bottom_up_maxi_unchecked(const Framework& f);
/// Throws NoMaximallyProper when empty for a nonempty framework.
SemanticsResult bottom_up_maxi(const Framework& f);

/// Exact labellings via depth-first search in SCC order with early pruning.
SemanticsResult exact_pruned(const Framework& f);
/// Union of proper-argument sets across all pre-maximally proper labellings.
std::vector<ArgIndex> reachable_proper_union(const Framework& f);

/// Per-depth comparison of {λ↓bundle(d) : λ maximally proper} against the
/// bundle restrictions of the bottom-up candidates.
struct DepthAgreement {
    std::size_t depth = 0;
    std::vector<Labelling> from_global;
    std::vector<Labelling> from_bottom_up;
    bool equal() const { return from_global == from_bottom_up; }
};

std::vector<DepthAgreement> depth_agreement(const Framework& f, const SemanticsResult& maxi);

}  // namespace maymust
