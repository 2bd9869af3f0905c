#pragma once

#include <vector>

#include "maymust/framework.hpp"
#include "maymust/labelling.hpp"
#include "maymust/semantics.hpp"

namespace maymust {

/// All {IN, OUT}-labellings above the total labelling `l`, canonical order.
std::vector<Labelling> two_val(const Labelling& l);

/// Consensus operator: IN (OUT) where every two-valued completion designates
/// exactly {IN} ({OUT}), UNDEC elsewhere.
Labelling gamma(const Framework& f, const Labelling& l);

SemanticsResult adf_complete(const Framework& f, const SolveOptions& opts = {});
SemanticsResult adf_preferred(const Framework& f, const SolveOptions& opts = {});

struct KleeneTrace {
    std::vector<Labelling> iterates;  ///< ⊥, Γ(⊥), ... up to the fixpoint
    bool converged = false;
};

/// Iterates Γ from the all-UNDEC labelling for at most 3^|A| steps.
KleeneTrace kleene_iterate(const Framework& f);

/// Singleton with the Kleene fixpoint. Throws NonConvergent when the
/// iteration cycles or the fixpoint is not below every fixpoint of Γ.
SemanticsResult adf_grounded(const Framework& f, const SolveOptions& opts = {});

}  // namespace maymust
