#include "maymust/adf.hpp"

#include <limits>
#include <set>

#include "maymust/designation.hpp"
#include "maymust/error.hpp"

namespace maymust {

std::vector<Labelling> two_val(const Labelling& l) {
    std::vector<ArgIndex> open;
    for (ArgIndex a = 0; a < l.universe(); ++a) {
        if (!l.defined(a)) throw Error(ErrorKind::UndefinedArgumentLabel, "two_val needs a total labelling");
        if (*l.get(a) == Label::Undec) open.push_back(a);
    }
    std::vector<Labelling> out;
    out.reserve(std::size_t{1} << open.size());
    // Bit i of `mask` (most significant first) picks OUT for open[i]; counting
    // upward then yields canonical order since IN < OUT.
    const std::size_t total = std::size_t{1} << open.size();
    for (std::size_t mask = 0; mask < total; ++mask) {
        Labelling c = l;
        for (std::size_t i = 0; i < open.size(); ++i) {
            const bool out_bit = (mask >> (open.size() - 1 - i)) & 1u;
            c.set(open[i], out_bit ? Label::Out : Label::In);
        }
        out.push_back(std::move(c));
    }
    return out;
}

Labelling gamma(const Framework& f, const Labelling& l) {
    const std::vector<Labelling> completions = two_val(l);
    Labelling out(f.size());
    for (ArgIndex a = 0; a < f.size(); ++a) {
        std::optional<Label> consensus;
        bool agreed = true;
        for (const Labelling& c : completions) {
            const auto only = designated_unchecked(f, c, a).only();
            if (!only || *only == Label::Undec || (consensus && *consensus != *only)) {
                agreed = false;
                break;
            }
            consensus = only;
        }
        out.set(a, agreed && consensus ? *consensus : Label::Undec);
    }
    return out;
}

SemanticsResult adf_complete(const Framework& f, const SolveOptions& opts) {
    SemanticsResult r{Semantics::AdfComplete, Engine::Brute, {}, std::nullopt};
    r.labellings = scan_labellings(f.size(), [&](const Labelling& l) { return gamma(f, l) == l; }, opts.threads);
    return r;
}

SemanticsResult adf_preferred(const Framework& f, const SolveOptions& opts) {
    SemanticsResult complete = adf_complete(f, opts);
    return SemanticsResult{Semantics::AdfPreferred, Engine::Brute, maximal_elements(complete.labellings),
                           std::nullopt};
}

KleeneTrace kleene_iterate(const Framework& f) {
    // 3^|A| bounds the number of distinct labellings, hence any cycle length.
    std::size_t limit = 1;
    for (std::size_t i = 0; i < f.size() && limit < std::numeric_limits<std::size_t>::max() / 3; ++i) limit *= 3;

    KleeneTrace trace;
    trace.iterates.push_back(Labelling::uniform(f.size(), Label::Undec));
    std::set<Labelling> seen{trace.iterates.back()};
    for (std::size_t step = 0; step < limit; ++step) {
        Labelling next = gamma(f, trace.iterates.back());
        if (next == trace.iterates.back()) {
            trace.converged = true;
            return trace;
        }
        if (!seen.insert(next).second) {
            trace.iterates.push_back(std::move(next));
            return trace;
        }
        trace.iterates.push_back(std::move(next));
    }
    return trace;
}

SemanticsResult adf_grounded(const Framework& f, const SolveOptions& opts) {
    const KleeneTrace trace = kleene_iterate(f);
    if (!trace.converged)
        throw Error(ErrorKind::NonConvergent,
                    "iteration from all-undec cycles after " + std::to_string(trace.iterates.size()) + " iterates");
    const Labelling& fix = trace.iterates.back();
    for (const Labelling& other : adf_complete(f, opts).labellings)
        if (!labelling_leq(fix, other))
            throw Error(ErrorKind::NonConvergent, "Kleene fixpoint is not below every fixpoint");
    return SemanticsResult{Semantics::AdfGrounded, Engine::Brute, {fix}, std::nullopt};
}

}  // namespace maymust
