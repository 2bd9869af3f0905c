#include "maymust/semantics.hpp"

#include <algorithm>
#include <array>
#include <thread>

#include "maymust/adf.hpp"
#include "maymust/designation.hpp"
#include "maymust/error.hpp"
#include "maymust/scc.hpp"

namespace maymust {

std::string_view to_string(Engine e) noexcept { return e == Engine::Brute ? "brute" : "scc"; }

std::optional<Engine> parse_engine(std::string_view s) noexcept {
    if (s == "brute") return Engine::Brute;
    if (s == "scc") return Engine::Scc;
    return std::nullopt;
}

namespace {

constexpr std::array<std::pair<Semantics, std::string_view>, 13> kSemanticsNames{{
    {Semantics::Exact, "exact"},
    {Semantics::PreMaximallyProper, "pre-maximally-proper"},
    {Semantics::MaxiComplete, "maxi-complete"},
    {Semantics::MaxiPreferred, "maxi-preferred"},
    {Semantics::MaxiStable, "maxi-stable"},
    {Semantics::MaxiGrounded, "maxi-grounded"},
    {Semantics::AdfComplete, "adf-complete"},
    {Semantics::AdfPreferred, "adf-preferred"},
    {Semantics::AdfGrounded, "adf-grounded"},
    {Semantics::DungComplete, "dung-complete"},
    {Semantics::DungPreferred, "dung-preferred"},
    {Semantics::DungStable, "dung-stable"},
    {Semantics::DungGrounded, "dung-grounded"},
}};

// Visits the labellings whose first `prefix.size()` labels equal `prefix`.
void enumerate_suffixes(std::size_t universe, const std::vector<Label>& prefix,
                        const std::function<void(const Labelling&)>& visit) {
    Labelling l = Labelling::uniform(universe, Label::In);
    for (ArgIndex a = 0; a < prefix.size(); ++a) l.set(a, prefix[a]);
    const std::size_t first = prefix.size();
    for (;;) {
        visit(l);
        // Odometer: the last argument varies fastest.
        std::size_t a = universe;
        while (a > first) {
            --a;
            const auto v = static_cast<std::uint8_t>(*l.get(a));
            if (v < 2) {
                l.set(a, static_cast<Label>(v + 1));
                break;
            }
            l.set(a, Label::In);
            if (a == first) return;
        }
        if (universe == first) return;
    }
}

}  // namespace

std::string_view to_string(Semantics s) noexcept {
    for (const auto& [k, name] : kSemanticsNames)
        if (k == s) return name;
    return "?";
}

std::optional<Semantics> parse_semantics(std::string_view s) noexcept {
    for (const auto& [k, name] : kSemanticsNames)
        if (name == s) return k;
    return std::nullopt;
}

bool SemanticsResult::contains(const Labelling& l) const {
    return std::binary_search(labellings.begin(), labellings.end(), l);
}

void enumerate_labellings(std::size_t universe, const std::function<void(const Labelling&)>& visit) {
    enumerate_suffixes(universe, {}, visit);
}

std::vector<Labelling> all_labellings(std::size_t universe) {
    std::vector<Labelling> out;
    enumerate_labellings(universe, [&](const Labelling& l) { out.push_back(l); });
    return out;
}

std::vector<Labelling> scan_labellings(std::size_t universe, const std::function<bool(const Labelling&)>& keep,
                                       unsigned threads) {
    if (threads <= 1 || universe == 0) {
        std::vector<Labelling> out;
        enumerate_labellings(universe, [&](const Labelling& l) {
            if (keep(l)) out.push_back(l);
        });
        return out;
    }
    std::size_t fixed = 0;
    std::size_t parts = 1;
    while (parts < threads && fixed < universe) {
        ++fixed;
        parts *= 3;
    }
    std::vector<std::vector<Label>> prefixes;
    for (std::size_t code = 0; code < parts; ++code) {
        std::vector<Label> p(fixed);
        std::size_t c = code;
        for (std::size_t i = fixed; i-- > 0;) {
            p[i] = static_cast<Label>(c % 3);
            c /= 3;
        }
        prefixes.push_back(std::move(p));
    }
    std::vector<std::vector<Labelling>> results(parts);
    {
        std::vector<std::jthread> workers;
        for (unsigned w = 0; w < threads; ++w) {
            workers.emplace_back([&, w] {
                for (std::size_t i = w; i < parts; i += threads)
                    enumerate_suffixes(universe, prefixes[i], [&](const Labelling& l) {
                        if (keep(l)) results[i].push_back(l);
                    });
            });
        }
    }
    std::vector<Labelling> out;
    for (auto& r : results) out.insert(out.end(), std::make_move_iterator(r.begin()), std::make_move_iterator(r.end()));
    return out;
}

std::vector<ArgIndex> proper_arguments(const Framework& f, const Labelling& l) {
    std::vector<ArgIndex> out;
    for (ArgIndex a = 0; a < f.size(); ++a)
        if (designated_unchecked(f, l, a).contains(*l.get(a))) out.push_back(a);
    return out;
}

bool is_exact(const Framework& f, const Labelling& l) {
    for (ArgIndex a = 0; a < f.size(); ++a)
        if (!designated_unchecked(f, l, a).contains(*l.get(a))) return false;
    return true;
}

bool is_pre_maximally_proper(const Framework& f, const Labelling& l) {
    for (ArgIndex a = 0; a < f.size(); ++a) {
        const Label own = *l.get(a);
        if (own != Label::Undec && !designated_unchecked(f, l, a).contains(own)) return false;
    }
    return true;
}

SemanticsResult exact_semantics(const Framework& f, const SolveOptions& opts) {
    if (opts.engine == Engine::Scc) return exact_pruned(f);
    SemanticsResult r{Semantics::Exact, Engine::Brute, {}, std::nullopt};
    r.labellings = scan_labellings(f.size(), [&](const Labelling& l) { return is_exact(f, l); }, opts.threads);
    return r;
}

SemanticsResult pre_maximally_proper(const Framework& f, const SolveOptions& opts) {
    SemanticsResult r{Semantics::PreMaximallyProper, Engine::Brute, {}, std::nullopt};
    r.labellings =
        scan_labellings(f.size(), [&](const Labelling& l) { return is_pre_maximally_proper(f, l); }, opts.threads);
    return r;
}

SemanticsResult maximally_proper_unchecked(const Framework& f, const SolveOptions& opts) {
    if (opts.engine == Engine::Scc) return bottom_up_maxi_unchecked(f);

    // A labelling is maximally proper iff its proper set equals the union of
    // the proper sets of all pre-maximally proper labellings.
    const SemanticsResult pre = pre_maximally_proper(f, opts);
    std::vector<std::vector<ArgIndex>> proper;
    std::vector<bool> reached(f.size(), false);
    proper.reserve(pre.size());
    for (const Labelling& l : pre.labellings) {
        proper.push_back(proper_arguments(f, l));
        for (ArgIndex a : proper.back()) reached[a] = true;
    }
    std::vector<ArgIndex> all_reached;
    for (ArgIndex a = 0; a < f.size(); ++a)
        if (reached[a]) all_reached.push_back(a);

    SemanticsResult r{Semantics::MaxiComplete, Engine::Brute, {}, std::nullopt};
    for (std::size_t i = 0; i < pre.size(); ++i)
        if (proper[i] == all_reached) r.labellings.push_back(pre.labellings[i]);
    if (!r.empty()) r.proper_set = all_reached;
    return r;
}

SemanticsResult maximally_proper_semantics(const Framework& f, const SolveOptions& opts) {
    SemanticsResult r = maximally_proper_unchecked(f, opts);
    if (r.empty() && !f.empty())
        throw Error(ErrorKind::NoMaximallyProper, "no pre-maximally proper labelling dominates all proper sets");
    return r;
}

SemanticsResult preferred_of(const SemanticsResult& complete, Semantics name) {
    SemanticsResult r{name, complete.engine, maximal_elements(complete.labellings), complete.proper_set};
    return r;
}

SemanticsResult stable_of(const SemanticsResult& complete, Semantics name) {
    SemanticsResult r{name, complete.engine, {}, complete.proper_set};
    for (const Labelling& l : complete.labellings)
        if (l.count(Label::Undec) == 0) r.labellings.push_back(l);
    return r;
}

SemanticsResult grounded_of(const SemanticsResult& complete, Semantics name) {
    if (complete.empty())
        throw Error(ErrorKind::NoMaximallyProper, "grounded labelling needs a nonempty complete set");
    return SemanticsResult{name, complete.engine, {labelling_meet(complete.labellings)}, std::nullopt};
}

SemanticsResult maxi_complete(const Framework& f, const SolveOptions& opts) {
    return maximally_proper_semantics(f, opts);
}

SemanticsResult maxi_preferred(const Framework& f, const SolveOptions& opts) {
    return preferred_of(maxi_complete(f, opts), Semantics::MaxiPreferred);
}

SemanticsResult maxi_stable(const Framework& f, const SolveOptions& opts) {
    // An empty maxi.complete set has no stable members; that is not an error.
    return stable_of(maximally_proper_unchecked(f, opts), Semantics::MaxiStable);
}

SemanticsResult maxi_grounded(const Framework& f, const SolveOptions& opts) {
    return grounded_of(maxi_complete(f, opts), Semantics::MaxiGrounded);
}

SemanticsResult solve(const Framework& f, Semantics s, const SolveOptions& opts) {
    switch (s) {
        case Semantics::Exact: return exact_semantics(f, opts);
        case Semantics::PreMaximallyProper: return pre_maximally_proper(f, opts);
        case Semantics::MaxiComplete: return maxi_complete(f, opts);
        case Semantics::MaxiPreferred: return maxi_preferred(f, opts);
        case Semantics::MaxiStable: return maxi_stable(f, opts);
        case Semantics::MaxiGrounded: return maxi_grounded(f, opts);
        case Semantics::AdfComplete: return adf_complete(f, opts);
        case Semantics::AdfPreferred: return adf_preferred(f, opts);
        case Semantics::AdfGrounded: return adf_grounded(f, opts);
        default: break;
    }
    throw Error(ErrorKind::UnknownSemantics, std::string(to_string(s)) + " is only available from the Dung oracle");
}

}  // namespace maymust
