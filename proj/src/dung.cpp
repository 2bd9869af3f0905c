#include "maymust/dung.hpp"

#include <algorithm>

namespace maymust {

Framework dung_to_maymust(const DungFramework& d) {
    std::vector<std::size_t> indegree(d.arguments.size(), 0);
    auto edges = d.attacks;
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    for (const auto& e : edges) ++indegree.at(e.second);
    std::vector<NuanceTuple> tuples;
    for (std::size_t deg : indegree) tuples.push_back(dung_tuple(deg));
    return Framework::from_indices(d.arguments, std::move(tuples), edges);
}

DungFramework underlying_dung(const Framework& f) { return DungFramework{f.names(), f.attacks()}; }

bool is_dung_instance(const Framework& f) {
    for (ArgIndex a = 0; a < f.size(); ++a)
        if (f.tuple(a) != dung_tuple(f.in_degree(a))) return false;
    return true;
}

namespace {

// in iff every attacker is out; out iff some attacker is in.
bool complete_by_clauses(const std::vector<std::vector<ArgIndex>>& attackers, const std::vector<Label>& l) {
    for (ArgIndex a = 0; a < l.size(); ++a) {
        bool all_out = true;
        bool some_in = false;
        for (ArgIndex x : attackers[a]) {
            all_out = all_out && l[x] == Label::Out;
            some_in = some_in || l[x] == Label::In;
        }
        if ((l[a] == Label::In) != all_out) return false;
        if ((l[a] == Label::Out) != some_in) return false;
    }
    return true;
}

}  // namespace

DungSemantics dung_complete_oracle(const DungFramework& d) {
    const std::size_t n = d.arguments.size();
    std::vector<std::vector<ArgIndex>> attackers(n);
    for (const auto& [s, t] : d.attacks) attackers.at(t).push_back(s);

    DungSemantics out;
    out.complete.semantics = Semantics::DungComplete;
    // Plain base-3 counter, independent of the library's enumerator.
    std::vector<Label> l(n, Label::In);
    for (bool more = true; more;) {
        if (complete_by_clauses(attackers, l)) out.complete.labellings.emplace_back(std::span<const Label>(l));
        more = false;
        for (std::size_t i = n; i-- > 0;) {
            if (l[i] != Label::Undec) {
                l[i] = static_cast<Label>(static_cast<int>(l[i]) + 1);
                more = true;
                break;
            }
            l[i] = Label::In;
        }
    }
    canonicalize(out.complete.labellings);

    out.preferred.semantics = Semantics::DungPreferred;
    out.preferred.labellings = maximal_elements(out.complete.labellings);
    out.stable.semantics = Semantics::DungStable;
    for (const Labelling& x : out.complete.labellings)
        if (x.count(Label::Undec) == 0) out.stable.labellings.push_back(x);
    out.grounded.semantics = Semantics::DungGrounded;
    if (!out.complete.empty()) out.grounded.labellings.push_back(labelling_meet(out.complete.labellings));
    return out;
}

}  // namespace maymust
