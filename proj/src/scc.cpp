#include "maymust/scc.hpp"

#include <algorithm>
#include <functional>
#include <queue>

#include "maymust/designation.hpp"
#include "maymust/error.hpp"

namespace maymust {

namespace {

// Iterative Tarjan; returns component id per vertex (ids in completion order).
std::vector<std::size_t> tarjan(const Framework& f, std::size_t& count) {
    const std::size_t n = f.size();
    constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
    std::vector<std::size_t> index(n, kUnvisited), low(n, 0), comp(n, kUnvisited);
    std::vector<bool> on_stack(n, false);
    std::vector<ArgIndex> stack;
    std::vector<std::pair<ArgIndex, std::size_t>> call;  // (vertex, next edge)
    std::size_t next_index = 0;
    count = 0;

    for (ArgIndex root = 0; root < n; ++root) {
        if (index[root] != kUnvisited) continue;
        call.emplace_back(root, 0);
        while (!call.empty()) {
            auto& [v, edge] = call.back();
            if (edge == 0 && index[v] == kUnvisited) {
                index[v] = low[v] = next_index++;
                stack.push_back(v);
                on_stack[v] = true;
            }
            const auto& out = f.targets(v);
            if (edge < out.size()) {
                const ArgIndex w = out[edge++];
                if (index[w] == kUnvisited) {
                    call.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            if (low[v] == index[v]) {
                ArgIndex w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp[w] = count;
                } while (w != v);
                ++count;
            }
            const ArgIndex done = v;
            call.pop_back();
            if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
        }
    }
    return comp;
}

enum class SearchMode { Exact, PreMaximal };

// Depth-first assignment in SCC topological order. An argument's constraint
// is checked as soon as it and all its attackers carry labels.
class OrderedSearch {
public:
    OrderedSearch(const Framework& f, SearchMode mode) : f_(f), mode_(mode), current_(f.size()) {
        const SccInfo info = sccs(f);
        for (const auto& c : info.components) order_.insert(order_.end(), c.begin(), c.end());
        std::vector<std::size_t> pos(f.size());
        for (std::size_t i = 0; i < order_.size(); ++i) pos[order_[i]] = i;
        ready_.assign(f.size(), {});
        for (ArgIndex a = 0; a < f.size(); ++a) {
            std::size_t last = pos[a];
            for (ArgIndex x : f.attackers(a)) last = std::max(last, pos[x]);
            ready_[last].push_back(a);
        }
    }

    /// `leaf` returns false to stop the search.
    void run(const std::function<bool(const Labelling&)>& leaf) {
        stopped_ = false;
        descend(0, leaf);
    }

private:
    bool admissible(ArgIndex a) const {
        const Label own = *current_.get(a);
        if (mode_ == SearchMode::PreMaximal && own == Label::Undec) return true;
        return designated_unchecked(f_, current_, a).contains(own);
    }

    void descend(std::size_t depth, const std::function<bool(const Labelling&)>& leaf) {
        if (stopped_) return;
        if (depth == order_.size()) {
            if (!leaf(current_)) stopped_ = true;
            return;
        }
        const ArgIndex a = order_[depth];
        for (Label l : kAllLabels) {
            current_.set(a, l);
            const bool ok = std::all_of(ready_[depth].begin(), ready_[depth].end(),
                                        [&](ArgIndex b) { return admissible(b); });
            if (ok) descend(depth + 1, leaf);
            if (stopped_) break;
        }
        current_.unset(a);
    }

    const Framework& f_;
    SearchMode mode_;
    std::vector<ArgIndex> order_;
    std::vector<std::vector<ArgIndex>> ready_;
    Labelling current_;
    bool stopped_ = false;
};

std::vector<Labelling> distinct_restrictions(std::span<const Labelling> ls, std::span<const ArgIndex> subset) {
    std::vector<Labelling> out;
    out.reserve(ls.size());
    for (const Labelling& l : ls) out.push_back(restrict(l, subset));
    canonicalize(out);
    return out;
}

}  // namespace

SccInfo sccs(const Framework& f) {
    const std::size_t n = f.size();
    std::size_t count = 0;
    const std::vector<std::size_t> raw = tarjan(f, count);

    // Re-number components in a canonical topological order: Kahn's algorithm
    // preferring the component with the smallest member.
    std::vector<std::vector<ArgIndex>> members(count);
    for (ArgIndex a = 0; a < n; ++a) members[raw[a]].push_back(a);
    std::vector<std::vector<std::size_t>> succ(count);
    std::vector<std::size_t> indegree(count, 0);
    for (const auto& [s, t] : f.attacks()) {
        if (raw[s] == raw[t]) continue;
        succ[raw[s]].push_back(raw[t]);
    }
    for (auto& s : succ) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        for (std::size_t t : s) ++indegree[t];
    }
    using Entry = std::pair<ArgIndex, std::size_t>;  // (smallest member, raw id)
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> ready;
    for (std::size_t c = 0; c < count; ++c)
        if (indegree[c] == 0) ready.emplace(members[c].front(), c);

    SccInfo info;
    info.component_of.assign(n, 0);
    info.depth.assign(n, 0);
    std::vector<std::size_t> comp_depth(count, 0);
    std::vector<std::size_t> renumber(count, 0);
    while (!ready.empty()) {
        const std::size_t c = ready.top().second;
        ready.pop();
        renumber[c] = info.components.size();
        info.components.push_back(members[c]);
        for (std::size_t t : succ[c]) {
            // Longest attacking chain: depth(t) = 1 + max over attacking components.
            comp_depth[t] = std::max(comp_depth[t], comp_depth[c] + 1);
            if (--indegree[t] == 0) ready.emplace(members[t].front(), t);
        }
    }
    for (ArgIndex a = 0; a < n; ++a) {
        info.component_of[a] = renumber[raw[a]];
        info.depth[a] = comp_depth[raw[a]];
        info.max_depth = std::max(info.max_depth, info.depth[a]);
    }
    info.bundles.assign(n == 0 ? 0 : info.max_depth + 1, {});
    for (ArgIndex a = 0; a < n; ++a) info.bundles[info.depth[a]].push_back(a);
    return info;
}

ReductionPlan plan_reduction(const Framework& f, std::span<const ArgIndex> keep, const Labelling& frozen) {
    ReductionPlan plan;
    plan.kept.assign(keep.begin(), keep.end());
    std::sort(plan.kept.begin(), plan.kept.end());
    plan.kept.erase(std::unique(plan.kept.begin(), plan.kept.end()), plan.kept.end());
    std::vector<bool> kept(f.size(), false);
    for (ArgIndex a : plan.kept) kept.at(a) = true;

    for (ArgIndex a : plan.kept) {
        bool external = false;
        std::size_t out_shift = 0, in_shift = 0;
        for (ArgIndex x : f.attackers(a)) {
            if (kept[x]) continue;
            external = true;
            const auto v = frozen.get(x);
            if (!v)
                throw Error(ErrorKind::FrozenLabelMissing,
                            "external attacker '" + f.name(x) + "' of '" + f.name(a) + "' has no frozen label");
            if (*v == Label::Out) ++out_shift;
            else if (*v == Label::In) ++in_shift;
        }
        if (external) plan.boundary_shifts.emplace(a, std::pair{out_shift, in_shift});
    }
    return plan;
}

Framework apply_reduction(const Framework& f, const ReductionPlan& plan) {
    const auto shift = [](std::uint32_t v, std::size_t by) {
        return by >= v ? std::uint32_t{0} : static_cast<std::uint32_t>(v - by);
    };
    std::vector<std::size_t> local(f.size(), static_cast<std::size_t>(-1));
    std::vector<std::string> names;
    std::vector<NuanceTuple> tuples;
    for (std::size_t i = 0; i < plan.kept.size(); ++i) {
        const ArgIndex a = plan.kept[i];
        local[a] = i;
        names.push_back(f.name(a));
        NuanceTuple t = f.tuple(a);
        if (const auto it = plan.boundary_shifts.find(a); it != plan.boundary_shifts.end()) {
            const auto [out_shift, in_shift] = it->second;
            t = NuanceTuple{shift(t.acc_may, out_shift), shift(t.acc_must, out_shift), shift(t.rej_may, in_shift),
                            shift(t.rej_must, in_shift)};
        }
        tuples.push_back(t);
    }
    std::vector<std::pair<ArgIndex, ArgIndex>> edges;
    for (const auto& [s, t] : f.attacks())
        if (local[s] != static_cast<std::size_t>(-1) && local[t] != static_cast<std::size_t>(-1))
            edges.emplace_back(local[s], local[t]);
    return Framework::from_indices(std::move(names), std::move(tuples), edges);
}

Framework conservative_reduction(const Framework& f, std::span<const ArgIndex> keep, const Labelling& frozen) {
    return apply_reduction(f, plan_reduction(f, keep, frozen));
}

BottomUpCandidates bottom_up_candidates(const Framework& f) {
    const std::size_t n = f.size();
    BottomUpCandidates out;
    if (n == 0) {
        out.labellings.emplace_back(0);
        return out;
    }
    const SccInfo info = sccs(f);
    std::vector<std::vector<std::size_t>> comps_at(info.max_depth + 1);
    for (std::size_t c = 0; c < info.components.size(); ++c)
        comps_at[info.depth[info.components[c].front()]].push_back(c);

    // Only the shifted tuples of a component matter, so solutions are memoized on them.
    std::map<std::pair<std::size_t, std::vector<NuanceTuple>>, std::vector<Labelling>> memo;
    const auto solve_component = [&](std::size_t c, const Labelling& frozen) -> const std::vector<Labelling>& {
        const Framework reduced = conservative_reduction(f, info.components[c], frozen);
        auto key = std::pair{c, reduced.tuples()};
        auto it = memo.find(key);
        if (it == memo.end())
            it = memo.emplace(std::move(key), maximally_proper_unchecked(reduced, {Engine::Brute, 1}).labellings).first;
        return it->second;
    };

    std::vector<Labelling> partial{Labelling(n)};
    out.per_depth.resize(info.max_depth + 1);
    for (std::size_t d = 0; d <= info.max_depth; ++d) {
        std::vector<Labelling> next;
        for (const Labelling& p : partial) {
            std::vector<Labelling> branch{p};
            for (std::size_t c : comps_at[d]) {
                const auto& members = info.components[c];
                const std::vector<Labelling>& local = solve_component(c, p);
                std::vector<Labelling> grown;
                grown.reserve(branch.size() * local.size());
                for (const Labelling& b : branch)
                    for (const Labelling& sol : local) {
                        Labelling g = b;
                        for (std::size_t i = 0; i < members.size(); ++i) g.set(members[i], *sol.get(i));
                        grown.push_back(std::move(g));
                    }
                branch = std::move(grown);
                if (branch.empty()) break;
            }
            for (Labelling& b : branch) {
                out.per_depth[d].push_back(restrict(b, info.bundles[d]));
                next.push_back(std::move(b));
            }
        }
        canonicalize(out.per_depth[d]);
        partial = std::move(next);
    }
    out.labellings = std::move(partial);
    canonicalize(out.labellings);
    return out;
}

std::vector<ArgIndex> reachable_proper_union(const Framework& f) {
    std::vector<bool> reached(f.size(), false);
    std::size_t remaining = f.size();
    OrderedSearch search(f, SearchMode::PreMaximal);
    search.run([&](const Labelling& l) {
        for (ArgIndex a : proper_arguments(f, l))
            if (!reached[a]) {
                reached[a] = true;
                --remaining;
            }
        return remaining > 0;
    });
    std::vector<ArgIndex> out;
    for (ArgIndex a = 0; a < f.size(); ++a)
        if (reached[a]) out.push_back(a);
    return out;
}

SemanticsResult bottom_up_maxi_unchecked(const Framework& f) {
    const BottomUpCandidates cands = bottom_up_candidates(f);
    const std::vector<ArgIndex> target = reachable_proper_union(f);
    SemanticsResult r{Semantics::MaxiComplete, Engine::Scc, {}, std::nullopt};
    for (const Labelling& l : cands.labellings)
        if (proper_arguments(f, l) == target) r.labellings.push_back(l);
    if (!r.empty()) r.proper_set = target;
    return r;
}

SemanticsResult bottom_up_maxi(const Framework& f) {
    SemanticsResult r = bottom_up_maxi_unchecked(f);
    if (r.empty() && !f.empty())
        throw Error(ErrorKind::NoMaximallyProper, "no candidate reaches the union of proper sets");
    return r;
}

SemanticsResult exact_pruned(const Framework& f) {
    SemanticsResult r{Semantics::Exact, Engine::Scc, {}, std::nullopt};
    OrderedSearch search(f, SearchMode::Exact);
    search.run([&](const Labelling& l) {
        r.labellings.push_back(l);
        return true;
    });
    canonicalize(r.labellings);
    return r;
}

std::vector<DepthAgreement> depth_agreement(const Framework& f, const SemanticsResult& maxi) {
    std::vector<DepthAgreement> out;
    if (f.empty()) return out;
    const SccInfo info = sccs(f);
    const BottomUpCandidates cands = bottom_up_candidates(f);
    for (std::size_t d = 0; d <= info.max_depth; ++d) {
        DepthAgreement row;
        row.depth = d;
        row.from_global = distinct_restrictions(maxi.labellings, info.bundles[d]);
        row.from_bottom_up = cands.per_depth[d];
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace maymust
