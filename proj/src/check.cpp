#include "maymust/check.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <thread>

#include "maymust/adf.hpp"
#include "maymust/dung.hpp"
#include "maymust/error.hpp"
#include "maymust/io.hpp"
#include "maymust/scc.hpp"
#include "maymust/semantics.hpp"

namespace maymust {

bool DiffReport::passed() const {
    return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.passed; });
}

std::vector<const Verdict*> DiffReport::failures() const {
    std::vector<const Verdict*> out;
    for (const Verdict& v : verdicts)
        if (!v.passed) out.push_back(&v);
    return out;
}

std::size_t brute_force_bound() {
    if (const char* env = std::getenv("MAYMUST_MAX_BRUTE")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0') return v;
    }
    return 12;
}

namespace {

std::string first_difference(const Framework& f, const std::vector<Labelling>& a, const std::vector<Labelling>& b) {
    for (const Labelling& l : a)
        if (!std::binary_search(b.begin(), b.end(), l)) return format_labelling(f, l);
    for (const Labelling& l : b)
        if (!std::binary_search(a.begin(), a.end(), l)) return format_labelling(f, l);
    return {};
}

bool subset(const std::vector<Labelling>& a, const std::vector<Labelling>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::string summary(const Framework& f) {
    std::ostringstream s;
    s << "n=" << f.size() << " attacks=" << f.attacks().size();
    if (!f.empty()) s << " max_depth=" << sccs(f).max_depth;
    s << " dung=" << (is_dung_instance(f) ? "yes" : "no");
    return s.str();
}

class Recorder {
public:
    void add(std::string check, bool passed, std::string detail = {}, std::string counterexample = {}) {
        verdicts.push_back(Verdict{std::move(check), passed, std::move(detail), {}, std::move(counterexample)});
    }

    std::vector<Verdict> verdicts;
};

std::vector<Verdict> run_checks(const Framework& f) {
    Recorder rec;

    const SemanticsResult exact_b = exact_semantics(f, {Engine::Brute, 1});
    const SemanticsResult exact_s = exact_semantics(f, {Engine::Scc, 1});
    rec.add("engines.exact", exact_b.labellings == exact_s.labellings, "brute vs scc exact semantics",
            first_difference(f, exact_b.labellings, exact_s.labellings));

    const SemanticsResult maxi_b = maximally_proper_unchecked(f, {Engine::Brute, 1});
    const SemanticsResult maxi_s = maximally_proper_unchecked(f, {Engine::Scc, 1});
    rec.add("engines.maxi", maxi_b.labellings == maxi_s.labellings, "brute vs scc maximally proper semantics",
            first_difference(f, maxi_b.labellings, maxi_s.labellings));

    const auto& exact = exact_b.labellings;
    const auto& maxi = maxi_b.labellings;
    rec.add("maxi.exact-subset", subset(exact, maxi), "exact ⊆ maxi",
            first_difference(f, exact, subset(exact, maxi) ? exact : maxi));
    rec.add("maxi.exact-nonempty-equal", exact.empty() || exact == maxi, "exact ≠ ∅ ⇒ exact = maxi",
            exact.empty() ? std::string{} : first_difference(f, exact, maxi));
    rec.add("maxi.nonempty", f.empty() || !maxi.empty(),
            maxi.empty() && !f.empty() ? "no maximally proper labelling although A ≠ ∅" : "A ≠ ∅ ⇒ maxi ≠ ∅");

    bool common = true;
    std::string odd;
    for (const Labelling& l : maxi)
        if (!maxi_b.proper_set || proper_arguments(f, l) != *maxi_b.proper_set) {
            common = false;
            odd = format_labelling(f, l);
            break;
        }
    rec.add("maxi.common-proper-set", common, "all maximally proper labellings share one proper set", odd);

    bool depth_ok = true;
    std::string depth_detail = "per-depth restrictions match the bottom-up composition";
    std::string depth_witness;
    for (const DepthAgreement& row : depth_agreement(f, maxi_b)) {
        if (row.equal()) continue;
        depth_ok = false;
        depth_detail = "depth " + std::to_string(row.depth) + ": " + std::to_string(row.from_global.size()) +
                       " global restrictions vs " + std::to_string(row.from_bottom_up.size()) + " bottom-up";
        depth_witness = first_difference(f, row.from_global, row.from_bottom_up);
        break;
    }
    rec.add("bottom-up.depth-restriction", depth_ok, depth_detail, depth_witness);

    const SemanticsResult preferred = preferred_of(maxi_b, Semantics::MaxiPreferred);
    const SemanticsResult stable = stable_of(maxi_b, Semantics::MaxiStable);
    rec.add("maxi.preferred-subset-complete", subset(preferred.labellings, maxi), "maxi.preferred ⊆ maxi.complete");
    std::vector<Labelling> undec_free_preferred;
    for (const Labelling& l : preferred.labellings)
        if (l.count(Label::Undec) == 0) undec_free_preferred.push_back(l);
    rec.add("maxi.stable-undec-free-preferred", undec_free_preferred == stable.labellings,
            "maxi.stable = undec-free maxi.preferred",
            first_difference(f, undec_free_preferred, stable.labellings));

    if (is_dung_instance(f)) {
        const DungSemantics oracle = dung_complete_oracle(underlying_dung(f));
        std::string why;
        if (maxi != oracle.complete.labellings) why = "maxi.complete differs from classical complete";
        else if (preferred.labellings != oracle.preferred.labellings) why = "maxi.preferred differs from classical preferred";
        else if (stable.labellings != oracle.stable.labellings) why = "maxi.stable differs from classical stable";
        else if (maxi.empty() || std::vector{labelling_meet(maxi)} != oracle.grounded.labellings)
            why = "maxi.grounded differs from classical grounded";
        else if (maxi != exact) why = "maxi.complete differs from exact";
        rec.add("dung.correspondence", why.empty(), why.empty() ? "maxi.* match the classical oracle" : why,
                first_difference(f, maxi, oracle.complete.labellings));
    }

    const SemanticsResult adf_com = adf_complete(f);
    const KleeneTrace trace = kleene_iterate(f);
    std::string adf_why;
    if (!trace.converged) {
        adf_why = "Kleene iteration from all-undec does not converge";
    } else {
        const Labelling& fix = trace.iterates.back();
        if (gamma(f, fix) != fix) adf_why = "Kleene limit is not a fixpoint";
        else if (!adf_com.contains(fix)) adf_why = "Kleene limit missing from the fixpoint scan";
        else
            for (const Labelling& other : adf_com.labellings)
                if (!labelling_leq(fix, other)) {
                    adf_why = "Kleene limit is not below fixpoint " + format_labelling(f, other);
                    break;
                }
    }
    rec.add("adf.grounded-least-fixpoint", adf_why.empty(), adf_why.empty() ? "Kleene limit is the least fixpoint" : adf_why,
            trace.iterates.empty() ? std::string{} : format_labelling(f, trace.iterates.back()));
    const auto adf_prf = maximal_elements(adf_com.labellings);
    rec.add("adf.preferred-subset-complete", subset(adf_prf, adf_com.labellings), "adf.preferred ⊆ adf.complete");

    return std::move(rec.verdicts);
}

bool fails(const Framework& f, const std::string& check) {
    for (const Verdict& v : run_checks(f))
        if (v.check == check) return !v.passed;
    return false;
}

Framework without_argument(const Framework& f, ArgIndex drop, bool dung) {
    std::vector<std::string> names;
    std::vector<NuanceTuple> tuples;
    std::vector<ArgIndex> local(f.size(), 0);
    for (ArgIndex a = 0; a < f.size(); ++a) {
        if (a == drop) continue;
        local[a] = names.size();
        names.push_back(f.name(a));
        tuples.push_back(f.tuple(a));
    }
    std::vector<std::pair<ArgIndex, ArgIndex>> edges;
    for (const auto& [s, t] : f.attacks())
        if (s != drop && t != drop) edges.emplace_back(local[s], local[t]);
    if (dung) return dung_to_maymust(DungFramework{names, edges});
    return Framework::from_indices(std::move(names), std::move(tuples), edges);
}

Framework without_attack(const Framework& f, std::size_t drop, bool dung) {
    std::vector<std::pair<ArgIndex, ArgIndex>> edges = f.attacks();
    edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(drop));
    if (dung) return dung_to_maymust(DungFramework{f.names(), edges});
    return Framework::from_indices(f.names(), f.tuples(), edges);
}

// Greedy one-step shrinking until no single deletion preserves the failure.
Framework minimize(Framework f, const std::string& check) {
    const bool dung = is_dung_instance(f);
    for (bool progress = true; progress;) {
        progress = false;
        for (ArgIndex a = 0; a < f.size() && !progress; ++a) {
            Framework g = without_argument(f, a, dung);
            if (fails(g, check)) {
                f = std::move(g);
                progress = true;
            }
        }
        for (std::size_t e = 0; e < f.attacks().size() && !progress; ++e) {
            Framework g = without_attack(f, e, dung);
            if (fails(g, check)) {
                f = std::move(g);
                progress = true;
            }
        }
    }
    return f;
}

}  // namespace

DiffReport check_instance(const Framework& f, const CheckOptions& opts) {
    const std::size_t bound = brute_force_bound();
    if (f.size() > bound)
        throw Error(ErrorKind::InstanceTooLarge, std::to_string(f.size()) + " arguments exceed the brute-force bound of " +
                                                     std::to_string(bound));
    DiffReport report{summary(f), run_checks(f)};
    for (Verdict& v : report.verdicts) {
        if (v.passed) continue;
        const Framework repro = opts.minimize ? minimize(f, v.check) : f;
        v.reproducer = serialize_mmaf(repro);
        if (opts.minimize)
            for (const Verdict& w : run_checks(repro))
                if (w.check == v.check) {
                    v.detail = w.detail;
                    v.counterexample = w.counterexample;
                }
    }
    return report;
}

GeneratorParams fuzz_instance_params(const FuzzParams& p, std::size_t i) {
    std::uint64_t state = p.seed + i * 0x9e3779b97f4a7c15ULL;
    std::uint64_t derived = splitmix64(state);
    GeneratorParams g;
    g.n = p.max_args == 0 ? 0 : 1 + static_cast<std::size_t>(splitmix64(derived) % p.max_args);
    g.seed = splitmix64(derived);
    g.edge_prob = p.edge_prob;
    g.tuples = p.tuples;
    return g;
}

FuzzSummary fuzz(const FuzzParams& p, const CheckOptions& opts) {
    std::vector<DiffReport> reports(p.count);
    const auto work = [&](std::size_t i) {
        const Framework f = generate_random(fuzz_instance_params(p, i));
        reports[i] = check_instance(f, opts);
        reports[i].instance = "#" + std::to_string(i) + " " + reports[i].instance;
    };
    const unsigned threads = std::max(1u, p.threads);
    if (threads == 1) {
        for (std::size_t i = 0; i < p.count; ++i) work(i);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < threads; ++w)
            pool.emplace_back([&, w] {
                for (std::size_t i = w; i < p.count; i += threads) work(i);
            });
    }

    FuzzSummary s;
    s.instances = p.count;
    for (const DiffReport& r : reports)
        for (const Verdict& v : r.verdicts) {
            auto it = std::find_if(s.tallies.begin(), s.tallies.end(), [&](const auto& t) { return t.check == v.check; });
            if (it == s.tallies.end()) it = s.tallies.insert(s.tallies.end(), FuzzSummary::Tally{v.check, 0, 0});
            (v.passed ? it->passed : it->failed)++;
            if (!v.passed) {
                Verdict archived = v;
                archived.detail = r.instance + ": " + v.detail;
                s.failures.push_back(std::move(archived));
            }
        }
    return s;
}

std::string render_report(const DiffReport& r) {
    std::ostringstream out;
    out << "instance: " << r.instance << '\n';
    for (const Verdict& v : r.verdicts) {
        out << (v.passed ? "PASS " : "FAIL ") << v.check << " - " << v.detail << '\n';
        if (!v.passed) {
            if (!v.counterexample.empty()) out << "  counterexample: " << v.counterexample << '\n';
            out << "  reproducer:\n";
            std::istringstream lines(v.reproducer);
            for (std::string line; std::getline(lines, line);) out << "    " << line << '\n';
        }
    }
    out << (r.passed() ? "RESULT: pass" : "RESULT: fail") << '\n';
    return out.str();
}

std::string render_summary(const FuzzSummary& s) {
    std::ostringstream out;
    out << "instances: " << s.instances << '\n';
    for (const auto& t : s.tallies)
        out << (t.failed == 0 ? "PASS " : "FAIL ") << t.check << " passed=" << t.passed << " failed=" << t.failed << '\n';
    for (const Verdict& v : s.failures) {
        out << "failure " << v.check << ": " << v.detail << '\n';
        if (!v.counterexample.empty()) out << "  counterexample: " << v.counterexample << '\n';
        out << "  reproducer:\n";
        std::istringstream lines(v.reproducer);
        for (std::string line; std::getline(lines, line);) out << "    " << line << '\n';
    }
    out << (s.passed() ? "RESULT: pass" : "RESULT: fail") << '\n';
    return out.str();
}

}  // namespace maymust
