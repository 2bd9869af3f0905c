#include "maymust/generate.hpp"

#include <charconv>
#include <limits>

#include "maymust/error.hpp"

namespace maymust {

std::uint64_t splitmix64(std::uint64_t& state) noexcept {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::optional<TupleConfig> parse_tuple_mode(std::string_view s) {
    if (s == "dung") return TupleConfig{TupleMode::Dung, std::nullopt};
    if (s == "ratio" || s == "ratio-preset") return TupleConfig{TupleMode::RatioPreset, std::nullopt};
    if (s == "uniform") return TupleConfig{TupleMode::Uniform, std::nullopt};
    if (s.starts_with("uniform:")) {
        const std::string_view num = s.substr(8);
        std::uint32_t bound = 0;
        const auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), bound);
        if (ec != std::errc{} || ptr != num.data() + num.size() || num.empty()) return std::nullopt;
        return TupleConfig{TupleMode::Uniform, bound};
    }
    return std::nullopt;
}

namespace {

class Stream {
public:
    explicit Stream(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() noexcept { return splitmix64(state_); }

    /// Uniform in [0, bound] by rejection.
    std::uint64_t upto(std::uint64_t bound) noexcept {
        if (bound == std::numeric_limits<std::uint64_t>::max()) return next();
        const std::uint64_t range = bound + 1;
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
        std::uint64_t v;
        do v = next();
        while (v >= limit);
        return v % range;
    }

    /// True with probability exactly p (up to the 2^-64 grid).
    bool bernoulli(const Rational& p) noexcept {
        const unsigned __int128 u = next();
        return u * p.den < (static_cast<unsigned __int128>(p.num) << 64);
    }

    /// (lo, hi) uniform over all pairs with lo ≤ hi ≤ bound.
    std::pair<std::uint32_t, std::uint32_t> ordered_pair(std::uint32_t bound) noexcept {
        const std::uint64_t b = bound;
        std::uint64_t k = upto((b + 1) * (b + 2) / 2 - 1);
        // Pairs enumerated as lo = 0..bound, hi = lo..bound.
        std::uint32_t lo = 0;
        while (k > b - lo) {
            k -= b - lo + 1;
            ++lo;
        }
        return {lo, static_cast<std::uint32_t>(lo + k)};
    }

private:
    std::uint64_t state_;
};

}  // namespace

InstanceDocument generate_document(const GeneratorParams& params) {
    if (params.edge_prob.den == 0 || Rational{1, 1} < params.edge_prob)
        throw Error(ErrorKind::InvalidProbability, "edge probability must lie in [0,1]");
    Stream rng(params.seed);
    const std::size_t n = params.n;
    InstanceDocument doc;
    std::vector<std::size_t> indegree(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (rng.bernoulli(params.edge_prob)) {
                doc.attacks.push_back({"a" + std::to_string(i + 1), "a" + std::to_string(j + 1), 0});
                ++indegree[j];
            }
    for (std::size_t i = 0; i < n; ++i) {
        InstanceDocument::Argument arg{"a" + std::to_string(i + 1), NuanceTuple{}, 0};
        switch (params.tuples.mode) {
            case TupleMode::Dung: arg.spec = DungDirective{}; break;
            case TupleMode::RatioPreset: arg.spec = percentage_preset(); break;
            case TupleMode::Uniform: {
                const auto bound = params.tuples.max_bound.value_or(static_cast<std::uint32_t>(indegree[i] + 1));
                const auto [am, aM] = rng.ordered_pair(bound);
                const auto [rm, rM] = rng.ordered_pair(bound);
                arg.spec = NuanceTuple{am, aM, rm, rM};
                break;
            }
        }
        doc.arguments.push_back(std::move(arg));
    }
    return doc;
}

Framework generate_random(const GeneratorParams& params) { return resolve(generate_document(params)); }

}  // namespace maymust
