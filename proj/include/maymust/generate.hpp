#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "maymust/framework.hpp"
#include "maymust/io.hpp"

namespace maymust {

enum class TupleMode { Dung, Uniform, RatioPreset };

struct TupleConfig {
    TupleMode mode = TupleMode::Uniform;
    /// Upper bound for uniform draws; defaults to in-degree + 1 per argument.
    std::optional<std::uint32_t> max_bound;
};

/// "dung", "uniform", "uniform:K", "ratio".
std::optional<TupleConfig> parse_tuple_mode(std::string_view s);

struct GeneratorParams {
    std::size_t n = 0;
    Rational edge_prob{3, 10};
    TupleConfig tuples;
    std::uint64_t seed = 0;
};

/// Deterministic for a fixed seed on every platform: edges (self-loops
/// included) are drawn with exact rational probability, tuples uniformly with
/// may ≤ must. Throws InvalidProbability when edge_prob > 1.
InstanceDocument generate_document(const GeneratorParams& params);
Framework generate_random(const GeneratorParams& params);

/// SplitMix64 step, used to derive per-instance seeds.
std::uint64_t splitmix64(std::uint64_t& state) noexcept;

}  // namespace maymust
