#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace maymust {

/// Declaration order fixes the canonical ordering IN < OUT < UNDEC.
enum class Label : std::uint8_t { In = 0, Out = 1, Undec = 2 };

inline constexpr std::array<Label, 3> kAllLabels{Label::In, Label::Out, Label::Undec};

constexpr std::string_view to_string(Label l) noexcept {
    switch (l) {
        case Label::In: return "in";
        case Label::Out: return "out";
        case Label::Undec: return "undec";
    }
    return "?";
}

constexpr std::optional<Label> parse_label(std::string_view s) noexcept {
    if (s == "in") return Label::In;
    if (s == "out") return Label::Out;
    if (s == "undec") return Label::Undec;
    return std::nullopt;
}

}  // namespace maymust
