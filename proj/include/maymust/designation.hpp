#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>

#include "maymust/framework.hpp"
#include "maymust/labelling.hpp"

namespace maymust {

struct AttackerCounts {
    std::size_t n_out = 0;
    std::size_t n_in = 0;

    friend bool operator==(const AttackerCounts&, const AttackerCounts&) = default;
};

/// Which part of a may-must scale a count reaches.
enum class Condition : std::uint8_t { Must, MayStrict, Not };

std::string_view to_string(Condition c) noexcept;

struct ConditionProfile {
    Condition acc = Condition::Not;
    Condition rej = Condition::Not;

    friend bool operator==(const ConditionProfile&, const ConditionProfile&) = default;
};

/// Subset of {IN, OUT, UNDEC} stored as a 3-bit mask.
class LabelSet {
public:
    constexpr LabelSet() = default;
    constexpr LabelSet(std::initializer_list<Label> ls) {
        for (Label l : ls) insert(l);
    }

    constexpr void insert(Label l) noexcept { bits_ |= bit(l); }
    constexpr bool contains(Label l) const noexcept { return (bits_ & bit(l)) != 0; }
    constexpr bool empty() const noexcept { return bits_ == 0; }
    constexpr std::size_t size() const noexcept {
        return std::size_t{(bits_ & 1u) != 0} + ((bits_ & 2u) != 0) + ((bits_ & 4u) != 0);
    }
    constexpr bool subset_of(LabelSet other) const noexcept { return (bits_ & ~other.bits_) == 0; }
    /// Returns the label if this set is a singleton.
    constexpr std::optional<Label> only() const noexcept {
        if (bits_ == 1u) return Label::In;
        if (bits_ == 2u) return Label::Out;
        if (bits_ == 4u) return Label::Undec;
        return std::nullopt;
    }
    constexpr std::uint8_t bits() const noexcept { return bits_; }

    friend constexpr bool operator==(LabelSet, LabelSet) = default;

private:
    static constexpr std::uint8_t bit(Label l) noexcept { return std::uint8_t(1u << static_cast<unsigned>(l)); }
    std::uint8_t bits_ = 0;
};

std::string to_string(LabelSet s);

/// Classifies a count against a (may, must) scale.
constexpr Condition classify(std::uint32_t may, std::uint32_t must, std::size_t count) noexcept {
    if (must <= count) return Condition::Must;
    if (may <= count) return Condition::MayStrict;
    return Condition::Not;
}

ConditionProfile profile_of(const NuanceTuple& t, AttackerCounts counts) noexcept;

/// Label designation from the three clauses:
///   IN    iff may-a and not must-r
///   OUT   iff may-r and not must-a
///   UNDEC iff (must-a and must-r) or may_s-a or may_s-r or (not-a and not-r)
LabelSet designate(ConditionProfile p) noexcept;

/// Counts of OUT/IN attackers of `a`; a self-attacker counts its own label.
/// Throws UndefinedAttackerLabel.
AttackerCounts attacker_counts(const Framework& f, const Labelling& l, ArgIndex a);
ConditionProfile condition_profile(const Framework& f, const Labelling& l, ArgIndex a);
LabelSet designated_labels(const Framework& f, const Labelling& l, ArgIndex a);
/// Throws UndefinedArgumentLabel if `a` is unlabelled, UndefinedAttackerLabel
/// if any attacker is.
bool is_proper(const Framework& f, const Labelling& l, ArgIndex a);

/// Designation for a total labelling without bounds or domain checks; the
/// enumeration engines use this in their inner loops.
LabelSet designated_unchecked(const Framework& f, const Labelling& l, ArgIndex a) noexcept;

}  // namespace maymust
