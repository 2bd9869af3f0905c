#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "maymust/label.hpp"

namespace maymust {

using ArgIndex = std::size_t;

/// A partial map from the arguments 0..universe-1 of a framework to labels.
///
/// Each slot holds one label or nothing; the domain is the set of assigned
/// slots. Ordering is lexicographic by argument index with IN < OUT < UNDEC,
/// unassigned slots sorting last, which is the canonical output order.
class Labelling {
public:
    Labelling() = default;
    explicit Labelling(std::size_t universe) : slots_(universe, kUnassigned) {}
    Labelling(std::initializer_list<Label> labels);
    explicit Labelling(std::span<const Label> labels);

    static Labelling uniform(std::size_t universe, Label fill);

    std::size_t universe() const noexcept { return slots_.size(); }
    bool defined(ArgIndex a) const noexcept { return a < slots_.size() && slots_[a] != kUnassigned; }
    std::optional<Label> get(ArgIndex a) const noexcept;
    /// Throws UndefinedArgumentLabel when `a` is outside the domain.
    Label at(ArgIndex a) const;
    void set(ArgIndex a, Label l);
    void unset(ArgIndex a);

    bool is_total() const noexcept;
    std::size_t domain_size() const noexcept;
    std::vector<ArgIndex> domain() const;
    std::size_t count(Label l) const noexcept;

    friend bool operator==(const Labelling&, const Labelling&) = default;
    friend std::strong_ordering operator<=>(const Labelling&, const Labelling&) = default;

private:
    static constexpr std::uint8_t kUnassigned = 3;
    std::vector<std::uint8_t> slots_;
};

/// l1 ≼ l2: every IN of l1 is IN in l2 and every OUT of l1 is OUT in l2.
/// Throws DomainMismatch unless both labellings share one domain.
bool labelling_leq(const Labelling& l1, const Labelling& l2);
/// Strict part of the order.
bool labelling_lt(const Labelling& l1, const Labelling& l2);

/// Greatest lower bound under ≼. Throws EmptyInput or DomainMismatch.
Labelling labelling_meet(std::span<const Labelling> ls);

Labelling restrict(const Labelling& l, std::span<const ArgIndex> subset);

enum class ComposeMode { Total, Strict };

/// ⊕: defined on the symmetric difference of both domains, preferring l1.
/// Strict mode throws DomainMismatch when the domains overlap.
Labelling compose(const Labelling& l1, const Labelling& l2, ComposeMode mode = ComposeMode::Total);

/// ≼-maximal members of `ls`, canonical order.
std::vector<Labelling> maximal_elements(std::span<const Labelling> ls);

/// Sort and deduplicate into canonical order.
void canonicalize(std::vector<Labelling>& ls);

}  // namespace maymust
