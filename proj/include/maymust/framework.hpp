#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "maymust/labelling.hpp"

namespace maymust {

/// May-must acceptance scale (acc_may, acc_must) over rejected attackers and
/// rejection scale (rej_may, rej_must) over accepted attackers.
struct NuanceTuple {
    std::uint32_t acc_may = 0;
    std::uint32_t acc_must = 0;
    std::uint32_t rej_may = 0;
    std::uint32_t rej_must = 0;

    bool valid() const noexcept { return acc_may <= acc_must && rej_may <= rej_must; }

    friend bool operator==(const NuanceTuple&, const NuanceTuple&) = default;
    friend auto operator<=>(const NuanceTuple&, const NuanceTuple&) = default;
};

std::string to_string(const NuanceTuple& t);

/// Non-negative exact rational, num/den.
struct Rational {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    /// Parses "0.8", "1", "0.125". Throws InvalidFraction.
    static Rational parse_decimal(std::string_view text);

    /// ⌈(num/den) * d⌉ in exact integer arithmetic.
    std::uint64_t ceil_times(std::uint64_t d) const;
    std::string to_decimal() const;

    friend bool operator==(const Rational& a, const Rational& b) noexcept {
        return static_cast<unsigned __int128>(a.num) * b.den == static_cast<unsigned __int128>(b.num) * a.den;
    }
    friend bool operator<=(const Rational& a, const Rational& b) noexcept {
        return static_cast<unsigned __int128>(a.num) * b.den <= static_cast<unsigned __int128>(b.num) * a.den;
    }
    friend bool operator<(const Rational& a, const Rational& b) noexcept { return !(b <= a); }
};

/// Fractions of attackers that must be rejected/accepted for each threshold.
struct RatioSpec {
    Rational acc_may;
    Rational acc_must;
    Rational rej_may;
    Rational rej_must;
    std::uint32_t rej_floor = 0;

    friend bool operator==(const RatioSpec&, const RatioSpec&) = default;
};

/// 80/90/40/50 percent with at least one accepted attacker for rejection.
RatioSpec percentage_preset();

NuanceTuple ratio_tuple(std::size_t in_degree, const RatioSpec& spec);

/// Tuple making maxi.* coincide with classical labellings: ((d,d),(1,1)).
NuanceTuple dung_tuple(std::size_t in_degree) noexcept;

struct ArgumentDecl {
    std::string id;
    NuanceTuple tuple;
};

struct AttackDecl {
    std::string source;
    std::string target;
};

/// Finite may-must argumentation: arguments, attack relation and one nuance
/// tuple per argument. Immutable once built; arguments are addressed by dense
/// indices in declaration order.
class Framework {
public:
    Framework() = default;

    /// Throws DuplicateArgument, UnknownArgumentInAttack, MayExceedsMust.
    static Framework build(std::span<const ArgumentDecl> args, std::span<const AttackDecl> attacks);
    /// Index-based construction; duplicate attacks collapse.
    static Framework from_indices(std::vector<std::string> names, std::vector<NuanceTuple> tuples,
                                  std::span<const std::pair<ArgIndex, ArgIndex>> attacks);

    std::size_t size() const noexcept { return names_.size(); }
    bool empty() const noexcept { return names_.empty(); }
    const std::string& name(ArgIndex a) const { return names_.at(a); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    /// Throws UnknownArgumentInAttack when no argument carries the id.
    ArgIndex index_of(std::string_view id) const;
    bool contains(std::string_view id) const;

    const NuanceTuple& tuple(ArgIndex a) const { return tuples_.at(a); }
    const std::vector<NuanceTuple>& tuples() const noexcept { return tuples_; }
    /// Attackers of `a` in ascending index order.
    const std::vector<ArgIndex>& attackers(ArgIndex a) const { return attackers_.at(a); }
    const std::vector<ArgIndex>& targets(ArgIndex a) const { return targets_.at(a); }
    std::size_t in_degree(ArgIndex a) const { return attackers_.at(a).size(); }
    /// Sorted (source, target) pairs.
    const std::vector<std::pair<ArgIndex, ArgIndex>>& attacks() const noexcept { return attacks_; }
    bool attacks(ArgIndex from, ArgIndex to) const;

    friend bool operator==(const Framework& a, const Framework& b) {
        return a.names_ == b.names_ && a.tuples_ == b.tuples_ && a.attacks_ == b.attacks_;
    }

private:
    std::vector<std::string> names_;
    std::vector<NuanceTuple> tuples_;
    std::vector<std::pair<ArgIndex, ArgIndex>> attacks_;
    std::vector<std::vector<ArgIndex>> attackers_;
    std::vector<std::vector<ArgIndex>> targets_;
    std::unordered_map<std::string, ArgIndex> index_;
};

/// Convenience wrapper over Framework::build.
Framework build_framework(std::span<const ArgumentDecl> args, std::span<const AttackDecl> attacks);

}  // namespace maymust
