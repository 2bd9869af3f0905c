#include "maymust/framework.hpp"

#include <algorithm>
#include <charconv>

#include "maymust/error.hpp"

namespace maymust {

std::string to_string(const NuanceTuple& t) {
    return "((" + std::to_string(t.acc_may) + "," + std::to_string(t.acc_must) + "),(" + std::to_string(t.rej_may) +
           "," + std::to_string(t.rej_must) + "))";
}

Rational Rational::parse_decimal(std::string_view text) {
    const auto bad = [&] { return Error(ErrorKind::InvalidFraction, "not a decimal fraction: '" + std::string(text) + "'"); };
    if (text.empty()) throw bad();
    const auto dot = text.find('.');
    const std::string_view whole = text.substr(0, dot);
    const std::string_view frac = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
    if (whole.empty() && frac.empty()) throw bad();
    // Keeps num * d within 64 bits for any realistic in-degree.
    if (whole.size() + frac.size() > 12) throw bad();
    const auto digits = [](std::string_view s) {
        return std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    if (!digits(whole) || !digits(frac)) throw bad();

    Rational r{0, 1};
    for (char c : whole) r.num = r.num * 10 + static_cast<std::uint64_t>(c - '0');
    for (char c : frac) {
        r.num = r.num * 10 + static_cast<std::uint64_t>(c - '0');
        r.den *= 10;
    }
    return r;
}

std::uint64_t Rational::ceil_times(std::uint64_t d) const {
    const unsigned __int128 p = static_cast<unsigned __int128>(num) * d;
    return static_cast<std::uint64_t>((p + den - 1) / den);
}

std::string Rational::to_decimal() const {
    // Exact only for denominators of the form 2^a 5^b, which is all the parser produces.
    std::string out = std::to_string(num / den);
    std::uint64_t rem = num % den;
    if (rem == 0) return out;
    out += '.';
    for (int i = 0; rem != 0 && i < 20; ++i) {
        rem *= 10;
        out += static_cast<char>('0' + rem / den);
        rem %= den;
    }
    return out;
}

RatioSpec percentage_preset() {
    return RatioSpec{{8, 10}, {9, 10}, {4, 10}, {5, 10}, 1};
}

NuanceTuple ratio_tuple(std::size_t in_degree, const RatioSpec& spec) {
    const Rational one{1, 1};
    for (const Rational* r : {&spec.acc_may, &spec.acc_must, &spec.rej_may, &spec.rej_must})
        if (r->den == 0 || one < *r) throw Error(ErrorKind::InvalidFraction, "fraction outside [0,1]");
    if (spec.acc_must < spec.acc_may || spec.rej_must < spec.rej_may)
        throw Error(ErrorKind::FractionOrderViolation, "may fraction exceeds must fraction");
    const auto at = [&](const Rational& r) { return static_cast<std::uint32_t>(r.ceil_times(in_degree)); };
    return NuanceTuple{at(spec.acc_may), at(spec.acc_must), std::max(spec.rej_floor, at(spec.rej_may)),
                       std::max(spec.rej_floor, at(spec.rej_must))};
}

NuanceTuple dung_tuple(std::size_t in_degree) noexcept {
    const auto d = static_cast<std::uint32_t>(in_degree);
    return NuanceTuple{d, d, 1, 1};
}

Framework Framework::from_indices(std::vector<std::string> names, std::vector<NuanceTuple> tuples,
                                  std::span<const std::pair<ArgIndex, ArgIndex>> attacks) {
    if (names.size() != tuples.size())
        throw Error(ErrorKind::DomainMismatch, "argument and tuple counts differ");
    Framework f;
    f.names_ = std::move(names);
    f.tuples_ = std::move(tuples);
    for (ArgIndex a = 0; a < f.names_.size(); ++a) {
        if (!f.index_.emplace(f.names_[a], a).second)
            throw Error(ErrorKind::DuplicateArgument, "argument '" + f.names_[a] + "' declared twice");
        if (!f.tuples_[a].valid())
            throw Error(ErrorKind::MayExceedsMust,
                        "argument '" + f.names_[a] + "' has tuple " + to_string(f.tuples_[a]));
    }
    const std::size_t n = f.names_.size();
    for (const auto& [s, t] : attacks)
        if (s >= n || t >= n)
            throw Error(ErrorKind::UnknownArgumentInAttack,
                        "attack (" + std::to_string(s) + "," + std::to_string(t) + ") leaves the argument set");
    f.attacks_.assign(attacks.begin(), attacks.end());
    std::sort(f.attacks_.begin(), f.attacks_.end());
    f.attacks_.erase(std::unique(f.attacks_.begin(), f.attacks_.end()), f.attacks_.end());
    f.attackers_.assign(n, {});
    f.targets_.assign(n, {});
    for (const auto& [s, t] : f.attacks_) {
        f.attackers_[t].push_back(s);
        f.targets_[s].push_back(t);
    }
    for (auto& v : f.attackers_) std::sort(v.begin(), v.end());
    return f;
}

Framework Framework::build(std::span<const ArgumentDecl> args, std::span<const AttackDecl> attacks) {
    std::vector<std::string> names;
    std::vector<NuanceTuple> tuples;
    std::unordered_map<std::string, ArgIndex> index;
    for (const ArgumentDecl& d : args) {
        if (!index.emplace(d.id, names.size()).second)
            throw Error(ErrorKind::DuplicateArgument, "argument '" + d.id + "' declared twice");
        names.push_back(d.id);
        tuples.push_back(d.tuple);
    }
    std::vector<std::pair<ArgIndex, ArgIndex>> edges;
    for (const AttackDecl& at : attacks) {
        const auto s = index.find(at.source);
        const auto t = index.find(at.target);
        if (s == index.end() || t == index.end())
            throw Error(ErrorKind::UnknownArgumentInAttack,
                        "attack " + at.source + " -> " + at.target + " names an undeclared argument");
        edges.emplace_back(s->second, t->second);
    }
    return from_indices(std::move(names), std::move(tuples), edges);
}

ArgIndex Framework::index_of(std::string_view id) const {
    const auto it = index_.find(std::string(id));
    if (it == index_.end()) throw Error(ErrorKind::UnknownArgumentInAttack, "no argument '" + std::string(id) + "'");
    return it->second;
}

bool Framework::contains(std::string_view id) const { return index_.contains(std::string(id)); }

bool Framework::attacks(ArgIndex from, ArgIndex to) const {
    return std::binary_search(attacks_.begin(), attacks_.end(), std::pair{from, to});
}

Framework build_framework(std::span<const ArgumentDecl> args, std::span<const AttackDecl> attacks) {
    return Framework::build(args, attacks);
}

}  // namespace maymust
