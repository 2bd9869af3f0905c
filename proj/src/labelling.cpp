#include "maymust/labelling.hpp"

#include <algorithm>

#include "maymust/error.hpp"

namespace maymust {

Labelling::Labelling(std::initializer_list<Label> labels)
    : Labelling(std::span<const Label>(labels.begin(), labels.size())) {}

Labelling::Labelling(std::span<const Label> labels) : slots_(labels.size()) {
    std::transform(labels.begin(), labels.end(), slots_.begin(),
                   [](Label l) { return static_cast<std::uint8_t>(l); });
}

Labelling Labelling::uniform(std::size_t universe, Label fill) {
    Labelling l(universe);
    std::fill(l.slots_.begin(), l.slots_.end(), static_cast<std::uint8_t>(fill));
    return l;
}

std::optional<Label> Labelling::get(ArgIndex a) const noexcept {
    if (!defined(a)) return std::nullopt;
    return static_cast<Label>(slots_[a]);
}

Label Labelling::at(ArgIndex a) const {
    if (!defined(a)) throw Error(ErrorKind::UndefinedArgumentLabel, "argument #" + std::to_string(a) + " is unlabelled");
    return static_cast<Label>(slots_[a]);
}

void Labelling::set(ArgIndex a, Label l) {
    if (a >= slots_.size()) slots_.resize(a + 1, kUnassigned);
    slots_[a] = static_cast<std::uint8_t>(l);
}

void Labelling::unset(ArgIndex a) {
    if (a < slots_.size()) slots_[a] = kUnassigned;
}

bool Labelling::is_total() const noexcept {
    return std::none_of(slots_.begin(), slots_.end(), [](std::uint8_t s) { return s == kUnassigned; });
}

std::size_t Labelling::domain_size() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(slots_.begin(), slots_.end(), [](std::uint8_t s) { return s != kUnassigned; }));
}

std::vector<ArgIndex> Labelling::domain() const {
    std::vector<ArgIndex> out;
    for (ArgIndex a = 0; a < slots_.size(); ++a)
        if (slots_[a] != kUnassigned) out.push_back(a);
    return out;
}

std::size_t Labelling::count(Label l) const noexcept {
    return static_cast<std::size_t>(std::count(slots_.begin(), slots_.end(), static_cast<std::uint8_t>(l)));
}

namespace {

bool same_domain(const Labelling& a, const Labelling& b) {
    const std::size_t n = std::max(a.universe(), b.universe());
    for (ArgIndex i = 0; i < n; ++i)
        if (a.defined(i) != b.defined(i)) return false;
    return true;
}

void require_same_domain(const Labelling& a, const Labelling& b) {
    if (!same_domain(a, b)) throw Error(ErrorKind::DomainMismatch, "labellings are defined on different arguments");
}

}  // namespace

bool labelling_leq(const Labelling& l1, const Labelling& l2) {
    require_same_domain(l1, l2);
    for (ArgIndex a = 0; a < l1.universe(); ++a) {
        const auto x = l1.get(a);
        if (!x || *x == Label::Undec) continue;
        if (l2.get(a) != x) return false;
    }
    return true;
}

bool labelling_lt(const Labelling& l1, const Labelling& l2) {
    return labelling_leq(l1, l2) && !labelling_leq(l2, l1);
}

Labelling labelling_meet(std::span<const Labelling> ls) {
    if (ls.empty()) throw Error(ErrorKind::EmptyInput, "meet of an empty set of labellings");
    Labelling out = ls.front();
    for (const Labelling& l : ls.subspan(1)) {
        require_same_domain(out, l);
        for (ArgIndex a = 0; a < out.universe(); ++a)
            if (out.defined(a) && out.get(a) != l.get(a)) out.set(a, Label::Undec);
    }
    return out;
}

Labelling restrict(const Labelling& l, std::span<const ArgIndex> subset) {
    Labelling out(l.universe());
    for (ArgIndex a : subset)
        if (auto v = l.get(a)) out.set(a, *v);
    return out;
}

Labelling compose(const Labelling& l1, const Labelling& l2, ComposeMode mode) {
    Labelling out(std::max(l1.universe(), l2.universe()));
    for (ArgIndex a = 0; a < out.universe(); ++a) {
        const auto x = l1.get(a);
        const auto y = l2.get(a);
        if (x && y) {
            if (mode == ComposeMode::Strict)
                throw Error(ErrorKind::DomainMismatch, "composed labellings overlap on argument #" + std::to_string(a));
            continue;
        }
        if (x) out.set(a, *x);
        else if (y) out.set(a, *y);
    }
    return out;
}

std::vector<Labelling> maximal_elements(std::span<const Labelling> ls) {
    std::vector<Labelling> out;
    for (const Labelling& l : ls) {
        const bool dominated = std::any_of(ls.begin(), ls.end(), [&](const Labelling& o) { return labelling_lt(l, o); });
        if (!dominated) out.push_back(l);
    }
    canonicalize(out);
    return out;
}

void canonicalize(std::vector<Labelling>& ls) {
    std::sort(ls.begin(), ls.end());
    ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
}

}  // namespace maymust
