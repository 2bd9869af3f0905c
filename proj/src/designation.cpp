#include "maymust/designation.hpp"

#include "maymust/error.hpp"

namespace maymust {

std::string_view to_string(Condition c) noexcept {
    switch (c) {
        case Condition::Must: return "must";
        case Condition::MayStrict: return "may_s";
        case Condition::Not: return "not";
    }
    return "?";
}

std::string to_string(LabelSet s) {
    std::string out = "{";
    for (Label l : kAllLabels) {
        if (!s.contains(l)) continue;
        if (out.size() > 1) out += ',';
        out += to_string(l);
    }
    return out + "}";
}

ConditionProfile profile_of(const NuanceTuple& t, AttackerCounts counts) noexcept {
    return {classify(t.acc_may, t.acc_must, counts.n_out), classify(t.rej_may, t.rej_must, counts.n_in)};
}

LabelSet designate(ConditionProfile p) noexcept {
    const bool may_a = p.acc != Condition::Not;
    const bool must_a = p.acc == Condition::Must;
    const bool may_r = p.rej != Condition::Not;
    const bool must_r = p.rej == Condition::Must;

    LabelSet out;
    if (may_a && !must_r) out.insert(Label::In);
    if (may_r && !must_a) out.insert(Label::Out);
    if ((must_a && must_r) || p.acc == Condition::MayStrict || p.rej == Condition::MayStrict ||
        (p.acc == Condition::Not && p.rej == Condition::Not))
        out.insert(Label::Undec);
    return out;
}

AttackerCounts attacker_counts(const Framework& f, const Labelling& l, ArgIndex a) {
    AttackerCounts c;
    for (ArgIndex x : f.attackers(a)) {
        const auto v = l.get(x);
        if (!v)
            throw Error(ErrorKind::UndefinedAttackerLabel,
                        "attacker '" + f.name(x) + "' of '" + f.name(a) + "' is unlabelled");
        if (*v == Label::Out) ++c.n_out;
        else if (*v == Label::In) ++c.n_in;
    }
    return c;
}

ConditionProfile condition_profile(const Framework& f, const Labelling& l, ArgIndex a) {
    return profile_of(f.tuple(a), attacker_counts(f, l, a));
}

LabelSet designated_labels(const Framework& f, const Labelling& l, ArgIndex a) {
    return designate(condition_profile(f, l, a));
}

bool is_proper(const Framework& f, const Labelling& l, ArgIndex a) {
    const auto own = l.get(a);
    if (!own) throw Error(ErrorKind::UndefinedArgumentLabel, "argument '" + f.name(a) + "' is unlabelled");
    return designated_labels(f, l, a).contains(*own);
}

LabelSet designated_unchecked(const Framework& f, const Labelling& l, ArgIndex a) noexcept {
    AttackerCounts c;
    for (ArgIndex x : f.attackers(a)) {
        const auto v = l.get(x);
        if (v == Label::Out) ++c.n_out;
        else if (v == Label::In) ++c.n_in;
    }
    return designate(profile_of(f.tuples()[a], c));
}

}  // namespace maymust
