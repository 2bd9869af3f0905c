#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "maymust/framework.hpp"
#include "maymust/labelling.hpp"

namespace fixtures {

using maymust::ArgIndex;
using maymust::Framework;
using maymust::Label;
using maymust::Labelling;
using maymust::NuanceTuple;

constexpr Label I = Label::In;
constexpr Label O = Label::Out;
constexpr Label U = Label::Undec;

inline Framework make(std::vector<NuanceTuple> tuples, std::vector<std::pair<ArgIndex, ArgIndex>> attacks) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < tuples.size(); ++i) names.push_back("a" + std::to_string(i + 1));
    return Framework::from_indices(std::move(names), std::move(tuples), attacks);
}

// a1 -> a2 -> a3 <- a4 <- a5
inline Framework chain5() {
    return make({{0, 0, 1, 1}, {0, 1, 1, 2}, {1, 1, 1, 1}, {1, 1, 1, 1}, {0, 0, 1, 1}},
                {{0, 1}, {1, 2}, {3, 2}, {4, 3}});
}

inline Framework self_loop() { return make({{0, 0, 1, 1}}, {{0, 0}}); }

inline Framework mutual() { return make({{0, 0, 1, 1}, {0, 0, 1, 1}}, {{0, 1}, {1, 0}}); }

inline std::set<Labelling> as_set(const std::vector<Labelling>& v) { return {v.begin(), v.end()}; }

// Plain integer-coded labels (0 in, 1 out, 2 undec) keep the oracles below
// free of the library's own enumeration and designation code.
using Raw = std::vector<int>;

inline Labelling to_labelling(const Raw& r) {
    Labelling l(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) l.set(i, static_cast<Label>(r[i]));
    return l;
}

inline std::vector<Raw> all_raw(std::size_t n) {
    std::vector<Raw> out;
    Raw cur(n, 0);
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= 3;
    for (std::size_t k = 0; k < total; ++k) {
        std::size_t x = k;
        for (std::size_t i = n; i-- > 0;) {
            cur[i] = static_cast<int>(x % 3);
            x /= 3;
        }
        out.push_back(cur);
    }
    return out;
}

// Allowed labels of argument a under r, as booleans {in, out, undec}.
struct Allowed {
    bool in, out, undec;
};

inline Allowed oracle_allowed(const Framework& f, const Raw& r, ArgIndex a) {
    std::size_t n_out = 0, n_in = 0;
    for (ArgIndex b : f.attackers(a)) {
        n_out += r[b] == 1;
        n_in += r[b] == 0;
    }
    const NuanceTuple& t = f.tuple(a);
    const bool must_a = n_out >= t.acc_must, may_a = n_out >= t.acc_may;
    const bool must_r = n_in >= t.rej_must, may_r = n_in >= t.rej_may;
    const bool strict_a = may_a && !must_a, strict_r = may_r && !must_r;
    return {may_a && !must_r, may_r && !must_a, (must_a && must_r) || strict_a || strict_r || (!may_a && !may_r)};
}

inline bool oracle_proper(const Framework& f, const Raw& r, ArgIndex a) {
    const Allowed al = oracle_allowed(f, r, a);
    return r[a] == 0 ? al.in : r[a] == 1 ? al.out : al.undec;
}

inline std::set<Labelling> oracle_exact(const Framework& f) {
    std::set<Labelling> out;
    for (const Raw& r : all_raw(f.size())) {
        bool ok = true;
        for (ArgIndex a = 0; a < f.size() && ok; ++a) ok = oracle_proper(f, r, a);
        if (ok) out.insert(to_labelling(r));
    }
    return out;
}

// Maximally proper: pre-maximally proper labellings whose proper set equals
// the union over all of them.
inline std::set<Labelling> oracle_maxi(const Framework& f) {
    std::vector<std::pair<Raw, std::vector<bool>>> pre;
    std::vector<bool> uni(f.size(), false);
    for (const Raw& r : all_raw(f.size())) {
        std::vector<bool> p(f.size());
        bool ok = true;
        for (ArgIndex a = 0; a < f.size() && ok; ++a) {
            p[a] = oracle_proper(f, r, a);
            ok = p[a] || r[a] == 2;
        }
        if (!ok) continue;
        for (ArgIndex a = 0; a < f.size(); ++a) uni[a] = uni[a] || p[a];
        pre.emplace_back(r, std::move(p));
    }
    std::set<Labelling> out;
    for (const auto& [r, p] : pre)
        if (p == uni) out.insert(to_labelling(r));
    return out;
}

inline bool oracle_leq(const Labelling& a, const Labelling& b) {
    for (std::size_t i = 0; i < a.universe(); ++i) {
        const auto x = a.get(i), y = b.get(i);
        if (x == Label::In && y != Label::In) return false;
        if (x == Label::Out && y != Label::Out) return false;
    }
    return true;
}

}  // namespace fixtures
