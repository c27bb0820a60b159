#pragma once

// Reference normal-ordering for gl and gr, written independently of the
// engine: generators are single characters, the rules are typed in by hand
// already oriented, and reduction always rewrites the rightmost descending
// pair, recursing with memoization.

#include "qgrass/coeff.hpp"
#include "qgrass/freealg.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using qgrass::LaurentPoly;
using Poly = std::map<std::string, LaurentPoly>;

struct Algebra {
    std::string order; // generators in ascending precedence
    std::map<std::string, Poly> rules; // two-letter lhs -> rhs (need not be normal)
    std::map<std::string, Poly> memo;

    int rank(char c) const { return static_cast<int>(order.find(c)); }
};

inline void add(Poly& into, const std::string& w, const LaurentPoly& c)
{
    if (c.is_zero())
        return;
    auto [it, fresh] = into.try_emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero())
            into.erase(it);
    }
}

inline Poly reduce_word(Algebra& alg, const std::string& w)
{
    if (auto it = alg.memo.find(w); it != alg.memo.end())
        return it->second;
    Poly out;
    std::size_t pos = std::string::npos;
    for (std::size_t i = w.size(); i-- > 1;) {
        if (alg.rules.count(w.substr(i - 1, 2))) {
            pos = i - 1;
            break;
        }
    }
    if (pos == std::string::npos) {
        add(out, w, 1);
    } else {
        for (const auto& [rw, rc] : alg.rules.at(w.substr(pos, 2)))
            for (const auto& [nw, nc] : reduce_word(alg, w.substr(0, pos) + rw + w.substr(pos + 2)))
                add(out, nw, rc * nc);
    }
    alg.memo[w] = out;
    return out;
}

inline Poly reduce(Algebra& alg, const Poly& p)
{
    Poly out;
    for (const auto& [w, c] : p)
        for (const auto& [nw, nc] : reduce_word(alg, w))
            add(out, nw, c * nc);
    return out;
}

/// a, beta, gamma, d as a B G d.
inline Algebra gl()
{
    const LaurentPoly q = LaurentPoly::q(1), qi = LaurentPoly::q(-1), k = q - qi;
    Algebra alg{"aBGd", {}, {}};
    alg.rules["Ba"] = {{"aB", qi}};
    alg.rules["dB"] = {{"Bd", q}};
    alg.rules["Ga"] = {{"aG", qi}};
    alg.rules["dG"] = {{"Gd", q}};
    alg.rules["GB"] = {{"BG", -1}};
    alg.rules["BB"] = {};
    alg.rules["GG"] = {};
    alg.rules["da"] = {{"ad", 1}, {"GB", -k}};
    return alg;
}

/// alpha, b, c, delta as x b c y.
inline Algebra gr()
{
    const LaurentPoly q = LaurentPoly::q(1), qi = LaurentPoly::q(-1), k = q - qi;
    Algebra alg{"xbcy", {}, {}};
    alg.rules["bx"] = {{"xb", q}};
    alg.rules["cx"] = {{"xc", q}};
    alg.rules["yb"] = {{"by", qi}};
    alg.rules["yc"] = {{"cy", qi}};
    alg.rules["yx"] = {{"xy", -1}};
    alg.rules["xx"] = {};
    alg.rules["yy"] = {};
    alg.rules["cb"] = {{"bc", 1}, {"yx", -k}};
    return alg;
}

/// Engine element -> oracle polynomial, letter l mapped to chars[l].
inline Poly from_element(const qgrass::Element& e, const std::string& chars)
{
    Poly out;
    for (const auto& [w, c] : e.terms()) {
        std::string s;
        for (auto l : w)
            s += chars.at(l);
        add(out, s, c);
    }
    return out;
}

} // namespace oracle
