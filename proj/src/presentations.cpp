#include "qgrass/presentations.hpp"

#include <algorithm>
#include <set>

namespace qgrass {

namespace {

// Base generators get even precedence values so that localize() can slot
// each inverse directly after its generator.
constexpr int kPrecedenceStep = 2;

const LaurentPoly kQ = LaurentPoly::q(1);
const LaurentPoly kQinv = LaurentPoly::q(-1);

Element w(std::initializer_list<Letter> letters) { return Element::word(Word(letters)); }

Relation rel(std::initializer_list<Letter> lhs, Element rhs) { return {Word(lhs), std::move(rhs)}; }

std::vector<GeneratorSymbol> symbols(std::initializer_list<std::pair<const char*, int>> names)
{
    std::vector<GeneratorSymbol> out;
    int prec = 0;
    for (const auto& [n, p] : names) {
        out.push_back({n, p, prec});
        prec += kPrecedenceStep;
    }
    return out;
}

std::vector<Relation> gl_relations(Letter a, Letter be, Letter ga, Letter d)
{
    return {
        rel({a, be}, kQ * w({be, a})),
        rel({d, be}, kQ * w({be, d})),
        rel({a, ga}, kQ * w({ga, a})),
        rel({d, ga}, kQ * w({ga, d})),
        rel({be, ga}, -w({ga, be})),
        rel({be, be}, {}),
        rel({ga, ga}, {}),
        rel({a, d}, w({d, a}) + q_minus_qinv() * w({ga, be})),
    };
}

std::vector<Relation> gr_relations(Letter al, Letter b, Letter c, Letter de)
{
    return {
        rel({al, b}, kQinv * w({b, al})),
        rel({al, c}, kQinv * w({c, al})),
        rel({de, b}, kQinv * w({b, de})),
        rel({de, c}, kQinv * w({c, de})),
        rel({al, de}, -w({de, al})),
        rel({al, al}, {}),
        rel({de, de}, {}),
        rel({b, c}, w({c, b}) + q_minus_qinv() * w({de, al})),
    };
}

} // namespace

Presentation gl_q()
{
    return Presentation::from_relations("gl", symbols({{"a", 0}, {"beta", 1}, {"gamma", 1}, {"d", 0}}),
                                        gl_relations(0, 1, 2, 3));
}

Presentation gr_q()
{
    return Presentation::from_relations("gr", symbols({{"alpha", 1}, {"b", 0}, {"c", 0}, {"delta", 1}}),
                                        gr_relations(0, 1, 2, 3));
}

std::vector<Relation> mixed_cross_relations()
{
    const Letter a = 0, be = 1, ga = 2, d = 3, al = 4, b = 5, c = 6, de = 7;
    const LaurentPoly k = q_minus_qinv();
    const LaurentPoly q2 = LaurentPoly::q(2);
    const LaurentPoly q2m1 = q2 - 1;
    const LaurentPoly one_m_qm2 = LaurentPoly(1) - LaurentPoly::q(-2);
    return {
        rel({a, al}, q2 * w({al, a})),
        rel({be, al}, -kQ * w({al, be})),
        rel({a, b}, kQ * w({b, a}) + q2m1 * w({al, be})),
        rel({be, b}, w({b, be})),
        rel({a, c}, kQ * w({c, a}) + q2m1 * w({al, ga})),
        rel({be, c}, w({c, be}) + k * w({al, d})),
        rel({a, de}, w({de, a}) + k * (w({be, c}) - w({b, ga}))),
        rel({be, de}, -kQinv * w({de, be}) + one_m_qm2 * w({b, d})),
        rel({d, al}, w({al, d})),
        rel({ga, al}, -kQ * w({al, ga})),
        rel({d, b}, kQinv * w({b, d})),
        rel({ga, b}, w({b, ga}) - k * w({al, d})),
        rel({d, c}, kQinv * w({c, d})),
        rel({ga, c}, w({c, ga})),
        rel({d, de}, LaurentPoly::q(-2) * w({de, d})),
        rel({ga, de}, -kQinv * w({de, ga}) + one_m_qm2 * w({c, d})),
    };
}

Presentation mixed()
{
    const Letter a = 0, be = 1, ga = 2, d = 3, al = 4, b = 5, c = 6, de = 7;
    std::vector<Relation> rels = gl_relations(a, be, ga, d);
    for (auto& r : gr_relations(al, b, c, de))
        rels.push_back(std::move(r));
    for (auto& r : mixed_cross_relations())
        rels.push_back(std::move(r));

    return Presentation::from_relations("mixed",
                                        symbols({{"a", 0},
                                                 {"beta", 1},
                                                 {"gamma", 1},
                                                 {"d", 0},
                                                 {"alpha", 1},
                                                 {"b", 0},
                                                 {"c", 0},
                                                 {"delta", 1}}),
                                        std::move(rels));
}

std::string inverse_name(std::string_view generator) { return std::string(generator) + "^-1"; }

Presentation localize(const Presentation& base, const std::vector<std::string>& invertibles)
{
    if (base.q_value())
        throw PresentationError("localize a symbolic presentation, then specialize");
    Presentation p(base.id() + "-loc", base.generators());
    for (const auto& r : base.rules())
        p.set_rule(r.lhs, r.rhs);
    for (const auto& r : base.relations())
        p.add_relation(r);

    std::map<Letter, Letter> inv; // base letter -> inverse letter
    for (const auto& name : invertibles) {
        const Letter x = base.letter(name);
        if (base.parity(x) != 0)
            throw PresentationError("cannot invert odd generator " + name + ": it is nilpotent");
        if (inv.count(x))
            continue;
        const int prec = base.precedence(x) + 1;
        for (const auto& g : p.generators())
            if (g.precedence == prec)
                throw PresentationError("no precedence slot for " + inverse_name(name));
        const Letter xi = p.add_generator({inverse_name(name), 0, prec});
        inv[x] = xi;
        p.set_rule({x, xi}, Element::scalar(1));
        p.set_rule({xi, x}, Element::scalar(1));
        p.add_relation({Word{x, xi}, Element::scalar(1)});
        p.add_relation({Word{xi, x}, Element::scalar(1)});
    }

    auto single = [](Letter l) { return Element::word({l}); };

    // Conjugating X Z = lam Z X + C by the available inverses:
    //   X Z^-1     = lam^-1 (Z^-1 X - Z^-1 C Z^-1)
    //   X^-1 Z     = lam^-1 (Z X^-1 - X^-1 C X^-1)
    //   X^-1 Z^-1  = lam Z^-1 X^-1 + X^-1 Z^-1 C Z^-1 X^-1
    // The corrections mention the rule being defined, so the right-hand sides
    // are solved by fixpoint iteration; C always carries odd generators and
    // the iteration terminates by nilpotency.
    struct Derived {
        Word lhs;
        Element formula;
    };
    std::vector<Derived> derived;
    for (const auto& r : base.rules()) {
        const Letter X = r.lhs[0], Z = r.lhs[1];
        if (X == Z)
            continue;
        const bool invX = inv.count(X), invZ = inv.count(Z);
        if (!invX && !invZ)
            continue;
        const Word swapped{Z, X};
        auto it = r.rhs.terms().find(swapped);
        if (it == r.rhs.terms().end() || !it->second.is_unit())
            throw PresentationError("rule " + to_string(r.lhs, base) + " is not a unit q-commutation");
        const LaurentPoly lam = it->second;
        const LaurentPoly lam_inv = lam.unit_inverse();
        const Element C = r.rhs - Element::word(swapped, lam);

        if (invZ) {
            const Element Zi = single(inv[Z]);
            derived.push_back({{X, inv[Z]}, lam_inv * (Zi * single(X) - Zi * C * Zi)});
        }
        if (invX) {
            const Element Xi = single(inv[X]);
            derived.push_back({{inv[X], Z}, lam_inv * (single(Z) * Xi - Xi * C * Xi)});
        }
        if (invX && invZ) {
            const Element Xi = single(inv[X]), Zi = single(inv[Z]);
            derived.push_back({{inv[X], inv[Z]}, lam * (Zi * Xi) + Xi * Zi * C * Zi * Xi});
        }
    }

    for (const auto& d : derived)
        p.set_rule(d.lhs, Element{});
    constexpr int kMaxIterations = 64;
    bool changed = true;
    for (int iter = 0; changed; ++iter) {
        if (iter == kMaxIterations)
            throw PresentationError("localization rules of " + base.id() + " did not stabilize");
        changed = false;
        for (const auto& d : derived) {
            Element nf = normalize(d.formula, p);
            if (!(nf == p.rule_for(d.lhs[0], d.lhs[1])->rhs)) {
                p.set_rule(d.lhs, std::move(nf));
                changed = true;
            }
        }
    }

    // Multiply-back: cancelling the inverse must give back the other letter.
    std::map<Letter, Letter> base_of;
    for (const auto& [x, xi] : inv)
        base_of[xi] = x;
    for (const auto& d : derived) {
        const Element& rhs = p.rule_for(d.lhs[0], d.lhs[1])->rhs;
        bool ok;
        if (base_of.count(d.lhs[0]))
            ok = is_zero_mod(single(base_of[d.lhs[0]]) * rhs - single(d.lhs[1]), p);
        else
            ok = is_zero_mod(rhs * single(base_of[d.lhs[1]]) - single(d.lhs[0]), p);
        if (!ok)
            throw PresentationError("derived rule " + to_string(d.lhs, p) + " fails the multiply-back check");
    }
    return p;
}

Presentation supercommuting_double(const Presentation& base)
{
    const std::size_t n = base.size();
    int top = 0;
    for (const auto& g : base.generators())
        top = std::max(top, g.precedence);

    std::vector<GeneratorSymbol> gens = base.generators();
    for (const auto& g : base.generators())
        gens.push_back({g.name + "'", g.parity, top + 1 + g.precedence});

    auto primed = [n](const Element& e) {
        Element out;
        for (const auto& [word, c] : e.terms()) {
            Word pw(word);
            for (auto& l : pw)
                l = static_cast<Letter>(l + n);
            out.add_term(pw, c);
        }
        return out;
    };

    std::vector<Relation> rels;
    for (const auto& r : base.relations()) {
        rels.push_back(r);
        Word lhs(r.lhs);
        for (auto& l : lhs)
            l = static_cast<Letter>(l + n);
        rels.push_back({lhs, primed(r.rhs)});
    }
    for (Letter x = 0; x < n; ++x) {
        for (Letter y = 0; y < n; ++y) {
            const Letter xp = static_cast<Letter>(x + n);
            const LaurentPoly sign = (base.parity(x) & base.parity(y)) ? -1 : 1;
            rels.push_back({Word{xp, y}, Element::word({y, xp}, sign)});
        }
    }
    return Presentation::from_relations("double(" + base.id() + ")", std::move(gens), std::move(rels));
}

const std::vector<std::string>& presentation_ids()
{
    static const std::vector<std::string> ids = {"gl", "gr", "mixed", "double", "gl-loc", "gr-loc", "mixed-loc"};
    return ids;
}

Presentation presentation_by_id(std::string_view id)
{
    if (id == "gl")
        return gl_q();
    if (id == "gr")
        return gr_q();
    if (id == "mixed")
        return mixed();
    if (id == "double")
        return supercommuting_double(gr_q());
    if (id == "gl-loc")
        return localize(gl_q(), {"a", "d"});
    if (id == "gr-loc")
        return localize(gr_q(), {"c"});
    if (id == "mixed-loc")
        return localize(mixed(), {"a", "d", "c"});
    throw PresentationError("unknown presentation id '" + std::string(id) + "'");
}

} // namespace qgrass
