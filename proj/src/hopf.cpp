#include "qgrass/hopf.hpp"

#include "qgrass/presentations.hpp"

namespace qgrass {

StructureMaps::StructureMaps(Presentation p) : p_(std::move(p))
{
    std::array<Letter, 4> t{}, th{};
    for (int i = 0; i < 4; ++i)
        t[i] = p_.letter(kTNames[i]);
    has_hatted_ = true;
    for (int i = 0; i < 4; ++i) {
        auto l = p_.find(kTHatNames[i]);
        has_hatted_ = has_hatted_ && l;
        if (l)
            th[i] = *l;
    }

    for (const char* x : {"a", "d", "c"})
        if (auto xi = p_.find(inverse_name(x)))
            if (auto base = p_.find(x))
                base_of_inverse_[*xi] = *base;
    c_inverse_ = p_.find(inverse_name("c"));

    eps_[t[0]] = 1;
    eps_[t[3]] = 1;
    for (const auto& [xi, x] : base_of_inverse_)
        if (x == t[0] || x == t[3])
            eps_[xi] = 1;

    const auto w = [](Letter l) { return Element::word({l}); };
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            TensorElement dt;
            for (int k = 0; k < 2; ++k)
                dt += TensorElement::of({w(t[2 * i + k]), w(t[2 * k + j])});
            delta_[t[2 * i + j]] = normalize(dt, p_);
        }
    if (has_hatted_) {
        for (int i = 0; i < 4; ++i) {
            d_of_[t[i]] = th[i];
            undo_d_[th[i]] = t[i];
        }
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                TensorElement dt;
                for (int k = 0; k < 2; ++k) {
                    dt += TensorElement::of({w(th[2 * i + k]), w(t[2 * k + j])});
                    const LaurentPoly sign = p_.parity(t[2 * i + k]) ? -1 : 1;
                    dt += sign * TensorElement::of({w(t[2 * i + k]), w(th[2 * k + j])});
                }
                delta_[th[2 * i + j]] = normalize(dt, p_);
            }
    }

    has_antipode_ = p_.find(inverse_name("a")) && p_.find(inverse_name("d"));
    if (has_antipode_) {
        const SuperMatrix tm = SuperMatrix::of_generators(p_, kTNames, ParityPattern::EvenDiagonal);
        const SuperMatrix inv = superinverse(tm, p_);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                s_[t[2 * i + j]] = inv.at(i, j);
        if (has_hatted_) {
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) {
                    Element sum;
                    for (int k = 0; k < 2; ++k)
                        for (int l = 0; l < 2; ++l) {
                            const Element term = inv.at(i, k) * w(th[2 * k + l]) * inv.at(l, j);
                            if (inv.entry_parity(i, k))
                                sum += term;
                            else
                                sum -= term;
                        }
                    s_[th[2 * i + j]] = normalize(sum, p_);
                }
        }
    }
}

const TensorElement& StructureMaps::coproduct_of(Letter l) const
{
    auto it = delta_.find(l);
    if (it == delta_.end())
        throw DomainError("no coproduct image for " + p_.symbol(l).name);
    return it->second;
}

TensorElement StructureMaps::coproduct(const Element& e) const
{
    TensorElement out;
    for (const auto& [word, c] : e.terms()) {
        TensorElement acc = TensorElement::unit(2);
        for (Letter l : word)
            acc = tensor_mul(acc, coproduct_of(l), p_);
        out += c * acc;
    }
    return normalize(out, p_);
}

LaurentPoly StructureMaps::counit(const Element& e) const
{
    LaurentPoly sum;
    for (const auto& [word, c] : e.terms()) {
        LaurentPoly v = c;
        for (Letter l : word) {
            if (c_inverse_ && l == *c_inverse_)
                throw DomainError("counit of c^-1 is undefined since counit(c) = 0");
            auto it = eps_.find(l);
            v = it == eps_.end() ? LaurentPoly{} : v * it->second;
        }
        sum += v;
    }
    return p_.specialize(sum);
}

const Element& StructureMaps::antipode_of(Letter l) const
{
    if (!has_antipode_)
        throw PresentationError("antipode needs a and d inverted in " + p_.id());
    auto it = s_.find(l);
    if (it == s_.end())
        throw DomainError("no antipode image for " + p_.symbol(l).name);
    return it->second;
}

Element StructureMaps::antipode(const Element& e, AntipodeRule rule) const
{
    Element out;
    for (const auto& [word, c] : e.terms()) {
        int sign = 0;
        if (rule == AntipodeRule::Graded)
            for (std::size_t i = 0; i < word.size(); ++i)
                for (std::size_t j = i + 1; j < word.size(); ++j)
                    sign ^= p_.parity(word[i]) & p_.parity(word[j]);
        Element acc = Element::scalar(sign ? -c : c);
        for (auto it = word.rbegin(); it != word.rend(); ++it)
            acc = normalize(acc * antipode_of(*it), p_);
        out += acc;
    }
    return normalize(out, p_);
}

Element StructureMaps::differential(const Element& e) const
{
    auto d_letter = [this](Letter l) -> Element {
        if (auto it = d_of_.find(l); it != d_of_.end())
            return Element::word({it->second});
        if (auto it = base_of_inverse_.find(l); it != base_of_inverse_.end()) {
            auto dx = d_of_.find(it->second);
            if (dx == d_of_.end())
                return {};
            const Element xi = Element::word({l});
            return -(xi * Element::word({dx->second}) * xi);
        }
        if (!has_hatted_)
            throw DomainError("differential needs the hatted generators");
        return {};
    };
    Element out;
    for (const auto& [word, c] : e.terms()) {
        int prefix_parity = 0;
        for (std::size_t i = 0; i < word.size(); ++i) {
            const Element dl = d_letter(word[i]);
            if (!dl.is_zero()) {
                const Word pre(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(i));
                const Word post(word.begin() + static_cast<std::ptrdiff_t>(i) + 1, word.end());
                const LaurentPoly cc = prefix_parity ? -c : c;
                out += cc * (Element::word(pre) * dl * Element::word(post));
            }
            prefix_parity ^= p_.parity(word[i]);
        }
    }
    return normalize(out, p_);
}

int StructureMaps::hatted_degree(const Word& w) const
{
    int n = 0;
    for (Letter l : w)
        n += undo_d_.count(l) ? 1 : 0;
    return n;
}

TensorElement StructureMaps::coaction(Side side, Letter hatted) const
{
    auto it = undo_d_.find(hatted);
    if (it == undo_d_.end())
        throw DomainError(p_.symbol(hatted).name + " is not a hatted generator");
    TensorElement out;
    for (const auto& [legs, c] : coproduct_of(it->second).terms()) {
        const Element x = Element::word(legs[0]), y = Element::word(legs[1]);
        if (side == Side::Right) {
            out += c * TensorElement::of({differential(x), y});
        } else {
            const LaurentPoly sign = p_.parity(legs[0]) ? -1 : 1;
            out += (sign * c) * TensorElement::of({x, differential(y)});
        }
    }
    return normalize(out, p_);
}

TensorElement StructureMaps::phi(Side side, const Element& form) const
{
    TensorElement out;
    const Element nf = normalize(form, p_);
    for (const auto& [word, c] : nf.terms()) {
        if (c_inverse_)
            for (Letter l : word)
                if (l == *c_inverse_)
                    throw DomainError("phi is not defined on forms containing c^-1");
        if (hatted_degree(word) != 1)
            throw DomainError("phi is defined on forms of hatted degree 1 only: " + to_string(word, p_));
        std::size_t pos = 0;
        while (!undo_d_.count(word[pos]))
            ++pos;
        const Word u(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(pos));
        const Word v(word.begin() + static_cast<std::ptrdiff_t>(pos) + 1, word.end());
        TensorElement t = tensor_mul(coproduct(Element::word(u)), coaction(side, word[pos]), p_);
        t = tensor_mul(t, coproduct(Element::word(v)), p_);
        out += c * t;
    }
    return normalize(out, p_);
}

Element StructureMaps::multiply_legs(const TensorElement& t) const
{
    Element out;
    for (const auto& [legs, c] : t.terms()) {
        if (legs.size() != 2)
            throw std::invalid_argument("multiply_legs needs a two-leg tensor");
        out += Element::word(legs[0], c) * Element::word(legs[1]);
    }
    return normalize(out, p_);
}

AxiomResiduals axiom_residuals(const StructureMaps& maps, Letter g, AntipodeRule rule)
{
    const Presentation& p = maps.presentation();
    const TensorElement& dg = maps.coproduct_of(g);
    const Element gen = Element::word({g});
    auto delta_word = [&maps](const Word& w) { return maps.coproduct(Element::word(w)); };

    AxiomResiduals r;
    r.coassociativity = normalize(maps.apply_on_leg(dg, 0, delta_word) - maps.apply_on_leg(dg, 1, delta_word), p);

    Element left, right;
    for (const auto& [legs, c] : dg.terms()) {
        left += (c * maps.counit(Element::word(legs[0]))) * Element::word(legs[1]);
        right += (c * maps.counit(Element::word(legs[1]))) * Element::word(legs[0]);
    }
    r.left_counit = normalize(left - gen, p);
    r.right_counit = normalize(right - gen, p);

    if (maps.has_antipode()) {
        const Element eps = Element::scalar(maps.counit(gen));
        Element sl, sr;
        for (const auto& [legs, c] : dg.terms()) {
            sl += c * (maps.antipode(Element::word(legs[0]), rule) * Element::word(legs[1]));
            sr += c * (Element::word(legs[0]) * maps.antipode(Element::word(legs[1]), rule));
        }
        r.left_antipode = normalize(sl - eps, p);
        r.right_antipode = normalize(sr - eps, p);
    }
    return r;
}

namespace {

template <class F>
std::vector<RelationResidual> for_relations(const StructureMaps& maps, const Presentation& source, F&& residual)
{
    std::vector<RelationResidual> out;
    for (const auto& rel : source.relations()) {
        const Element lhs = embed(Element::word(rel.lhs), source, maps.presentation());
        const Element rhs = embed(rel.rhs, source, maps.presentation());
        std::string res = residual(lhs, rhs);
        if (!res.empty())
            out.push_back({to_string(rel.lhs, source) + " = " + to_string(rel.rhs, source), std::move(res)});
    }
    return out;
}

} // namespace

std::vector<RelationResidual> coproduct_homomorphism(const StructureMaps& maps, const Presentation& source)
{
    return for_relations(maps, source, [&maps](const Element& l, const Element& r) {
        const TensorElement d = normalize(maps.coproduct(l) - maps.coproduct(r), maps.presentation());
        return d.is_zero() ? std::string{} : to_string(d, maps.presentation());
    });
}

std::vector<RelationResidual> counit_homomorphism(const StructureMaps& maps, const Presentation& source)
{
    return for_relations(maps, source, [&maps](const Element& l, const Element& r) {
        const LaurentPoly d = maps.counit(l) - maps.counit(r);
        return d.is_zero() ? std::string{} : d.to_string();
    });
}

std::vector<RelationResidual> antipode_antihomomorphism(const StructureMaps& maps, const Presentation& source,
                                                        AntipodeRule rule)
{
    return for_relations(maps, source, [&maps, rule](const Element& l, const Element& r) {
        const Element d = normalize(maps.antipode(l, rule) - maps.antipode(r, rule), maps.presentation());
        return d.is_zero() ? std::string{} : to_string(d, maps.presentation());
    });
}

std::vector<RelationResidual> differential_well_defined(const StructureMaps& maps, const Presentation& source)
{
    return for_relations(maps, source, [&maps](const Element& l, const Element& r) {
        const Element d = maps.differential(l - r);
        return d.is_zero() ? std::string{} : to_string(d, maps.presentation());
    });
}

} // namespace qgrass
