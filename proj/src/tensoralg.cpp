#include "qgrass/tensoralg.hpp"

namespace qgrass {

TensorElement TensorElement::pure(Legs legs, const LaurentPoly& c)
{
    TensorElement t;
    t.add_term(legs, c);
    return t;
}

TensorElement TensorElement::unit(std::size_t n) { return pure(Legs(n)); }

TensorElement TensorElement::of(std::initializer_list<Element> legs)
{
    TensorElement acc = unit(0);
    for (const Element& e : legs) {
        TensorElement next;
        for (const auto& [l, c] : acc.terms_)
            for (const auto& [w, ce] : e.terms()) {
                Legs nl = l;
                nl.push_back(w);
                next.add_term(nl, c * ce);
            }
        acc = std::move(next);
    }
    return acc;
}

void TensorElement::add_term(const Legs& legs, const LaurentPoly& c)
{
    if (c.is_zero())
        return;
    if (!terms_.empty() && terms_.begin()->first.size() != legs.size())
        throw std::invalid_argument("tensor terms with different leg counts");
    auto [it, inserted] = terms_.try_emplace(legs, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

TensorElement& TensorElement::operator+=(const TensorElement& rhs)
{
    for (const auto& [l, c] : rhs.terms_)
        add_term(l, c);
    return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& rhs)
{
    for (const auto& [l, c] : rhs.terms_)
        add_term(l, -c);
    return *this;
}

TensorElement TensorElement::operator-() const
{
    TensorElement r = *this;
    for (auto& [l, c] : r.terms_)
        c = -c;
    return r;
}

TensorElement operator*(const LaurentPoly& c, const TensorElement& t)
{
    TensorElement r;
    for (const auto& [l, ct] : t.terms_)
        r.add_term(l, c * ct);
    return r;
}

TensorElement normalize(const TensorElement& t, const Presentation& p)
{
    TensorElement out;
    for (const auto& [legs, c] : t.terms()) {
        TensorElement acc = TensorElement::pure({}, p.specialize(c));
        for (const Word& w : legs) {
            const Element nf = normalize(Element::word(w), p);
            TensorElement next;
            for (const auto& [l, ca] : acc.terms())
                for (const auto& [nw, cn] : nf.terms()) {
                    Legs nl = l;
                    nl.push_back(nw);
                    next.add_term(nl, ca * cn);
                }
            acc = std::move(next);
        }
        out += acc;
    }
    return out;
}

TensorElement tensor_mul(const TensorElement& x, const TensorElement& y, const Presentation& p)
{
    TensorElement r;
    for (const auto& [lx, cx] : x.terms()) {
        for (const auto& [ly, cy] : y.terms()) {
            if (lx.size() != ly.size())
                throw std::invalid_argument("tensor_mul needs equal leg counts");
            int sign = 0;
            for (std::size_t i = 0; i < lx.size(); ++i)
                for (std::size_t j = 0; j < i; ++j)
                    sign ^= p.parity(lx[i]) & p.parity(ly[j]);
            Legs legs(lx.size());
            for (std::size_t i = 0; i < lx.size(); ++i) {
                legs[i] = lx[i];
                legs[i].insert(legs[i].end(), ly[i].begin(), ly[i].end());
            }
            const LaurentPoly c = cx * cy;
            r.add_term(legs, sign ? -c : c);
        }
    }
    return normalize(r, p);
}

bool tensor_is_zero(const TensorElement& t, const Presentation& p) { return normalize(t, p).is_zero(); }

TensorElement tensor_concat(const TensorElement& x, const TensorElement& y)
{
    TensorElement r;
    for (const auto& [lx, cx] : x.terms())
        for (const auto& [ly, cy] : y.terms()) {
            Legs legs = lx;
            legs.insert(legs.end(), ly.begin(), ly.end());
            r.add_term(legs, cx * cy);
        }
    return r;
}

std::string to_string(const TensorElement& t, const Presentation& p)
{
    if (t.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [legs, c] : t.terms()) {
        std::string body;
        for (std::size_t i = 0; i < legs.size(); ++i) {
            if (i)
                body += " (x) ";
            body += to_string(legs[i], p);
        }
        // Reuse the element printer for the coefficient by printing c * 1.
        std::string coeff = to_string(Element::scalar(c), p);
        std::string term;
        bool negative = false;
        if (coeff == "1") {
            term = body;
        } else if (coeff == "-1") {
            term = body;
            negative = true;
        } else {
            if (c.is_unit() && coeff[0] == '-') {
                negative = true;
                coeff.erase(0, 1);
            }
            term = (c.is_unit() ? coeff : "(" + coeff + ")") + "*" + body;
        }
        if (first)
            out += negative ? "-" + term : term;
        else
            out += (negative ? " - " : " + ") + term;
        first = false;
    }
    return out;
}

} // namespace qgrass
