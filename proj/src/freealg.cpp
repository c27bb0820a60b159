#include "qgrass/freealg.hpp"

#include <sstream>

namespace qgrass {

// ---------------------------------------------------------------- Element

Element Element::scalar(const LaurentPoly& c) { return word({}, c); }

Element Element::word(Word w, const LaurentPoly& c)
{
    Element e;
    e.add_term(w, c);
    return e;
}

void Element::add_term(const Word& w, const LaurentPoly& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

Element& Element::operator+=(const Element& rhs)
{
    for (const auto& [w, c] : rhs.terms_)
        add_term(w, c);
    return *this;
}

Element& Element::operator-=(const Element& rhs)
{
    for (const auto& [w, c] : rhs.terms_)
        add_term(w, -c);
    return *this;
}

Element Element::operator-() const
{
    Element r = *this;
    for (auto& [w, c] : r.terms_)
        c = -c;
    return r;
}

Element operator*(const Element& a, const Element& b)
{
    Element r;
    for (const auto& [wa, ca] : a.terms_) {
        for (const auto& [wb, cb] : b.terms_) {
            Word w;
            w.reserve(wa.size() + wb.size());
            w.insert(w.end(), wa.begin(), wa.end());
            w.insert(w.end(), wb.begin(), wb.end());
            r.add_term(w, ca * cb);
        }
    }
    return r;
}

Element operator*(const LaurentPoly& c, const Element& e)
{
    Element r;
    if (c.is_zero())
        return r;
    for (const auto& [w, ce] : e.terms_)
        r.add_term(w, c * ce);
    return r;
}

// ----------------------------------------------------------- Presentation

Presentation::Presentation(std::string id, std::vector<GeneratorSymbol> generators)
    : id_(std::move(id))
{
    for (auto& g : generators)
        add_generator(std::move(g));
}

Letter Presentation::add_generator(GeneratorSymbol g)
{
    if (find(g.name))
        throw PresentationError("duplicate generator " + g.name);
    if (g.parity != 0 && g.parity != 1)
        throw PresentationError("parity must be 0 or 1 for " + g.name);
    const std::size_t old_n = generators_.size();
    generators_.push_back(std::move(g));
    const std::size_t n = generators_.size();
    std::vector<int> table(n * n, -1);
    for (std::size_t i = 0; i < old_n; ++i)
        for (std::size_t j = 0; j < old_n; ++j)
            table[i * n + j] = table_[i * old_n + j];
    table_ = std::move(table);
    return static_cast<Letter>(n - 1);
}

void Presentation::set_rule(const Word& lhs, Element rhs)
{
    if (lhs.size() != 2)
        throw PresentationError("rule lhs must have exactly two letters");
    for (Letter l : lhs)
        if (l >= size())
            throw PresentationError("rule lhs uses an unknown generator");
    int& slot = table_[lhs[0] * size() + lhs[1]];
    if (slot >= 0) {
        rules_[slot].rhs = std::move(rhs);
        return;
    }
    slot = static_cast<int>(rules_.size());
    rules_.push_back({lhs, std::move(rhs)});
}

std::optional<Letter> Presentation::find(std::string_view name) const
{
    for (std::size_t i = 0; i < generators_.size(); ++i)
        if (generators_[i].name == name)
            return static_cast<Letter>(i);
    return std::nullopt;
}

Letter Presentation::letter(std::string_view name) const
{
    if (auto l = find(name))
        return *l;
    throw PresentationError("no generator '" + std::string(name) + "' in " + id_);
}

Element Presentation::gen(std::string_view name) const { return Element::word({letter(name)}); }

int Presentation::parity(const Word& w) const
{
    int p = 0;
    for (Letter l : w)
        p ^= parity(l);
    return p;
}

const RewriteRule* Presentation::rule_for(Letter x, Letter y) const
{
    const int idx = table_[x * size() + y];
    return idx < 0 ? nullptr : &rules_[idx];
}

bool Presentation::is_irreducible(const Word& w) const
{
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (rule_for(w[i], w[i + 1]))
            return false;
    return true;
}

LaurentPoly Presentation::specialize(const LaurentPoly& c) const
{
    return q_value_ ? LaurentPoly(c.eval(*q_value_)) : c;
}

Presentation Presentation::specialized(const Rational& q0) const
{
    if (q0 == 0)
        throw DomainError("cannot specialize at q = 0");
    Presentation p = *this;
    p.q_value_ = q0;
    for (auto& r : p.rules_)
        r.rhs = qgrass::specialize(r.rhs, q0);
    for (auto& r : p.relations_)
        r.rhs = qgrass::specialize(r.rhs, q0);
    return p;
}

namespace {

bool is_descending(const Presentation& p, const Word& w)
{
    if (w[0] == w[1])
        return p.parity(w[0]) == 1; // odd squares vanish
    return p.precedence(w[0]) > p.precedence(w[1]);
}

} // namespace

Presentation Presentation::from_relations(std::string id, std::vector<GeneratorSymbol> generators,
                                          std::vector<Relation> relations)
{
    Presentation p(std::move(id), std::move(generators));
    for (auto& rel : relations) {
        if (rel.lhs.size() != 2)
            throw PresentationError("relations must be quadratic in " + p.id_);
        const Element zero = Element::word(rel.lhs) - rel.rhs;
        const Word reversed{rel.lhs[1], rel.lhs[0]};

        std::optional<Word> lead;
        for (const Word& cand : {rel.lhs, reversed}) {
            auto it = zero.terms().find(cand);
            if (is_descending(p, cand) && it != zero.terms().end() && it->second.is_unit()) {
                lead = cand;
                break;
            }
        }
        if (!lead)
            throw PresentationError("cannot orient relation " + to_string(rel.lhs, p) + " = " +
                                    to_string(rel.rhs, p));
        if (p.rule_for((*lead)[0], (*lead)[1]))
            throw PresentationError("two relations rewrite " + to_string(*lead, p));

        const LaurentPoly c = zero.terms().at(*lead);
        Element rest = zero - Element::word(*lead, c);
        p.set_rule(*lead, -c.unit_inverse() * rest);
        p.relations_.push_back(std::move(rel));
    }

    // Corrections may mention other descending pairs; reduce until stable.
    for (bool changed = true; changed;) {
        changed = false;
        for (auto& r : p.rules_) {
            Element nf = normalize(r.rhs, p);
            if (!(nf == r.rhs)) {
                r.rhs = std::move(nf);
                changed = true;
            }
        }
    }

    for (const auto& r : p.rules_) {
        const int lp = p.parity(r.lhs);
        for (const auto& [w, c] : r.rhs.terms())
            if (p.parity(w) != lp)
                throw PresentationError("rule " + to_string(r.lhs, p) + " mixes parities");
    }
    return p;
}

// ------------------------------------------------------------- rewriting

Element normalize(const Element& e, const Presentation& p, std::size_t fuel)
{
    if (fuel == 0)
        fuel = p.fuel();
    std::map<Word, LaurentPoly> pending;
    for (const auto& [w, c] : e.terms()) {
        for (Letter l : w)
            if (l >= p.size())
                throw PresentationError("element uses a letter outside " + p.id());
        LaurentPoly cc = p.specialize(c);
        if (!cc.is_zero())
            pending.emplace(w, std::move(cc));
    }

    auto accumulate = [](std::map<Word, LaurentPoly>& into, Word w, const LaurentPoly& c) {
        auto [it, inserted] = into.try_emplace(std::move(w), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                into.erase(it);
        }
    };

    Element result;
    std::size_t steps = 0;
    while (!pending.empty()) {
        auto node = pending.extract(pending.begin());
        const Word& w = node.key();
        const LaurentPoly& c = node.mapped();

        const RewriteRule* rule = nullptr;
        std::size_t pos = 0;
        for (; pos + 1 < w.size(); ++pos)
            if ((rule = p.rule_for(w[pos], w[pos + 1])))
                break;
        if (!rule) {
            result.add_term(w, c);
            continue;
        }
        if (++steps > fuel)
            throw FuelExhausted("normalization exceeded " + std::to_string(fuel) + " rewrite steps in " +
                                p.id());
        for (const auto& [rw, rc] : rule->rhs.terms()) {
            Word nw;
            nw.reserve(w.size() + rw.size());
            nw.insert(nw.end(), w.begin(), w.begin() + pos);
            nw.insert(nw.end(), rw.begin(), rw.end());
            nw.insert(nw.end(), w.begin() + pos + 2, w.end());
            accumulate(pending, std::move(nw), c * rc);
        }
    }
    return result;
}

Element multiply(const Element& a, const Element& b, const Presentation& p, std::size_t fuel)
{
    return normalize(a * b, p, fuel);
}

bool is_zero_mod(const Element& e, const Presentation& p, std::size_t fuel)
{
    return normalize(e, p, fuel).is_zero();
}

std::vector<Ambiguity> check_local_confluence(const Presentation& p, std::size_t fuel)
{
    std::vector<Ambiguity> out;
    for (const auto& r1 : p.rules()) {
        for (const auto& r2 : p.rules()) {
            if (r1.lhs[1] != r2.lhs[0])
                continue;
            const Letter x = r1.lhs[0], y = r1.lhs[1], z = r2.lhs[1];
            Element left = normalize(r1.rhs * Element::word({z}), p, fuel);
            Element right = normalize(Element::word({x}) * r2.rhs, p, fuel);
            Element diff = left - right;
            if (!diff.is_zero())
                out.push_back({Word{x, y, z}, std::move(diff)});
        }
    }
    return out;
}

std::optional<int> homogeneous_parity(const Element& e, const Presentation& p)
{
    std::optional<int> par;
    for (const auto& [w, c] : e.terms()) {
        const int pw = p.parity(w);
        if (par && *par != pw)
            return std::nullopt;
        par = pw;
    }
    return par.value_or(0);
}

Element embed(const Element& e, const Presentation& from, const Presentation& to)
{
    std::vector<Letter> map(from.size());
    for (Letter l = 0; l < from.size(); ++l)
        map[l] = to.letter(from.symbol(l).name);
    Element out;
    for (const auto& [w, c] : e.terms()) {
        Word nw(w.size());
        for (std::size_t i = 0; i < w.size(); ++i)
            nw[i] = map.at(w[i]);
        out.add_term(nw, c);
    }
    return out;
}

Element specialize(const Element& e, const Rational& q0)
{
    Element out;
    for (const auto& [w, c] : e.terms())
        out.add_term(w, LaurentPoly(c.eval(q0)));
    return out;
}

// ---------------------------------------------------------------- output

std::string to_string(const Word& w, const Presentation& p)
{
    if (w.empty())
        return "1";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i)
            s += '*';
        s += p.symbol(w[i]).name;
    }
    return s;
}

std::string to_string(const Element& e, const Presentation& p)
{
    if (e.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : e.terms()) {
        std::string coeff;
        bool negative = false;
        LaurentPoly mag = c;
        if (c.is_unit() && c.terms().begin()->second < 0) {
            negative = true;
            mag = -c;
        }
        if (w.empty()) {
            coeff = mag.to_string();
        } else if (mag == LaurentPoly(1)) {
            coeff.clear();
        } else if (mag.is_unit()) {
            coeff = mag.to_string() + "*";
        } else {
            coeff = "(" + mag.to_string() + ")*";
        }
        std::string term = coeff + (w.empty() ? "" : to_string(w, p));
        if (first)
            out += negative ? "-" + term : term;
        else
            out += (negative ? " - " : " + ") + term;
        first = false;
    }
    return out;
}

std::string dump(const Presentation& p)
{
    std::ostringstream out;
    for (const auto& r : p.rules())
        out << to_string(r.lhs, p) << " -> " << to_string(r.rhs, p) << "\n";
    return out.str();
}

} // namespace qgrass
