#include "qgrass/coeff.hpp"

#include <sstream>
#include <vector>

namespace qgrass {

Rational parse_rational(std::string_view text)
{
    std::string s;
    for (char ch : text)
        if (ch != ' ' && ch != '\t')
            s.push_back(ch);
    if (s.empty())
        throw std::invalid_argument("empty rational");

    auto slash = s.find('/');
    auto valid_int = [](std::string_view t) {
        std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i == t.size())
            return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9')
                return false;
        return true;
    };
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den.front() == '-' || den.front() == '+')
        throw std::invalid_argument("malformed rational: " + std::string(text));
    if (num.front() == '+')
        num.erase(0, 1);

    mpz_class n(num, 10), d(den, 10);
    if (d == 0)
        throw std::invalid_argument("zero denominator: " + std::string(text));
    Rational r(n, d);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

LaurentPoly::LaurentPoly(long constant)
{
    if (constant != 0)
        terms_.emplace(0, Rational(constant));
}

LaurentPoly::LaurentPoly(const Rational& constant)
{
    if (constant != 0)
        terms_.emplace(0, constant).first->second.canonicalize();
}

LaurentPoly LaurentPoly::monomial(const Rational& coeff, int exponent)
{
    LaurentPoly p;
    p.add_term(exponent, coeff);
    return p;
}

LaurentPoly LaurentPoly::q(int exponent) { return monomial(Rational(1), exponent); }

bool LaurentPoly::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

int LaurentPoly::min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }
int LaurentPoly::max_exponent() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

Rational LaurentPoly::coeff(int exponent) const
{
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
}

bool LaurentPoly::is_unit() const { return terms_.size() == 1; }

LaurentPoly LaurentPoly::unit_inverse() const
{
    if (!is_unit())
        throw DomainError("not a unit of Q[q,q^-1]: " + to_string());
    const auto& [e, c] = *terms_.begin();
    Rational inv = 1 / c;
    inv.canonicalize();
    return monomial(inv, -e);
}

void LaurentPoly::add_term(int exponent, const Rational& coeff)
{
    if (coeff == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(exponent, coeff);
    if (inserted) {
        it->second.canonicalize(); // mpq_class(n, d) is not reduced on construction
    } else {
        it->second += coeff;
        if (it->second == 0)
            terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs)
{
    for (const auto& [e, c] : rhs.terms_)
        add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs)
{
    for (const auto& [e, c] : rhs.terms_)
        add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
{
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            r.add_term(ea + eb, Rational(ca * cb));
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs)
{
    *this = *this * rhs;
    return *this;
}

LaurentPoly LaurentPoly::operator-() const
{
    LaurentPoly r = *this;
    for (auto& [e, c] : r.terms_)
        c = -c;
    return r;
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& divisor) const
{
    if (divisor.is_zero())
        throw DomainError("division by zero Laurent polynomial");
    if (is_zero())
        return LaurentPoly{};

    // Shift both to ordinary polynomials with nonzero constant term; q is a
    // unit so the shift only moves the quotient's exponent.
    const int shift_a = min_exponent(), shift_b = divisor.min_exponent();
    std::vector<Rational> rem(max_exponent() - shift_a + 1), den(divisor.max_exponent() - shift_b + 1);
    for (const auto& [e, c] : terms_)
        rem[e - shift_a] = c;
    for (const auto& [e, c] : divisor.terms_)
        den[e - shift_b] = c;
    if (den.size() > rem.size())
        return std::nullopt;

    std::vector<Rational> quot(rem.size() - den.size() + 1);
    const Rational& lead = den.back();
    for (std::size_t k = quot.size(); k-- > 0;) {
        Rational f = rem[k + den.size() - 1] / lead;
        f.canonicalize();
        quot[k] = f;
        if (f == 0)
            continue;
        for (std::size_t j = 0; j < den.size(); ++j) {
            rem[k + j] -= f * den[j];
        }
    }
    for (const auto& r : rem)
        if (r != 0)
            return std::nullopt;

    LaurentPoly out;
    for (std::size_t k = 0; k < quot.size(); ++k)
        out.add_term(static_cast<int>(k) + shift_a - shift_b, quot[k]);
    return out;
}

Rational LaurentPoly::eval(const Rational& q0) const
{
    if (q0 == 0)
        throw DomainError("evaluation at q = 0");
    Rational acc = 0;
    for (const auto& [e, c] : terms_) {
        Rational power = 1;
        const Rational base = e >= 0 ? q0 : Rational(1 / q0);
        for (int k = 0; k < (e >= 0 ? e : -e); ++k)
            power *= base;
        acc += c * power;
    }
    acc.canonicalize();
    return acc;
}

std::string LaurentPoly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    // Highest power first reads naturally: q - q^-1.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational mag = abs(c);
        if (first)
            out << (c < 0 ? "-" : "");
        else
            out << (c < 0 ? " - " : " + ");
        first = false;
        if (e == 0) {
            out << mag.get_str();
            continue;
        }
        if (mag != 1)
            out << mag.get_str() << "*";
        out << "q";
        if (e != 1)
            out << "^" << e;
    }
    return out.str();
}

LaurentPoly q_minus_qinv() { return LaurentPoly::q(1) - LaurentPoly::q(-1); }

bool lp_is_zero(const LaurentPoly& p) { return p.is_zero(); }

} // namespace qgrass
