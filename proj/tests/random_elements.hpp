#pragma once

#include "qgrass/freealg.hpp"

#include <random>

namespace testing_support {

/// Random Laurent polynomial with exponents in [-degree, degree] and small
/// integer or half-integer coefficients.
inline qgrass::LaurentPoly random_poly(std::mt19937& rng, int degree = 3, int max_terms = 3)
{
    std::uniform_int_distribution<int> exp(-degree, degree), num(-5, 5), den(1, 2), terms(0, max_terms);
    qgrass::LaurentPoly p;
    for (int i = terms(rng); i > 0; --i)
        p += qgrass::LaurentPoly::monomial(qgrass::Rational(num(rng), den(rng)), exp(rng));
    return p;
}

/// Random word over letters [0, n) of length at most max_len.
inline qgrass::Word random_word(std::mt19937& rng, std::size_t n, std::size_t max_len)
{
    std::uniform_int_distribution<std::size_t> len(0, max_len), letter(0, n - 1);
    qgrass::Word w(len(rng));
    for (auto& l : w)
        l = static_cast<qgrass::Letter>(letter(rng));
    return w;
}

inline qgrass::Element random_element(std::mt19937& rng, const qgrass::Presentation& p, std::size_t max_len = 5,
                                      int degree = 3, int max_terms = 3)
{
    std::uniform_int_distribution<int> terms(1, max_terms);
    qgrass::Element e;
    for (int i = terms(rng); i > 0; --i) {
        qgrass::LaurentPoly c = random_poly(rng, degree, 2);
        if (c.is_zero())
            c = 1;
        e.add_term(random_word(rng, p.size(), max_len), c);
    }
    return e;
}

} // namespace testing_support
