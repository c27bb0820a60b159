#pragma once

// Exact coefficient ring Q[q, q^-1].

#include <gmpxx.h>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qgrass {

/// Arbitrary-precision rational, always kept in lowest terms.
using Rational = mpq_class;

/// Raised for arguments outside an operation's domain (q0 = 0, counit of c^-1, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Parses "7", "-3/2", " 5/7 ". Throws std::invalid_argument on malformed
/// input or a zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& r);

/// Laurent polynomial in q with rational coefficients.
///
/// Stored as a sparse exponent -> coefficient map with no zero entries, so
/// structural equality is polynomial equality.
class LaurentPoly {
public:
    using Terms = std::map<int, Rational>;

    LaurentPoly() = default;
    LaurentPoly(long constant); // NOLINT: integer scalars appear everywhere
    explicit LaurentPoly(const Rational& constant);

    static LaurentPoly monomial(const Rational& coeff, int exponent);
    /// q^exponent
    static LaurentPoly q(int exponent = 1);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Lowest / highest exponent; both 0 for the zero polynomial.
    int min_exponent() const;
    int max_exponent() const;

    /// Coefficient of q^exponent (zero if absent).
    Rational coeff(int exponent) const;

    /// Units of the ring are exactly the nonzero monomials c*q^k.
    bool is_unit() const;
    /// Inverse of a unit; throws DomainError otherwise.
    LaurentPoly unit_inverse() const;

    /// Exact quotient if `divisor` divides *this, std::nullopt otherwise.
    std::optional<LaurentPoly> divide_exact(const LaurentPoly& divisor) const;

    /// Substitution q -> q0. Throws DomainError for q0 = 0.
    Rational eval(const Rational& q0) const;

    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const LaurentPoly& rhs);
    LaurentPoly operator-() const;

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

    /// Human-readable form, e.g. "q - q^-1", "-2/3*q^2", "1".
    std::string to_string() const;

private:
    void add_term(int exponent, const Rational& coeff);

    Terms terms_;
};

/// q - q^-1, the ubiquitous deformation factor.
LaurentPoly q_minus_qinv();

bool lp_is_zero(const LaurentPoly& p);

} // namespace qgrass
