#pragma once

// Graded tensor powers A (x) ... (x) A of one presentation algebra.

#include "qgrass/freealg.hpp"

#include <initializer_list>

namespace qgrass {

using Legs = std::vector<Word>;

/// Linear combination of pure tensors x_1 (x) ... (x) x_n, all of the same
/// length n (the leg count). The zero tensor has no fixed leg count.
class TensorElement {
public:
    using Terms = std::map<Legs, LaurentPoly>;

    TensorElement() = default;
    static TensorElement pure(Legs legs, const LaurentPoly& c = 1);
    /// 1 (x) ... (x) 1 with n legs.
    static TensorElement unit(std::size_t n);
    /// Tensor product of elements, expanded bilinearly.
    static TensorElement of(std::initializer_list<Element> legs);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// 0 for the zero tensor.
    std::size_t leg_count() const { return terms_.empty() ? 0 : terms_.begin()->first.size(); }

    void add_term(const Legs& legs, const LaurentPoly& c);

    TensorElement& operator+=(const TensorElement& rhs);
    TensorElement& operator-=(const TensorElement& rhs);
    TensorElement operator-() const;
    friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
    friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
    friend TensorElement operator*(const LaurentPoly& c, const TensorElement& t);
    friend bool operator==(const TensorElement& a, const TensorElement& b) { return a.terms_ == b.terms_; }

private:
    Terms terms_;
};

/// Normalizes every leg and re-collects the expansion.
TensorElement normalize(const TensorElement& t, const Presentation& p);

/// (x_1 (x) ... (x) x_n)(y_1 (x) ... (x) y_n)
///   = (-1)^{sum_{i > j} p(x_i) p(y_j)} x_1 y_1 (x) ... (x) x_n y_n,
/// so for two legs (A (x) B)(C (x) D) = (-1)^{p(B) p(C)} AC (x) BD.
/// Result is normalized.
TensorElement tensor_mul(const TensorElement& x, const TensorElement& y, const Presentation& p);

bool tensor_is_zero(const TensorElement& t, const Presentation& p);

/// Concatenation of tensor factors: (x_1 ... x_n) (x) (y_1 ... y_m).
TensorElement tensor_concat(const TensorElement& x, const TensorElement& y);

std::string to_string(const TensorElement& t, const Presentation& p);

} // namespace qgrass
