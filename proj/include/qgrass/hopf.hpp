#pragma once

// Coproduct, counit, antipode and differential on the mixed algebra, the
// coactions of GL_q(1|1) on the one-forms, and the axiom residuals.

#include "qgrass/matrix.hpp"
#include "qgrass/tensoralg.hpp"

#include <array>
#include <map>
#include <string>

namespace qgrass {

enum class AntipodeRule {
    Graded, // S(xy) = (-1)^{p(x)p(y)} S(y) S(x)
    Plain,  // S(xy) = S(y) S(x)
};

enum class Side { Right, Left };

/// Names of the entries of T and T-hat, row-major.
inline constexpr std::array<const char*, 4> kTNames{"a", "beta", "gamma", "d"};
inline constexpr std::array<const char*, 4> kTHatNames{"alpha", "b", "c", "delta"};

/// Structure maps over a presentation containing at least a, beta, gamma, d.
/// Hatted maps are available when alpha, b, c, delta are present, the
/// antipode when a and d are inverted. Generator images are computed once and
/// normalized.
class StructureMaps {
public:
    explicit StructureMaps(Presentation p);

    const Presentation& presentation() const { return p_; }
    bool has_hatted() const { return has_hatted_; }
    bool has_antipode() const { return has_antipode_; }

    /// Multiplicative extension of Delta(t^i_j) = t^i_k (x) t^k_j and
    /// Delta(T-hat) = T-hat (x). T + (-1)^{p(T)} T (x). T-hat, the sign taken
    /// from the left entry of each summand. Throws DomainError on inverses.
    TensorElement coproduct(const Element& e) const;
    const TensorElement& coproduct_of(Letter l) const;

    /// eps(a) = eps(d) = eps(a^-1) = eps(d^-1) = 1, zero on every other
    /// generator. Throws DomainError on elements containing c^-1.
    LaurentPoly counit(const Element& e) const;

    /// S(T) = T^-1 and S(T-hat)^i_j = -sum (-1)^{p(T^-1 ^i_k)} T^-1 ^i_k T-hat^k_l T^-1 ^l_j.
    /// Throws DomainError on inverses, PresentationError without a, d inverted.
    Element antipode(const Element& e, AntipodeRule rule = AntipodeRule::Graded) const;
    const Element& antipode_of(Letter l) const;

    /// Odd derivation with d(T) = T-hat, d(T-hat) = 0,
    /// d(x^-1) = -x^-1 d(x) x^-1.
    Element differential(const Element& e) const;

    /// Right: d t^i_j -> d t^i_k (x) t^k_j. Left: d t^i_j -> (-1)^{p(t^i_k)} t^i_k (x) d t^k_j.
    /// `hatted` must be one of alpha, b, c, delta.
    TensorElement coaction(Side side, Letter hatted) const;

    /// Extension of the coaction to one-forms: every term u h v with exactly
    /// one hatted letter h goes to Delta(u) coaction(h) Delta(v). Throws
    /// DomainError for terms of any other hatted degree.
    TensorElement phi(Side side, const Element& form) const;

    /// Applies `f` to leg `leg` of every term of `t`, splicing in its legs.
    /// The maps involved are all even, so no Koszul sign arises.
    template <class F>
    TensorElement apply_on_leg(const TensorElement& t, std::size_t leg, F&& f) const;

    /// Leg-wise product m(x (x) y) = xy of a two-leg tensor.
    Element multiply_legs(const TensorElement& t) const;

    int hatted_degree(const Word& w) const;

private:
    Presentation p_;
    bool has_hatted_ = false;
    bool has_antipode_ = false;
    std::map<Letter, TensorElement> delta_;
    std::map<Letter, Element> s_;
    std::map<Letter, LaurentPoly> eps_;
    std::map<Letter, Letter> d_of_; // unhatted letter -> hatted letter
    std::map<Letter, Letter> undo_d_; // hatted letter -> unhatted letter
    std::map<Letter, Letter> base_of_inverse_;
    std::optional<Letter> c_inverse_;
};

template <class F>
TensorElement StructureMaps::apply_on_leg(const TensorElement& t, std::size_t leg, F&& f) const
{
    TensorElement out;
    for (const auto& [legs, c] : t.terms()) {
        Legs before(legs.begin(), legs.begin() + static_cast<std::ptrdiff_t>(leg));
        Legs after(legs.begin() + static_cast<std::ptrdiff_t>(leg) + 1, legs.end());
        const TensorElement image = f(legs[leg]);
        out += c * tensor_concat(tensor_concat(TensorElement::pure(before), image), TensorElement::pure(after));
    }
    return normalize(out, p_);
}

/// Residuals of the Hopf axioms on one generator, each normalized.
struct AxiomResiduals {
    TensorElement coassociativity;  // (Delta (x) id) Delta - (id (x) Delta) Delta
    Element left_counit;            // (eps (x) id) Delta - id
    Element right_counit;           // (id (x) eps) Delta - id
    // Only when the maps carry an antipode.
    std::optional<Element> left_antipode;  // m (S (x) id) Delta - eps
    std::optional<Element> right_antipode; // m (id (x) S) Delta - eps
};

AxiomResiduals axiom_residuals(const StructureMaps& maps, Letter generator,
                               AntipodeRule rule = AntipodeRule::Graded);

/// Map applied to lhs - rhs of every relation of `source`; returns the
/// relations whose image does not vanish, with the image. Generators are
/// matched to the maps' presentation by name.
struct RelationResidual {
    std::string relation;
    std::string residual;
};
std::vector<RelationResidual> coproduct_homomorphism(const StructureMaps& maps, const Presentation& source);
std::vector<RelationResidual> counit_homomorphism(const StructureMaps& maps, const Presentation& source);
std::vector<RelationResidual> antipode_antihomomorphism(const StructureMaps& maps, const Presentation& source,
                                                        AntipodeRule rule = AntipodeRule::Graded);
std::vector<RelationResidual> differential_well_defined(const StructureMaps& maps, const Presentation& source);

} // namespace qgrass
