#pragma once

// Z2-graded free associative algebra over Q[q, q^-1] together with a
// quadratic rewrite system that normal-orders words.

#include "qgrass/coeff.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qgrass {

using Letter = std::uint16_t;
using Word = std::vector<Letter>;

inline constexpr std::size_t kDefaultFuel = 1'000'000;

/// Rewriting did not reach a fixpoint within the step budget. This signals a
/// non-terminating orientation, i.e. a bug in a presentation.
class FuelExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed presentation or an element that does not belong to one.
class PresentationError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct GeneratorSymbol {
    std::string name;
    int parity = 0;     // 0 even, 1 odd
    int precedence = 0; // normal words are weakly ascending in precedence
};

/// Finite linear combination of words with Laurent-polynomial coefficients.
/// Plain value type; knows nothing about relations. Multiplication with
/// `operator*` is free concatenation, normalization is explicit.
class Element {
public:
    using Terms = std::map<Word, LaurentPoly>;

    Element() = default;
    static Element scalar(const LaurentPoly& c);
    static Element word(Word w, const LaurentPoly& c = 1);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add_term(const Word& w, const LaurentPoly& c);

    Element& operator+=(const Element& rhs);
    Element& operator-=(const Element& rhs);
    Element operator-() const;

    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(const Element& a, const Element& b);
    friend Element operator*(const LaurentPoly& c, const Element& e);
    friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }

private:
    Terms terms_;
};

struct RewriteRule {
    Word lhs; // always two letters
    Element rhs;
};

/// A defining relation `lhs = rhs` in the form it is written down.
struct Relation {
    Word lhs;
    Element rhs;
};

struct Ambiguity {
    Word overlap;      // the three-letter word xyz
    Element difference; // normal form of (xy -> ..)z minus x(yz -> ..)
};

/// Generators plus oriented quadratic rewrite rules; defines one algebra.
/// Treated as immutable once construction is finished.
class Presentation {
public:
    Presentation() = default;
    Presentation(std::string id, std::vector<GeneratorSymbol> generators);

    /// Orients every relation along the descending one of lhs / reversed lhs,
    /// then brings every rule's right-hand side to normal form.
    static Presentation from_relations(std::string id, std::vector<GeneratorSymbol> generators,
                                       std::vector<Relation> relations);

    const std::string& id() const { return id_; }
    const std::vector<GeneratorSymbol>& generators() const { return generators_; }
    const std::vector<RewriteRule>& rules() const { return rules_; }
    const std::vector<Relation>& relations() const { return relations_; }
    std::size_t size() const { return generators_.size(); }

    std::optional<Letter> find(std::string_view name) const;
    /// Throws PresentationError for unknown names.
    Letter letter(std::string_view name) const;
    /// The generator as a one-word element.
    Element gen(std::string_view name) const;
    const GeneratorSymbol& symbol(Letter l) const { return generators_.at(l); }
    int parity(Letter l) const { return generators_.at(l).parity; }
    int parity(const Word& w) const;
    int precedence(Letter l) const { return generators_.at(l).precedence; }

    /// Rule with lhs (x, y), if any.
    const RewriteRule* rule_for(Letter x, Letter y) const;
    bool is_irreducible(const Word& w) const;

    /// Value of q when the presentation has been specialized for numeric
    /// cross-checks. All coefficients passing through normalize() are then
    /// evaluated at this point.
    const std::optional<Rational>& q_value() const { return q_value_; }
    Presentation specialized(const Rational& q0) const;
    LaurentPoly specialize(const LaurentPoly& c) const;

    /// Rewrite-step budget used when normalize() is called without one.
    std::size_t fuel() const { return fuel_; }
    void set_fuel(std::size_t fuel) { fuel_ = fuel; }

    Letter add_generator(GeneratorSymbol g);
    /// Installs or replaces the rule for lhs; lhs must be two letters.
    void set_rule(const Word& lhs, Element rhs);
    void add_relation(Relation r) { relations_.push_back(std::move(r)); }

private:
    std::string id_;
    std::vector<GeneratorSymbol> generators_;
    std::vector<RewriteRule> rules_;
    std::vector<int> table_; // size()*size(), index into rules_ or -1
    std::vector<Relation> relations_;
    std::optional<Rational> q_value_;
    std::size_t fuel_ = kDefaultFuel;
};

/// fuel = 0 means p.fuel().
Element normalize(const Element& e, const Presentation& p, std::size_t fuel = 0);
Element multiply(const Element& a, const Element& b, const Presentation& p, std::size_t fuel = 0);
bool is_zero_mod(const Element& e, const Presentation& p, std::size_t fuel = 0);

/// Diamond-lemma diagnostics: resolves every overlap xyz of two rule lhs
/// both ways and returns the pairs that disagree.
std::vector<Ambiguity> check_local_confluence(const Presentation& p, std::size_t fuel = 0);

/// Parity of each term; returns std::nullopt for inhomogeneous elements.
std::optional<int> homogeneous_parity(const Element& e, const Presentation& p);

/// Re-expresses an element of `from` over the generators of `to`, by name.
Element embed(const Element& e, const Presentation& from, const Presentation& to);

Element specialize(const Element& e, const Rational& q0);

std::string to_string(const Word& w, const Presentation& p);
std::string to_string(const Element& e, const Presentation& p);
/// One "lhs -> rhs" line per rule, in rule installation order.
std::string dump(const Presentation& p);

} // namespace qgrass
