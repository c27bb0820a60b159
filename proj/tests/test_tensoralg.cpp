#include "qgrass/hopf.hpp"
#include "qgrass/presentations.hpp"
#include "qgrass/tensoralg.hpp"

#include "random_elements.hpp"

#include "doctest.h"

#include <random>

using namespace qgrass;

namespace {

const LaurentPoly q = LaurentPoly::q(1);

// The product read with the second factor's first leg repeated,
// (A (x) B)(C (x) D) = (-1)^{p(B) p(C)} AC (x) BC.
TensorElement literal_mul(const TensorElement& x, const TensorElement& y, const Presentation& p)
{
    TensorElement out;
    for (const auto& [lx, cx] : x.terms())
        for (const auto& [ly, cy] : y.terms()) {
            const int sign = p.parity(lx[1]) * p.parity(ly[0]) % 2 ? -1 : 1;
            Word ac = lx[0], bc = lx[1];
            ac.insert(ac.end(), ly[0].begin(), ly[0].end());
            bc.insert(bc.end(), ly[0].begin(), ly[0].end());
            out.add_term({ac, bc}, LaurentPoly(sign) * cx * cy);
        }
    return normalize(out, p);
}

TensorElement random_tensor(std::mt19937& rng, const Presentation& p, std::size_t legs)
{
    std::uniform_int_distribution<int> terms(1, 3);
    TensorElement t;
    for (int n = terms(rng); n > 0; --n) {
        Legs l;
        for (std::size_t i = 0; i < legs; ++i)
            l.push_back(testing_support::random_word(rng, p.size(), 2));
        LaurentPoly c = testing_support::random_poly(rng, 2, 2);
        t.add_term(l, c.is_zero() ? LaurentPoly(1) : c);
    }
    return t;
}

} // namespace

TEST_CASE("graded tensor product examples")
{
    const Presentation m = mixed();
    const Element one = Element::scalar(1), beta = m.gen("beta"), gamma = m.gen("gamma");
    const Element alpha = m.gen("alpha"), b = m.gen("b");
    CHECK(tensor_mul(TensorElement::of({one, beta}), TensorElement::of({beta, one}), m) ==
          -TensorElement::of({beta, beta}));
    CHECK(tensor_mul(TensorElement::of({one, b}), TensorElement::of({alpha, one}), m) ==
          TensorElement::of({alpha, b}));
    CHECK(tensor_mul(TensorElement::of({beta, one}), TensorElement::of({one, gamma}), m) ==
          TensorElement::of({beta, gamma}));
}

TEST_CASE("zero tests")
{
    const Presentation gl = gl_q();
    const TensorElement x = TensorElement::of({gl.gen("a"), gl.gen("beta")});
    CHECK(tensor_is_zero(x - x, gl));
    CHECK_FALSE(tensor_is_zero(TensorElement::of({gl.gen("beta"), gl.gen("beta")}), gl));
    CHECK(tensor_is_zero(TensorElement::of({gl.gen("beta") * gl.gen("beta"), gl.gen("a")}), gl));
}

TEST_CASE("construction")
{
    const Presentation gl = gl_q();
    CHECK(TensorElement::unit(3).leg_count() == 3);
    CHECK(TensorElement{}.leg_count() == 0);
    CHECK(TensorElement::of({gl.gen("a") + gl.gen("d"), gl.gen("beta")}).terms().size() == 2);
    TensorElement t = TensorElement::of({gl.gen("a"), gl.gen("d")});
    CHECK_THROWS_AS(t.add_term({Word{}}, 1), std::invalid_argument);
    CHECK_THROWS_AS(tensor_mul(t, TensorElement::unit(3), gl), std::invalid_argument);
    CHECK(tensor_concat(TensorElement::of({gl.gen("a")}), TensorElement::of({gl.gen("d")})) == t);
    CHECK(to_string(t, gl) == "a (x) d");
}

TEST_CASE("coproduct respects a gl relation")
{
    const StructureMaps maps(localize(gl_q(), {"a", "d"}));
    const Presentation& p = maps.presentation();
    const Element rel = p.gen("a") * p.gen("beta") - q * (p.gen("beta") * p.gen("a"));
    CHECK(tensor_is_zero(maps.coproduct(rel), p));
    CHECK_FALSE(tensor_is_zero(maps.coproduct(p.gen("a") * p.gen("beta")), p));
}

TEST_CASE("graded tensor product is associative with unit")
{
    std::mt19937 rng(2026);
    const Presentation p = mixed();
    for (std::size_t legs : {2u, 3u})
        for (int n = 0; n < 40; ++n) {
            const TensorElement x = random_tensor(rng, p, legs), y = random_tensor(rng, p, legs),
                                z = random_tensor(rng, p, legs);
            CHECK(tensor_mul(tensor_mul(x, y, p), z, p) == tensor_mul(x, tensor_mul(y, z, p), p));
            CHECK(tensor_mul(TensorElement::unit(legs), x, p) == normalize(x, p));
            CHECK(tensor_mul(x, TensorElement::unit(legs), p) == normalize(x, p));
        }
}

TEST_CASE("pure tensors factor as (x (x) 1)(1 (x) y)")
{
    std::mt19937 rng(77);
    const Presentation p = mixed();
    const Element one = Element::scalar(1);
    for (int n = 0; n < 50; ++n) {
        const Element x = Element::word(testing_support::random_word(rng, p.size(), 3));
        const Element y = Element::word(testing_support::random_word(rng, p.size(), 3));
        CHECK(tensor_mul(TensorElement::of({x, one}), TensorElement::of({one, y}), p) ==
              normalize(TensorElement::of({x, y}), p));
    }
}

TEST_CASE("the repeated-leg reading of the product is not associative")
{
    const Presentation p = gl_q();
    std::vector<TensorElement> pool;
    const Element one = Element::scalar(1);
    for (const Element& u : {one, p.gen("a"), p.gen("beta")})
        for (const Element& v : {one, p.gen("d"), p.gen("gamma")})
            pool.push_back(TensorElement::of({u, v}));
    std::size_t broken = 0, total = 0;
    for (const auto& x : pool)
        for (const auto& y : pool)
            for (const auto& z : pool) {
                ++total;
                broken += !(literal_mul(literal_mul(x, y, p), z, p) == literal_mul(x, literal_mul(y, z, p), p));
                CHECK(tensor_mul(tensor_mul(x, y, p), z, p) == tensor_mul(x, tensor_mul(y, z, p), p));
            }
    CHECK(broken > 0);
    MESSAGE("repeated-leg product: " << broken << " of " << total << " triples fail associativity");
}
