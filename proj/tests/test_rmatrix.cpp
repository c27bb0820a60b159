#include "qgrass/rmatrix.hpp"

#include "doctest.h"

#include <array>

using namespace qgrass;

namespace {

const LaurentPoly q = LaurentPoly::q(1);
const LaurentPoly qi = LaurentPoly::q(-1);
const LaurentPoly k = q_minus_qinv();

// Reference graded Yang-Baxter residual on V (x) V (x) V, dim V = 1|1, built
// from operators instead of sign formulas: R12 = R (x) 1, R23 = 1 (x) R and
// R13 = P23 R12 P23 with P the graded flip v_j (x) v_k -> (-1)^{jk} v_k (x) v_j.
template <class S>
using M8 = std::array<std::array<S, 8>, 8>;

int idx(int i, int j, int k) { return 4 * i + 2 * j + k; }

template <class S>
M8<S> mul8(const M8<S>& a, const M8<S>& b)
{
    M8<S> out{};
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            S acc{};
            for (int m = 0; m < 8; ++m)
                acc += a[i][m] * b[m][j];
            out[i][j] = acc;
        }
    return out;
}

template <class S>
M8<S> reference_ybe(const std::array<std::array<S, 4>, 4>& r, bool graded_flip)
{
    M8<S> r12{}, r23{}, p23{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int kk = 0; kk < 2; ++kk)
                for (int l = 0; l < 2; ++l)
                    for (int m = 0; m < 2; ++m)
                        for (int n = 0; n < 2; ++n) {
                            if (kk == n)
                                r12[idx(i, j, kk)][idx(l, m, n)] = r[2 * i + j][2 * l + m];
                            if (i == l)
                                r23[idx(i, j, kk)][idx(l, m, n)] = r[2 * j + kk][2 * m + n];
                            if (i == l && j == n && kk == m)
                                p23[idx(i, j, kk)][idx(l, m, n)] = S(graded_flip && j * kk ? -1 : 1);
                        }
    const M8<S> r13 = mul8(mul8(p23, r12), p23);
    const M8<S> lhs = mul8(mul8(r12, r13), r23), rhs = mul8(mul8(r23, r13), r12);
    M8<S> out{};
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            out[i][j] = lhs[i][j] - rhs[i][j];
    return out;
}

template <class S>
bool all_zero8(const M8<S>& m)
{
    for (const auto& row : m)
        for (const auto& e : row)
            if (!(e == S{}))
                return false;
    return true;
}

std::array<std::array<Rational, 4>, 4> at(const ScalarMatrix4& r, const Rational& q0)
{
    std::array<std::array<Rational, 4>, 4> out;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            out[i][j] = r[i][j].eval(q0);
    return out;
}

constexpr RMatrixId kSolutions[] = {RMatrixId::RGl, RMatrixId::R1, RMatrixId::R2};

} // namespace

TEST_CASE("R-matrix entries")
{
    const ScalarMatrix4 r = build(RMatrixId::RGl);
    CHECK(r[composite(0, 0)][composite(0, 0)] == q);
    CHECK(r[composite(1, 1)][composite(1, 1)] == qi);
    CHECK(r[composite(1, 0)][composite(0, 1)] == k);
    CHECK(r[composite(0, 1)][composite(0, 1)] == LaurentPoly(1));
    CHECK(nonzero_count(r) == 5);

    const ScalarMatrix4 r1 = build(RMatrixId::R1), r2 = build(RMatrixId::R2);
    CHECK(r1[composite(0, 1)][composite(0, 1)] == LaurentPoly(-1));
    CHECK(r1[composite(0, 0)][composite(0, 0)] == q);
    CHECK(r2[composite(0, 1)][composite(1, 0)] == qi - q);
    CHECK(r2[composite(0, 0)][composite(0, 0)] == qi);

    const ScalarMatrix4 p = build(RMatrixId::PSuper);
    CHECK(p[composite(1, 1)][composite(1, 1)] == LaurentPoly(-1));
    CHECK(p[composite(0, 1)][composite(1, 0)] == LaurentPoly(1));
    CHECK(nonzero_count(p) == 4);

    const ScalarMatrix4 rp = build(RMatrixId::RPrime);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            CHECK(rp[i][j] == r[i][j] - k * p[i][j]);

    CHECK(name(RMatrixId::RPrime) == "R'");
    CHECK(nonzero_count(identity4()) == 4);
}

TEST_CASE("graded Yang-Baxter equation")
{
    for (RMatrixId id : kSolutions) {
        CAPTURE(name(id));
        CHECK(nonzero_count(ybe_residual(build(id), kGradedDressing)) == 0);
        CHECK(all_zero8(reference_ybe(build(id), true)));
        CHECK(nonzero_count(ybe_residual(build(id), kPlainDressing)) > 0);
        CHECK_FALSE(all_zero8(reference_ybe(build(id), false)));
    }
    CHECK(nonzero_count(ybe_residual(identity4(), kPlainDressing)) == 0);
    CHECK(all_zero8(reference_ybe(identity4(), false)));
}

TEST_CASE("dressing search: exactly the dressings with the R13 sign survive")
{
    for (RMatrixId id : kSolutions) {
        CAPTURE(name(id));
        for (int mask = 0; mask < 8; ++mask) {
            const Dressing d{(mask & 1) != 0, (mask & 2) != 0, (mask & 4) != 0};
            CAPTURE(mask);
            CHECK((nonzero_count(ybe_residual(build(id), d)) == 0) == d.s13);
        }
    }
}

TEST_CASE("undressed residual sizes")
{
    for (RMatrixId id : kSolutions)
        CHECK(nonzero_count(ybe_residual(build(id), kPlainDressing)) == 1);
}

TEST_CASE("engine and reference residuals agree entrywise")
{
    for (RMatrixId id : kSolutions)
        for (bool graded : {false, true}) {
            const ScalarMatrix8 engine = ybe_residual(build(id), graded ? kGradedDressing : kPlainDressing);
            const auto ref = reference_ybe(build(id), graded);
            for (int i = 0; i < 8; ++i)
                for (int j = 0; j < 8; ++j)
                    CHECK(engine[i][j] == ref[i][j]);
        }
}

TEST_CASE("numeric Yang-Baxter at sample points")
{
    for (const Rational& q0 : {Rational(3, 2), Rational(5, 7), Rational(-2)})
        for (RMatrixId id : kSolutions) {
            CHECK(all_zero8(reference_ybe(at(build(id), q0), true)));
            CHECK_FALSE(all_zero8(reference_ybe(at(build(id), q0), false)));
        }
}
