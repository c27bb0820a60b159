#include "qgrass/rmatrix.hpp"

namespace qgrass {

namespace {

// Parity marker of the 0-based index; the first basis vector is even.
constexpr int marker(int i) { return i; }

} // namespace

ScalarMatrix4 identity4()
{
    ScalarMatrix4 m;
    for (int i = 0; i < 4; ++i)
        m[i][i] = 1;
    return m;
}

ScalarMatrix4 build(RMatrixId id)
{
    const LaurentPoly q = LaurentPoly::q(1), qi = LaurentPoly::q(-1), k = q_minus_qinv();
    ScalarMatrix4 r;
    switch (id) {
    case RMatrixId::RGl:
        r[0][0] = q;
        r[1][1] = 1;
        r[2][1] = k;
        r[2][2] = 1;
        r[3][3] = qi;
        break;
    case RMatrixId::R1:
        r[0][0] = q;
        r[1][1] = -1;
        r[2][1] = k;
        r[2][2] = -1;
        r[3][3] = qi;
        break;
    case RMatrixId::R2:
        r[0][0] = qi;
        r[1][1] = -1;
        r[1][2] = -k;
        r[2][2] = -1;
        r[3][3] = q;
        break;
    case RMatrixId::PSuper:
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                r[composite(i, j)][composite(j, i)] = (marker(i) * marker(j)) % 2 ? -1 : 1;
        break;
    case RMatrixId::RPrime: {
        const ScalarMatrix4 rg = build(RMatrixId::RGl), ps = build(RMatrixId::PSuper);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                r[i][j] = rg[i][j] - k * ps[i][j];
        break;
    }
    }
    return r;
}

std::string_view name(RMatrixId id)
{
    switch (id) {
    case RMatrixId::RGl:
        return "R";
    case RMatrixId::R1:
        return "R1";
    case RMatrixId::R2:
        return "R2";
    case RMatrixId::PSuper:
        return "P";
    case RMatrixId::RPrime:
        return "R'";
    }
    return "?";
}

namespace {

enum class Legs { L12, L13, L23 };

ScalarMatrix8 embed3(const ScalarMatrix4& r, Legs legs, bool dressed)
{
    ScalarMatrix8 out;
    for (int row = 0; row < 8; ++row)
        for (int col = 0; col < 8; ++col) {
            const int i = row >> 2, j = (row >> 1) & 1, k = row & 1;
            const int l = col >> 2, m = (col >> 1) & 1, n = col & 1;
            const LaurentPoly* c = nullptr;
            int sign = 0;
            switch (legs) {
            case Legs::L12:
                if (k != n)
                    continue;
                c = &r[composite(i, j)][composite(l, m)];
                sign = marker(k) * (marker(i) + marker(j) + marker(l) + marker(m));
                break;
            case Legs::L13:
                if (j != m)
                    continue;
                c = &r[composite(i, k)][composite(l, n)];
                sign = marker(j) * (marker(k) + marker(n));
                break;
            case Legs::L23:
                if (i != l)
                    continue;
                c = &r[composite(j, k)][composite(m, n)];
                sign = marker(i) * (marker(j) + marker(k) + marker(m) + marker(n));
                break;
            }
            out[row][col] = dressed && sign % 2 ? -*c : *c;
        }
    return out;
}

ScalarMatrix8 mul8(const ScalarMatrix8& a, const ScalarMatrix8& b)
{
    ScalarMatrix8 out;
    for (int i = 0; i < 8; ++i)
        for (int k = 0; k < 8; ++k) {
            if (a[i][k].is_zero())
                continue;
            for (int j = 0; j < 8; ++j)
                if (!b[k][j].is_zero())
                    out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

} // namespace

ScalarMatrix8 ybe_residual(const ScalarMatrix4& r, Dressing dressing)
{
    const ScalarMatrix8 r12 = embed3(r, Legs::L12, dressing.s12);
    const ScalarMatrix8 r13 = embed3(r, Legs::L13, dressing.s13);
    const ScalarMatrix8 r23 = embed3(r, Legs::L23, dressing.s23);
    const ScalarMatrix8 lhs = mul8(mul8(r12, r13), r23);
    const ScalarMatrix8 rhs = mul8(mul8(r23, r13), r12);
    ScalarMatrix8 out;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            out[i][j] = lhs[i][j] - rhs[i][j];
    return out;
}

std::size_t nonzero_count(const ScalarMatrix8& m)
{
    std::size_t n = 0;
    for (const auto& row : m)
        for (const auto& e : row)
            n += !e.is_zero();
    return n;
}

std::size_t nonzero_count(const ScalarMatrix4& m)
{
    std::size_t n = 0;
    for (const auto& row : m)
        for (const auto& e : row)
            n += !e.is_zero();
    return n;
}

} // namespace qgrass
