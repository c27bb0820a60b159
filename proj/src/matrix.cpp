#include "qgrass/matrix.hpp"

#include "qgrass/presentations.hpp"

#include <map>

namespace qgrass {

ParityPattern compose(ParityPattern a, ParityPattern b)
{
    return a == b ? ParityPattern::EvenDiagonal : ParityPattern::OddDiagonal;
}

SuperMatrix::SuperMatrix(std::array<Element, 4> entries, ParityPattern pattern, const Presentation& p)
    : entries_(std::move(entries)), pattern_(pattern)
{
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            auto par = homogeneous_parity(at(i, j), p);
            if (!par || (!at(i, j).is_zero() && *par != entry_parity(i, j)))
                throw PresentationError("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                        ") violates the parity pattern: " + to_string(at(i, j), p));
        }
    }
}

SuperMatrix SuperMatrix::identity()
{
    return SuperMatrix({Element::scalar(1), Element{}, Element{}, Element::scalar(1)}, ParityPattern::EvenDiagonal);
}

SuperMatrix SuperMatrix::of_generators(const Presentation& p, std::array<const char*, 4> names,
                                       ParityPattern pattern)
{
    return SuperMatrix({p.gen(names[0]), p.gen(names[1]), p.gen(names[2]), p.gen(names[3])}, pattern, p);
}

int SuperMatrix::entry_parity(int i, int j) const
{
    const int diagonal = pattern_ == ParityPattern::EvenDiagonal ? 0 : 1;
    return i == j ? diagonal : 1 - diagonal;
}

Matrix4 promote(const ScalarMatrix4& m)
{
    Matrix4 out;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            out[i][j] = Element::scalar(m[i][j]);
    return out;
}

namespace {

Matrix4 mat4_mul_free(const Matrix4& a, const Matrix4& b)
{
    Matrix4 out;
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) {
            if (a[i][k].is_zero())
                continue;
            for (int j = 0; j < 4; ++j)
                if (!b[k][j].is_zero())
                    out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

Matrix4 normalize_all(Matrix4 m, const Presentation& p)
{
    for (auto& row : m)
        for (auto& e : row)
            e = normalize(e, p);
    return m;
}

} // namespace

Matrix4 mat4_mul(const Matrix4& a, const Matrix4& b, const Presentation& p)
{
    return normalize_all(mat4_mul_free(a, b), p);
}

bool all_zero(const Matrix4& m)
{
    for (const auto& row : m)
        for (const auto& e : row)
            if (!e.is_zero())
                return false;
    return true;
}

SuperMatrix mat_mul(const SuperMatrix& m, const SuperMatrix& n, const Presentation& p)
{
    std::array<Element, 4> out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            out[2 * i + j] = normalize(m.at(i, 0) * n.at(0, j) + m.at(i, 1) * n.at(1, j), p);
    return SuperMatrix(std::move(out), compose(m.pattern(), n.pattern()), p);
}

namespace {

/// Inverse of a diagonal entry: a unit scalar, or a generator inverted in `p`.
Element inverse_of(const SuperMatrix& t, int i, int j, const Presentation& p)
{
    const auto& terms = t.at(i, j).terms();
    if (terms.size() == 1) {
        const auto& [w, c] = *terms.begin();
        if (w.empty() && c.is_unit())
            return Element::scalar(c.unit_inverse());
        if (w.size() == 1 && c == LaurentPoly(1)) {
            const std::string& name = p.symbol(w[0]).name;
            if (auto l = p.find(inverse_name(name)))
                return Element::word({*l});
            throw PresentationError(p.id() + " is not localized at " + name);
        }
    }
    throw PresentationError("matrix entry " + to_string(t.at(i, j), p) + " has no known inverse");
}

} // namespace

SuperMatrix superinverse(const SuperMatrix& t, const Presentation& p)
{
    if (t.pattern() != ParityPattern::EvenDiagonal)
        throw PresentationError("superinverse expects an even-diagonal matrix");
    const Element ai = inverse_of(t, 0, 0, p), di = inverse_of(t, 1, 1, p);
    const Element& beta = t.at(0, 1);
    const Element& gamma = t.at(1, 0);
    return SuperMatrix({normalize(ai + ai * beta * di * gamma * ai, p), normalize(-(ai * beta * di), p),
                        normalize(-(di * gamma * ai), p), normalize(di + di * gamma * ai * beta * di, p)},
                       ParityPattern::EvenDiagonal, p);
}

Element sdet(const SuperMatrix& t, const Presentation& p)
{
    const Element di = inverse_of(t, 1, 1, p);
    return normalize(t.at(0, 0) * di - t.at(0, 1) * di * t.at(1, 0) * di, p);
}

Element sdet_truncated(const SuperMatrix& t, const Presentation& p)
{
    const Element di = inverse_of(t, 1, 1, p);
    return normalize(t.at(0, 0) * di - t.at(0, 1) * di * t.at(1, 0), p);
}

Element grdet(const SuperMatrix& t, const Presentation& p)
{
    if (t.pattern() != ParityPattern::OddDiagonal)
        throw PresentationError("grdet expects an odd-diagonal matrix");
    const Element ci = inverse_of(t, 1, 0, p);
    return normalize(t.at(0, 1) * ci - t.at(0, 0) * ci * t.at(1, 1) * ci, p);
}

Element grdet_left(const SuperMatrix& t, const Presentation& p)
{
    if (t.pattern() != ParityPattern::OddDiagonal)
        throw PresentationError("grdet expects an odd-diagonal matrix");
    const Element ci = inverse_of(t, 1, 0, p);
    return normalize(ci * t.at(0, 1) - ci * t.at(0, 0) * ci * t.at(1, 1), p);
}

Matrix4 tensor_embed(const SuperMatrix& m, Slot slot, IndexSign sign)
{
    Matrix4 out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l) {
                    Element& e = out[composite(i, j)][composite(k, l)];
                    if (slot == Slot::Left) {
                        if (j == l)
                            e = m.at(i, k);
                    } else if (i == k) {
                        const int first = sign == IndexSign::ParityMarker ? i : i + 1;
                        const bool negate = (first * (j + l)) % 2 != 0;
                        e = negate ? -m.at(j, l) : m.at(j, l);
                    }
                }
    return out;
}

Matrix4 rtt_residual(const ScalarMatrix4& r_left, const SuperMatrix& m, const SuperMatrix& n, RttSign sign,
                     const ScalarMatrix4& r_right, const Presentation& p, IndexSign index_sign)
{
    const Matrix4 m1 = tensor_embed(m, Slot::Left, index_sign);
    const Matrix4 n2 = tensor_embed(n, Slot::Right, index_sign);

    Matrix4 n2_dressed = n2;
    if (sign == RttSign::EntryParity) {
        std::array<Element, 4> dressed;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                dressed[2 * i + j] = n.entry_parity(i, j) ? -n.at(i, j) : n.at(i, j);
        n2_dressed = tensor_embed(SuperMatrix(dressed, n.pattern(), p), Slot::Right, index_sign);
    } else if (sign == RttSign::Minus) {
        for (auto& row : n2_dressed)
            for (auto& e : row)
                e = -e;
    }

    const Matrix4 lhs = mat4_mul_free(mat4_mul_free(promote(r_left), m1), n2);
    const Matrix4 rhs = mat4_mul_free(mat4_mul_free(n2_dressed, m1), promote(r_right));
    Matrix4 out;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            out[i][j] = normalize(lhs[i][j] - rhs[i][j], p);
    return out;
}

Presentation free_presentation(const Presentation& p)
{
    Presentation f("free(" + p.id() + ")", p.generators());
    return p.q_value() ? f.specialized(*p.q_value()) : f;
}

std::size_t rank(std::vector<std::vector<LaurentPoly>> m)
{
    if (m.empty())
        return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    LaurentPoly prev = 1;
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t piv = r;
        while (piv < rows && m[piv][col].is_zero())
            ++piv;
        if (piv == rows)
            continue;
        std::swap(m[r], m[piv]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                LaurentPoly num = m[r][col] * m[i][j] - m[i][col] * m[r][j];
                auto quo = num.divide_exact(prev);
                if (!quo)
                    throw std::logic_error("Bareiss step was not exact");
                m[i][j] = std::move(*quo);
            }
            m[i][col] = LaurentPoly{};
        }
        prev = m[r][col];
        ++r;
    }
    return r;
}

std::vector<std::size_t> span_check(const Matrix4& residual, const std::vector<Element>& relations)
{
    std::map<Word, std::size_t> column;
    auto index_words = [&column](const Element& e) {
        for (const auto& [w, c] : e.terms())
            column.try_emplace(w, column.size());
    };
    std::vector<const Element*> entries;
    for (const auto& row : residual)
        for (const auto& e : row)
            if (!e.is_zero()) {
                entries.push_back(&e);
                index_words(e);
            }
    for (const auto& r : relations)
        index_words(r);

    auto as_row = [&column](const Element& e) {
        std::vector<LaurentPoly> row(column.size());
        for (const auto& [w, c] : e.terms())
            row[column.at(w)] = c;
        return row;
    };

    std::vector<std::vector<LaurentPoly>> base;
    for (const Element* e : entries)
        base.push_back(as_row(*e));
    const std::size_t base_rank = rank(base);

    std::vector<std::size_t> missing;
    for (std::size_t k = 0; k < relations.size(); ++k) {
        auto extended = base;
        extended.push_back(as_row(relations[k]));
        if (rank(std::move(extended)) != base_rank)
            missing.push_back(k);
    }
    return missing;
}

} // namespace qgrass
