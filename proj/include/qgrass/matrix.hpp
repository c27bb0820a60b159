#pragma once

// 2x2 supermatrices over a presentation, their 4x4 tensor embeddings and
// RTT residuals.

#include "qgrass/freealg.hpp"

#include <array>
#include <vector>

namespace qgrass {

enum class ParityPattern {
    EvenDiagonal, // T-type: diagonal even, off-diagonal odd
    OddDiagonal,  // T-hat-type: diagonal odd, off-diagonal even
};

ParityPattern compose(ParityPattern a, ParityPattern b);

class SuperMatrix {
public:
    /// Row-major entries. Throws PresentationError if an entry's parity
    /// disagrees with the pattern.
    SuperMatrix(std::array<Element, 4> entries, ParityPattern pattern, const Presentation& p);

    static SuperMatrix identity();
    /// [[x00, x01], [x10, x11]] from generator names.
    static SuperMatrix of_generators(const Presentation& p, std::array<const char*, 4> names,
                                     ParityPattern pattern);

    /// 0-based indices.
    const Element& at(int i, int j) const { return entries_[2 * i + j]; }
    ParityPattern pattern() const { return pattern_; }
    int entry_parity(int i, int j) const;

private:
    SuperMatrix(std::array<Element, 4> entries, ParityPattern pattern)
        : entries_(std::move(entries)), pattern_(pattern) {}

    std::array<Element, 4> entries_;
    ParityPattern pattern_;
};

using Matrix4 = std::array<std::array<Element, 4>, 4>;
using ScalarMatrix4 = std::array<std::array<LaurentPoly, 4>, 4>;

/// Composite index of the pair (i, j), both 0-based.
constexpr int composite(int i, int j) { return 2 * i + j; }

Matrix4 promote(const ScalarMatrix4& m);
Matrix4 mat4_mul(const Matrix4& a, const Matrix4& b, const Presentation& p);
bool all_zero(const Matrix4& m);

SuperMatrix mat_mul(const SuperMatrix& m, const SuperMatrix& n, const Presentation& p);

/// Superinverse of a T-type matrix whose diagonal entries are unit scalars
/// or generators inverted in `p`:
///   [[a^-1 + a^-1 beta d^-1 gamma a^-1, -a^-1 beta d^-1],
///    [-d^-1 gamma a^-1,                  d^-1 + d^-1 gamma a^-1 beta d^-1]]
SuperMatrix superinverse(const SuperMatrix& t, const Presentation& p);

/// Berezinian (a - beta d^-1 gamma) d^-1 of a T-type matrix; d as above.
Element sdet(const SuperMatrix& t, const Presentation& p);

/// a d^-1 - beta d^-1 gamma: the Berezinian with its trailing d^-1 dropped
/// from the second term. Not central; kept to certify that.
Element sdet_truncated(const SuperMatrix& t, const Presentation& p);

/// b c^-1 - alpha c^-1 delta c^-1 for a T-hat-type matrix, c invertible.
Element grdet(const SuperMatrix& t, const Presentation& p);
/// The left-handed form c^-1 b - c^-1 alpha c^-1 delta.
Element grdet_left(const SuperMatrix& t, const Presentation& p);

enum class Slot { Left, Right };

/// How the first index enters the sign (-1)^{i (j + l)} of the right
/// embedding: as its parity marker (index 1 -> 0, index 2 -> 1) or as the
/// raw index value 1, 2. ParityMarker is the one under which the RTT
/// relations reproduce the algebra relations.
enum class IndexSign { ParityMarker, RawIndex };

/// Left: (M1)^{ij}_{kl} = M^i_k delta^j_l.
/// Right: (M2)^{ij}_{kl} = (-1)^{i(j+l)} M^j_l delta^i_k.
Matrix4 tensor_embed(const SuperMatrix& m, Slot slot, IndexSign sign = IndexSign::ParityMarker);

/// Sign in front of the right-hand side N2 M1 R_right. EntryParity applies
/// (-1)^{p} per summand, p being the parity of the N entry in it.
enum class RttSign { Plus, Minus, EntryParity };

/// Normalized entries of R_left M1 N2 - sign N2 M1 R_right.
Matrix4 rtt_residual(const ScalarMatrix4& r_left, const SuperMatrix& m, const SuperMatrix& n, RttSign sign,
                     const ScalarMatrix4& r_right, const Presentation& p,
                     IndexSign index_sign = IndexSign::ParityMarker);

/// Same generators, no rules.
Presentation free_presentation(const Presentation& p);

/// Rank over Q(q) by fraction-free (Bareiss) elimination.
std::size_t rank(std::vector<std::vector<LaurentPoly>> rows);

/// Indices of `relations` (zero-form elements) that are not Q(q)-linear
/// combinations of the nonzero entries of `residual`. Both are taken as
/// vectors over the words that occur in them.
std::vector<std::size_t> span_check(const Matrix4& residual, const std::vector<Element>& relations);

} // namespace qgrass
