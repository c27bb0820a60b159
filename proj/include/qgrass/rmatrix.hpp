#pragma once

// Constant R-matrices on C^{1|1} (x) C^{1|1} and the Yang-Baxter residual.

#include "qgrass/matrix.hpp"

#include <array>
#include <string_view>

namespace qgrass {

enum class RMatrixId {
    RGl,    // R of GL_q(1|1)
    R1,     // left R-matrix of Gr_q(1|1)
    R2,     // right R-matrix of Gr_q(1|1)
    PSuper, // graded permutation
    RPrime, // RGl - (q - q^-1) PSuper
};

ScalarMatrix4 build(RMatrixId id);
std::string_view name(RMatrixId id);

ScalarMatrix4 identity4();

/// Sign dressing of the three embeddings on the triple space. Row index
/// (i, j, k), column index (l, m, n), all parity markers.
///   R12: (-1)^{k (i + j + l + m)}, spectator k
///   R13: (-1)^{j (k + n)}, spectator j sitting between the acting legs
///   R23: (-1)^{i (j + k + m + n)}, spectator i
/// For a parity-preserving R only the R13 sign can be nontrivial.
struct Dressing {
    bool s12 = false;
    bool s13 = false;
    bool s23 = false;
};

/// Koszul dressing; R1, R2 and RGl all solve the equation under it and none
/// does undressed.
inline constexpr Dressing kGradedDressing{true, true, true};
inline constexpr Dressing kPlainDressing{};

using ScalarMatrix8 = std::array<std::array<LaurentPoly, 8>, 8>;

/// R12 R13 R23 - R23 R13 R12.
ScalarMatrix8 ybe_residual(const ScalarMatrix4& r, Dressing dressing);

std::size_t nonzero_count(const ScalarMatrix8& m);
std::size_t nonzero_count(const ScalarMatrix4& m);

} // namespace qgrass
