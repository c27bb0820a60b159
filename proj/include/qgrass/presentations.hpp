#pragma once

// The concrete algebras: GL_q(1|1), Gr_q(1|1), their mixed algebra, the
// supercommuting double of a presentation, and localizations at even
// generators.

#include "qgrass/freealg.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace qgrass {

/// GL_q(1|1): generators a, beta, gamma, d (parities 0, 1, 1, 0).
Presentation gl_q();

/// Gr_q(1|1): generators alpha, b, c, delta (parities 1, 0, 0, 1).
Presentation gr_q();

/// The sixteen relations between a, beta, gamma, d and alpha, b, c, delta,
/// over the letters of mixed().
std::vector<Relation> mixed_cross_relations();

/// Both generator sets plus the sixteen cross relations between them.
/// Hatted (Gr) generators rank after the GL ones.
Presentation mixed();

/// Adjoins x^-1 for every named generator x, with x^-1 ranked directly after
/// x so that normal words are a^m beta^e gamma^f d^n with m, n in Z.
/// Commutation rules for the inverses are derived by conjugating the base
/// rules and checked against the cancellation rules before being kept.
/// Throws PresentationError for odd or unknown generators.
Presentation localize(const Presentation& base, const std::vector<std::string>& invertibles);

/// Two supercommuting copies of `base`; the second copy's names carry a
/// trailing prime and rank after every unprimed generator.
Presentation supercommuting_double(const Presentation& base);

std::string inverse_name(std::string_view generator);

/// Ids accepted by presentation_by_id(): gl, gr, mixed, double, gl-loc,
/// gr-loc, mixed-loc.
const std::vector<std::string>& presentation_ids();
Presentation presentation_by_id(std::string_view id);

} // namespace qgrass
