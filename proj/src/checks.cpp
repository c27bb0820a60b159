#include "qgrass/checks.hpp"

#include "qgrass/presentations.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace qgrass {

std::string_view to_string(Status s)
{
    switch (s) {
    case Status::Pass:
        return "pass";
    case Status::Fail:
        return "fail";
    case Status::Skipped:
        return "skipped";
    }
    return "?";
}

void validate_q0(const Rational& q0)
{
    if (q0 == 0 || q0 * q0 == 1)
        throw DomainError("q0 = " + to_string(q0) + " is not allowed: the algebras need q != 0 and q^2 != 1");
}

// ---------------------------------------------------------------- Context

Context::Context(Options options) : options_(std::move(options))
{
    if (options_.q0)
        validate_q0(*options_.q0);
    if (options_.max_fuel == 0)
        throw std::invalid_argument("max fuel must be positive");
}

const Presentation& Context::presentation(const std::string& id)
{
    auto& slot = presentations_[id];
    if (!slot) {
        Presentation p = presentation_by_id(id);
        if (options_.q0)
            p = p.specialized(*options_.q0);
        p.set_fuel(options_.max_fuel);
        slot = std::make_unique<Presentation>(std::move(p));
    }
    return *slot;
}

const Presentation& Context::free(const std::string& id)
{
    auto& slot = free_[id];
    if (!slot) {
        Presentation p = free_presentation(presentation(id));
        p.set_fuel(options_.max_fuel);
        slot = std::make_unique<Presentation>(std::move(p));
    }
    return *slot;
}

const StructureMaps& Context::maps(const std::string& id)
{
    auto& slot = maps_[id];
    if (!slot)
        slot = std::make_unique<StructureMaps>(presentation(id));
    return *slot;
}

ScalarMatrix4 Context::r_matrix(RMatrixId id) const
{
    ScalarMatrix4 r = build(id);
    for (auto& row : r)
        for (auto& e : row)
            e = scalar(e);
    return r;
}

LaurentPoly Context::scalar(const LaurentPoly& c) const
{
    return options_.q0 ? LaurentPoly(c.eval(*options_.q0)) : c;
}

// ---------------------------------------------------------------- helpers

namespace {

const LaurentPoly kQ = LaurentPoly::q(1);
const LaurentPoly kQinv = LaurentPoly::q(-1);
const LaurentPoly kQ2 = LaurentPoly::q(2);
const LaurentPoly kQm2 = LaurentPoly::q(-2);
const LaurentPoly kK = q_minus_qinv();

constexpr std::size_t kMaxSummary = 12;

void cap(std::vector<std::string>& lines)
{
    if (lines.size() > kMaxSummary) {
        const std::size_t extra = lines.size() - kMaxSummary;
        lines.resize(kMaxSummary);
        lines.push_back("... and " + std::to_string(extra) + " more");
    }
}

std::string index_label(int c) { return std::to_string(c / 2 + 1) + std::to_string(c % 2 + 1); }

Outcome matrix_outcome(const Matrix4& m, const Presentation& p)
{
    Outcome o;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (!m[i][j].is_zero())
                o.residual.push_back("(" + index_label(i) + "," + index_label(j) + "): " + to_string(m[i][j], p));
    cap(o.residual);
    return o;
}

using Named = std::vector<std::pair<std::string, Element>>;

/// Normalizes each element; the nonzero ones make up the residual.
Outcome elements_outcome(const Named& items, const Presentation& p)
{
    Outcome o;
    for (const auto& [label, e] : items) {
        const Element nf = normalize(e, p);
        if (!nf.is_zero())
            o.residual.push_back(label + ": " + to_string(nf, p));
    }
    cap(o.residual);
    return o;
}

Outcome relation_outcome(const std::vector<RelationResidual>& bad)
{
    Outcome o;
    for (const auto& r : bad)
        o.residual.push_back(r.relation + " -> " + r.residual);
    cap(o.residual);
    return o;
}

void append(Outcome& into, Outcome from)
{
    for (auto& s : from.residual)
        into.residual.push_back(std::move(s));
    cap(into.residual);
}

Element commutator(const Element& x, const Element& y, const LaurentPoly& lam = 1) { return x * y - lam * (y * x); }

SuperMatrix t_of(const Presentation& p)
{
    return SuperMatrix::of_generators(p, kTNames, ParityPattern::EvenDiagonal);
}

SuperMatrix that_of(const Presentation& p)
{
    return SuperMatrix::of_generators(p, kTHatNames, ParityPattern::OddDiagonal);
}

/// Replaces each letter by its image; letters without an image stay.
Element substitute(const Element& e, const std::map<Letter, Element>& images)
{
    Element out;
    for (const auto& [word, c] : e.terms()) {
        Element acc = Element::scalar(c);
        for (Letter l : word) {
            auto it = images.find(l);
            acc = acc * (it == images.end() ? Element::word({l}) : it->second);
        }
        out += acc;
    }
    return out;
}

/// Images of the relations of `source` under a substitution into `target`.
Named relation_images(const Presentation& source, const std::map<Letter, Element>& images)
{
    Named out;
    for (const auto& r : source.relations())
        out.emplace_back(to_string(r.lhs, source) + " = " + to_string(r.rhs, source),
                         substitute(Element::word(r.lhs) - r.rhs, images));
    return out;
}

std::string joined(const std::vector<std::string>& items)
{
    std::string s;
    for (const auto& i : items)
        s += (s.empty() ? "" : "; ") + i;
    return s;
}

// ------------------------------------------------------------ confluence

Outcome confluence(Context& ctx, const std::string& id)
{
    const Presentation& p = ctx.presentation(id);
    Outcome o;
    for (const auto& amb : check_local_confluence(p))
        o.residual.push_back(to_string(amb.overlap, p) + ": " + to_string(amb.difference, p));
    cap(o.residual);
    o.note = std::to_string(p.rules().size()) + " rules";
    return o;
}

// ------------------------------------------------------------------ rtt

Matrix4 rtt_gl(Context& ctx, const Presentation& p)
{
    const SuperMatrix t = t_of(p);
    const ScalarMatrix4 r = ctx.r_matrix(RMatrixId::RGl);
    return rtt_residual(r, t, t, RttSign::Plus, r, p);
}

Matrix4 rtt_gr(Context& ctx, const Presentation& p)
{
    const SuperMatrix t = that_of(p);
    return rtt_residual(ctx.r_matrix(RMatrixId::R1), t, t, RttSign::Minus, ctx.r_matrix(RMatrixId::R2), p);
}

Matrix4 rtt_mixed(Context& ctx, const Presentation& p)
{
    return rtt_residual(ctx.r_matrix(RMatrixId::RGl), that_of(p), t_of(p), RttSign::EntryParity,
                        ctx.r_matrix(RMatrixId::RPrime), p);
}

Outcome span(const Matrix4& residual, const std::vector<Relation>& relations, const Presentation& free)
{
    std::vector<Element> zero_forms;
    for (const auto& r : relations)
        zero_forms.push_back(Element::word(r.lhs) - r.rhs);
    Outcome o;
    for (std::size_t k : span_check(residual, zero_forms))
        o.residual.push_back("not spanned: " + to_string(relations[k].lhs, free) + " = " +
                             to_string(relations[k].rhs, free));
    cap(o.residual);
    o.note = std::to_string(relations.size()) + " relations checked";
    return o;
}

// ------------------------------------------------------------------ ybe

Outcome ybe(const ScalarMatrix4& r, Dressing dressing)
{
    const ScalarMatrix8 res = ybe_residual(r, dressing);
    Outcome o;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            if (!res[i][j].is_zero())
                o.residual.push_back("(" + std::to_string(i) + "," + std::to_string(j) + "): " + res[i][j].to_string());
    cap(o.residual);
    return o;
}

/// Passes when the undressed equation fails, recording the count.
Outcome ybe_undressed_fails(Context& ctx, RMatrixId id)
{
    const std::size_t n = nonzero_count(ybe_residual(ctx.r_matrix(id), kPlainDressing));
    Outcome o;
    o.note = std::to_string(n) + " nonzero entries without Koszul signs";
    if (n == 0)
        o.residual.push_back("undressed equation unexpectedly holds");
    return o;
}

// -------------------------------------------------------------- central

Named commutes_with(const Element& z, const Presentation& p, const std::array<const char*, 4>& names,
                    const LaurentPoly& lam = 1)
{
    Named out;
    for (const char* n : names)
        out.emplace_back(std::string("[D, ") + n + "]", commutator(z, p.gen(n), lam));
    return out;
}

// -------------------------------------------------------------- inverse

struct InverseEntries {
    Element A, Om, Ga, D;
};

InverseEntries inverse_entries(const Presentation& p)
{
    const SuperMatrix inv = superinverse(t_of(p), p);
    return {inv.at(0, 0), inv.at(0, 1), inv.at(1, 0), inv.at(1, 1)};
}

Named t_vs_tinv(const Presentation& p)
{
    const auto [A, Om, Ga, D] = inverse_entries(p);
    const Element a = p.gen("a"), be = p.gen("beta"), ga = p.gen("gamma"), d = p.gen("d");
    const Element one = Element::scalar(1);
    const LaurentPoly one_m_q2 = LaurentPoly(1) - kQ2;
    return {
        {"a A", commutator(a, A, kQ2) - one_m_q2 * one},
        {"d A", commutator(d, A)},
        {"a D", commutator(a, D)},
        {"d D", commutator(d, D, kQ2) - one_m_q2 * one},
        {"a Omega", commutator(a, Om, kQ)},
        {"d Omega", commutator(d, Om, kQ)},
        {"a Gamma", commutator(a, Ga, kQ)},
        {"d Gamma", commutator(d, Ga, kQ)},
        {"beta A", commutator(be, A, kQ)},
        {"gamma A", commutator(ga, A, kQ)},
        {"beta D", commutator(be, D, kQ)},
        {"gamma D", commutator(ga, D, kQ)},
        {"beta Omega", commutator(be, Om)},
        {"gamma Omega", commutator(ga, Om, -kQ2)},
        {"beta Gamma", commutator(be, Ga, -kQ2)},
        {"gamma Gamma", commutator(ga, Ga)},
    };
}

/// delta D = q^-2 D delta + coeff A alpha + (q^-2 - 1)(Omega c - Gamma b),
/// as lhs - rhs.
Element delta_d_relation(const Presentation& p, const LaurentPoly& coeff)
{
    const auto [A, Om, Ga, D] = inverse_entries(p);
    const Element al = p.gen("alpha"), b = p.gen("b"), c = p.gen("c"), de = p.gen("delta");
    return commutator(de, D, kQm2) - coeff * (A * al) - (kQm2 - 1) * (Om * c - Ga * b);
}

Named that_vs_tinv(const Presentation& p)
{
    const auto [A, Om, Ga, D] = inverse_entries(p);
    const Element al = p.gen("alpha"), b = p.gen("b"), c = p.gen("c"), de = p.gen("delta");
    return {
        {"alpha A", commutator(al, A, kQ2)},
        {"delta A", commutator(de, A)},
        {"alpha D", commutator(al, D)},
        {"delta D", delta_d_relation(p, -(kK * kK))},
        {"alpha Omega", commutator(al, Om, -kQ)},
        {"delta Omega", commutator(de, Om, -kQinv) - (kQinv - kQ) * (A * b)},
        {"alpha Gamma", commutator(al, Ga, -kQ)},
        {"delta Gamma", commutator(de, Ga, -kQinv) - (kQinv - kQ) * (A * c)},
        {"b A", commutator(b, A, kQ)},
        {"c A", commutator(c, A, kQ)},
        {"b D", commutator(b, D, kQinv) - kK * (Om * al)},
        {"c D", commutator(c, D, kQinv) - kK * (Ga * al)},
        {"b Omega", commutator(b, Om)},
        {"c Omega", commutator(c, Om) - (kQ2 - 1) * (A * al)},
        {"b Gamma", commutator(b, Ga) - (LaurentPoly(1) - kQ2) * (A * al)},
        {"c Gamma", commutator(c, Ga)},
    };
}

// ---------------------------------------------------------------- hopf

Outcome axioms(const StructureMaps& maps, const std::array<const char*, 4>& gens, int which)
{
    const Presentation& p = maps.presentation();
    Outcome o;
    for (const char* n : gens) {
        const AxiomResiduals r = axiom_residuals(maps, p.letter(n));
        auto add = [&](const std::string& label, const Element& e) {
            if (!e.is_zero())
                o.residual.push_back(std::string(n) + " " + label + ": " + to_string(e, p));
        };
        if (which == 0 && !r.coassociativity.is_zero())
            o.residual.push_back(std::string(n) + ": " + to_string(r.coassociativity, p));
        if (which == 1) {
            add("left", r.left_counit);
            add("right", r.right_counit);
        }
        if (which == 2) {
            add("left", r.left_antipode.value());
            add("right", r.right_antipode.value());
        }
    }
    cap(o.residual);
    return o;
}

TensorElement tensor_from(const Presentation& p,
                          std::initializer_list<std::tuple<int, const char*, const char*>> terms)
{
    TensorElement t;
    for (const auto& [sign, x, y] : terms)
        t += LaurentPoly(sign) * TensorElement::of({p.gen(x), p.gen(y)});
    return t;
}

/// The coproduct images of the hatted generators as printed, split into
/// the right-coaction half and the left-coaction half.
std::pair<TensorElement, TensorElement> printed_halves(const Presentation& p, const std::string& gen)
{
    if (gen == "alpha")
        return {tensor_from(p, {{1, "alpha", "a"}, {1, "b", "gamma"}}),
                tensor_from(p, {{1, "a", "alpha"}, {-1, "beta", "c"}})};
    if (gen == "b")
        return {tensor_from(p, {{1, "b", "d"}, {1, "alpha", "beta"}}),
                tensor_from(p, {{1, "a", "b"}, {-1, "beta", "delta"}})};
    if (gen == "c")
        return {tensor_from(p, {{1, "c", "a"}, {1, "delta", "gamma"}}),
                tensor_from(p, {{-1, "gamma", "alpha"}, {1, "d", "c"}})};
    return {tensor_from(p, {{1, "delta", "d"}, {1, "c", "beta"}}),
            tensor_from(p, {{-1, "gamma", "b"}, {1, "d", "delta"}})};
}

Outcome tensor_compare(const std::vector<std::pair<std::string, TensorElement>>& diffs, const Presentation& p)
{
    Outcome o;
    for (const auto& [label, t] : diffs) {
        const TensorElement nf = normalize(t, p);
        if (!nf.is_zero())
            o.residual.push_back(label + ": " + to_string(nf, p));
    }
    cap(o.residual);
    return o;
}

/// Antipode images of the hatted generators as printed.
Named printed_antipode(const Presentation& p)
{
    const auto [A, Om, Ga, D] = inverse_entries(p);
    const Element al = p.gen("alpha"), b = p.gen("b"), c = p.gen("c"), de = p.gen("delta");
    return {
        {"alpha", -((al * A + b * Ga) * A) + kQ * ((c * A + de * Ga) * Om)},
        {"b", -((al * A - c * Om) * Om) - kQ * ((b * A + de * Om) * D)},
        {"c", -((al * A + b * Ga) * Ga) - kQ * ((c * A + de * Ga) * D)},
        {"delta", kQ2 * ((al * A - c * Om) * D) + kQ * ((al * Om + kQ2 * (b * D)) * Ga) -
                      ((al * A + kQ2 * (de * D)) * D)},
    };
}

/// Forms used for the coaction identities: the hatted generators and their
/// left multiples by the entries of T.
std::vector<std::pair<std::string, Element>> test_forms(const Presentation& p)
{
    std::vector<std::pair<std::string, Element>> out;
    for (const char* h : kTHatNames)
        out.emplace_back(h, p.gen(h));
    for (const char* t : kTNames)
        for (const char* h : kTHatNames)
            out.emplace_back(std::string(t) + "*" + h, p.gen(t) * p.gen(h));
    return out;
}

// ------------------------------------------------------------- registry

std::vector<CheckDef> make_registry()
{
    std::vector<CheckDef> checks;
    auto add = [&checks](std::string id, std::string suite, std::string description,
                         std::function<Outcome(Context&)> run) {
        checks.push_back({std::move(id), std::move(suite), std::move(description), std::move(run)});
    };

    for (const std::string& id : presentation_ids())
        add("confluence." + id, "confluence", "every overlap of the rewrite rules of " + id + " resolves",
            [id](Context& ctx) { return confluence(ctx, id); });

    add("rtt.gl", "rtt", "R T1 T2 = T2 T1 R over gl, all 16 entries", [](Context& ctx) {
        const Presentation& p = ctx.presentation("gl");
        return matrix_outcome(rtt_gl(ctx, p), p);
    });
    add("rtt.gr", "rtt", "R1 That1 That2 = -That2 That1 R2 over gr, all 16 entries", [](Context& ctx) {
        const Presentation& p = ctx.presentation("gr");
        return matrix_outcome(rtt_gr(ctx, p), p);
    });
    add("rtt.mixed", "rtt", "R That1 T2 = (-1)^p(T2) T2 That1 R' over mixed, sign per T entry", [](Context& ctx) {
        const Presentation& p = ctx.presentation("mixed");
        return matrix_outcome(rtt_mixed(ctx, p), p);
    });

    add("span.gl", "span", "free-algebra RTT residual of T spans every gl relation", [](Context& ctx) {
        const Presentation& f = ctx.free("gl");
        return span(rtt_gl(ctx, f), ctx.presentation("gl").relations(), f);
    });
    add("span.gr", "span", "free-algebra RTT residual of That spans every gr relation", [](Context& ctx) {
        const Presentation& f = ctx.free("gr");
        return span(rtt_gr(ctx, f), ctx.presentation("gr").relations(), f);
    });
    add("span.mixed", "span", "free-algebra mixed RTT residual spans the 16 cross relations", [](Context& ctx) {
        const Presentation& f = ctx.free("mixed");
        std::vector<Relation> cross = mixed_cross_relations();
        if (ctx.options().q0)
            for (auto& r : cross)
                r.rhs = specialize(r.rhs, *ctx.options().q0);
        return span(rtt_mixed(ctx, f), cross, f);
    });

    add("ybe.R.graded", "ybe", "R of gl solves the Koszul-dressed Yang-Baxter equation",
        [](Context& ctx) { return ybe(ctx.r_matrix(RMatrixId::RGl), kGradedDressing); });
    add("ybe.R1.graded", "ybe", "R1 solves the Koszul-dressed Yang-Baxter equation",
        [](Context& ctx) { return ybe(ctx.r_matrix(RMatrixId::R1), kGradedDressing); });
    add("ybe.R2.graded", "ybe", "R2 solves the Koszul-dressed Yang-Baxter equation",
        [](Context& ctx) { return ybe(ctx.r_matrix(RMatrixId::R2), kGradedDressing); });
    add("ybe.identity.plain", "ybe", "the identity solves the undressed Yang-Baxter equation",
        [](Context&) { return ybe(identity4(), kPlainDressing); });
    add("ybe.R.undressed-fails", "ybe", "R of gl does not solve the undressed equation",
        [](Context& ctx) { return ybe_undressed_fails(ctx, RMatrixId::RGl); });
    add("ybe.R1.undressed-fails", "ybe", "R1 does not solve the undressed equation",
        [](Context& ctx) { return ybe_undressed_fails(ctx, RMatrixId::R1); });
    add("ybe.R2.undressed-fails", "ybe", "R2 does not solve the undressed equation",
        [](Context& ctx) { return ybe_undressed_fails(ctx, RMatrixId::R2); });

    add("central.grdet.two-forms", "central", "b c^-1 - alpha c^-1 delta c^-1 = c^-1 b - c^-1 alpha c^-1 delta",
        [](Context& ctx) {
            const Presentation& p = ctx.presentation("gr-loc");
            const SuperMatrix t = that_of(p);
            return elements_outcome({{"difference", grdet(t, p) - grdet_left(t, p)}}, p);
        });
    add("central.grdet.commutes-hatted", "central", "Dhat commutes with alpha, b, c, delta", [](Context& ctx) {
        const Presentation& p = ctx.presentation("gr-loc");
        return elements_outcome(commutes_with(grdet(that_of(p), p), p, kTHatNames), p);
    });
    add("central.grdet.commutes-unhatted", "central", "Dhat commutes with a, beta, gamma, d in mixed-loc",
        [](Context& ctx) {
            const Presentation& p = ctx.presentation("mixed-loc");
            return elements_outcome(commutes_with(grdet(that_of(p), p), p, kTNames), p);
        });
    add("central.sdet.commutes", "central", "Berezinian (a - beta d^-1 gamma) d^-1 commutes with a, beta, gamma, d",
        [](Context& ctx) {
            const Presentation& p = ctx.presentation("gl-loc");
            return elements_outcome(commutes_with(sdet(t_of(p), p), p, kTNames), p);
        });
    add("central.sdet.q2-commutes-hatted", "central", "D u = q^2 u D for u in alpha, b, c, delta",
        [](Context& ctx) {
            const Presentation& p = ctx.presentation("mixed-loc");
            return elements_outcome(commutes_with(sdet(t_of(p), p), p, kTHatNames, ctx.scalar(kQ2)), p);
        });
    add("central.sdet.truncated-not-central", "central",
        "a d^-1 - beta d^-1 gamma (no trailing d^-1) fails to commute with T", [](Context& ctx) {
            const Presentation& p = ctx.presentation("gl-loc");
            const Element z = sdet_truncated(t_of(p), p);
            std::vector<std::string> failing;
            for (const char* n : kTNames)
                if (!is_zero_mod(commutator(z, p.gen(n)), p))
                    failing.push_back(n);
            Outcome o;
            if (failing.empty())
                o.residual.push_back("the truncated expression is central after all");
            else
                o.note = "does not commute with: " + joined(failing);
            return o;
        });

    add("inverse.T-Tinv", "inverse", "T T^-1 = 1", [](Context& ctx) {
        const Presentation& p = ctx.presentation("gl-loc");
        const SuperMatrix t = t_of(p);
        const SuperMatrix prod = mat_mul(t, superinverse(t, p), p);
        return elements_outcome({{"11", prod.at(0, 0) - Element::scalar(1)},
                                 {"12", prod.at(0, 1)},
                                 {"21", prod.at(1, 0)},
                                 {"22", prod.at(1, 1) - Element::scalar(1)}},
                                p);
    });
    add("inverse.Tinv-T", "inverse", "T^-1 T = 1", [](Context& ctx) {
        const Presentation& p = ctx.presentation("gl-loc");
        const SuperMatrix t = t_of(p);
        const SuperMatrix prod = mat_mul(superinverse(t, p), t, p);
        return elements_outcome({{"11", prod.at(0, 0) - Element::scalar(1)},
                                 {"12", prod.at(0, 1)},
                                 {"21", prod.at(1, 0)},
                                 {"22", prod.at(1, 1) - Element::scalar(1)}},
                                p);
    });
    add("inverse.T-vs-Tinv", "inverse", "16 commutation relations between T and T^-1 entries", [](Context& ctx) {
        const Presentation& p = ctx.presentation("gl-loc");
        return elements_outcome(t_vs_tinv(p), p);
    });
    add("inverse.That-vs-Tinv", "inverse",
        "16 commutation relations between That and T^-1 entries, delta D with -(q - q^-1)^2 A alpha",
        [](Context& ctx) {
            const Presentation& p = ctx.presentation("mixed-loc");
            return elements_outcome(that_vs_tinv(p), p);
        });
    add("inverse.deltaD-plus-sign-fails", "inverse",
        "delta D with +(q - q^-1)^2 A alpha leaves exactly -2 (q - q^-1)^2 A alpha", [](Context& ctx) {
            const Presentation& p = ctx.presentation("mixed-loc");
            const Element residual = normalize(delta_d_relation(p, kK * kK), p);
            const Element predicted = (LaurentPoly(-2) * kK * kK) * (inverse_entries(p).A * p.gen("alpha"));
            Outcome o = elements_outcome({{"residual - predicted", residual - predicted}}, p);
            if (residual.is_zero())
                o.residual.push_back("plus-sign form unexpectedly holds");
            o.note = "residual " + to_string(residual, p);
            return o;
        });

    add("hopf.coassociativity", "hopf", "(Delta x id) Delta = (id x Delta) Delta on a, beta, gamma, d",
        [](Context& ctx) { return axioms(ctx.maps("gl-loc"), kTNames, 0); });
    add("hopf.counit", "hopf", "(eps x id) Delta = id = (id x eps) Delta on a, beta, gamma, d",
        [](Context& ctx) { return axioms(ctx.maps("gl-loc"), kTNames, 1); });
    add("hopf.antipode", "hopf", "m (S x id) Delta = eps = m (id x S) Delta on a, beta, gamma, d",
        [](Context& ctx) { return axioms(ctx.maps("gl-loc"), kTNames, 2); });
    add("hopf.coproduct-homomorphism", "hopf", "Delta kills every gl relation", [](Context& ctx) {
        return relation_outcome(coproduct_homomorphism(ctx.maps("gl-loc"), ctx.presentation("gl")));
    });
    add("hopf.counit-homomorphism", "hopf", "eps kills every gl relation", [](Context& ctx) {
        return relation_outcome(counit_homomorphism(ctx.maps("gl-loc"), ctx.presentation("gl")));
    });
    add("hopf.antipode-antihomomorphism", "hopf", "graded S kills every gl relation", [](Context& ctx) {
        return relation_outcome(antipode_antihomomorphism(ctx.maps("gl-loc"), ctx.presentation("gl")));
    });

    add("quasi-hopf.coproduct-explicit", "quasi-hopf",
        "That (x). T + (-1)^p(T) T (x). That expands to the listed images of alpha, b, c, delta",
        [](Context& ctx) {
            const StructureMaps& m = ctx.maps("mixed-loc");
            const Presentation& p = m.presentation();
            std::vector<std::pair<std::string, TensorElement>> diffs;
            for (const char* h : kTHatNames) {
                const auto [r, l] = printed_halves(p, h);
                diffs.emplace_back(h, m.coproduct_of(p.letter(h)) - r - l);
            }
            return tensor_compare(diffs, p);
        });
    add("quasi-hopf.antipode-explicit", "quasi-hopf",
        "-(-1)^p(T^-1) T^-1 That T^-1 expands to the listed images of alpha, b, c, delta", [](Context& ctx) {
            const StructureMaps& m = ctx.maps("mixed-loc");
            const Presentation& p = m.presentation();
            Named diffs;
            for (const auto& [h, printed] : printed_antipode(p))
                diffs.emplace_back(h, m.antipode_of(p.letter(h)) - printed);
            return elements_outcome(diffs, p);
        });
    add("quasi-hopf.coproduct-homomorphism", "quasi-hopf", "Delta-hat kills every gr and cross relation",
        [](Context& ctx) {
            const StructureMaps& m = ctx.maps("mixed-loc");
            Outcome o = relation_outcome(coproduct_homomorphism(m, ctx.presentation("gr")));
            append(o, relation_outcome(coproduct_homomorphism(m, ctx.presentation("mixed"))));
            return o;
        });
    add("quasi-hopf.counit-homomorphism", "quasi-hopf", "eps-hat kills every gr and cross relation",
        [](Context& ctx) {
            const StructureMaps& m = ctx.maps("mixed-loc");
            Outcome o = relation_outcome(counit_homomorphism(m, ctx.presentation("gr")));
            append(o, relation_outcome(counit_homomorphism(m, ctx.presentation("mixed"))));
            return o;
        });
    add("quasi-hopf.antipode-antihomomorphism", "quasi-hopf", "graded S-hat kills every relation of mixed",
        [](Context& ctx) {
            return relation_outcome(antipode_antihomomorphism(ctx.maps("mixed-loc"), ctx.presentation("mixed")));
        });
    add("quasi-hopf.coassociativity", "quasi-hopf", "coassociativity on alpha, b, c, delta",
        [](Context& ctx) { return axioms(ctx.maps("mixed-loc"), kTHatNames, 0); });
    add("quasi-hopf.counit", "quasi-hopf", "counit axioms on alpha, b, c, delta",
        [](Context& ctx) { return axioms(ctx.maps("mixed-loc"), kTHatNames, 1); });
    add("quasi-hopf.antipode", "quasi-hopf", "antipode axioms on alpha, b, c, delta",
        [](Context& ctx) { return axioms(ctx.maps("mixed-loc"), kTHatNames, 2); });

    add("product.relations", "product", "entries of That That' satisfy all eight gl relations", [](Context& ctx) {
        const Presentation& p = ctx.presentation("double");
        const Presentation& gl = ctx.presentation("gl");
        const SuperMatrix prod = mat_mul(that_of(p),
                                         SuperMatrix::of_generators(p, {"alpha'", "b'", "c'", "delta'"},
                                                                    ParityPattern::OddDiagonal),
                                         p);
        std::map<Letter, Element> images;
        for (int i = 0; i < 4; ++i)
            images[gl.letter(kTNames[i])] = prod.at(i / 2, i % 2);
        return elements_outcome(relation_images(gl, images), p);
    });
    add("product.single-factor-fails", "product", "That alone does not satisfy the gl relations", [](Context& ctx) {
        const Presentation& p = ctx.presentation("double");
        const Presentation& gl = ctx.presentation("gl");
        std::map<Letter, Element> images;
        for (int i = 0; i < 4; ++i)
            images[gl.letter(kTNames[i])] = p.gen(kTHatNames[i]);
        const Outcome images_outcome = elements_outcome(relation_images(gl, images), p);
        Outcome o;
        if (images_outcome.residual.empty())
            o.residual.push_back("That alone satisfies every gl relation");
        else
            o.note = "violated: " + joined(images_outcome.residual);
        return o;
    });

    add("coaction.right-half", "coaction", "(d x id) Delta gives the first half of each Delta-hat image",
        [](Context& ctx) {
            const StructureMaps& m = ctx.maps("mixed-loc");
            const Presentation& p = m.presentation();
            std::vector<std::pair<std::string, TensorElement>> diffs;
            for (const char* h : kTHatNames)
                diffs.emplace_back(h, m.coaction(Side::Right, p.letter(h)) - printed_halves(p, h).first);
            return tensor_compare(diffs, p);
        });
    add("coaction.left-half", "coaction", "(tau x d) Delta gives the second half of each Delta-hat image",
        [](Context& ctx) {
            const StructureMaps& m = ctx.maps("mixed-loc");
            const Presentation& p = m.presentation();
            std::vector<std::pair<std::string, TensorElement>> diffs;
            for (const char* h : kTHatNames)
                diffs.emplace_back(h, m.coaction(Side::Left, p.letter(h)) - printed_halves(p, h).second);
            return tensor_compare(diffs, p);
        });
    add("coaction.sum-is-coproduct", "coaction", "Delta-hat = phi_R + phi_L on one-forms", [](Context& ctx) {
        const StructureMaps& m = ctx.maps("mixed-loc");
        const Presentation& p = m.presentation();
        std::vector<std::pair<std::string, TensorElement>> diffs;
        for (const auto& [label, form] : test_forms(p))
            diffs.emplace_back(label, m.coproduct(form) - m.phi(Side::Right, form) - m.phi(Side::Left, form));
        return tensor_compare(diffs, p);
    });
    add("coaction.right-counit", "coaction", "(id x eps) phi_R = id on one-forms", [](Context& ctx) {
        const StructureMaps& m = ctx.maps("mixed-loc");
        const Presentation& p = m.presentation();
        Named diffs;
        for (const auto& [label, form] : test_forms(p)) {
            Element back;
            const TensorElement image = m.phi(Side::Right, form);
            for (const auto& [legs, c] : image.terms())
                back += (c * m.counit(Element::word(legs[1]))) * Element::word(legs[0]);
            diffs.emplace_back(label, back - form);
        }
        return elements_outcome(diffs, p);
    });
    add("coaction.left-counit", "coaction", "(eps x id) phi_L = id on one-forms", [](Context& ctx) {
        const StructureMaps& m = ctx.maps("mixed-loc");
        const Presentation& p = m.presentation();
        Named diffs;
        for (const auto& [label, form] : test_forms(p)) {
            Element back;
            const TensorElement image = m.phi(Side::Left, form);
            for (const auto& [legs, c] : image.terms())
                back += (c * m.counit(Element::word(legs[0]))) * Element::word(legs[1]);
            diffs.emplace_back(label, back - form);
        }
        return elements_outcome(diffs, p);
    });
    add("coaction.right-comodule", "coaction", "(phi_R x id) phi_R = (id x Delta) phi_R on one-forms",
        [](Context& ctx) {
            const StructureMaps& m = ctx.maps("mixed-loc");
            const Presentation& p = m.presentation();
            auto phi_r = [&m](const Word& w) { return m.phi(Side::Right, Element::word(w)); };
            auto delta = [&m](const Word& w) { return m.coproduct(Element::word(w)); };
            std::vector<std::pair<std::string, TensorElement>> diffs;
            for (const auto& [label, form] : test_forms(p)) {
                const TensorElement t = m.phi(Side::Right, form);
                diffs.emplace_back(label, m.apply_on_leg(t, 0, phi_r) - m.apply_on_leg(t, 1, delta));
            }
            return tensor_compare(diffs, p);
        });
    add("coaction.left-comodule", "coaction", "(id x phi_L) phi_L = (Delta x id) phi_L on one-forms",
        [](Context& ctx) {
            const StructureMaps& m = ctx.maps("mixed-loc");
            const Presentation& p = m.presentation();
            auto phi_l = [&m](const Word& w) { return m.phi(Side::Left, Element::word(w)); };
            auto delta = [&m](const Word& w) { return m.coproduct(Element::word(w)); };
            std::vector<std::pair<std::string, TensorElement>> diffs;
            for (const auto& [label, form] : test_forms(p)) {
                const TensorElement t = m.phi(Side::Left, form);
                diffs.emplace_back(label, m.apply_on_leg(t, 1, phi_l) - m.apply_on_leg(t, 0, delta));
            }
            return tensor_compare(diffs, p);
        });
    add("coaction.differential-well-defined", "coaction", "d of every gl relation vanishes in mixed",
        [](Context& ctx) {
            return relation_outcome(differential_well_defined(ctx.maps("mixed-loc"), ctx.presentation("gl")));
        });

    std::sort(checks.begin(), checks.end(), [](const CheckDef& a, const CheckDef& b) { return a.id < b.id; });
    return checks;
}

} // namespace

const std::vector<CheckDef>& check_registry()
{
    static const std::vector<CheckDef> registry = make_registry();
    return registry;
}

const CheckDef* find_check(std::string_view id)
{
    for (const auto& c : check_registry())
        if (c.id == id)
            return &c;
    return nullptr;
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = {"confluence", "rtt",     "span",    "ybe",      "central", "inverse",
                                                   "hopf",       "quasi-hopf", "product", "coaction", "all"};
    return names;
}

std::vector<CheckResult> run_suite(std::string_view suite, const Options& options)
{
    if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
        throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
    Context ctx(options);
    std::vector<CheckResult> results;
    for (const auto& check : check_registry()) {
        if (suite != "all" && check.suite != suite)
            continue;
        const auto start = std::chrono::steady_clock::now();
        Outcome o = check.run(ctx);
        const auto stop = std::chrono::steady_clock::now();
        CheckResult r;
        r.check_id = check.id;
        r.status = o.residual.empty() ? Status::Pass : Status::Fail;
        r.residual_summary = std::move(o.residual);
        r.note = std::move(o.note);
        r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
        results.push_back(std::move(r));
    }
    return results;
}

} // namespace qgrass
