#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "torspan/span.hpp"
#include "torspan/torsion.hpp"

namespace torspan {

/**
 * Intersection values h . x assigned to group elements, the extra datum
 * needed to evaluate span bounds against a homology class x that is not
 * determined by its torsion boundary alone.
 */
using PairingAssignment = std::map<GroupElement, QmodZ>;

/**
 * Span of the linking values against u over the torsion part of the
 * support: circular_span of { L(h, u) : h in support(a), h torsion }.
 * An empty support gives 0.
 */
inline Rational spn_u(const LinkingForm& L, const GroupElement& u,
                      const GroupRingElement& a) {
    const AbelianGroup& H = L.group();
    if (!H.same_structure(a.group()))
        throw structural_error("spn_u: element lives in " + a.group().format() +
                               ", not in " + H.format());
    if (!H.is_torsion(u))
        throw structural_error("spn_u: " + H.format_element(u) +
                               " is not a torsion class");
    std::vector<QmodZ> values;
    for (const auto& h : a.support())
        if (H.is_torsion(h))
            values.push_back(L.eval(h, u));
    return circular_span(values);
}

/**
 * Span of explicitly assigned intersection values over the support:
 * circular_span of { pairing[h] : h in support(a) }.  Every support
 * element must carry a value.
 */
inline Rational spn_x(const GroupRingElement& a, const PairingAssignment& pairing) {
    std::vector<QmodZ> values;
    for (const auto& h : a.support()) {
        const auto it = pairing.find(h);
        if (it == pairing.end())
            throw pairing_error("spn_x: no pairing value assigned to support element " +
                                a.group().format_element(h));
        values.push_back(it->second);
    }
    return circular_span(values);
}

/**
 * Lower bound for the genus function on the torsion class u: the span of
 * the correction term against u.  The identity class gives 0.
 */
inline Rational theta_lower_bound(const QhsTorsion& data, const GroupElement& u,
                                  std::int64_t cap = kDefaultEnumerationCap) {
    return spn_u(data.linking, u, correction_term(data, u, cap));
}

/**
 * Lower bound for surgery on a knot, with the data needed to report the
 * closed-form shortcut: when the Alexander quotient b (delta = 1 + (t-1) b)
 * is nonzero and p >= 2 span(b), the bound collapses to (span(delta) - 1)/p.
 */
struct KnotSurgeryBound {
    Rational lower;
    std::int64_t delta_span = 0;
    std::int64_t beta_span = 0;
    bool shortcut_regime = false;
};

/**
 * The genus lower bound for p-surgery on a knot with Alexander polynomial
 * delta, evaluated on the meridian class through the full correction-term
 * pipeline.  In the shortcut regime the pipeline value is cross-checked
 * against (span(delta) - 1)/p; disagreement is an internal inconsistency.
 */
inline KnotSurgeryBound knot_surgery_lower_bound(std::int64_t p, const LaurentPoly& delta,
                                                 std::int64_t cap = kDefaultEnumerationCap) {
    const auto data = knot_surgery_torsion(p, delta, cap);
    const auto u = data.group.generator(0);
    KnotSurgeryBound out;
    out.lower = theta_lower_bound(data, u, cap);
    out.delta_span = delta.span();
    const auto beta = beta_expansion(delta);
    out.beta_span = beta.span();
    out.shortcut_regime = !beta.is_zero() && p >= 2 * out.beta_span;
    if (out.shortcut_regime) {
        const Rational closed = make_rational(out.delta_span - 1, p);
        if (out.lower != closed)
            throw consistency_error(
                "knot_surgery_lower_bound: pipeline bound " + format_rational(out.lower) +
                " disagrees with the closed form " + format_rational(closed) +
                " although p = " + std::to_string(p) + " >= 2 span(beta) = " +
                std::to_string(2 * out.beta_span));
    } else if (beta.is_zero() && !(out.lower == Rational(0))) {
        throw consistency_error(
            "knot_surgery_lower_bound: trivial Alexander quotient must give bound 0, got " +
            format_rational(out.lower));
    }
    return out;
}

/**
 * Upper bound (2g - 1)/p for the meridian class of p-surgery on a knot of
 * genus g >= 1; a genus-0 knot gives 0.
 */
inline Rational knot_surgery_upper_bound(std::int64_t p, std::int64_t genus) {
    if (p < 2)
        throw invalid_parameter_error("knot_surgery_upper_bound: invalid framing p=" +
                                      std::to_string(p) + ", must be at least 2");
    if (genus < 0)
        throw invalid_parameter_error("knot_surgery_upper_bound: genus must be >= 0, got " +
                                      std::to_string(genus));
    if (genus == 0)
        return Rational(0);
    return make_rational(2 * genus - 1, p);
}

/**
 * Verdict of comparing the two knot-surgery bounds.  When the Alexander
 * span equals 2g > 0 and p >= 4g - 2, both bounds meet at (2g - 1)/p and
 * the genus function is determined exactly on the meridian class.
 */
struct FibredCheck {
    Rational lower;
    Rational upper;
    bool equality = false; // exact value certified
    bool shortcut_regime = false;
};

inline FibredCheck fibred_equality_check(std::int64_t p, const LaurentPoly& delta,
                                         std::int64_t genus,
                                         std::int64_t cap = kDefaultEnumerationCap) {
    const auto bound = knot_surgery_lower_bound(p, delta, cap);
    FibredCheck out;
    out.lower = bound.lower;
    out.upper = knot_surgery_upper_bound(p, genus);
    out.shortcut_regime = bound.shortcut_regime;
    if (out.lower > out.upper)
        throw consistency_error("fibred_equality_check: lower bound " +
                                format_rational(out.lower) + " exceeds upper bound " +
                                format_rational(out.upper));
    out.equality = genus > 0 && bound.delta_span == 2 * genus && p >= 4 * genus - 2 &&
                   out.lower == out.upper;
    return out;
}

/**
 * First homology (Z/|p|) u1 + Z u2 of surgery on a two-component link
 * with linking number 0 and framings (p, 0).
 */
inline AbelianGroup make_link_surgery_group(std::int64_t p) {
    if (p == 0 || p == 1 || p == -1)
        throw invalid_parameter_error(
            "make_link_surgery_group: framing p=" + std::to_string(p) +
            " leaves no torsion; |p| must be at least 2");
    return AbelianGroup({p < 0 ? -p : p}, 1, {"u1", "u2"});
}

/** Linking form on the torsion subgroup: L(u1^a, u1^b) = a b / p mod 1. */
inline LinkingForm link_surgery_linking(std::int64_t p) {
    const auto H = make_link_surgery_group(p);
    return LinkingForm(H, {{QmodZ(make_rational(1, p))}});
}

/**
 * Lower bound for surgery on a two-component link with torsion framing p
 * and Alexander factor f(t1, t2): span of the linking values of the
 * torsion part of (u - 1) f(u1, u2) against the torsion class u.
 */
inline Rational link_surgery_lower_bound(std::int64_t p, const LaurentPoly2& f,
                                         const GroupElement& u) {
    const auto H = make_link_surgery_group(p);
    const auto L = link_surgery_linking(p);
    if (!H.is_torsion(u))
        throw structural_error("link_surgery_lower_bound: " + H.format_element(u) +
                               " is not a torsion class of " + H.format());
    const auto image = f.substitute(H, H.generator(0), H.generator(1));
    const auto a = (GroupRingElement::monomial(H, u) - GroupRingElement::one(H)) * image;
    return spn_u(L, u, a);
}

/**
 * Generic span bound for a product of difference factors: the span of the
 * assigned intersection values over the support of (h_1 - 1)...(h_m - 1) tau.
 * An empty class list spans tau itself.
 */
inline Rational product_span_bound(const GroupRingElement& tau,
                                   const std::vector<GroupElement>& classes,
                                   const PairingAssignment& pairing) {
    const auto one = GroupRingElement::one(tau.group());
    auto a = tau;
    for (const auto& h : classes)
        a = (GroupRingElement::monomial(tau.group(), h) - one) * a;
    return spn_x(a, pairing);
}

} // namespace torspan
