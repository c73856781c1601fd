#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "torspan/abelian_group.hpp"
#include "torspan/group_ring.hpp"
#include "torspan/laurent.hpp"
#include "torspan/linking_form.hpp"
#include "torspan/rational.hpp"

namespace torspan {

enum class QhsConstruction { Lens, KnotSurgery, Direct };

/**
 * Torsion data of a rational homology sphere: the first homology (finite),
 * a group-ring representative of the torsion, and the linking form it
 * induces.  Built by the factories below, which validate on the way in.
 */
struct QhsTorsion {
    AbelianGroup group;
    GroupRingElement tau;
    LinkingForm linking;
    QhsConstruction construction;
    std::string descriptor;
};

/**
 * Linking form read off the torsion representative:
 *
 *   L(h, g) = -((1 - h)(1 - g) tau)_1  mod 1
 *
 * evaluated on the generators and extended bilinearly.  Ill-defined,
 * asymmetric or degenerate values reject the input as not coming from a
 * rational homology sphere.
 */
inline LinkingForm linking_form_from_torsion(const AbelianGroup& group,
                                             const GroupRingElement& tau,
                                             std::int64_t cap = kDefaultEnumerationCap) {
    if (group.free_rank() != 0)
        throw invalid_parameter_error(
            "linking_form_from_torsion: first homology must be finite, got " +
            group.format());
    const auto one = GroupRingElement::one(group);
    const std::size_t k = group.torsion_rank();
    std::vector<std::vector<QmodZ>> values(k, std::vector<QmodZ>(k));
    for (std::size_t i = 0; i < k; ++i) {
        const auto gi = one - GroupRingElement::monomial(group, group.generator(i));
        for (std::size_t j = 0; j < k; ++j) {
            const auto gj = one - GroupRingElement::monomial(group, group.generator(j));
            values[i][j] = QmodZ(-(gi * gj * tau).coefficient_at_identity());
        }
    }
    LinkingForm L(group, std::move(values));
    if (!L.is_nondegenerate(cap))
        throw linking_form_error(
            "linking_form_from_torsion: the induced linking form on " + group.format() +
            " is degenerate; the element is not a torsion representative of a rational "
            "homology sphere");
    return L;
}

/** The quadratic value q(u) = ((1 - u) tau)_1 mod 1. */
inline QmodZ quadratic_function(const QhsTorsion& data, const GroupElement& u) {
    const auto one_minus_u =
        GroupRingElement::one(data.group) - GroupRingElement::monomial(data.group, u);
    return QmodZ((one_minus_u * data.tau).coefficient_at_identity());
}

/**
 * The residue K mod 2n with q(u) = K/2n + 1/2, where n is the order of u.
 * Its parity selects the branch of the correction term.
 */
struct KResidue {
    std::int64_t value;   // canonical representative in [0, 2n)
    std::int64_t modulus; // 2n
    bool odd() const { return value % 2 != 0; }
};

inline KResidue k_residue(const QhsTorsion& data, const GroupElement& u) {
    const std::int64_t n = data.group.order_checked(u).convert_to<std::int64_t>();
    const QmodZ q = quadratic_function(data, u);
    const Rational scaled = (q.value() - Rational(1, 2)) * Rational(2 * n);
    if (denominator(scaled) != 1)
        throw torsion_consistency_error(
            "k_residue: q(" + data.group.format_element(u) + ") = " + q.format() +
            " does not lie on the half-shifted 1/" + std::to_string(2 * n) +
            " lattice; the torsion representative is inconsistent");
    std::int64_t k = (numerator(scaled) % (2 * n)).convert_to<std::int64_t>();
    if (k < 0)
        k += 2 * n;
    return KResidue{k, 2 * n};
}

/**
 * Correction term a(u) for an explicitly chosen dual element v, branching
 * on the parity of K:
 *
 *   odd  K:  a(u) = (u - 1) tau - v^{(K+1)/2} alpha_v Sigma_G
 *   even K:  a(u) = (u - 1) tau - v^{K/2} ((v + 1)/2) alpha_v Sigma_G
 *
 * where G is the annihilator of u and Sigma_G its sum.  The power of v is
 * the least non-negative representative; any other valid choice of v or
 * representative yields the same element because v^n Sigma_G = Sigma_G.
 */
inline GroupRingElement correction_term_with_dual(const QhsTorsion& data,
                                                  const GroupElement& u,
                                                  const GroupElement& v,
                                                  std::int64_t cap = kDefaultEnumerationCap) {
    const AbelianGroup& H = data.group;
    const Integer n = H.order_checked(u);
    if (!(data.linking.eval(u, v) == QmodZ(make_rational(1, n))))
        throw linking_form_error("correction_term: " + H.format_element(v) +
                                 " does not pair with " + H.format_element(u) + " to 1/" +
                                 n.str());
    const auto annihilator = annihilator_subgroup(data.linking, u, cap);
    const auto sum_G = subgroup_sum(H, annihilator);
    const auto alpha_v = alpha(H, v);
    const KResidue K = k_residue(data, u);

    const auto one = GroupRingElement::one(H);
    const auto u_minus_1 = GroupRingElement::monomial(H, u) - one;

    GroupRingElement branch_factor(H);
    if (K.odd()) {
        branch_factor = GroupRingElement::monomial(H, H.pow(v, (K.value + 1) / 2));
    } else {
        const auto v_mono = GroupRingElement::monomial(H, v);
        branch_factor = GroupRingElement::monomial(H, H.pow(v, K.value / 2)) *
                        ((v_mono + one) * Rational(1, 2));
    }
    return u_minus_1 * data.tau - branch_factor * alpha_v * sum_G;
}

/** Correction term with the canonical (first in enumeration order) dual. */
inline GroupRingElement correction_term(const QhsTorsion& data, const GroupElement& u,
                                        std::int64_t cap = kDefaultEnumerationCap) {
    return correction_term_with_dual(data, u, find_dual_element(data.linking, u, cap), cap);
}

namespace detail {

// Shared validation: finite homology, a nondegenerate induced linking form,
// and a residue K for every torsion class.
inline QhsTorsion make_qhs(AbelianGroup group, GroupRingElement tau,
                           QhsConstruction construction, std::string descriptor,
                           std::int64_t cap) {
    LinkingForm linking = linking_form_from_torsion(group, tau, cap);
    QhsTorsion data{std::move(group), std::move(tau), std::move(linking), construction,
                    std::move(descriptor)};
    for (const auto& u : data.group.enumerate_torsion(cap))
        k_residue(data, u); // throws torsion_consistency_error on failure
    return data;
}

} // namespace detail

/**
 * Torsion of the lens space with parameters (p, q), gcd(p, q) = 1:
 * tau = alpha_t alpha_{t^q} over Z/p.
 */
inline QhsTorsion lens_torsion(std::int64_t p, std::int64_t q,
                               std::int64_t cap = kDefaultEnumerationCap) {
    if (p < 2)
        throw invalid_parameter_error("lens_torsion: invalid lens parameters (p=" +
                                      std::to_string(p) + "): p must be at least 2");
    if (gcd(Integer(p), Integer(q)) != 1)
        throw invalid_parameter_error(
            "lens_torsion: invalid lens parameters (p=" + std::to_string(p) +
            ", q=" + std::to_string(q) + "): p and q must be coprime");
    const auto H = AbelianGroup::cyclic(p, "t");
    const auto t = H.generator(0);
    const auto tau = alpha(H, t) * alpha(H, H.pow(t, q));
    return detail::make_qhs(H, tau, QhsConstruction::Lens,
                            "lens(" + std::to_string(p) + "," + std::to_string(q) + ")",
                            cap);
}

/**
 * Torsion of p-surgery on a knot with normalized Alexander polynomial
 * delta (delta(1) = 1, delta(t) = delta(1/t)): tau = alpha_u^2 delta(u)
 * over Z/p, with u the image of the meridian.
 */
inline QhsTorsion knot_surgery_torsion(std::int64_t p, const LaurentPoly& delta,
                                       std::int64_t cap = kDefaultEnumerationCap) {
    if (p < 2)
        throw invalid_parameter_error("knot_surgery_torsion: invalid framing p=" +
                                      std::to_string(p) + ", must be at least 2");
    if (delta.value_at_1() != 1)
        throw normalization_error(
            "knot_surgery_torsion: Alexander polynomial is not normalized, its value at "
            "1 is " +
            format_rational(delta.value_at_1()) + " instead of 1");
    if (!delta.is_symmetric())
        throw normalization_error(
            "knot_surgery_torsion: Alexander polynomial is not symmetric under t -> 1/t: " +
            delta.format());
    const auto H = AbelianGroup::cyclic(p, "u");
    const auto u = H.generator(0);
    const auto a = alpha(H, u);
    const auto tau = a * a * delta.substitute(H, u);
    return detail::make_qhs(H, tau, QhsConstruction::KnotSurgery,
                            "surgery(" + std::to_string(p) + "; " + delta.format() + ")",
                            cap);
}

/** Directly supplied torsion representative, fully validated. */
inline QhsTorsion direct_torsion(const AbelianGroup& group, const GroupRingElement& tau,
                                 std::string descriptor = "direct",
                                 std::int64_t cap = kDefaultEnumerationCap) {
    if (!group.same_structure(tau.group()))
        throw structural_error("direct_torsion: element lives in " + tau.group().format() +
                               ", not in " + group.format());
    return detail::make_qhs(group, tau, QhsConstruction::Direct, std::move(descriptor),
                            cap);
}

} // namespace torspan
