#pragma once

#include <vector>

#include "torspan/abelian_group.hpp"
#include "torspan/rational.hpp"

namespace torspan {

/**
 * A symmetric Q/Z-valued bilinear form on the torsion subgroup, stored as
 * its value matrix over the torsion generators and extended bilinearly.
 * Construction checks symmetry and well-definedness (n_i times any value
 * in row i must vanish mod 1); degeneracy is checked where it matters,
 * by the annihilator and dual-element searches below.
 */
class LinkingForm {
  public:
    LinkingForm(AbelianGroup group, std::vector<std::vector<QmodZ>> values_on_generators)
        : group_(std::move(group)), matrix_(std::move(values_on_generators)) {
        const std::size_t k = group_.torsion_rank();
        if (matrix_.size() != k)
            throw linking_form_error("LinkingForm: matrix must be " + std::to_string(k) +
                                     "x" + std::to_string(k) + " for " + group_.format());
        for (const auto& row : matrix_)
            if (row.size() != k)
                throw linking_form_error("LinkingForm: matrix is not square");
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                if (!(matrix_[i][j] == matrix_[j][i]))
                    throw linking_form_error("LinkingForm: values are not symmetric");
                if (!(matrix_[i][j].times(group_.torsion_orders()[i]) == QmodZ()))
                    throw linking_form_error(
                        "LinkingForm: value at (" + std::to_string(i) + "," +
                        std::to_string(j) + ") is not killed by the generator order " +
                        std::to_string(group_.torsion_orders()[i]));
            }
    }

    const AbelianGroup& group() const { return group_; }

    /** L(a, b) by bilinear extension; both arguments must be torsion. */
    QmodZ eval(const GroupElement& a, const GroupElement& b) const {
        if (!group_.is_torsion(a) || !group_.is_torsion(b))
            throw structural_error("LinkingForm::eval: arguments must be torsion elements");
        Rational sum(0);
        for (std::size_t i = 0; i < group_.torsion_rank(); ++i) {
            if (a.torsion_exponents()[i] == 0)
                continue;
            for (std::size_t j = 0; j < group_.torsion_rank(); ++j) {
                if (b.torsion_exponents()[j] == 0)
                    continue;
                const Integer coeff =
                    Integer(a.torsion_exponents()[i]) * b.torsion_exponents()[j];
                sum += Rational(coeff) * matrix_[i][j].value();
            }
        }
        return QmodZ(sum);
    }

    /** True when only the identity pairs to zero with everything. */
    bool is_nondegenerate(std::int64_t cap = kDefaultEnumerationCap) const {
        for (const auto& g : group_.enumerate_torsion(cap)) {
            if (g.is_identity())
                continue;
            bool pairs_with_someone = false;
            // bilinearity: it is enough to test against the generators
            for (std::size_t j = 0; j < group_.torsion_rank(); ++j)
                if (!(eval(g, group_.generator(j)) == QmodZ())) {
                    pairs_with_someone = true;
                    break;
                }
            if (!pairs_with_someone)
                return false;
        }
        return true;
    }

  private:
    AbelianGroup group_;
    std::vector<std::vector<QmodZ>> matrix_;
};

/**
 * The subgroup G_u of torsion elements pairing to zero with u.  For a
 * nondegenerate form its index in the torsion subgroup is exactly the
 * order of u; that identity is enforced here, so a degenerate input
 * surfaces as an error instead of a silently wrong subgroup.
 */
inline std::vector<GroupElement> annihilator_subgroup(
    const LinkingForm& L, const GroupElement& u,
    std::int64_t cap = kDefaultEnumerationCap) {
    const AbelianGroup& H = L.group();
    const Integer n = H.order_checked(u);
    std::vector<GroupElement> annihilator;
    for (const auto& g : H.enumerate_torsion(cap))
        if (L.eval(u, g) == QmodZ())
            annihilator.push_back(g);
    if (Integer(annihilator.size()) * n != H.torsion_size())
        throw linking_form_error(
            "annihilator_subgroup: annihilator of " + H.format_element(u) + " has order " +
            std::to_string(annihilator.size()) + " but the torsion subgroup has order " +
            H.torsion_size().str() + " and the element has order " + n.str() +
            "; the linking form is degenerate");
    return annihilator;
}

/**
 * First torsion element v (in enumeration order) with L(u, v) = 1/n, where
 * n is the order of u.  Exists precisely when the form is nondegenerate on
 * the relevant cyclic piece.
 */
inline GroupElement find_dual_element(const LinkingForm& L, const GroupElement& u,
                                      std::int64_t cap = kDefaultEnumerationCap) {
    const AbelianGroup& H = L.group();
    const Integer n = H.order_checked(u);
    const QmodZ target(make_rational(1, n));
    for (const auto& v : H.enumerate_torsion(cap))
        if (L.eval(u, v) == target)
            return v;
    throw linking_form_error("find_dual_element: no element pairs with " +
                             H.format_element(u) + " to 1/" + n.str() +
                             "; the linking form is degenerate");
}

} // namespace torspan
