#pragma once

#include <map>
#include <string>
#include <vector>

#include "torspan/abelian_group.hpp"
#include "torspan/rational.hpp"

namespace torspan {

/** Support of a group-ring element, ascending in enumeration order. */
using BasicSet = std::vector<GroupElement>;

/**
 * An element of the rational group ring Q[H]: finitely many group elements
 * with non-zero rational coefficients.  Values are immutable in use; all
 * operators hand back fresh elements, multiplication is the convolution
 * product.
 */
class GroupRingElement {
  public:
    explicit GroupRingElement(AbelianGroup group) : group_(std::move(group)) {}

    static GroupRingElement zero(const AbelianGroup& group) {
        return GroupRingElement(group);
    }
    static GroupRingElement one(const AbelianGroup& group) {
        return monomial(group, group.identity());
    }
    static GroupRingElement monomial(const AbelianGroup& group, const GroupElement& g,
                                     const Rational& coeff = Rational(1)) {
        // route through with_term so the element gets canonicalized
        return GroupRingElement(group).with_term(g, coeff);
    }

    const AbelianGroup& group() const { return group_; }
    const std::map<GroupElement, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coeff(const GroupElement& g) const {
        const auto it = terms_.find(g);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Rational coefficient_at_identity() const { return coeff(group_.identity()); }

    /** Ring homomorphism to Q sending every group element to 1. */
    Rational augmentation() const {
        Rational sum(0);
        for (const auto& [g, c] : terms_)
            sum += c;
        return sum;
    }

    BasicSet support() const {
        BasicSet out;
        out.reserve(terms_.size());
        for (const auto& [g, c] : terms_)
            out.push_back(g);
        return out;
    }

    /** Copy with coeff added at g; the workhorse of builders and parsers. */
    GroupRingElement with_term(const GroupElement& g, const Rational& coeff) const {
        GroupRingElement out = *this;
        out.add_in_place(group_.element(g.torsion_exponents(), g.free_exponents()), coeff);
        return out;
    }

    GroupRingElement operator+(const GroupRingElement& o) const {
        check_same_group(o, "operator+");
        GroupRingElement out = *this;
        for (const auto& [g, c] : o.terms_)
            out.add_in_place(g, c);
        return out;
    }

    GroupRingElement operator-(const GroupRingElement& o) const {
        check_same_group(o, "operator-");
        GroupRingElement out = *this;
        for (const auto& [g, c] : o.terms_)
            out.add_in_place(g, -c);
        return out;
    }

    GroupRingElement operator-() const {
        GroupRingElement out(group_);
        for (const auto& [g, c] : terms_)
            out.terms_[g] = -c;
        return out;
    }

    /** Convolution: (a*b)[k] collects a[g]*b[h] over all gh = k. */
    GroupRingElement operator*(const GroupRingElement& o) const {
        check_same_group(o, "operator*");
        GroupRingElement out(group_);
        for (const auto& [g, cg] : terms_)
            for (const auto& [h, ch] : o.terms_)
                out.add_in_place(group_.mul(g, h), cg * ch);
        return out;
    }

    GroupRingElement operator*(const Rational& s) const {
        GroupRingElement out(group_);
        if (s == 0)
            return out;
        for (const auto& [g, c] : terms_)
            out.terms_[g] = c * s;
        return out;
    }

    friend GroupRingElement operator*(const Rational& s, const GroupRingElement& a) {
        return a * s;
    }

    /** The translate h*a: every support element multiplied by h. */
    GroupRingElement translated(const GroupElement& h) const {
        GroupRingElement out(group_);
        for (const auto& [g, c] : terms_)
            out.terms_[group_.mul(h, g)] = c;
        return out;
    }

    GroupRingElement pow(unsigned k) const {
        GroupRingElement out = one(group_);
        for (unsigned i = 0; i < k; ++i)
            out = out * *this;
        return out;
    }

    bool operator==(const GroupRingElement& o) const {
        return group_.same_structure(o.group_) && terms_ == o.terms_;
    }

    /**
     * Deterministic rendering, terms ascending by exponent vector.  With a
     * non-trivial common denominator D the integer-scaled sum is wrapped as
     * "(...)/D", e.g. "(-2 - t + t^3 + 2*t^4)/5"; otherwise the plain sum,
     * e.g. "-t + t^4".
     */
    std::string format() const {
        if (terms_.empty())
            return "0";
        Integer common_den = 1;
        for (const auto& [g, c] : terms_)
            common_den = lcm(common_den, denominator(c));

        std::string body;
        for (const auto& [g, c] : terms_) {
            const Integer scaled = numerator(c) * (common_den / denominator(c));
            const Integer magnitude = abs(scaled);
            if (body.empty())
                body += scaled < 0 ? "-" : "";
            else
                body += scaled < 0 ? " - " : " + ";
            const bool identity = g.is_identity();
            if (magnitude != 1 || identity) {
                body += magnitude.str();
                if (!identity)
                    body += "*";
            }
            if (!identity)
                body += group_.format_element(g);
        }
        if (common_den == 1)
            return body;
        return "(" + body + ")/" + common_den.str();
    }

  private:
    void add_in_place(const GroupElement& g, const Rational& c) {
        const auto it = terms_.find(g);
        if (it == terms_.end()) {
            if (c != 0)
                terms_[g] = c;
            return;
        }
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }

    void check_same_group(const GroupRingElement& o, const char* op) const {
        if (!group_.same_structure(o.group_))
            throw structural_error(std::string("GroupRingElement::") + op +
                                   ": group mismatch: " + group_.format() + " vs " +
                                   o.group_.format());
    }

    AbelianGroup group_;
    std::map<GroupElement, Rational> terms_;
};

/** Sum of the given elements with coefficient 1 each. */
inline GroupRingElement subgroup_sum(const AbelianGroup& group,
                                     const std::vector<GroupElement>& elements) {
    GroupRingElement out(group);
    for (const auto& g : elements)
        out = out.with_term(g, Rational(1));
    return out;
}

/** Sum over the cyclic subgroup generated by a finite-order element. */
inline GroupRingElement cyclic_sum(const AbelianGroup& group, const GroupElement& u) {
    const Integer n = group.order_checked(u);
    GroupRingElement out(group);
    GroupElement power = group.identity();
    for (Integer i = 0; i < n; ++i) {
        out = out.with_term(power, Rational(1));
        power = group.mul(power, u);
    }
    return out;
}

/**
 * The partial-fraction element attached to a finite-order v:
 *
 *   alpha_v = (1 + 2v + 3v^2 + ... + p v^{p-1})/p - ((p+1)/2)(1 + v + ... + v^{p-1})/p
 *
 * with p the order of v.  Its augmentation vanishes, and every non-trivial
 * character phi sends it to (phi(v) - 1)^{-1}.
 */
inline GroupRingElement alpha(const AbelianGroup& group, const GroupElement& v) {
    const Integer p = group.order_checked(v);
    GroupRingElement out(group);
    GroupElement power = group.identity();
    for (Integer i = 0; i < p; ++i) {
        const Rational coeff = make_rational(i + 1, p) - make_rational(p + 1, 2 * p);
        out = out.with_term(power, coeff);
        power = group.mul(power, v);
    }
    return out;
}

} // namespace torspan
