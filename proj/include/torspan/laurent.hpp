#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "torspan/errors.hpp"
#include "torspan/group_ring.hpp"
#include "torspan/rational.hpp"

namespace torspan {

/**
 * Univariate Laurent polynomial over Q, the input form of Alexander
 * polynomials.  Exponents may be negative; the zero coefficient is never
 * stored.
 */
class LaurentPoly {
  public:
    LaurentPoly() = default;

    static LaurentPoly one() { return LaurentPoly().with_term(0, Rational(1)); }

    LaurentPoly with_term(std::int64_t exponent, const Rational& coeff) const {
        LaurentPoly out = *this;
        auto it = out.terms_.find(exponent);
        if (it == out.terms_.end()) {
            if (coeff != 0)
                out.terms_[exponent] = coeff;
        } else {
            it->second += coeff;
            if (it->second == 0)
                out.terms_.erase(it);
        }
        return out;
    }

    const std::map<std::int64_t, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool operator==(const LaurentPoly&) const = default;

    Rational coeff(std::int64_t exponent) const {
        const auto it = terms_.find(exponent);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Rational value_at_1() const {
        Rational sum(0);
        for (const auto& [e, c] : terms_)
            sum += c;
        return sum;
    }

    /** Invariance under t -> 1/t, the symmetry of Alexander polynomials. */
    bool is_symmetric() const {
        for (const auto& [e, c] : terms_)
            if (coeff(-e) != c)
                return false;
        return true;
    }

    /** Width of the exponent range; zero and monomials have span 0. */
    std::int64_t span() const {
        if (terms_.empty())
            return 0;
        return terms_.rbegin()->first - terms_.begin()->first;
    }

    /** Substitute a group element for the variable: sum of c * u^e. */
    GroupRingElement substitute(const AbelianGroup& group, const GroupElement& u) const {
        auto out = GroupRingElement::zero(group);
        for (const auto& [e, c] : terms_)
            out = out.with_term(group.pow(u, e), c);
        return out;
    }

    /** Rendering in the variable t, exponents ascending: "t^-1 - 1 + t". */
    std::string format() const {
        if (terms_.empty())
            return "0";
        std::string body;
        for (const auto& [e, c] : terms_) {
            const bool negative = c < 0;
            const Rational magnitude = negative ? Rational(-c) : c;
            if (body.empty())
                body += negative ? "-" : "";
            else
                body += negative ? " - " : " + ";
            if (magnitude != 1 || e == 0) {
                body += format_rational(magnitude);
                if (e != 0)
                    body += "*";
            }
            if (e != 0) {
                body += "t";
                if (e != 1)
                    body += "^" + std::to_string(e);
            }
        }
        return body;
    }

  private:
    std::map<std::int64_t, Rational> terms_;
};

/** Bivariate Laurent polynomial, for surgeries with two homology classes. */
class LaurentPoly2 {
  public:
    LaurentPoly2() = default;

    LaurentPoly2 with_term(std::int64_t e1, std::int64_t e2, const Rational& coeff) const {
        LaurentPoly2 out = *this;
        const auto key = std::make_pair(e1, e2);
        auto it = out.terms_.find(key);
        if (it == out.terms_.end()) {
            if (coeff != 0)
                out.terms_[key] = coeff;
        } else {
            it->second += coeff;
            if (it->second == 0)
                out.terms_.erase(it);
        }
        return out;
    }

    const std::map<std::pair<std::int64_t, std::int64_t>, Rational>& terms() const {
        return terms_;
    }
    bool is_zero() const { return terms_.empty(); }
    bool operator==(const LaurentPoly2&) const = default;

    /** Rendering in t1, t2, exponent pairs ascending: "1 + 2*t1*t2^-1". */
    std::string format() const {
        if (terms_.empty())
            return "0";
        std::string body;
        for (const auto& [exps, c] : terms_) {
            const bool negative = c < 0;
            const Rational magnitude = negative ? Rational(-c) : c;
            if (body.empty())
                body += negative ? "-" : "";
            else
                body += negative ? " - " : " + ";
            std::string monomial;
            for (const auto& [name, e] :
                 {std::pair<const char*, std::int64_t>{"t1", exps.first},
                  std::pair<const char*, std::int64_t>{"t2", exps.second}}) {
                if (e == 0)
                    continue;
                if (!monomial.empty())
                    monomial += "*";
                monomial += name;
                if (e != 1)
                    monomial += "^" + std::to_string(e);
            }
            if (magnitude != 1 || monomial.empty()) {
                body += format_rational(magnitude);
                if (!monomial.empty())
                    body += "*";
            }
            body += monomial;
        }
        return body;
    }

    /** Substitute u1, u2 for the two variables. */
    GroupRingElement substitute(const AbelianGroup& group, const GroupElement& u1,
                                const GroupElement& u2) const {
        auto out = GroupRingElement::zero(group);
        for (const auto& [exps, c] : terms_)
            out = out.with_term(group.mul(group.pow(u1, exps.first),
                                          group.pow(u2, exps.second)),
                                c);
        return out;
    }

  private:
    std::map<std::pair<std::int64_t, std::int64_t>, Rational> terms_;
};

namespace detail {

inline std::int64_t parse_exponent_token(const std::string& tok, const std::string& whole) {
    const Integer e = parse_integer_token(tok, whole);
    if (e > std::numeric_limits<std::int64_t>::max() ||
        e < std::numeric_limits<std::int64_t>::min())
        throw parse_error("polynomial exponent out of range in \"" + whole + "\"");
    return e.convert_to<std::int64_t>();
}

inline std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        if (pos == std::string::npos) {
            out.push_back(text.substr(start));
            return out;
        }
        out.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

} // namespace detail

/** Parse "exponent:coefficient" pairs joined by commas: "-1:1,0:-1,1:1". */
inline LaurentPoly parse_laurent(const std::string& text) {
    LaurentPoly out;
    if (text.empty())
        return out;
    for (const auto& pair : detail::split(text, ',')) {
        const auto colon = pair.find(':');
        if (colon == std::string::npos)
            throw parse_error("parse_laurent: expected exponent:coefficient, got \"" +
                              pair + "\"");
        const std::int64_t e = detail::parse_exponent_token(pair.substr(0, colon), text);
        out = out.with_term(e, parse_rational(pair.substr(colon + 1)));
    }
    return out;
}

/** Parse "e1,e2:coefficient" triples joined by commas: "0,0:1,1,-1:2". */
inline LaurentPoly2 parse_laurent2(const std::string& text) {
    LaurentPoly2 out;
    if (text.empty())
        return out;
    const auto tokens = detail::split(text, ',');
    if (tokens.size() % 2 != 0)
        throw parse_error("parse_laurent2: expected e1,e2:coefficient triples in \"" +
                          text + "\"");
    for (std::size_t i = 0; i < tokens.size(); i += 2) {
        const std::int64_t e1 = detail::parse_exponent_token(tokens[i], text);
        const auto colon = tokens[i + 1].find(':');
        if (colon == std::string::npos)
            throw parse_error("parse_laurent2: expected e1,e2:coefficient triples in \"" +
                              text + "\"");
        const std::int64_t e2 =
            detail::parse_exponent_token(tokens[i + 1].substr(0, colon), text);
        out = out.with_term(e1, e2, parse_rational(tokens[i + 1].substr(colon + 1)));
    }
    return out;
}

/**
 * The quotient b with delta = 1 + (t - 1) b, computed by exact synthetic
 * division from the top exponent down.  The division leaves no remainder
 * exactly when delta takes the value 1 at t = 1.
 */
inline LaurentPoly beta_expansion(const LaurentPoly& delta) {
    LaurentPoly d = delta.with_term(0, Rational(-1)); // delta - 1
    if (d.is_zero())
        return LaurentPoly();
    std::map<std::int64_t, Rational> work(d.terms().begin(), d.terms().end());
    const std::int64_t lo = work.begin()->first;
    LaurentPoly quotient;
    while (!work.empty() && work.rbegin()->first > lo) {
        const auto [e, c] = *work.rbegin();
        work.erase(std::prev(work.end()));
        quotient = quotient.with_term(e - 1, c);
        auto& below = work[e - 1];
        below += c;
        if (below == 0)
            work.erase(e - 1);
    }
    // whatever sits at the bottom exponent is the accumulated remainder,
    // equal to delta(1) - 1
    if (!work.empty())
        throw normalization_error(
            "beta_expansion: polynomial is not normalized, its value at 1 is " +
            format_rational(delta.value_at_1()) + " instead of 1");
    return quotient;
}

} // namespace torspan
