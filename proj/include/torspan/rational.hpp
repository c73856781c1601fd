#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>

#include "torspan/errors.hpp"

namespace torspan {

// Arbitrary precision throughout: torsion denominators grow quadratically in
// the group order and convolution products overflow fixed width quickly.
// Expression templates are off so arithmetic results are plain values that
// work with std::max, comparison macros and the like.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::backends::rational_adaptor<
                                      boost::multiprecision::cpp_int_backend<>>,
                                  boost::multiprecision::et_off>;

/** Build num/den in lowest terms with positive denominator. */
inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0)
        throw invalid_parameter_error("make_rational: zero denominator");
    // cpp_rational refuses a negative denominator, so normalize the sign here.
    if (den < 0)
        return Rational(-num, -den);
    return Rational(num, den);
}

/** Floor division of integers, exact for negative operands. */
inline Integer floor_div(const Integer& num, const Integer& den) {
    Integer q = num / den;                      // truncates toward zero
    if (q * den != num && ((num < 0) != (den < 0)))
        --q;
    return q;
}

inline Integer floor_of(const Rational& r) {
    return floor_div(numerator(r), denominator(r));
}

/** Canonical representative of r mod 1 in the interval [0, 1). */
inline Rational reduce_mod_1(const Rational& r) {
    return r - Rational(floor_of(r));
}

/** Render a rational as "num/den" in lowest terms, "0", or a bare integer. */
inline std::string format_rational(const Rational& r) {
    if (r == 0)
        return "0";
    if (denominator(r) == 1)
        return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

namespace detail {

inline Integer parse_integer_token(const std::string& tok, const std::string& whole) {
    std::size_t start = 0;
    bool negative = false;
    if (start < tok.size() && (tok[start] == '+' || tok[start] == '-')) {
        negative = tok[start] == '-';
        ++start;
    }
    if (start == tok.size())
        throw parse_error("parse_rational: missing digits in \"" + whole + "\"");
    for (std::size_t i = start; i < tok.size(); ++i)
        if (tok[i] < '0' || tok[i] > '9')
            throw parse_error("parse_rational: unexpected character '" +
                              std::string(1, tok[i]) + "' in \"" + whole + "\"");
    const Integer magnitude(tok.substr(start));
    return negative ? Integer(-magnitude) : magnitude;
}

} // namespace detail

/** Parse "num/den", "-num/den" or a bare integer; result is in lowest terms. */
inline Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos)
        return Rational(detail::parse_integer_token(text, text));
    const Integer num = detail::parse_integer_token(text.substr(0, slash), text);
    const std::string den_tok = text.substr(slash + 1);
    if (den_tok.find('/') != std::string::npos)
        throw parse_error("parse_rational: more than one '/' in \"" + text + "\"");
    const Integer den = detail::parse_integer_token(den_tok, text);
    if (den == 0)
        throw parse_error("parse_rational: zero denominator in \"" + text + "\"");
    return make_rational(num, den);
}

/**
 * A residue class in Q/Z, stored as its canonical representative in [0, 1).
 * The ordering is the circular order lifted at 0; it exists so residues can
 * be sorted and deduplicated deterministically.
 */
class QmodZ {
  public:
    QmodZ() : value_(0) {}
    explicit QmodZ(const Rational& r) : value_(reduce_mod_1(r)) {}

    const Rational& value() const { return value_; }

    QmodZ operator+(const QmodZ& o) const { return QmodZ(value_ + o.value_); }
    QmodZ operator-(const QmodZ& o) const { return QmodZ(value_ - o.value_); }
    QmodZ operator-() const { return QmodZ(-value_); }

    /** Integer multiple n·x in Q/Z. */
    QmodZ times(const Integer& n) const { return QmodZ(Rational(n) * value_); }

    bool operator==(const QmodZ& o) const { return value_ == o.value_; }
    bool operator<(const QmodZ& o) const { return value_ < o.value_; }

    std::string format() const { return format_rational(value_); }

  private:
    Rational value_;
};

} // namespace torspan
