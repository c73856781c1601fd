#pragma once

#include <stdexcept>
#include <string>

namespace torspan {

/** Base class for every error raised by this library. */
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

/** Malformed textual input (fractions, polynomials, group elements). */
struct parse_error : error {
    explicit parse_error(const std::string& msg) : error(msg) {}
};

/** Rejected construction parameters (lens p,q; surgery framing; genus). */
struct invalid_parameter_error : error {
    explicit invalid_parameter_error(const std::string& msg) : error(msg) {}
};

/** Torsion subgroup too large to enumerate under the configured cap. */
struct enumeration_limit_error : error {
    explicit enumeration_limit_error(const std::string& msg) : error(msg) {}
};

// Mixing elements of structurally different groups, or asking a finite-order
// question of an infinite-order element.
struct structural_error : error {
    explicit structural_error(const std::string& msg) : error(msg) {}
};

/** Alexander polynomial fails its normalization (value 1 at 1, symmetry). */
struct normalization_error : error {
    explicit normalization_error(const std::string& msg) : error(msg) {}
};

// A linking form that is ill defined, asymmetric or degenerate.  Raised when
// a purported torsion representative does not induce a valid form.
struct linking_form_error : error {
    explicit linking_form_error(const std::string& msg) : error(msg) {}
};

/** Torsion representative whose quadratic values miss the residue lattice. */
struct torsion_consistency_error : error {
    explicit torsion_consistency_error(const std::string& msg) : error(msg) {}
};

/** Pairing assignment that does not cover the support it is applied to. */
struct pairing_error : error {
    explicit pairing_error(const std::string& msg) : error(msg) {}
};

// Two internal routes disagreed (pipeline vs shortcut, lower vs upper bound).
// Signals a defect, never a user mistake; the CLI maps it to its own exit code.
struct consistency_error : error {
    explicit consistency_error(const std::string& msg) : error(msg) {}
};

} // namespace torspan
