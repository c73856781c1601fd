#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "torspan/bounds.hpp"

namespace torspan {

inline constexpr const char* kVersionString = "torspan 0.1.0";
inline constexpr const char* kOrientationNote =
    "bounds are invariant under orientation reversal; each construction fixes the "
    "orientation for which its stored representative is valid";

/**
 * Everything reported about one torsion class: the invariants feeding the
 * bound (quadratic value, K residue, correction term) where the
 * construction provides them, and the resulting bounds.
 */
struct ClassReport {
    std::string class_name;
    std::int64_t order = 1;
    std::optional<QmodZ> q_value;
    std::optional<KResidue> k_residue;
    std::optional<std::string> correction; // rendered element whose values are spanned
    std::vector<std::string> support;      // rendered basic set actually spanned
    Rational lower_bound = Rational(0);
    std::optional<Rational> upper_bound;
    std::vector<std::string> notes;
};

/** A full run: manifold data plus one report per selected torsion class. */
struct OutputDocument {
    std::string manifold;
    std::string group;
    std::string torsion;
    std::vector<ClassReport> classes;
    std::string version = kVersionString;
    std::string orientation_note = kOrientationNote;
};

namespace detail {

// the per-report gates: bounds live in [0,1) and sandwich correctly
inline void check_report(const ClassReport& report) {
    if (report.lower_bound < 0 || !(report.lower_bound < 1))
        throw consistency_error("report: lower bound " +
                                format_rational(report.lower_bound) + " for class " +
                                report.class_name + " falls outside [0, 1)");
    if (report.upper_bound && report.lower_bound > *report.upper_bound)
        throw consistency_error("report: lower bound " +
                                format_rational(report.lower_bound) + " for class " +
                                report.class_name + " exceeds the upper bound " +
                                format_rational(*report.upper_bound));
}

inline std::vector<std::string> render_support(const AbelianGroup& H,
                                               const BasicSet& support) {
    std::vector<std::string> out;
    out.reserve(support.size());
    for (const auto& h : support)
        out.push_back(H.format_element(h));
    return out;
}

// lower bounds must agree on u and its inverse; violations are internal errors
inline void check_symmetry(const std::string& manifold,
                           const std::vector<std::pair<std::int64_t, Rational>>& bounds,
                           std::int64_t modulus) {
    for (const auto& [k, value] : bounds) {
        const std::int64_t mirror = (modulus - k) % modulus;
        for (const auto& [k2, value2] : bounds) {
            if (k2 == mirror && !(value == value2))
                throw consistency_error(
                    "report: " + manifold + " carries unequal bounds " +
                    format_rational(value) + " and " + format_rational(value2) +
                    " on the mutually inverse classes with exponents " +
                    std::to_string(k) + " and " + std::to_string(mirror));
        }
    }
}

} // namespace detail

/**
 * Per-class report for the lens space with parameters (p, q).  The classes
 * of the identity and of the two core circles (exponents +-1 and +-q mod p)
 * carry the exact value 0, reported as a matching upper bound.
 */
inline OutputDocument build_lens_document(std::int64_t p, std::int64_t q,
                                          std::optional<std::int64_t> selected_class,
                                          std::int64_t cap = kDefaultEnumerationCap) {
    const auto data = lens_torsion(p, q, cap);
    const auto& H = data.group;
    const auto t = H.generator(0);

    OutputDocument doc;
    doc.manifold = data.descriptor;
    doc.group = H.format();
    doc.torsion = data.tau.format();

    std::vector<std::int64_t> ks;
    if (selected_class)
        ks.push_back(((*selected_class % p) + p) % p);
    else
        for (std::int64_t k = 0; k < p; ++k)
            ks.push_back(k);

    const std::int64_t q_res = ((q % p) + p) % p;
    std::vector<std::pair<std::int64_t, Rational>> bound_table;
    for (const std::int64_t k : ks) {
        const auto u = H.pow(t, k);
        ClassReport report;
        report.class_name = H.format_element(u);
        report.order = p / std::gcd(p, k);
        report.q_value = quadratic_function(data, u);
        report.k_residue = k_residue(data, u);
        const auto a = correction_term(data, u, cap);
        report.correction = a.format();
        report.support = detail::render_support(H, a.support());
        report.lower_bound = spn_u(data.linking, u, a);
        if (k == 0) {
            report.upper_bound = Rational(0);
            report.notes.push_back("identity class: exact value 0");
        } else if (k == 1 || k == p - 1 || k == q_res || k == p - q_res) {
            report.upper_bound = Rational(0);
            report.notes.push_back(
                "core-circle class: a collapsing annulus gives the exact value 0");
        }
        detail::check_report(report);
        doc.classes.push_back(std::move(report));
        bound_table.emplace_back(k, doc.classes.back().lower_bound);
    }

    // the bound on a class always equals the bound on its inverse; verify
    // whichever mirror pairs the selection includes, and for a single
    // selected class compute the mirror on the side
    if (selected_class) {
        const std::int64_t k = bound_table.front().first;
        const std::int64_t mirror = (p - k) % p;
        bound_table.emplace_back(mirror, theta_lower_bound(data, H.pow(t, mirror), cap));
    }
    detail::check_symmetry(doc.manifold, bound_table, p);
    return doc;
}

/**
 * Report for p-surgery on a knot with Alexander polynomial delta: the
 * meridian class, its correction term (the Alexander quotient), the
 * pipeline lower bound, and when the genus is supplied the matching upper
 * bound and the equality verdict.
 */
inline OutputDocument build_knot_document(std::int64_t p, const LaurentPoly& delta,
                                          std::optional<std::int64_t> genus,
                                          std::int64_t cap = kDefaultEnumerationCap) {
    const auto data = knot_surgery_torsion(p, delta, cap);
    const auto& H = data.group;
    const auto u = H.generator(0);
    const auto bound = knot_surgery_lower_bound(p, delta, cap);

    OutputDocument doc;
    doc.manifold = data.descriptor;
    doc.group = H.format();
    doc.torsion = data.tau.format();

    ClassReport report;
    report.class_name = H.format_element(u);
    report.order = p;
    report.q_value = quadratic_function(data, u);
    report.k_residue = k_residue(data, u);
    const auto a = correction_term(data, u, cap);
    report.correction = a.format();
    report.support = detail::render_support(H, a.support());
    report.lower_bound = bound.lower;
    if (bound.shortcut_regime)
        report.notes.push_back("shortcut regime: the bound equals (span(delta) - 1)/p = " +
                               format_rational(bound.lower));
    if (genus) {
        const auto check = fibred_equality_check(p, delta, *genus, cap);
        report.upper_bound = check.upper;
        if (*genus == 0)
            report.notes.push_back("genus 0: exact value 0");
        else
            report.notes.push_back("upper bound (2g - 1)/p from a surface of genus " +
                                   std::to_string(*genus));
        if (check.equality)
            report.notes.push_back(
                "equality: lower and upper bounds meet, the value is exact");
    }
    detail::check_report(report);
    doc.classes.push_back(std::move(report));
    return doc;
}

/**
 * Report for surgery on a two-component link with torsion framing p and
 * Alexander factor f: for each selected torsion class u = u1^k, the span
 * of the linking values over the torsion support of (u - 1) f(u1, u2).
 */
inline OutputDocument build_link_document(std::int64_t p, const LaurentPoly2& f,
                                          std::optional<std::int64_t> selected_k,
                                          std::int64_t cap = kDefaultEnumerationCap) {
    const auto H = make_link_surgery_group(p);
    const auto L = link_surgery_linking(p);
    const std::int64_t n = p < 0 ? -p : p;
    const auto image = f.substitute(H, H.generator(0), H.generator(1));

    OutputDocument doc;
    doc.manifold = "link(p=" + std::to_string(p) + "; f = " + f.format() + ")";
    doc.group = H.format();
    doc.torsion = image.format();

    std::vector<std::int64_t> ks;
    if (selected_k)
        ks.push_back(((*selected_k % n) + n) % n);
    else
        for (std::int64_t k = 0; k < n; ++k)
            ks.push_back(k);

    std::vector<std::pair<std::int64_t, Rational>> bound_table;
    for (const std::int64_t k : ks) {
        const auto u = H.element({k}, {0});
        const auto a =
            (GroupRingElement::monomial(H, u) - GroupRingElement::one(H)) * image;
        BasicSet torsion_support;
        for (const auto& h : a.support())
            if (H.is_torsion(h))
                torsion_support.push_back(h);

        ClassReport report;
        report.class_name = H.format_element(u);
        report.order = n / std::gcd(n, k);
        report.correction = a.format();
        report.support = detail::render_support(H, torsion_support);
        report.lower_bound = spn_u(L, u, a);
        if (k == 0) {
            report.upper_bound = Rational(0);
            report.notes.push_back("identity class: exact value 0");
        }
        detail::check_report(report);
        doc.classes.push_back(std::move(report));
        bound_table.emplace_back(k, doc.classes.back().lower_bound);
    }
    if (selected_k) {
        const std::int64_t k = bound_table.front().first;
        const std::int64_t mirror = (n - k) % n;
        bound_table.emplace_back(mirror,
                                 link_surgery_lower_bound(p, f, H.element({mirror}, {0})));
    }
    detail::check_symmetry(doc.manifold, bound_table, n);
    return doc;
}

// ---------------------------------------------------------------------------
// rendering

namespace detail {

inline std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (const auto& part : parts) {
        if (!out.empty())
            out += sep;
        out += part;
    }
    return out;
}

inline std::string or_dash(const std::string& text) { return text.empty() ? "-" : text; }

} // namespace detail

/** Plain-text table; columns separated by " | ", one row per class. */
inline std::string render_text(const OutputDocument& doc) {
    std::string out;
    out += "manifold: " + doc.manifold + "\n";
    out += "group: " + doc.group + "\n";
    out += "torsion: " + doc.torsion + "\n";
    out += "version: " + doc.version + "\n";
    out += "orientation: " + doc.orientation_note + "\n";
    out += "\n";
    out += "class | order | q | K | parity | correction | support | lower | upper | notes\n";
    for (const auto& r : doc.classes) {
        std::vector<std::string> cells;
        cells.push_back(r.class_name);
        cells.push_back(std::to_string(r.order));
        cells.push_back(r.q_value ? r.q_value->format() : "-");
        cells.push_back(r.k_residue ? std::to_string(r.k_residue->value) + " mod " +
                                          std::to_string(r.k_residue->modulus)
                                    : "-");
        cells.push_back(r.k_residue ? (r.k_residue->odd() ? "odd" : "even") : "-");
        cells.push_back(r.correction ? *r.correction : "-");
        cells.push_back(detail::or_dash(detail::join(r.support, ";")));
        cells.push_back(format_rational(r.lower_bound));
        cells.push_back(r.upper_bound ? format_rational(*r.upper_bound) : "-");
        cells.push_back(detail::or_dash(detail::join(r.notes, "; ")));
        out += detail::join(cells, " | ") + "\n";
    }
    return out;
}

/** JSON document; fractions rendered as strings to stay exact. */
inline nlohmann::ordered_json to_json(const OutputDocument& doc) {
    nlohmann::ordered_json j;
    j["manifold"] = doc.manifold;
    j["group"] = doc.group;
    j["torsion"] = doc.torsion;
    j["classes"] = nlohmann::ordered_json::array();
    for (const auto& r : doc.classes) {
        nlohmann::ordered_json c;
        c["class"] = r.class_name;
        c["order"] = r.order;
        c["q"] = r.q_value ? nlohmann::ordered_json(r.q_value->format())
                           : nlohmann::ordered_json(nullptr);
        c["K"] = r.k_residue ? nlohmann::ordered_json(r.k_residue->value)
                             : nlohmann::ordered_json(nullptr);
        c["K_modulus"] = r.k_residue ? nlohmann::ordered_json(r.k_residue->modulus)
                                     : nlohmann::ordered_json(nullptr);
        c["parity"] = r.k_residue
                          ? nlohmann::ordered_json(r.k_residue->odd() ? "odd" : "even")
                          : nlohmann::ordered_json(nullptr);
        c["correction"] = r.correction ? nlohmann::ordered_json(*r.correction)
                                       : nlohmann::ordered_json(nullptr);
        c["support"] = r.support;
        c["lower"] = format_rational(r.lower_bound);
        c["upper"] = r.upper_bound ? nlohmann::ordered_json(format_rational(*r.upper_bound))
                                   : nlohmann::ordered_json(nullptr);
        c["notes"] = r.notes;
        j["classes"].push_back(std::move(c));
    }
    j["version"] = doc.version;
    j["orientation_note"] = doc.orientation_note;
    return j;
}

inline std::string render_json(const OutputDocument& doc) {
    return to_json(doc).dump(2) + "\n";
}

/**
 * CSV table: class,order,q,K,K_modulus,parity,support,lower,upper with "-"
 * for absent values and ";" joining the support cell.
 */
inline std::string render_csv(const OutputDocument& doc) {
    std::string out = "class,order,q,K,K_modulus,parity,support,lower,upper\n";
    for (const auto& r : doc.classes) {
        std::vector<std::string> cells;
        cells.push_back(r.class_name);
        cells.push_back(std::to_string(r.order));
        cells.push_back(r.q_value ? r.q_value->format() : "-");
        cells.push_back(r.k_residue ? std::to_string(r.k_residue->value) : "-");
        cells.push_back(r.k_residue ? std::to_string(r.k_residue->modulus) : "-");
        cells.push_back(r.k_residue ? (r.k_residue->odd() ? "odd" : "even") : "-");
        cells.push_back(detail::or_dash(detail::join(r.support, ";")));
        cells.push_back(format_rational(r.lower_bound));
        cells.push_back(r.upper_bound ? format_rational(*r.upper_bound) : "-");
        out += detail::join(cells, ",") + "\n";
    }
    return out;
}

inline std::string render(const OutputDocument& doc, const std::string& format) {
    if (format == "text")
        return render_text(doc);
    if (format == "json")
        return render_json(doc);
    if (format == "csv")
        return render_csv(doc);
    throw invalid_parameter_error("render: unknown format \"" + format +
                                  "\", expected text, json or csv");
}

} // namespace torspan
