// Command-line front end: construct a manifold from parameters, compute
// per-torsion-class genus bounds, and print them as text, JSON or CSV.
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "torspan/report.hpp"

namespace {

struct Options {
    std::string format = "text";
    std::int64_t cap = torspan::kDefaultEnumerationCap;
};

void add_common(CLI::App* cmd, Options& opts) {
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--max-enumeration", opts.cap,
                    "largest torsion subgroup the tool will enumerate")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact lower and upper bounds for the genus function on torsion "
                 "classes of closed oriented 3-manifolds"};
    app.require_subcommand(1);

    // lens p q [--all | --class k]
    std::int64_t lens_p = 0, lens_q = 0, lens_class = 0;
    Options lens_opts;
    auto* lens = app.add_subcommand("lens", "lens space with parameters (p, q)");
    lens->add_option("p", lens_p, "order of the first homology")->required();
    lens->add_option("q", lens_q, "second lens parameter, coprime to p")->required();
    auto* lens_class_opt =
        lens->add_option("--class", lens_class, "report only the class t^k");
    auto* lens_all = lens->add_flag("--all", "report every torsion class (default)");
    lens_class_opt->excludes(lens_all);
    add_common(lens, lens_opts);

    // knot p --alexander SPEC [--genus g]
    std::int64_t knot_p = 0, knot_genus = 0;
    std::string alexander;
    Options knot_opts;
    auto* knot = app.add_subcommand("knot", "p-surgery on a knot");
    knot->add_option("p", knot_p, "surgery framing")->required();
    knot->add_option("--alexander", alexander,
                     "Alexander polynomial as exponent:coefficient pairs, e.g. "
                     "\"-1:1,0:-1,1:1\"")
        ->required();
    auto* genus_opt =
        knot->add_option("--genus", knot_genus, "knot genus, enables the upper bound");
    add_common(knot, knot_opts);

    // link p --f SPEC [--all | --k k]
    std::int64_t link_p = 0, link_k = 0;
    std::string f_spec;
    Options link_opts;
    auto* link = app.add_subcommand(
        "link", "surgery on a two-component link with framings (p, 0)");
    link->add_option("p", link_p, "torsion framing")->required();
    link->add_option("--f", f_spec,
                     "Alexander factor f(t1,t2) as e1,e2:coefficient triples, e.g. "
                     "\"0,0:1\"")
        ->required();
    auto* link_k_opt = link->add_option("--k", link_k, "report only the class u1^k");
    auto* link_all = link->add_flag("--all", "report every torsion class (default)");
    link_k_opt->excludes(link_all);
    add_common(link, link_opts);

    // span fractions...
    std::vector<std::string> fractions;
    auto* span = app.add_subcommand("span", "circular span of rational residues");
    span->add_option("fractions", fractions, "residues mod 1, e.g. 2/5 3/5");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (lens->parsed()) {
            std::optional<std::int64_t> selected;
            if (lens_class_opt->count() > 0)
                selected = lens_class;
            const auto doc =
                torspan::build_lens_document(lens_p, lens_q, selected, lens_opts.cap);
            std::cout << torspan::render(doc, lens_opts.format);
        } else if (knot->parsed()) {
            std::optional<std::int64_t> genus;
            if (genus_opt->count() > 0)
                genus = knot_genus;
            const auto delta = torspan::parse_laurent(alexander);
            const auto doc =
                torspan::build_knot_document(knot_p, delta, genus, knot_opts.cap);
            std::cout << torspan::render(doc, knot_opts.format);
        } else if (link->parsed()) {
            std::optional<std::int64_t> selected;
            if (link_k_opt->count() > 0)
                selected = link_k;
            const auto f = torspan::parse_laurent2(f_spec);
            const auto doc =
                torspan::build_link_document(link_p, f, selected, link_opts.cap);
            std::cout << torspan::render(doc, link_opts.format);
        } else if (span->parsed()) {
            std::vector<torspan::QmodZ> points;
            points.reserve(fractions.size());
            for (const auto& text : fractions)
                points.emplace_back(torspan::parse_rational(text));
            std::cout << torspan::format_rational(torspan::circular_span(points))
                      << "\n";
        }
        return 0;
    } catch (const torspan::consistency_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const torspan::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
