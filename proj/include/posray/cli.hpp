#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "posray/json_io.hpp"
#include "posray/posray.hpp"

namespace posray::cli {

// Exit contract: 0 = success / property holds, 1 = violation or
// counterexample found, 2 = invalid input or usage error.
struct Outcome {
    int code = 0;
    Json payload;
    std::string text;
};

namespace detail {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SyntaxError("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline LabelSet parse_labels(const std::string& csv) {
    LabelSet out;
    if (csv.empty()) return out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const int label = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.add(label);
        } catch (const std::exception&) {
            throw SyntaxError("bad label list \"" + csv + "\": expected comma-separated integers");
        }
    }
    return out;
}

inline std::string join_labels(LabelSet s) {
    std::string out;
    for (int label : s.labels()) {
        if (!out.empty()) out += ' ';
        out += std::to_string(label);
    }
    return out;
}

inline std::string monomial_text(SparsePolynomial::Key key, int n) {
    std::string out;
    for (int label = 1; label <= n; ++label) {
        const int exp = SparsePolynomial::exponent(key, label);
        if (exp == 0) continue;
        if (!out.empty()) out += '*';
        out += "x" + std::to_string(label);
        if (exp > 1) out += "^" + std::to_string(exp);
    }
    return out.empty() ? "1" : out;
}

}  // namespace detail

inline Outcome cmd_validate(const std::string& file) {
    const LeDiagram d = parse_raw_diagram(detail::read_file(file));
    const std::vector<Violation> violations = validate(d);
    Outcome out;
    out.code = violations.empty() ? 0 : 1;
    out.payload["valid"] = violations.empty();
    out.payload["violations"] = violations_to_json(violations);
    if (violations.empty()) {
        out.text = "OK (0 violations)\n" + to_ascii(d);
    } else {
        for (const Violation& v : violations) out.text += v.message + "\n";
    }
    return out;
}

inline Outcome cmd_bases(const std::string& file) {
    const LeDiagram d = parse_diagram(detail::read_file(file));
    const Positroid p = enumerate_bases(build_le_graph(d));
    Outcome out;
    out.payload = positroid_to_json(p);
    out.payload["count"] = p.bases.size();
    out.text = "n=" + std::to_string(p.n) + " r=" + std::to_string(p.r) +
               " bases=" + std::to_string(p.bases.size()) + "\n";
    for (LabelSet basis : p.bases) out.text += detail::join_labels(basis) + "\n";
    return out;
}

inline Outcome cmd_minor(const std::string& file, const std::string& contract_csv,
                         const std::string& delete_csv) {
    const LeDiagram d = parse_diagram(detail::read_file(file));
    const Positroid p = enumerate_bases(build_le_graph(d));
    const LabelSet contracted = detail::parse_labels(contract_csv);
    const LabelSet deleted = detail::parse_labels(delete_csv);
    const std::vector<LabelSet> bases = minor(p, contracted, deleted);
    Outcome out;
    out.payload["contract"] = labelset_to_json(contracted);
    out.payload["delete"] = labelset_to_json(deleted);
    out.payload["count"] = bases.size();
    out.payload["bases"] = Json::array();
    for (LabelSet basis : bases) out.payload["bases"].push_back(labelset_to_json(basis));
    out.text = "minor contract=" + contracted.compact() + " delete=" + deleted.compact() +
               " count=" + std::to_string(bases.size()) + "\n";
    for (LabelSet basis : bases) out.text += detail::join_labels(basis) + "\n";
    return out;
}

inline Outcome cmd_rayleigh(const std::string& file, std::size_t trials, std::uint64_t seed,
                            bool include_zero) {
    const LeDiagram d = parse_diagram(detail::read_file(file));
    const Positroid p = enumerate_bases(build_le_graph(d));
    const std::vector<RayleighReport> reports = sample_rayleigh(p, trials, seed, !include_zero);
    std::size_t total_violations = 0;
    Outcome out;
    out.payload["reports"] = Json::array();
    for (const RayleighReport& rep : reports) {
        total_violations += rep.violations.size();
        out.payload["reports"].push_back(rayleigh_report_to_json(rep));
        out.text += "pair (" + std::to_string(rep.e) + "," + std::to_string(rep.f) +
                    "): min_delta " + rational_text(rep.min_delta) + ", " +
                    std::to_string(rep.violations.size()) + " violations\n";
    }
    out.payload["total_violations"] = total_violations;
    out.code = total_violations == 0 ? 0 : 1;
    out.text += total_violations == 0
                    ? "OK (0 violations)\n"
                    : "FOUND " + std::to_string(total_violations) + " violations\n";
    return out;
}

inline Outcome cmd_rayleigh_poly(const std::string& file, int e, int f) {
    const LeDiagram d = parse_diagram(detail::read_file(file));
    const Positroid p = enumerate_bases(build_le_graph(d));
    const SparsePolynomial poly = rayleigh_delta_poly(p, e, f);
    Outcome out;
    out.payload["pair"] = {e, f};
    out.payload["terms"] = Json::array();
    for (const auto& [key, coeff] : poly.terms()) {
        Json entry;
        entry["coefficient"] = coeff;
        entry["exponents"] = SparsePolynomial::exponents(key, p.n);
        out.payload["terms"].push_back(entry);
    }
    const bool nonneg = poly.all_coefficients_nonnegative();
    out.payload["nonnegative"] = nonneg;
    out.code = nonneg ? 0 : 1;
    out.text = "delta polynomial for (" + std::to_string(e) + "," + std::to_string(f) + "): " +
               std::to_string(poly.term_count()) + " terms\n";
    for (const auto& [key, coeff] : poly.terms())
        out.text += std::to_string(coeff) + " * " + detail::monomial_text(key, p.n) + "\n";
    out.text += nonneg ? "all coefficients nonnegative\n" : "NEGATIVE coefficient found\n";
    return out;
}

inline Outcome cmd_inject(const std::string& file, int e, int f, const std::string& b1_csv,
                          const std::string& b2_csv, bool with_trace) {
    const LeDiagram d = parse_diagram(detail::read_file(file));
    const LeGraph g = build_le_graph(d);
    const LabelSet b1 = detail::parse_labels(b1_csv);
    const LabelSet b2 = detail::parse_labels(b2_csv);
    const WalkResult result = run_injection(g, e, f, b1, b2);
    Outcome out;
    out.payload["e"] = e;
    out.payload["f"] = f;
    out.payload["input"] = {{"b1", labelset_to_json(b1)}, {"b2", labelset_to_json(b2)}};
    out.payload["output"] =
        {{"b1", labelset_to_json(result.b1)}, {"b2", labelset_to_json(result.b2)}};
    out.payload["start"] = {{"at", g.vertex_name(g.boundary_id(f))},
                            {"marker", color_name(result.start_color)}};
    out.payload["steps"] = result.trace.size();
    if (with_trace) out.payload["trace"] = trace_to_json(g, result.trace);
    out.text = "B1' = " + detail::join_labels(result.b1) + "\n" +
               "B2' = " + detail::join_labels(result.b2) + "\n" +
               "steps = " + std::to_string(result.trace.size()) + "\n";
    if (with_trace)
        for (const TraceStep& step : result.trace)
            out.text += std::string(color_name(step.moved_as)) + " -> " +
                        g.vertex_name(step.at) + " via " + g.edge_name(step.via_edge) +
                        (step.toggled ? " (toggled)" : "") + "\n";
    return out;
}

inline Outcome cmd_reverse(const std::string& file, int e, int f, const std::string& b1_csv,
                           const std::string& b2_csv, bool with_trace) {
    const LeDiagram d = parse_diagram(detail::read_file(file));
    const LeGraph g = build_le_graph(d);
    const LabelSet b1p = detail::parse_labels(b1_csv);
    const LabelSet b2p = detail::parse_labels(b2_csv);
    const ReverseResult result = run_reverse(g, e, f, b1p, b2p);
    Outcome out;
    out.payload["e"] = e;
    out.payload["f"] = f;
    out.payload["input"] = {{"b1", labelset_to_json(b1p)}, {"b2", labelset_to_json(b2p)}};
    out.payload["output"] =
        {{"b1", labelset_to_json(result.b1)}, {"b2", labelset_to_json(result.b2)}};
    out.payload["in_image"] = result.in_image;
    out.payload["steps"] = result.trace.size();
    out.payload["violations"] = Json::array();
    if (!result.in_image) {
        out.code = 1;
        Json entry;
        entry["kind"] = "not-in-image";
        entry["message"] = "reverse output lies outside P_ef x P^ef";
        out.payload["violations"].push_back(entry);
    }
    if (with_trace) out.payload["trace"] = trace_to_json(g, result.trace);
    out.text = "B1 = " + detail::join_labels(result.b1) + "\n" +
               "B2 = " + detail::join_labels(result.b2) + "\n" +
               (result.in_image ? "in image\n" : "NOT in image\n");
    return out;
}

inline Outcome cmd_verify_injection(const std::string& file, int e, int f, bool alt_families) {
    const LeDiagram d = parse_diagram(detail::read_file(file));
    const LeGraph g = build_le_graph(d);
    const Positroid p = enumerate_bases(g);
    std::vector<std::pair<int, int>> pairs;
    if (e != 0 && f != 0) {
        pairs.push_back({e, f});
    } else {
        for (int a = 1; a <= p.n; ++a)
            for (int b = 1; b <= p.n; ++b)
                if (a != b) pairs.push_back({a, b});
    }
    Outcome out;
    out.payload["reports"] = Json::array();
    std::size_t total_failures = 0;
    for (auto [pe, pf] : pairs) {
        const VerifyReport rep = verify_injection(g, p, pe, pf, alt_families);
        total_failures += rep.failures.size();
        out.payload["reports"].push_back(verify_report_to_json(rep));
        out.text += "pair (" + std::to_string(pe) + "," + std::to_string(pf) + "): domain " +
                    std::to_string(rep.domain_size) + ", codomain " +
                    std::to_string(rep.codomain_size) + ", distinct " +
                    std::to_string(rep.distinct_images) + ", failures " +
                    std::to_string(rep.failures.size());
        if (rep.alternate_checked)
            out.text += ", alternate-family differences " +
                        std::to_string(rep.alternate_differences);
        out.text += "\n";
    }
    out.payload["total_failures"] = total_failures;
    out.code = total_failures == 0 ? 0 : 1;
    out.text += total_failures == 0 ? "OK (0 failures)\n"
                                    : "FOUND " + std::to_string(total_failures) + " failures\n";
    return out;
}

inline Outcome cmd_balanced(const std::string& file) {
    const LeDiagram d = parse_diagram(detail::read_file(file));
    const Positroid p = enumerate_bases(build_le_graph(d));
    const BalancedReport rep = balanced_check(p);
    Outcome out;
    out.payload = balanced_report_to_json(rep);
    out.code = rep.violations.empty() ? 0 : 1;
    out.text = "minors checked: " + std::to_string(rep.minors_checked) +
               ", inequalities checked: " + std::to_string(rep.inequalities_checked) + "\n";
    out.text += rep.violations.empty()
                    ? "OK (0 violations)\n"
                    : "FOUND " + std::to_string(rep.violations.size()) + " violations\n";
    return out;
}

inline Outcome cmd_probe_strong(const std::string& file, int e, int f, std::size_t trials,
                                std::uint64_t seed) {
    const LeDiagram d = parse_diagram(detail::read_file(file));
    const Positroid p = enumerate_bases(build_le_graph(d));
    const RayleighReport rep = strong_probe(p, e, f, trials, seed);
    Outcome out;
    out.payload = rayleigh_report_to_json(rep);
    out.code = rep.violations.empty() ? 0 : 1;
    out.text = "pair (" + std::to_string(e) + "," + std::to_string(f) + "): min_delta' " +
               rational_text(rep.min_delta) + ", " + std::to_string(rep.violations.size()) +
               " violations\n";
    out.text += rep.violations.empty()
                    ? "OK (0 violations)\n"
                    : "FOUND " + std::to_string(rep.violations.size()) +
                          " violations (evidence only, not a disproof)\n";
    return out;
}

inline Outcome cmd_random(int n, int r, double density, std::uint64_t seed) {
    const LeDiagram d = random_diagram(n, r, density, seed);
    Outcome out;
    out.payload = diagram_to_json(d);
    out.text = to_ascii(d);
    return out;
}

// Parses argv (without the program name), runs the subcommand, and writes the
// rendered report to `out`. Deterministic given arguments and input files.
inline int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"positroid verification toolkit"};
    app.require_subcommand(1);

    std::string file, b1_csv, b2_csv, contract_csv, delete_csv, format = "json";
    int e = 0, f = 0, n = 0, r = 0;
    std::size_t trials = 100;
    std::uint64_t seed = 0;
    double density = 0.5;
    bool with_trace = false, include_zero = false, alt_families = false;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"json", "text"}));
    };
    auto add_file = [&](CLI::App* cmd) {
        cmd->add_option("file", file, "diagram JSON file")->required();
        add_format(cmd);
    };

    CLI::App* validate_cmd = app.add_subcommand("validate", "check diagram invariants");
    add_file(validate_cmd);

    CLI::App* bases_cmd = app.add_subcommand("bases", "enumerate positroid bases");
    add_file(bases_cmd);

    CLI::App* minor_cmd = app.add_subcommand("minor", "bases containing I and avoiding J");
    add_file(minor_cmd);
    minor_cmd->add_option("--i", contract_csv, "labels to contract (comma-separated)");
    minor_cmd->add_option("--j", delete_csv, "labels to delete (comma-separated)");

    CLI::App* rayleigh_cmd =
        app.add_subcommand("rayleigh", "sample the Rayleigh inequality over all pairs");
    add_file(rayleigh_cmd);
    rayleigh_cmd->add_option("--trials", trials, "number of weight vectors");
    rayleigh_cmd->add_option("--seed", seed, "RNG seed");
    rayleigh_cmd->add_flag("--include-zero", include_zero, "allow zero weight entries");

    CLI::App* poly_cmd =
        app.add_subcommand("rayleigh-poly", "coefficients of the Rayleigh difference polynomial");
    add_file(poly_cmd);
    poly_cmd->add_option("--e", e, "first label")->required();
    poly_cmd->add_option("--f", f, "second label")->required();

    CLI::App* inject_cmd = app.add_subcommand("inject", "run the marker-walk injection");
    add_file(inject_cmd);
    inject_cmd->add_option("--e", e, "label e")->required();
    inject_cmd->add_option("--f", f, "label f (marker start)")->required();
    inject_cmd->add_option("--b1", b1_csv, "basis containing e and f")->required();
    inject_cmd->add_option("--b2", b2_csv, "basis avoiding e and f")->required();
    inject_cmd->add_flag("--trace", with_trace, "include the marker trace");

    CLI::App* reverse_cmd = app.add_subcommand("reverse", "run the reverse marker walk");
    add_file(reverse_cmd);
    reverse_cmd->add_option("--e", e, "label e")->required();
    reverse_cmd->add_option("--f", f, "label f (marker start)")->required();
    reverse_cmd->add_option("--b1", b1_csv, "basis containing e, avoiding f")->required();
    reverse_cmd->add_option("--b2", b2_csv, "basis containing f, avoiding e")->required();
    reverse_cmd->add_flag("--trace", with_trace, "include the marker trace");

    CLI::App* verify_cmd =
        app.add_subcommand("verify-injection", "exhaustively verify the injection");
    add_file(verify_cmd);
    verify_cmd->add_option("--e", e, "label e (omit to run all ordered pairs)");
    verify_cmd->add_option("--f", f, "label f (omit to run all ordered pairs)");
    verify_cmd->add_flag("--alt-families", alt_families,
                         "re-run with reverse-lexicographic families and report differences");

    CLI::App* balanced_cmd = app.add_subcommand("balanced", "check balancedness of all minors");
    add_file(balanced_cmd);

    CLI::App* probe_cmd =
        app.add_subcommand("probe-strong", "probe the derivative-form difference at signed inputs");
    add_file(probe_cmd);
    probe_cmd->add_option("--e", e, "first label")->required();
    probe_cmd->add_option("--f", f, "second label")->required();
    probe_cmd->add_option("--trials", trials, "number of weight vectors");
    probe_cmd->add_option("--seed", seed, "RNG seed");

    CLI::App* random_cmd = app.add_subcommand("random", "generate a random Le-diagram");
    random_cmd->add_option("--n", n, "ground-set size")->required();
    random_cmd->add_option("--r", r, "rank")->required();
    random_cmd->add_option("--density", density, "dot probability before closure");
    random_cmd->add_option("--seed", seed, "RNG seed");
    add_format(random_cmd);

    std::vector<const char*> argv;
    argv.push_back("posray");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& ex) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& ex) {
        err << "usage error: " << ex.what() << "\n";
        return 2;
    }

    try {
        Outcome outcome;
        if (app.got_subcommand(validate_cmd)) outcome = cmd_validate(file);
        else if (app.got_subcommand(bases_cmd)) outcome = cmd_bases(file);
        else if (app.got_subcommand(minor_cmd)) outcome = cmd_minor(file, contract_csv, delete_csv);
        else if (app.got_subcommand(rayleigh_cmd))
            outcome = cmd_rayleigh(file, trials, seed, include_zero);
        else if (app.got_subcommand(poly_cmd)) outcome = cmd_rayleigh_poly(file, e, f);
        else if (app.got_subcommand(inject_cmd))
            outcome = cmd_inject(file, e, f, b1_csv, b2_csv, with_trace);
        else if (app.got_subcommand(reverse_cmd))
            outcome = cmd_reverse(file, e, f, b1_csv, b2_csv, with_trace);
        else if (app.got_subcommand(verify_cmd))
            outcome = cmd_verify_injection(file, e, f, alt_families);
        else if (app.got_subcommand(balanced_cmd)) outcome = cmd_balanced(file);
        else if (app.got_subcommand(probe_cmd)) outcome = cmd_probe_strong(file, e, f, trials, seed);
        else if (app.got_subcommand(random_cmd)) outcome = cmd_random(n, r, density, seed);
        else {
            err << "usage error: no subcommand\n";
            return 2;
        }
        if (format == "json")
            out << canonical_dump(outcome.payload);
        else
            out << outcome.text;
        return outcome.code;
    } catch (const Error& ex) {
        err << "error: " << ex.what() << "\n";
        return 2;
    }
}

}  // namespace posray::cli
