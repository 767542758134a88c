#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "posray/errors.hpp"
#include "posray/injection.hpp"
#include "posray/labelset.hpp"
#include "posray/lediagram.hpp"
#include "posray/legraph.hpp"
#include "posray/positroid.hpp"
#include "posray/rational.hpp"
#include "posray/rayleigh.hpp"

namespace posray {

// nlohmann::json keeps object keys sorted, which together with fraction
// strings gives byte-stable serialization.
using Json = nlohmann::json;

inline std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

// Schema check only; semantic validity is the job of validate().
inline LeDiagram parse_raw_diagram(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::exception& ex) {
        throw SyntaxError(std::string("diagram is not valid JSON: ") + ex.what());
    }
    if (!j.is_object()) throw SyntaxError("diagram must be a JSON object");
    for (const auto& [key, value] : j.items())
        if (key != "n" && key != "r" && key != "steps" && key != "dots")
            throw SyntaxError("unknown field \"" + key + "\"");
    for (const char* key : {"n", "r", "steps", "dots"})
        if (!j.contains(key)) throw SyntaxError(std::string("missing field \"") + key + "\"");
    if (!j["n"].is_number_integer() || !j["r"].is_number_integer())
        throw SyntaxError("fields \"n\" and \"r\" must be integers");
    if (!j["steps"].is_string()) throw SyntaxError("field \"steps\" must be a string");
    if (!j["dots"].is_array()) throw SyntaxError("field \"dots\" must be an array");

    LeDiagram d;
    d.n = j["n"].get<int>();
    d.r = j["r"].get<int>();
    d.steps = j["steps"].get<std::string>();
    for (const Json& entry : j["dots"]) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() ||
            !entry[1].is_number_integer())
            throw SyntaxError("each dot must be a two-element integer array [row, col]");
        d.dots.push_back({entry[0].get<int>(), entry[1].get<int>()});
    }
    std::sort(d.dots.begin(), d.dots.end());
    return d;
}

// Parse and enforce every diagram invariant; throws the typed error of the
// first violation found.
inline LeDiagram parse_diagram(const std::string& text) {
    LeDiagram d = parse_raw_diagram(text);
    const std::vector<Violation> violations = validate(d);
    if (!violations.empty()) {
        const Violation& v = violations.front();
        if (v.kind == ViolationKind::LeCondition) throw LeViolationError(v.row, v.col, v.message);
        throw ShapeError(v.message);
    }
    return d;
}

inline Json diagram_to_json(const LeDiagram& d) {
    LeDiagram copy = d;
    copy.normalize();
    Json j;
    j["n"] = copy.n;
    j["r"] = copy.r;
    j["steps"] = copy.steps;
    j["dots"] = Json::array();
    for (const Dot& dot : copy.dots) j["dots"].push_back({dot.row, dot.col});
    return j;
}

inline Json violations_to_json(const std::vector<Violation>& violations) {
    Json arr = Json::array();
    for (const Violation& v : violations) {
        Json entry;
        entry["message"] = v.message;
        switch (v.kind) {
            case ViolationKind::BadDimensions: entry["kind"] = "bad-dimensions"; break;
            case ViolationKind::StepsMismatch: entry["kind"] = "steps-mismatch"; break;
            case ViolationKind::BadStepChar: entry["kind"] = "bad-step-char"; break;
            case ViolationKind::RankMismatch: entry["kind"] = "rank-mismatch"; break;
            case ViolationKind::DuplicateDot: entry["kind"] = "duplicate-dot"; break;
            case ViolationKind::DotOutsideShape: entry["kind"] = "dot-outside-shape"; break;
            case ViolationKind::LeCondition: entry["kind"] = "le-violation"; break;
        }
        if (v.row != 0 || v.col != 0) entry["box"] = {v.row, v.col};
        arr.push_back(entry);
    }
    return arr;
}

inline Json labelset_to_json(LabelSet s) {
    Json arr = Json::array();
    for (int label : s.labels()) arr.push_back(label);
    return arr;
}

inline Json positroid_to_json(const Positroid& p) {
    Json j;
    j["n"] = p.n;
    j["r"] = p.r;
    j["bases"] = Json::array();
    for (LabelSet basis : p.bases) j["bases"].push_back(labelset_to_json(basis));
    return j;
}

inline Json weights_to_json(const WeightVector& w) {
    Json arr = Json::array();
    for (const Rational& q : w) arr.push_back(fraction_string(q));
    return arr;
}

inline Json rayleigh_report_to_json(const RayleighReport& rep) {
    Json j;
    j["pair"] = {rep.e, rep.f};
    j["trials"] = rep.trials;
    j["evaluations"] = rep.evaluations;
    j["min_delta"] = fraction_string(rep.min_delta);
    j["all_ones_delta"] = fraction_string(rep.all_ones_delta);
    j["violations"] = Json::array();
    for (const RayleighViolation& v : rep.violations) {
        Json entry;
        entry["delta"] = fraction_string(v.delta);
        entry["weights"] = weights_to_json(v.weights);
        j["violations"].push_back(entry);
    }
    return j;
}

inline Json balanced_report_to_json(const BalancedReport& rep) {
    Json j;
    j["minors_checked"] = rep.minors_checked;
    j["inequalities_checked"] = rep.inequalities_checked;
    j["violations"] = Json::array();
    for (const BalancedViolation& v : rep.violations) {
        Json entry;
        entry["contract"] = labelset_to_json(v.contracted);
        entry["delete"] = labelset_to_json(v.deleted);
        entry["pair"] = {v.e, v.f};
        entry["lhs"] = v.lhs;
        entry["rhs"] = v.rhs;
        j["violations"].push_back(entry);
    }
    return j;
}

inline Json trace_to_json(const LeGraph& g, const std::vector<TraceStep>& trace) {
    Json arr = Json::array();
    for (const TraceStep& step : trace) {
        Json entry;
        entry["at"] = g.vertex_name(step.at);
        entry["marker"] = color_name(step.moved_as);
        entry["via"] = g.edge_name(step.via_edge);
        entry["toggled"] = step.toggled;
        arr.push_back(entry);
    }
    return arr;
}

inline Json verify_report_to_json(const VerifyReport& rep) {
    Json j;
    j["pair"] = {rep.e, rep.f};
    j["domain"] = rep.domain_size;
    j["codomain"] = rep.codomain_size;
    j["distinct_images"] = rep.distinct_images;
    j["runs"] = rep.runs;
    j["max_steps"] = rep.max_steps;
    j["step_guard"] = rep.step_guard;
    j["failures"] = Json::array();
    for (const InjectionFailure& fail : rep.failures) {
        Json entry;
        entry["b1"] = labelset_to_json(fail.b1);
        entry["b2"] = labelset_to_json(fail.b2);
        entry["reason"] = fail.reason;
        j["failures"].push_back(entry);
    }
    if (rep.alternate_checked) j["alternate_differences"] = rep.alternate_differences;
    return j;
}

}  // namespace posray
