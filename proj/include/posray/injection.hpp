#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "posray/errors.hpp"
#include "posray/labelset.hpp"
#include "posray/legraph.hpp"
#include "posray/pathsearch.hpp"
#include "posray/positroid.hpp"

namespace posray {

enum class TokenColor : std::uint8_t { Blue, Green };

inline TokenColor other(TokenColor c) {
    return c == TokenColor::Blue ? TokenColor::Green : TokenColor::Blue;
}

inline const char* color_name(TokenColor c) { return c == TokenColor::Blue ? "blue" : "green"; }

// Edge coloring state: one token slot per color per edge. An edge may carry
// both colors, one token each, when the blue and green families share it.
struct ColoredConfig {
    std::vector<std::uint8_t> tokens;  // per edge id: bit 0 blue, bit 1 green

    static std::uint8_t bit(TokenColor c) { return c == TokenColor::Blue ? 1 : 2; }

    bool has(int eid, TokenColor c) const {
        return tokens[static_cast<std::size_t>(eid)] & bit(c);
    }
    void set(int eid, TokenColor c) { tokens[static_cast<std::size_t>(eid)] |= bit(c); }
    void clear(int eid, TokenColor c) {
        tokens[static_cast<std::size_t>(eid)] &= static_cast<std::uint8_t>(~bit(c));
    }

    friend bool operator==(const ColoredConfig&, const ColoredConfig&) = default;
};

// One marker move. `moved_as` is the marker's color during the move, before
// any toggle on arrival.
struct TraceStep {
    int at = 0;
    TokenColor moved_as = TokenColor::Blue;
    int via_edge = 0;
    bool toggled = false;
};

struct WalkResult {
    LabelSet b1;
    LabelSet b2;
    ColoredConfig config;
    std::vector<TraceStep> trace;
    TokenColor start_color = TokenColor::Blue;
};

struct ReverseResult : WalkResult {
    bool in_image = false;  // whether (b1, b2) landed back in P_ef x P^ef
};

// Blue tokens on the family representing b1, green on the family for b2;
// shared edges carry both tokens.
inline ColoredConfig initial_config(const LeGraph& g, LabelSet b1, LabelSet b2,
                                    FamilyOrder order = FamilyOrder::LexLeast) {
    ColoredConfig cfg;
    cfg.tokens.assign(static_cast<std::size_t>(g.edge_count()), 0);
    auto paint = [&](const PathFamily& family, TokenColor color) {
        for (const std::vector<int>& path : family.paths) {
            for (std::size_t k = 0; k + 1 < path.size(); ++k) {
                const int eid = g.find_edge(path[k], path[k + 1]);
                if (eid < 0) throw InvariantError("family path uses a missing edge");
                cfg.set(eid, color);
            }
        }
    };
    paint(canonical_family(g, b1, order), TokenColor::Blue);
    paint(canonical_family(g, b2, order), TokenColor::Green);
    return cfg;
}

// Reads a basis off a marker-free coloring: sources S and sinks T of the
// color's paths give (B \ S) u T. Token degrees must balance at every dot.
inline LabelSet basis_of_color(const LeGraph& g, const ColoredConfig& cfg, TokenColor color) {
    LabelSet sources, sinks;
    for (int v = 0; v < g.vertex_count(); ++v) {
        int in = 0, out = 0;
        for (int eid : g.in_edges(v))
            if (cfg.has(eid, color)) ++in;
        for (int eid : g.out_edges(v))
            if (cfg.has(eid, color)) ++out;
        const LeGraphVertex& vx = g.vertex(v);
        switch (vx.kind) {
            case NodeKind::InnerDot:
                if (in != out || in > 1)
                    throw MalformedConfigError("token degree violation at " + g.vertex_name(v));
                break;
            case NodeKind::VStep:
                if (out > 1) throw MalformedConfigError("token degree violation at " + g.vertex_name(v));
                if (out == 1) sources.add(vx.label);
                break;
            case NodeKind::HStep:
                if (in > 1) throw MalformedConfigError("token degree violation at " + g.vertex_name(v));
                if (in == 1) sinks.add(vx.label);
                break;
        }
    }
    if (sources.size() != sinks.size())
        throw MalformedConfigError("colored paths have unequal source and sink counts");
    return g.boundary_basis().minus(sources).united(sinks);
}

namespace detail {

inline bool vertex_touches_color(const LeGraph& g, const ColoredConfig& cfg, int v, TokenColor c) {
    for (int eid : g.in_edges(v))
        if (cfg.has(eid, c)) return true;
    for (int eid : g.out_edges(v))
        if (cfg.has(eid, c)) return true;
    return false;
}

// The marker walk shared by the forward and the reverse procedure. Semantics:
//   - the marker starts on f, colored like the unique token on f's edge;
//   - blue moves against edge flow and green with it (reverse_mode swaps
//     both directions);
//   - with two candidate edges, the one just traversed is excluded;
//   - on arrival, before the traversed edge flips, the marker toggles color
//     iff the arrival vertex touches both a blue and a green token (the
//     traversed edge still counting with its pre-move color);
//   - the traversed edge's token of the movement color flips to the other
//     color; the walk stops on reaching a boundary node.
inline WalkResult marker_walk(const LeGraph& g, int e, int f, ColoredConfig cfg,
                              bool reverse_mode) {
    if (e == f) throw PreconditionError("marker walk: e and f must be distinct");
    if (e < 1 || e > g.n() || f < 1 || f > g.n())
        throw PreconditionError("marker walk: labels out of range");

    const int e_vertex = g.boundary_id(e);
    const int f_vertex = g.boundary_id(f);

    // Boundary nodes have at most one graph edge; it must carry exactly one
    // token, which fixes the marker's starting color.
    int start_edge = -1;
    for (int eid : g.in_edges(f_vertex)) start_edge = eid;
    for (int eid : g.out_edges(f_vertex)) start_edge = eid;
    if (start_edge < 0 || cfg.tokens[static_cast<std::size_t>(start_edge)] == 0)
        throw MalformedConfigError("no colored edge at " + g.vertex_name(f_vertex));
    if (cfg.has(start_edge, TokenColor::Blue) && cfg.has(start_edge, TokenColor::Green))
        throw MalformedConfigError("both colors incident to " + g.vertex_name(f_vertex) +
                                   "; starting color is not unique");

    WalkResult result;
    result.start_color =
        cfg.has(start_edge, TokenColor::Blue) ? TokenColor::Blue : TokenColor::Green;

    TokenColor marker = result.start_color;
    int position = f_vertex;
    int last_edge = -1;
    const std::size_t step_guard = 4 * static_cast<std::size_t>(g.edge_count());

    while (true) {
        if (result.trace.size() >= step_guard)
            throw InvariantError("marker walk exceeded the 4x|edges| step guard");

        const bool with_flow = (marker == TokenColor::Green) != reverse_mode;
        int chosen = -1;
        int candidates = 0;
        int fresh = 0;  // candidates other than the edge just traversed
        for (int eid : with_flow ? g.out_edges(position) : g.in_edges(position)) {
            if (!cfg.has(eid, marker)) continue;
            ++candidates;
            if (eid != last_edge) {
                ++fresh;
                chosen = eid;
            }
        }
        if (candidates == 0)
            throw InvariantError("marker stuck at " + g.vertex_name(position) +
                                 ": no candidate edge");
        if (fresh == 0)
            throw InvariantError("only the just-traversed edge is available at " +
                                 g.vertex_name(position));
        if (fresh > 1)
            throw InvariantError("ambiguous candidate edges at " + g.vertex_name(position));

        const LeGraphEdge& edge = g.edge(chosen);
        const int arrival = with_flow ? edge.head : edge.tail;

        // Forward runs can reach neither e nor f. The reverse walk may stop
        // at e: that is the not-in-image case, reported by the caller.
        if (!reverse_mode && arrival == e_vertex)
            throw InvariantError("marker entered vertex e=" + g.vertex_name(e_vertex));
        if (arrival == f_vertex)
            throw InvariantError("marker returned to vertex f=" + g.vertex_name(f_vertex));

        const bool toggled = vertex_touches_color(g, cfg, arrival, TokenColor::Blue) &&
                             vertex_touches_color(g, cfg, arrival, TokenColor::Green);

        // Flip the moved token; its slot in the other color must be free.
        if (cfg.has(chosen, other(marker)))
            throw InvariantError("token multiplicity would exceed 1 on " + g.edge_name(chosen));
        cfg.clear(chosen, marker);
        cfg.set(chosen, other(marker));

        result.trace.push_back({arrival, marker, chosen, toggled});
        if (toggled) marker = other(marker);
        last_edge = chosen;
        position = arrival;
        if (g.is_boundary(position)) break;
    }

    result.b1 = basis_of_color(g, cfg, TokenColor::Blue);
    result.b2 = basis_of_color(g, cfg, TokenColor::Green);
    result.config = std::move(cfg);
    return result;
}

}  // namespace detail

inline WalkResult run_injection_config(const LeGraph& g, int e, int f, ColoredConfig cfg) {
    return detail::marker_walk(g, e, f, std::move(cfg), /*reverse_mode=*/false);
}

// Algorithm input (B1, B2) in P_ef x P^ef, represented by canonical families.
inline WalkResult run_injection(const LeGraph& g, int e, int f, LabelSet b1, LabelSet b2,
                                FamilyOrder order = FamilyOrder::LexLeast) {
    if (e == f) throw PreconditionError("run_injection: e and f must be distinct");
    if (!b1.contains(e) || !b1.contains(f))
        throw PreconditionError("run_injection: B1 must contain both e and f");
    if (b2.contains(e) || b2.contains(f))
        throw PreconditionError("run_injection: B2 must avoid both e and f");
    return run_injection_config(g, e, f, initial_config(g, b1, b2, order));
}

inline ReverseResult run_reverse_config(const LeGraph& g, int e, int f, ColoredConfig cfg) {
    ReverseResult result;
    static_cast<WalkResult&>(result) = detail::marker_walk(g, e, f, std::move(cfg),
                                                           /*reverse_mode=*/true);
    result.in_image = result.b1.contains(e) && result.b1.contains(f) && !result.b2.contains(e) &&
                      !result.b2.contains(f);
    return result;
}

// Reverse procedure on a pair from P^f_e x P^e_f given by bases; canonical
// families stand in for the colorings.
inline ReverseResult run_reverse(const LeGraph& g, int e, int f, LabelSet b1p, LabelSet b2p,
                                 FamilyOrder order = FamilyOrder::LexLeast) {
    if (e == f) throw PreconditionError("run_reverse: e and f must be distinct");
    if (!b1p.contains(e) || b1p.contains(f))
        throw PreconditionError("run_reverse: B1' must contain e and avoid f");
    if (!b2p.contains(f) || b2p.contains(e))
        throw PreconditionError("run_reverse: B2' must contain f and avoid e");
    return run_reverse_config(g, e, f, initial_config(g, b1p, b2p, order));
}

enum class FailureKind {
    WalkError,       // a walk raised an invariant or config error
    ImageMembership,  // output pair left P^f_e x P^e_f
    Multiset,        // B1 u B2 != B1' u B2' as multisets
    RoundTrip,       // reversing the output configuration missed the input
    PairCollision,   // two inputs mapped to one output basis pair
};

inline const char* failure_kind_name(FailureKind k) {
    switch (k) {
        case FailureKind::WalkError: return "walk-error";
        case FailureKind::ImageMembership: return "image-membership";
        case FailureKind::Multiset: return "multiset";
        case FailureKind::RoundTrip: return "round-trip";
        case FailureKind::PairCollision: return "pair-collision";
    }
    return "?";
}

struct InjectionFailure {
    FailureKind kind = FailureKind::WalkError;
    LabelSet b1;
    LabelSet b2;
    std::string reason;
};

struct VerifyReport {
    int e = 0;
    int f = 0;
    std::size_t domain_size = 0;
    std::size_t codomain_size = 0;
    std::size_t distinct_images = 0;
    std::size_t runs = 0;
    std::size_t max_steps = 0;
    std::size_t step_guard = 0;
    std::vector<InjectionFailure> failures;
    // Differences seen when re-running with reverse-lexicographic families;
    // findings about representing-family dependence, not failures.
    bool alternate_checked = false;
    std::size_t alternate_differences = 0;
};

// Exhaustive check of the injection on P_ef x P^ef: image membership in
// P^f_e x P^e_f, pairwise-distinct outputs, multiset preservation, and exact
// round-trip through the reverse walk at configuration level.
inline VerifyReport verify_injection(const LeGraph& g, const Positroid& p, int e, int f,
                                     bool check_alternate_families = false) {
    if (e == f) throw PreconditionError("verify_injection: e and f must be distinct");
    VerifyReport report;
    report.e = e;
    report.f = f;
    report.step_guard = 4 * static_cast<std::size_t>(g.edge_count());
    report.alternate_checked = check_alternate_families;

    std::vector<LabelSet> both, neither, with_e, with_f;
    for (LabelSet basis : p.bases) {
        const bool has_e = basis.contains(e), has_f = basis.contains(f);
        if (has_e && has_f) both.push_back(basis);
        if (!has_e && !has_f) neither.push_back(basis);
        if (has_e && !has_f) with_e.push_back(basis);
        if (!has_e && has_f) with_f.push_back(basis);
    }
    report.domain_size = both.size() * neither.size();
    report.codomain_size = with_e.size() * with_f.size();

    auto in_list = [](const std::vector<LabelSet>& list, LabelSet x) {
        return std::find(list.begin(), list.end(), x) != list.end();
    };

    std::map<std::pair<std::uint32_t, std::uint32_t>, std::pair<LabelSet, LabelSet>> images;
    for (LabelSet b1 : both) {
        for (LabelSet b2 : neither) {
            ++report.runs;
            const ColoredConfig start = initial_config(g, b1, b2);
            WalkResult fwd;
            try {
                fwd = run_injection_config(g, e, f, start);
            } catch (const Error& err) {
                report.failures.push_back({FailureKind::WalkError, b1, b2,
                                           std::string("forward walk: ") + err.what()});
                continue;
            }
            report.max_steps = std::max(report.max_steps, fwd.trace.size());

            const auto image_key = std::make_pair(fwd.b1.mask(), fwd.b2.mask());
            auto [it, inserted] = images.try_emplace(image_key, b1, b2);
            if (!inserted)
                report.failures.push_back(
                    {FailureKind::PairCollision, b1, b2,
                     "image (" + fwd.b1.compact() + ", " + fwd.b2.compact() +
                         ") already produced by (" + it->second.first.compact() + ", " +
                         it->second.second.compact() + ")"});

            if (!in_list(with_e, fwd.b1) || !in_list(with_f, fwd.b2))
                report.failures.push_back(
                    {FailureKind::ImageMembership, b1, b2, "image outside P^f_e x P^e_f"});
            if (b1.united(b2) != fwd.b1.united(fwd.b2) ||
                b1.intersected(b2) != fwd.b1.intersected(fwd.b2))
                report.failures.push_back(
                    {FailureKind::Multiset, b1, b2, "multiset union not preserved"});

            try {
                const ReverseResult back = run_reverse_config(g, e, f, fwd.config);
                report.max_steps = std::max(report.max_steps, back.trace.size());
                if (back.b1 != b1 || back.b2 != b2 || back.config != start)
                    report.failures.push_back(
                        {FailureKind::RoundTrip, b1, b2, "round trip did not recover the input"});
            } catch (const Error& err) {
                report.failures.push_back({FailureKind::WalkError, b1, b2,
                                           std::string("reverse walk: ") + err.what()});
            }

            if (check_alternate_families) {
                try {
                    const WalkResult alt =
                        run_injection(g, e, f, b1, b2, FamilyOrder::LexGreatest);
                    if (alt.b1 != fwd.b1 || alt.b2 != fwd.b2) ++report.alternate_differences;
                } catch (const Error&) {
                    ++report.alternate_differences;
                }
            }
        }
    }
    report.distinct_images = images.size();
    return report;
}

}  // namespace posray
