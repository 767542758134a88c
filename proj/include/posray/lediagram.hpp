#pragma once

#include <algorithm>
#include <compare>
#include <string>
#include <vector>

#include "posray/errors.hpp"
#include "posray/labelset.hpp"
#include "posray/rng.hpp"

namespace posray {

// Box coordinate inside the Ferrers shape; row 1 is the top row, col 1 the
// leftmost column.
struct Dot {
    int row = 0;
    int col = 0;
    friend auto operator<=>(const Dot&, const Dot&) = default;
};

// A lattice path cut out of an (n-r) x r rectangle plus a dot filling.
// steps[k] is the step labelled k+1, read from the Northeast corner to the
// Southwest corner: 'V' for vertical, 'H' for horizontal.
struct LeDiagram {
    int n = 0;
    int r = 0;
    std::string steps;
    std::vector<Dot> dots;  // kept sorted and unique

    void normalize() {
        std::sort(dots.begin(), dots.end());
        dots.erase(std::unique(dots.begin(), dots.end()), dots.end());
    }

    friend bool operator==(const LeDiagram&, const LeDiagram&) = default;
};

enum class ViolationKind {
    BadDimensions,
    StepsMismatch,
    BadStepChar,
    RankMismatch,
    DuplicateDot,
    DotOutsideShape,
    LeCondition,
};

struct Violation {
    ViolationKind kind;
    int row = 0;  // box coordinates for dot/Le violations, 0 otherwise
    int col = 0;
    std::string message;
};

namespace detail {

inline bool steps_well_formed(const LeDiagram& d) {
    if (d.n < 1 || d.r < 0 || d.r > d.n) return false;
    if (static_cast<int>(d.steps.size()) != d.n) return false;
    int v = 0;
    for (char c : d.steps) {
        if (c == 'V')
            ++v;
        else if (c != 'H')
            return false;
    }
    return v == d.r;
}

}  // namespace detail

// Labels whose step is vertical; these nodes are the boundary basis B.
inline LabelSet boundary_basis(const LeDiagram& d) {
    LabelSet b;
    for (int i = 0; i < static_cast<int>(d.steps.size()); ++i)
        if (d.steps[i] == 'V') b.add(i + 1);
    return b;
}

// width(i) = number of horizontal steps after the i-th vertical step in label
// order; rows are indexed 1..r top-down. Requires well-formed steps.
inline std::vector<int> row_widths(const LeDiagram& d) {
    std::vector<int> widths;
    widths.reserve(static_cast<std::size_t>(d.r));
    int h_remaining = d.n - d.r;
    for (char c : d.steps) {
        if (c == 'V')
            widths.push_back(h_remaining);
        else
            --h_remaining;
    }
    return widths;
}

// Label of the vertical step of row i (1-based).
inline int v_label_of_row(const LeDiagram& d, int row) {
    int seen = 0;
    for (int k = 0; k < d.n; ++k)
        if (d.steps[k] == 'V' && ++seen == row) return k + 1;
    throw InvariantError("row has no vertical step");
}

// Label of the horizontal step of column j: the j-th H counted from the
// Southwest end (largest labels are the westmost columns).
inline int h_label_of_col(const LeDiagram& d, int col) {
    int seen = 0;
    for (int k = d.n - 1; k >= 0; --k)
        if (d.steps[k] == 'H' && ++seen == col) return k + 1;
    throw InvariantError("column has no horizontal step");
}

inline std::vector<Violation> validate(const LeDiagram& d) {
    std::vector<Violation> out;
    if (d.n < 1 || d.r < 0 || d.r > d.n) {
        out.push_back({ViolationKind::BadDimensions, 0, 0,
                       "require 1 <= n and 0 <= r <= n, got n=" + std::to_string(d.n) +
                           " r=" + std::to_string(d.r)});
        return out;
    }
    if (static_cast<int>(d.steps.size()) != d.n) {
        out.push_back({ViolationKind::StepsMismatch, 0, 0,
                       "steps has length " + std::to_string(d.steps.size()) +
                           ", expected n=" + std::to_string(d.n)});
        return out;
    }
    int v_count = 0;
    for (int k = 0; k < d.n; ++k) {
        char c = d.steps[k];
        if (c == 'V')
            ++v_count;
        else if (c != 'H') {
            out.push_back({ViolationKind::BadStepChar, 0, 0,
                           std::string("steps may contain only 'V' and 'H', found '") + c +
                               "' at label " + std::to_string(k + 1)});
            return out;
        }
    }
    if (v_count != d.r) {
        out.push_back({ViolationKind::RankMismatch, 0, 0,
                       "rank mismatch: steps has " + std::to_string(v_count) +
                           " vertical steps but r=" + std::to_string(d.r)});
        return out;
    }

    const std::vector<int> widths = row_widths(d);
    std::vector<std::vector<bool>> grid(static_cast<std::size_t>(d.r));
    for (int i = 0; i < d.r; ++i)
        grid[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(widths[static_cast<std::size_t>(i)]), false);

    for (std::size_t k = 0; k < d.dots.size(); ++k) {
        const Dot& dot = d.dots[k];
        if (k > 0 && d.dots[k - 1] == dot) {
            out.push_back({ViolationKind::DuplicateDot, dot.row, dot.col,
                           "duplicate dot (" + std::to_string(dot.row) + "," +
                               std::to_string(dot.col) + ")"});
            continue;
        }
        if (dot.row < 1 || dot.row > d.r || dot.col < 1 ||
            dot.col > widths[static_cast<std::size_t>(dot.row - 1)]) {
            out.push_back({ViolationKind::DotOutsideShape, dot.row, dot.col,
                           "dot (" + std::to_string(dot.row) + "," + std::to_string(dot.col) +
                               ") lies outside the shape"});
            continue;
        }
        grid[static_cast<std::size_t>(dot.row - 1)][static_cast<std::size_t>(dot.col - 1)] = true;
    }

    // Le-condition: an empty box with a dot above it in its column and a dot
    // to its left in its row is a violation.
    for (int i = 1; i <= d.r; ++i) {
        for (int j = 1; j <= widths[static_cast<std::size_t>(i - 1)]; ++j) {
            if (grid[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]) continue;
            bool above = false, left = false;
            for (int i2 = 1; i2 < i && !above; ++i2)
                above = j <= widths[static_cast<std::size_t>(i2 - 1)] &&
                        grid[static_cast<std::size_t>(i2 - 1)][static_cast<std::size_t>(j - 1)];
            for (int j2 = 1; j2 < j && !left; ++j2)
                left = grid[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j2 - 1)];
            if (above && left)
                out.push_back({ViolationKind::LeCondition, i, j,
                               "Le-violation at box (" + std::to_string(i) + "," +
                                   std::to_string(j) + ")"});
        }
    }
    return out;
}

// Least superset of `dots` closed under the Le-condition: while some empty box
// has a dot above and a dot to its left, fill it. Monotone, so the fixpoint is
// unique.
inline std::vector<Dot> le_closure(const std::vector<int>& widths, std::vector<Dot> dots) {
    const int rows = static_cast<int>(widths.size());
    std::vector<std::vector<bool>> grid(static_cast<std::size_t>(rows));
    for (int i = 0; i < rows; ++i)
        grid[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(widths[static_cast<std::size_t>(i)]), false);
    for (const Dot& dot : dots)
        grid[static_cast<std::size_t>(dot.row - 1)][static_cast<std::size_t>(dot.col - 1)] = true;

    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 1; i <= rows; ++i) {
            bool left = false;
            for (int j = 1; j <= widths[static_cast<std::size_t>(i - 1)]; ++j) {
                const bool here = grid[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
                if (!here && left) {
                    bool above = false;
                    for (int i2 = 1; i2 < i && !above; ++i2)
                        above = j <= widths[static_cast<std::size_t>(i2 - 1)] &&
                                grid[static_cast<std::size_t>(i2 - 1)][static_cast<std::size_t>(j - 1)];
                    if (above) {
                        grid[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = true;
                        changed = true;
                    }
                }
                left = left || grid[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
            }
        }
    }

    std::vector<Dot> out;
    for (int i = 1; i <= rows; ++i)
        for (int j = 1; j <= widths[static_cast<std::size_t>(i - 1)]; ++j)
            if (grid[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]) out.push_back({i, j});
    return out;
}

// Uniform lattice path, each box dotted with probability `density`, then the
// filling is closed under the Le-condition. Deterministic in the seed.
inline LeDiagram random_diagram(int n, int r, double density, std::uint64_t seed) {
    if (n < 1 || r < 0 || r > n) throw PreconditionError("random_diagram: need 1 <= n, 0 <= r <= n");
    SeededRng rng(seed);

    std::vector<int> labels(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) labels[static_cast<std::size_t>(i)] = i + 1;
    for (int i = 0; i < r; ++i)
        std::swap(labels[static_cast<std::size_t>(i)],
                  labels[static_cast<std::size_t>(i + rng.range(0, n - 1 - i))]);

    LeDiagram d;
    d.n = n;
    d.r = r;
    d.steps.assign(static_cast<std::size_t>(n), 'H');
    for (int i = 0; i < r; ++i) d.steps[static_cast<std::size_t>(labels[static_cast<std::size_t>(i)] - 1)] = 'V';

    const std::vector<int> widths = row_widths(d);
    const std::uint64_t threshold = SeededRng::probability_threshold(density);
    std::vector<Dot> dots;
    for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= widths[static_cast<std::size_t>(i - 1)]; ++j)
            if (rng.bernoulli(threshold)) dots.push_back({i, j});

    d.dots = le_closure(widths, std::move(dots));
    d.normalize();
    return d;
}

// Debug rendering: one text row per shape row, '*' dotted, '.' empty.
inline std::string to_ascii(const LeDiagram& d) {
    if (!detail::steps_well_formed(d)) return "<malformed diagram>";
    const std::vector<int> widths = row_widths(d);
    std::vector<std::string> rows;
    for (int i = 1; i <= d.r; ++i)
        rows.push_back(std::string(static_cast<std::size_t>(widths[static_cast<std::size_t>(i - 1)]), '.'));
    for (const Dot& dot : d.dots)
        if (dot.row >= 1 && dot.row <= d.r && dot.col >= 1 &&
            dot.col <= widths[static_cast<std::size_t>(dot.row - 1)])
            rows[static_cast<std::size_t>(dot.row - 1)][static_cast<std::size_t>(dot.col - 1)] = '*';
    std::string out;
    for (const std::string& row : rows) {
        out += row;
        out += '\n';
    }
    return out;
}

}  // namespace posray
