#pragma once

#include "hankelkit/bound_report.hpp"
#include "hankelkit/caratheodory.hpp"
#include "hankelkit/function_class.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace hankelkit {

enum class ModelKind { LZ, Herglotz };

struct SearchModel {
    ModelKind kind = ModelKind::LZ;
    int atoms = 4;            // Herglotz only
    bool full_phases = true;  // LZ only: full complex chart vs real slice

    static SearchModel lz(bool full_phases = true);
    static SearchModel herglotz(int atoms);
    std::string label() const;  // "lz" | "lz-real" | "herglotz:N"
};

struct SearchConfig {
    SearchModel model;
    // 0 = automatic, sized by dimension. Explicit counts snap down to the
    // nested ladders (2^k+1 interval points, 6*2^k angles) so a finer grid
    // always contains the coarser one's points.
    int grid_points_per_axis = 0;
    std::vector<int> grid_per_axis;  // optional per-axis override
    int restarts = 8;
    std::uint64_t seed = 0;
    double tol = 1e-6;
    int max_refine_iters = 200;
};

struct Axis {
    double lo = 0.0;
    double hi = 1.0;
    bool periodic = false;  // angle axis: grid covers [lo, hi), moves wrap
};

struct Box {
    std::vector<Axis> axes;
    int dim() const { return static_cast<int>(axes.size()); }
};

using Objective = std::function<double(const std::vector<double>&)>;

int ladder_round(int requested, bool periodic);

// Coarse grid scan, then compass refinement from the top `restarts` cells of
// every nesting depth plus `restarts` seeded random starts and any supplied
// warm starts. Deterministic for a given config; ties break toward the
// lexicographically smallest parameter vector. Evaluations may be chunked
// across threads; the reduction applies the same tie-break either way.
BoundReport maximize(const Objective& objective, const Box& box, const SearchConfig& cfg,
                     const std::vector<std::vector<double>>& warm_starts = {},
                     const std::optional<Rational>& paper_bound = std::nullopt);

// Parameter box for a model given how many c-coefficients the target
// functional consumes. LZ stops at c3.
Box model_box(const SearchModel& model, int c_count);

// Decode a parameter vector into the c-sequence it represents.
CSequence model_cseq(const SearchModel& model, const std::vector<double>& params, int c_count);

// Wire parametrization -> class map -> functional into maximize, attach the
// cited bound (the recomputed triangle ceiling for H3(1)), and classify.
BoundReport audit_class(FunctionClass cls, Functional fn, const SearchConfig& cfg);

// Measure-space images of the equality witnesses, used to warm-start
// Herglotz searches (needs atoms >= 3 for the cube-root measures).
std::vector<std::vector<double>> candidate_measure_params(FunctionClass cls, int atoms);

}  // namespace hankelkit
