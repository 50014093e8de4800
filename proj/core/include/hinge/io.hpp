#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hinge/ambiguity.hpp"
#include "hinge/curves.hpp"
#include "hinge/datagen.hpp"
#include "hinge/model.hpp"
#include "hinge/solver.hpp"
#include "hinge/stationary.hpp"

namespace hinge::io {

/// Schema tag stamped into every structured JSON report.
inline constexpr const char* kSchema = "hinge-landscape/1";

/// Shortest round-trip decimal with at least 17 significant digits.
std::string format_double(double value);

// --- samples ---------------------------------------------------------------

/// {"w1": [a, b, c], "w2": [d, e, f]}
std::string sample_to_json(const Sample& sample);
Sample sample_from_json(const std::string& text);

/// Accepts a single sample object, a bare array of them, or an object with
/// a "samples" array. Errors name the offending field.
SampleSet sample_set_from_json(const std::string& text);
std::string sample_set_to_json(const SampleSet& set);

/// Header w11,w12,w13,w21,w22,w23 then one row per sample.
void write_sample_set_csv(std::ostream& os, const SampleSet& set);
SampleSet read_sample_set_csv(std::istream& is);

/// Reads a sample file, JSON or CSV, decided by the first non-space byte.
SampleSet load_sample_set(const std::string& path);

// --- figure-ready exports ----------------------------------------------------

/// two_r1,two_r2,theta1,theta2,residual per traced point.
void write_curve_csv(std::ostream& os, const Sample& sample,
                     const std::vector<PatchPoint>& points);

/// k1,k2,theta1,theta2,parity_case,classification,hessian_det,h11.
void write_grid_csv(std::ostream& os, const Sample& sample,
                    const std::vector<GridPoint>& points);

/// two_r1,two_r2 for a canonical-space polyline (no sample attached).
void write_canonical_curve_csv(std::ostream& os, const std::vector<PatchPoint>& points);

/// theta1,theta2,objective,basin_count.
void write_minima_csv(std::ostream& os, const std::vector<Minimum>& minima);

// --- structured reports ------------------------------------------------------

std::string census_to_json(const PatternCensus& census);

std::string pair_report_to_json(const SamplePair& pair, const FalseMinimaReport& report);

std::string eval_report_to_json(double objective_value, const Gradient& gradient,
                                const Hessian& hessian, const HessianDet& det);

std::string minima_to_json(const std::vector<Minimum>& minima);

/// Verbose variant: clustered minima plus the full solve outcome per start.
std::string multistart_report_to_json(const MultistartReport& report);

/// theta1,theta2,objective rows for curve-intersection markers.
void write_false_minima_csv(std::ostream& os, const FalseMinimaReport& report);

std::string datagen_sidecar_to_json(const DatagenConfig& config, const GeneratedSet& set);

/// Parses a pair recipe {"q":..., "r":..., "b_s1":..., "lambda1_sq":...,
/// "a_beta":...} with optional {"a_w22", "b_w22", "base_alpha1",
/// "base_alpha2"}.
std::pair<PairRecipe, PairExtras> recipe_from_json(const std::string& text);

}  // namespace hinge::io
