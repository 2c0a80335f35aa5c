#pragma once

#include <span>
#include <string>

#include "citemetric/error.hpp"

namespace citemetric {

// ---------------------------------------------------------------------------
// Design-ideation measures (Shah-style), on the 0..10 scale
// ---------------------------------------------------------------------------

// Counts for one design feature within a solution set.
struct FeatureStat {
    std::string feature;
    long long designs_with_feature = 0;        // T: designs in the set having the feature
    long long designs_same_implementation = 0; // C: designs using the same implementation
    double weight = 1.0;                       // f: feature weight
};

// (T - C) / T * 10. A design always shares an implementation with itself, so
// C < 1 is rejected (invalid_counts), as is T < C; the result lives in
// [0, 10) and is 0 exactly when C equals T.
double feature_novelty_index(const FeatureStat& stat);

// Weighted sum of the feature novelty indices. Throws empty_feature_list.
double design_novelty(std::span<const FeatureStat> features);

// One abstraction level of a design description, ordered from the most
// conceptual (level 1) down to physical realization.
struct VarietyLevel {
    int level = 1;            // 1 = most conceptual
    double variety_index = 0; // V: weight assigned to the level
    long long branch_count = 0; // b: alternatives branching out at this level
};

// 10 * attribute_weight * (sum_k V_k * b_k) / MAX_V for a single measured
// attribute, where MAX_V = design_count * V_1 (every design implementing a
// different conceptual principle). Levels must be non-empty, start at level 1
// and be strictly ordered, with V > 0 and b >= 1. Throws empty_levels,
// nonpositive_design_count, invalid_counts.
double design_variety(std::span<const VarietyLevel> levels, double attribute_weight,
                      long long design_count);

} // namespace citemetric
