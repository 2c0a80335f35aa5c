#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "citemetric/grouping.hpp"

namespace citemetric {

// ---------------------------------------------------------------------------
// Cluster-size distributions (the long-tail view of a paper's citers)
// ---------------------------------------------------------------------------

struct ClusterHistogram {
    std::string cited_id;
    std::map<int, int> bins; // cluster size -> number of groups with that size
    long long total_groups = 0;
    long long total_citations = 0; // sum of size * count
};

ClusterHistogram cluster_size_histogram(const ClusterSet& clusters);

struct TailStats {
    double singleton_fraction = 0.0; // share of groups citing exactly once
    int max_size = 0;
    // (size, fraction of groups with cluster size >= size) for every size
    // from 1 to max_size; non-increasing, and 1.0 at size 1.
    std::vector<std::pair<int, double>> ccdf;
    // Least-squares slope of log(count) against log(size) over occupied
    // sizes. A descriptive statistic only, no distribution fit is claimed;
    // absent when fewer than 3 distinct sizes exist.
    std::optional<double> loglog_slope;
};

// Throws Error(empty_histogram) when the histogram has no bins.
TailStats tail_statistics(const ClusterHistogram& histogram);

enum class PlotFormat { table, svg };

// Accepts "table" and "svg"; anything else throws Error(unsupported_format).
PlotFormat parse_plot_format(std::string_view text);

// table: tab-separated `size<TAB>count` rows sorted ascending under a
// `size\tcount` header, LF line endings. svg: a standalone bar chart with
// one bar per occupied size. Both byte-deterministic.
std::string emit_plot_data(const ClusterHistogram& histogram, PlotFormat format);

// Inverse of the table emission; emitting and re-parsing loses nothing.
ClusterHistogram parse_plot_table(std::string_view text, std::string cited_id = "");

} // namespace citemetric
