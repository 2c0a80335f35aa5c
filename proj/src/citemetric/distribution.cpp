#include "citemetric/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace citemetric {

ClusterHistogram cluster_size_histogram(const ClusterSet& clusters) {
    ClusterHistogram hist;
    hist.cited_id = clusters.cited_id;
    for (const CitationCluster& cluster : clusters.clusters) {
        hist.bins[cluster.size()] += 1;
        hist.total_groups += 1;
        hist.total_citations += cluster.size();
    }
    return hist;
}

TailStats tail_statistics(const ClusterHistogram& histogram) {
    if (histogram.bins.empty())
        fail(errc::empty_histogram, "histogram for \"" + histogram.cited_id + "\" has no bins");

    TailStats stats;
    stats.max_size = histogram.bins.rbegin()->first;

    auto singleton = histogram.bins.find(1);
    long long singletons = singleton == histogram.bins.end() ? 0 : singleton->second;
    stats.singleton_fraction =
        static_cast<double>(singletons) / static_cast<double>(histogram.total_groups);

    // Complementary cumulative counts, walked from the largest size down.
    std::vector<long long> at_least(static_cast<std::size_t>(stats.max_size) + 2, 0);
    for (const auto& [size, count] : histogram.bins)
        at_least[static_cast<std::size_t>(size)] += count;
    for (int s = stats.max_size - 1; s >= 1; --s)
        at_least[static_cast<std::size_t>(s)] += at_least[static_cast<std::size_t>(s) + 1];
    stats.ccdf.reserve(static_cast<std::size_t>(stats.max_size));
    for (int s = 1; s <= stats.max_size; ++s)
        stats.ccdf.emplace_back(s, static_cast<double>(at_least[static_cast<std::size_t>(s)]) /
                                       static_cast<double>(histogram.total_groups));

    if (histogram.bins.size() >= 3) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        double n = static_cast<double>(histogram.bins.size());
        for (const auto& [size, count] : histogram.bins) {
            double x = std::log(static_cast<double>(size));
            double y = std::log(static_cast<double>(count));
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        double denom = n * sxx - sx * sx;
        if (denom > 0.0) stats.loglog_slope = (n * sxy - sx * sy) / denom;
    }
    return stats;
}

PlotFormat parse_plot_format(std::string_view text) {
    if (text == "table") return PlotFormat::table;
    if (text == "svg") return PlotFormat::svg;
    fail(errc::unsupported_format,
         "unsupported plot format \"" + std::string(text) + "\" (expected table or svg)");
}

namespace {

std::string emit_table(const ClusterHistogram& histogram) {
    std::string out = "size\tcount\n";
    for (const auto& [size, count] : histogram.bins)
        out += std::to_string(size) + "\t" + std::to_string(count) + "\n";
    return out;
}

std::string emit_svg(const ClusterHistogram& histogram) {
    constexpr int bar_width = 24;
    constexpr int bar_gap = 8;
    constexpr int chart_height = 220;
    constexpr int margin_left = 48;
    constexpr int margin_bottom = 36;
    constexpr int margin_top = 16;

    int n = static_cast<int>(histogram.bins.size());
    int width = margin_left + std::max(n, 1) * (bar_width + bar_gap) + bar_gap;
    int height = margin_top + chart_height + margin_bottom;
    int max_count = 1;
    for (const auto& [size, count] : histogram.bins) max_count = std::max(max_count, count);

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
           "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " +
           std::to_string(width) + " " + std::to_string(height) + "\">\n";
    out += "  <title>Cluster sizes for " + histogram.cited_id + "</title>\n";
    int axis_y = margin_top + chart_height;
    out += "  <line x1=\"" + std::to_string(margin_left) + "\" y1=\"" + std::to_string(axis_y) +
           "\" x2=\"" + std::to_string(width - bar_gap) + "\" y2=\"" + std::to_string(axis_y) +
           "\" stroke=\"black\"/>\n";
    out += "  <line x1=\"" + std::to_string(margin_left) + "\" y1=\"" +
           std::to_string(margin_top) + "\" x2=\"" + std::to_string(margin_left) + "\" y2=\"" +
           std::to_string(axis_y) + "\" stroke=\"black\"/>\n";

    int i = 0;
    for (const auto& [size, count] : histogram.bins) {
        int bar_height = static_cast<int>(
            std::lround(static_cast<double>(count) / max_count * chart_height));
        bar_height = std::max(bar_height, 1);
        int x = margin_left + bar_gap + i * (bar_width + bar_gap);
        int y = axis_y - bar_height;
        out += "  <rect class=\"bar\" x=\"" + std::to_string(x) + "\" y=\"" + std::to_string(y) +
               "\" width=\"" + std::to_string(bar_width) + "\" height=\"" +
               std::to_string(bar_height) + "\" fill=\"#4878a8\"/>\n";
        out += "  <text x=\"" + std::to_string(x + bar_width / 2) + "\" y=\"" +
               std::to_string(axis_y + 16) +
               "\" text-anchor=\"middle\" font-size=\"12\">" + std::to_string(size) +
               "</text>\n";
        out += "  <text x=\"" + std::to_string(x + bar_width / 2) + "\" y=\"" +
               std::to_string(y - 4) + "\" text-anchor=\"middle\" font-size=\"11\">" +
               std::to_string(count) + "</text>\n";
        ++i;
    }
    out += "  <text x=\"" + std::to_string(margin_left + (width - margin_left) / 2) + "\" y=\"" +
           std::to_string(height - 6) +
           "\" text-anchor=\"middle\" font-size=\"12\">cluster size</text>\n";
    out += "</svg>\n";
    return out;
}

} // namespace

std::string emit_plot_data(const ClusterHistogram& histogram, PlotFormat format) {
    switch (format) {
        case PlotFormat::table: return emit_table(histogram);
        case PlotFormat::svg: return emit_svg(histogram);
    }
    fail(errc::unsupported_format, "unsupported plot format");
}

ClusterHistogram parse_plot_table(std::string_view text, std::string cited_id) {
    ClusterHistogram hist;
    hist.cited_id = std::move(cited_id);

    std::size_t pos = 0;
    bool saw_header = false;
    std::size_t line_no = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos
                                                                              : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty()) continue;
        if (!saw_header) {
            if (line != "size\tcount")
                fail(errc::malformed_document, "plot table must start with \"size\\tcount\"");
            saw_header = true;
            continue;
        }
        std::size_t tab = line.find('\t');
        if (tab == std::string_view::npos)
            fail(errc::malformed_document,
                 "plot table line " + std::to_string(line_no) + " has no tab separator");
        int size = std::atoi(std::string(line.substr(0, tab)).c_str());
        int count = std::atoi(std::string(line.substr(tab + 1)).c_str());
        if (size < 1 || count < 1)
            fail(errc::malformed_document,
                 "plot table line " + std::to_string(line_no) + " has non-positive entries");
        hist.bins[size] += count;
        hist.total_groups += count;
        hist.total_citations += static_cast<long long>(size) * count;
    }
    if (!saw_header) fail(errc::malformed_document, "plot table is empty");
    return hist;
}

} // namespace citemetric
