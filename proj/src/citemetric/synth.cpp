#include "citemetric/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

#include "citemetric/error.hpp"

namespace citemetric {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void bad_config(const std::string& source, const std::string& msg) {
    fail(errc::invalid_config, source + ": " + msg);
}

double require_number(const json& v, const std::string& source, const std::string& key) {
    if (!v.is_number()) bad_config(source, "'" + key + "' must be a number");
    return v.get<double>();
}

int require_int(const json& v, const std::string& source, const std::string& key) {
    if (!v.is_number_integer()) bad_config(source, "'" + key + "' must be an integer");
    return v.get<int>();
}

std::string format_id(const char* pattern, int a, int b = -1) {
    char buf[64];
    if (b < 0)
        std::snprintf(buf, sizeof buf, pattern, a);
    else
        std::snprintf(buf, sizeof buf, pattern, a, b);
    return buf;
}

} // namespace

SynthConfig parse_synth_config(std::string_view text, std::string source_name) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(errc::malformed_document, source_name + ": " + e.what());
    }
    if (!doc.is_object()) bad_config(source_name, "top level must be an object");

    static const char* known[] = {"seed",           "target_paper_count",
                                  "target_id",      "group_count",
                                  "cluster_sizes",  "power_law",
                                  "category_mix",   "annotation_coverage"};
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        bool ok = false;
        for (const char* k : known)
            if (it.key() == k) ok = true;
        if (!ok) bad_config(source_name, "unknown key '" + it.key() + "'");
    }

    SynthConfig cfg;
    if (doc.contains("seed")) {
        const json& s = doc["seed"];
        if (!s.is_number_integer() && !s.is_number_unsigned())
            bad_config(source_name, "'seed' must be an integer");
        cfg.seed = s.get<std::uint64_t>();
    }
    if (doc.contains("target_id")) {
        if (!doc["target_id"].is_string()) bad_config(source_name, "'target_id' must be a string");
        cfg.target_id = doc["target_id"].get<std::string>();
        if (cfg.target_id.empty()) bad_config(source_name, "'target_id' must be non-empty");
    }
    if (doc.contains("target_paper_count")) {
        cfg.target_paper_count = require_int(doc["target_paper_count"], source_name, "target_paper_count");
        if (cfg.target_paper_count < 1)
            bad_config(source_name, "'target_paper_count' must be positive");
    }

    const bool has_sizes = doc.contains("cluster_sizes");
    const bool has_power = doc.contains("power_law");
    if (has_sizes == has_power)
        bad_config(source_name, "exactly one of 'cluster_sizes' and 'power_law' is required");

    if (has_sizes) {
        const json& sizes = doc["cluster_sizes"];
        if (!sizes.is_object()) bad_config(source_name, "'cluster_sizes' must be an object");
        cfg.has_explicit_sizes = true;
        int total_groups = 0;
        for (auto it = sizes.begin(); it != sizes.end(); ++it) {
            int size = 0;
            try {
                std::size_t used = 0;
                size = std::stoi(it.key(), &used);
                if (used != it.key().size()) size = 0;
            } catch (...) {
                size = 0;
            }
            if (size < 1) bad_config(source_name, "cluster size '" + it.key() + "' must be a positive integer");
            int count = require_int(it.value(), source_name, "cluster_sizes[" + it.key() + "]");
            if (count < 1) bad_config(source_name, "group count for size " + std::to_string(size) + " must be positive");
            cfg.explicit_sizes[size] = count;
            total_groups += count;
        }
        cfg.group_count = total_groups;
        if (doc.contains("group_count")) {
            int declared = require_int(doc["group_count"], source_name, "group_count");
            if (declared != total_groups)
                bad_config(source_name, "'group_count' contradicts 'cluster_sizes' (" +
                                            std::to_string(declared) + " vs " + std::to_string(total_groups) + ")");
        }
    } else {
        const json& pl = doc["power_law"];
        if (!pl.is_object()) bad_config(source_name, "'power_law' must be an object");
        PowerLawSpec spec;
        for (auto it = pl.begin(); it != pl.end(); ++it) {
            if (it.key() == "exponent")
                spec.exponent = require_number(it.value(), source_name, "power_law.exponent");
            else if (it.key() == "max_size")
                spec.max_size = require_int(it.value(), source_name, "power_law.max_size");
            else
                bad_config(source_name, "unknown key 'power_law." + it.key() + "'");
        }
        if (!(spec.exponent > 0) || !std::isfinite(spec.exponent))
            bad_config(source_name, "'power_law.exponent' must be positive and finite");
        if (spec.max_size < 1) bad_config(source_name, "'power_law.max_size' must be positive");
        cfg.power_law = spec;
        if (!doc.contains("group_count"))
            bad_config(source_name, "'group_count' is required with 'power_law'");
        cfg.group_count = require_int(doc["group_count"], source_name, "group_count");
        if (cfg.group_count < 1) bad_config(source_name, "'group_count' must be positive");
    }

    cfg.category_mix.fill(1.0 / static_cast<double>(category_count));
    if (doc.contains("category_mix")) {
        const json& mix = doc["category_mix"];
        if (!mix.is_object()) bad_config(source_name, "'category_mix' must be an object");
        cfg.category_mix.fill(0.0);
        for (auto it = mix.begin(); it != mix.end(); ++it) {
            auto cat = parse_category(it.key());
            if (!cat)
                bad_config(source_name, "'category_mix' key '" + it.key() + "' is not a category letter a..g");
            double p = require_number(it.value(), source_name, "category_mix." + it.key());
            if (p < 0 || !std::isfinite(p))
                bad_config(source_name, "'category_mix." + it.key() + "' must be non-negative");
            cfg.category_mix[static_cast<std::size_t>(*cat)] = p;
        }
        double sum = std::accumulate(cfg.category_mix.begin(), cfg.category_mix.end(), 0.0);
        if (std::abs(sum - 1.0) > 1e-9)
            bad_config(source_name, "'category_mix' must sum to 1");
    }

    if (doc.contains("annotation_coverage")) {
        cfg.annotation_coverage = require_number(doc["annotation_coverage"], source_name, "annotation_coverage");
        if (!(cfg.annotation_coverage >= 0.0 && cfg.annotation_coverage <= 1.0))
            bad_config(source_name, "'annotation_coverage' must lie in [0, 1]");
    }

    return cfg;
}

SynthConfig load_synth_config_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(errc::io, "cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) fail(errc::io, "read failure on config file: " + path);
    return parse_synth_config(buf.str(), path);
}

namespace {

// Draws one cluster size from the discrete distribution
// P(s) proportional to s^-exponent over 1..max_size, by inverse CDF lookup.
int draw_power_law_size(const std::vector<double>& cdf, double u) {
    auto it = std::lower_bound(cdf.begin(), cdf.end(), u);
    if (it == cdf.end()) return static_cast<int>(cdf.size());
    return static_cast<int>(it - cdf.begin()) + 1;
}

Category draw_category(const std::array<double, category_count>& mix, double u) {
    double acc = 0.0;
    for (std::size_t i = 0; i < category_count; ++i) {
        acc += mix[i];
        if (u < acc) return static_cast<Category>(i);
    }
    return Category::G;
}

} // namespace

Corpus generate_corpus(const SynthConfig& config) {
    if (config.target_id.empty()) fail(errc::invalid_config, "target_id must be non-empty");
    if (!config.has_explicit_sizes && !config.power_law)
        fail(errc::invalid_config, "one of explicit sizes or power_law is required");
    if (!config.has_explicit_sizes && config.group_count < 1)
        fail(errc::invalid_config, "group_count must be positive");
    if (!(config.annotation_coverage >= 0.0 && config.annotation_coverage <= 1.0))
        fail(errc::invalid_config, "annotation_coverage must lie in [0, 1]");
    double mix_sum = std::accumulate(config.category_mix.begin(), config.category_mix.end(), 0.0);
    if (std::abs(mix_sum - 1.0) > 1e-9) fail(errc::invalid_config, "category_mix must sum to 1");

    Xorshift64Star rng(config.seed);

    // Cluster sizes, one entry per citing group, in group order.
    std::vector<int> sizes;
    if (config.has_explicit_sizes) {
        for (const auto& [size, count] : config.explicit_sizes)
            for (int i = 0; i < count; ++i) sizes.push_back(size);
    } else {
        const PowerLawSpec& spec = *config.power_law;
        std::vector<double> cdf(static_cast<std::size_t>(spec.max_size));
        double total = 0.0;
        for (int s = 1; s <= spec.max_size; ++s)
            total += std::pow(static_cast<double>(s), -spec.exponent);
        double acc = 0.0;
        for (int s = 1; s <= spec.max_size; ++s) {
            acc += std::pow(static_cast<double>(s), -spec.exponent) / total;
            cdf[static_cast<std::size_t>(s) - 1] = acc;
        }
        cdf.back() = 1.0;
        sizes.reserve(static_cast<std::size_t>(config.group_count));
        for (int g = 0; g < config.group_count; ++g)
            sizes.push_back(draw_power_law_size(cdf, rng.next_unit()));
    }

    std::vector<PaperRecord> papers;
    std::vector<CitationEdge> edges;

    PaperRecord target;
    target.id = config.target_id;
    target.title = "Target paper";
    target.year = 2000;
    target.group_label = "G0000";
    target.authors.push_back({"Author G0000", normalize_author_key("Author G0000")});
    papers.push_back(std::move(target));

    for (std::size_t g = 0; g < sizes.size(); ++g) {
        const int group_num = static_cast<int>(g) + 1;
        const std::string label = format_id("G%04d", group_num);
        const std::string author = "Author " + label;
        for (int m = 0; m < sizes[g]; ++m) {
            PaperRecord p;
            p.id = format_id("P%04d_%03d", group_num, m);
            p.title = "Citing paper " + p.id;
            p.year = 2001 + (m % 20);
            p.group_label = label;
            p.authors.push_back({author, normalize_author_key(author)});
            papers.push_back(std::move(p));

            CitationEdge e;
            e.citing_id = papers.back().id;
            e.cited_id = config.target_id;
            if (rng.next_unit() < config.annotation_coverage) {
                e.category = draw_category(config.category_mix, rng.next_unit());
                e.weight = 1.0;
            }
            edges.push_back(std::move(e));
        }
    }

    int filler = 0;
    while (static_cast<int>(papers.size()) < config.target_paper_count) {
        PaperRecord p;
        p.id = format_id("F%04d", filler);
        p.title = "Filler paper " + p.id;
        p.year = 1990;
        p.group_label = format_id("F%04d", filler);
        const std::string author = "Author " + p.id;
        p.authors.push_back({author, normalize_author_key(author)});
        papers.push_back(std::move(p));
        ++filler;
    }

    Provenance prov;
    prov.source_path = "<synthetic>";
    return Corpus(std::move(papers), std::move(edges), std::move(prov));
}

} // namespace citemetric
