#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "citemetric/corpus.hpp"

namespace citemetric {

// ---------------------------------------------------------------------------
// Deterministic synthetic corpora
// ---------------------------------------------------------------------------

// xorshift64* (Marsaglia xorshift with a multiplicative finalizer). The
// update, applied to the 64-bit state x, is
//
//   x ^= x >> 12;  x ^= x << 25;  x ^= x >> 27;  output = x * 0x2545F4914F6CDD1D
//
// The state must be non-zero, so seed 0 is replaced by 0x9E3779B97F4A7C15.
// Fixing the algorithm keeps generated corpora byte-identical across
// platforms and language ports.
class Xorshift64Star {
public:
    explicit Xorshift64Star(std::uint64_t seed) noexcept
        : state_(seed == 0 ? 0x9E3779B97F4A7C15ULL : seed) {}

    std::uint64_t next() noexcept {
        state_ ^= state_ >> 12;
        state_ ^= state_ << 25;
        state_ ^= state_ >> 27;
        return state_ * 0x2545F4914F6CDD1DULL;
    }

    // Uniform in [0, 1), 53 bits of precision.
    double next_unit() noexcept {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

private:
    std::uint64_t state_;
};

struct PowerLawSpec {
    double exponent = 2.0; // P(size = s) proportional to s^-exponent
    int max_size = 50;
};

struct SynthConfig {
    std::uint64_t seed = 1;
    // Minimum total paper count; the corpus is padded with standalone filler
    // papers (own group, no citations) up to this count.
    int target_paper_count = 1;
    // Number of citing groups to sample when power_law is used; with
    // explicit_sizes it is implied by the multiset.
    int group_count = 0;
    std::map<int, int> explicit_sizes; // cluster size -> number of groups
    std::optional<PowerLawSpec> power_law;
    bool has_explicit_sizes = false;
    std::array<double, category_count> category_mix{}; // sums to 1
    double annotation_coverage = 1.0;                  // fraction of edges annotated
    std::string target_id = "TARGET";
};

// Config file: JSON with keys `seed`, `target_paper_count?`, `target_id?`,
// `group_count?`, exactly one of `cluster_sizes` (object mapping size ->
// group count) or `power_law` ({exponent, max_size}), `category_mix?`
// (object a..g, default uniform) and `annotation_coverage?` (default 1).
// JSON syntax errors throw malformed_document; everything else that is wrong
// throws invalid_config.
SynthConfig parse_synth_config(std::string_view text, std::string source_name = "<config>");
SynthConfig load_synth_config_file(const std::string& path);

// One designated target paper plus, per group, exactly the drawn number of
// citing papers, each with one edge to the target. Group membership is
// realized through explicit group_label fields. Identical configs yield
// byte-identical serialized corpora. Throws Error(invalid_config).
Corpus generate_corpus(const SynthConfig& config);

} // namespace citemetric
