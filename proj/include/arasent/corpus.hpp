#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "arasent/textproc.hpp"

namespace arasent {

// Binary polarity; the corpus carries no neutral class.
enum class Polarity { Positive, Negative };

const char* to_string(Polarity p);
// Case-insensitive "positive"/"negative"; anything else throws Error(Label).
Polarity parse_polarity(const std::string& label);

struct Review {
    std::string id;
    std::string raw_text; // UTF-8, non-empty after trimming
    Polarity label = Polarity::Positive;
};

struct Corpus {
    std::string name;
    std::vector<Review> reviews;

    std::size_t size() const { return reviews.size(); }
    std::size_t count_label(Polarity p) const;
    // Content fingerprint over ids, texts and labels, order-sensitive.
    std::string content_hash() const;
};

struct SplitSpec {
    double train_fraction = 0.85;
    std::uint64_t seed = 0;
    bool stratified = true;
};

struct SplitResult {
    Corpus train;
    Corpus test;
};

struct CorpusStats {
    std::size_t n_positive = 0;
    std::size_t n_negative = 0;
    std::size_t min_tokens = 0;
    std::size_t max_tokens = 0;
    double mean_tokens = 0; // rounded to 2 decimals
};

// One JSON object {"id","text","label"} per line, UTF-8.
Corpus load_corpus(const std::filesystem::path& path);
Corpus parse_corpus(std::istream& in, const std::string& name);
void save_corpus(const Corpus& corpus, const std::filesystem::path& path);

// Train size is round-half-up(train_fraction * |corpus|); stratified splits
// apportion that total across labels by largest remainder. Original review
// order is preserved within each side.
SplitResult split(const Corpus& corpus, const SplitSpec& spec);

// Writes train/test corpus files plus a manifest recording seed and fraction.
void save_split(const SplitResult& result, const SplitSpec& spec,
                const std::filesystem::path& directory);

CorpusStats corpus_stats(const Corpus& corpus,
                         const NormalizationConfig& config = NormalizationConfig::defaults());

} // namespace arasent
