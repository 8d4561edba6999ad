#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace arasent {

// Normalization knobs for colloquial Arabic review text. Defaults give the
// fixed pipeline: compose -> char_map -> strip classes -> elongation
// collapse -> whitespace collapse; tokenize and per-token wa-strip follow.
struct NormalizationConfig {
    // Single-scalar rewrites applied before any stripping. Defaults fold
    // alef variants to bare alef, teh marbuta to heh, waw-hamza to waw.
    std::map<char32_t, char32_t> char_map;

    bool strip_punctuation = true;
    bool strip_digits = true;   // ASCII and Arabic-Indic
    bool strip_latin = true;
    bool strip_emoticons = true;

    // Longest run of one Arabic letter kept verbatim; longer runs collapse
    // to a single letter. 2 keeps legitimate doubling, kills elongation.
    int elongation_max_run = 2;

    // Leading waw is stripped from tokens of at least this many scalars.
    int strip_wa_min_len = 4;

    // Literal emoticon strings removed before the per-character pass.
    std::vector<std::string> emoticon_literals;

    static NormalizationConfig defaults();

    // Throws Error(Config) on bad values or a cyclic char_map.
    void validate() const;

    // char_map with chains followed to their terminal scalar.
    std::map<char32_t, char32_t> resolved_char_map() const;

    // Stable key-value form, also used for hashing and model metadata.
    std::map<std::string, std::string> to_kv() const;
    static NormalizationConfig from_kv(const std::map<std::string, std::string>& kv);

    std::string fingerprint() const;

    bool operator==(const NormalizationConfig&) const = default;
};

struct Token {
    std::string surface; // UTF-8, never empty, no whitespace
    int index = 0;       // 0-based position in the token sequence
};

// UTF-8 <-> scalar helpers. Invalid bytes decode to U+FFFD; normalize is a
// total function so decoding never throws.
std::u32string utf8_decode(std::string_view text);
std::string utf8_encode(const std::u32string& scalars);
std::size_t scalar_length(std::string_view utf8);

std::string normalize(std::string_view text, const NormalizationConfig& config);

std::vector<Token> tokenize(std::string_view text);

Token strip_wa_prefix(const Token& token, const NormalizationConfig& config);

// Full pipeline for one review: normalize, tokenize, wa-strip. The token
// surfaces produced here are what lexicons and features operate on.
std::vector<std::string> preprocess(std::string_view raw_text, const NormalizationConfig& config);

// Character classes used by the pipeline (exposed for tests).
bool is_arabic_letter(char32_t c);
bool is_arabic_diacritic(char32_t c); // tashkeel + tatweel + Quranic marks
bool is_any_digit(char32_t c);
bool is_latin_letter(char32_t c);
bool is_emoji(char32_t c);
bool is_punct_or_symbol(char32_t c);
bool is_space(char32_t c);

} // namespace arasent
