#include "arasent/textproc.hpp"

#include <algorithm>
#include <sstream>

#include "arasent/error.hpp"
#include "arasent/util.hpp"

namespace arasent {

namespace {

constexpr char32_t kReplacement = 0xFFFD;

struct Range {
    char32_t lo, hi;
    bool contains(char32_t c) const { return c >= lo && c <= hi; }
};

bool in_any(char32_t c, std::initializer_list<Range> ranges) {
    for (const auto& r : ranges)
        if (r.contains(c)) return true;
    return false;
}

} // namespace

bool is_space(char32_t c) {
    return (c >= 0x09 && c <= 0x0D) || c == 0x20 || c == 0x85 || c == 0xA0 ||
           c == 0x1680 || (c >= 0x2000 && c <= 0x200A) || c == 0x2028 ||
           c == 0x2029 || c == 0x202F || c == 0x205F || c == 0x3000;
}

bool is_arabic_letter(char32_t c) {
    return in_any(c, {{0x0620, 0x063F},
                      {0x0641, 0x064A},
                      {0x066E, 0x066F},
                      {0x0671, 0x06D3},
                      {0x06D5, 0x06D5},
                      {0x06EE, 0x06EF},
                      {0x06FA, 0x06FF},
                      {0x0750, 0x077F}});
}

bool is_arabic_diacritic(char32_t c) {
    // Tashkeel, tatweel, superscript alef, honorifics, Quranic annotation.
    return in_any(c, {{0x0610, 0x061A},
                      {0x0640, 0x0640},
                      {0x064B, 0x065F},
                      {0x0670, 0x0670},
                      {0x06D6, 0x06DC},
                      {0x06DF, 0x06E8},
                      {0x06EA, 0x06ED}});
}

bool is_any_digit(char32_t c) {
    return (c >= '0' && c <= '9') || (c >= 0x0660 && c <= 0x0669) ||
           (c >= 0x06F0 && c <= 0x06F9);
}

bool is_latin_letter(char32_t c) {
    if ((c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z')) return true;
    if (c == 0x00D7 || c == 0x00F7) return false; // multiplication/division signs
    return (c >= 0x00C0 && c <= 0x024F);
}

bool is_emoji(char32_t c) {
    return in_any(c, {{0x1F000, 0x1F0FF},
                      {0x1F1E6, 0x1F1FF},
                      {0x1F300, 0x1F5FF},
                      {0x1F600, 0x1F64F},
                      {0x1F680, 0x1F6FF},
                      {0x1F900, 0x1F9FF},
                      {0x1FA70, 0x1FAFF},
                      {0x2600, 0x26FF},
                      {0x2700, 0x27BF},
                      {0xFE0E, 0xFE0F},
                      {0x200D, 0x200D}});
}

bool is_punct_or_symbol(char32_t c) {
    if (c < 0x80) {
        return (c >= 0x21 && c <= 0x2F) || (c >= 0x3A && c <= 0x40) ||
               (c >= 0x5B && c <= 0x60) || (c >= 0x7B && c <= 0x7E);
    }
    return in_any(c, {{0x00A1, 0x00BF},
                      {0x00D7, 0x00D7},
                      {0x00F7, 0x00F7},
                      {0x0600, 0x0605}, // Arabic number signs (format)
                      {0x060C, 0x060D},
                      {0x061B, 0x061F},
                      {0x066A, 0x066D},
                      {0x06D4, 0x06D4},
                      {0x200B, 0x200F},
                      {0x2010, 0x2027},
                      {0x2030, 0x205E},
                      {0x2060, 0x206F},
                      {0x20A0, 0x20CF},
                      {0x2100, 0x2BFF},
                      {0x2E00, 0x2E7F},
                      {0x3001, 0x303F},
                      {0xFD3E, 0xFD3F},
                      {0xFE50, 0xFE6F},
                      {0xFF01, 0xFF0F},
                      {0xFF1A, 0xFF20},
                      {0xFF3B, 0xFF40},
                      {0xFF5B, 0xFF65},
                      {0xFFFD, 0xFFFD}});
}

std::u32string utf8_decode(std::string_view text) {
    std::u32string out;
    out.reserve(text.size());
    std::size_t i = 0;
    const auto n = text.size();
    while (i < n) {
        unsigned char b0 = static_cast<unsigned char>(text[i]);
        char32_t cp = 0;
        std::size_t len = 0;
        if (b0 < 0x80) {
            cp = b0;
            len = 1;
        } else if ((b0 & 0xE0) == 0xC0) {
            cp = b0 & 0x1F;
            len = 2;
        } else if ((b0 & 0xF0) == 0xE0) {
            cp = b0 & 0x0F;
            len = 3;
        } else if ((b0 & 0xF8) == 0xF0) {
            cp = b0 & 0x07;
            len = 4;
        } else {
            out.push_back(kReplacement);
            ++i;
            continue;
        }
        if (i + len > n) {
            out.push_back(kReplacement);
            ++i;
            continue;
        }
        bool ok = true;
        for (std::size_t k = 1; k < len; ++k) {
            unsigned char bk = static_cast<unsigned char>(text[i + k]);
            if ((bk & 0xC0) != 0x80) {
                ok = false;
                break;
            }
            cp = (cp << 6) | (bk & 0x3F);
        }
        if (!ok || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF) ||
            (len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) ||
            (len == 4 && cp < 0x10000)) {
            out.push_back(kReplacement);
            ++i;
            continue;
        }
        out.push_back(cp);
        i += len;
    }
    return out;
}

std::string utf8_encode(const std::u32string& scalars) {
    std::string out;
    out.reserve(scalars.size() * 2);
    for (char32_t cp : scalars) {
        if (cp < 0x80) {
            out.push_back(static_cast<char>(cp));
        } else if (cp < 0x800) {
            out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
        } else if (cp < 0x10000) {
            out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
        } else {
            out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
        }
    }
    return out;
}

std::size_t scalar_length(std::string_view utf8) {
    return utf8_decode(utf8).size();
}

NormalizationConfig NormalizationConfig::defaults() {
    NormalizationConfig c;
    c.char_map = {
        {0x0622, 0x0627}, // alef madda -> alef
        {0x0623, 0x0627}, // alef hamza above -> alef
        {0x0625, 0x0627}, // alef hamza below -> alef
        {0x0629, 0x0647}, // teh marbuta -> heh
        {0x0624, 0x0648}, // waw hamza -> waw
    };
    c.emoticon_literals = {":-)", ":-(", ":-D", ":-P", ":)", ":(",
                           ":D",  ":P",  ";)",  ":/",  "^_^", "<3",
                           "xD",  "XD",  ":'("};
    return c;
}

void NormalizationConfig::validate() const {
    if (elongation_max_run < 1)
        throw Error(ErrorKind::Config, "elongation_max_run must be >= 1");
    if (strip_wa_min_len < 2)
        throw Error(ErrorKind::Config, "strip_wa_min_len must be >= 2");
    resolved_char_map(); // throws on cycles
}

std::map<char32_t, char32_t> NormalizationConfig::resolved_char_map() const {
    std::map<char32_t, char32_t> resolved;
    for (const auto& [from, to] : char_map) {
        char32_t cur = to;
        std::size_t steps = 0;
        while (true) {
            auto it = char_map.find(cur);
            if (it == char_map.end() || it->second == cur) break;
            cur = it->second;
            if (++steps > char_map.size())
                throw Error(ErrorKind::Config, "char_map contains a rewrite cycle");
        }
        if (cur != from) resolved[from] = cur;
    }
    return resolved;
}

namespace {

// The canonical compositions relevant to Arabic: base letter + combining
// madda/hamza collapses to the precomposed form, so decomposed input
// normalizes identically to precomposed input.
char32_t compose_pair(char32_t base, char32_t mark) {
    if (mark == 0x0653 && base == 0x0627) return 0x0622;
    if (mark == 0x0654) {
        switch (base) {
            case 0x0627: return 0x0623;
            case 0x0648: return 0x0624;
            case 0x064A: return 0x0626;
            default: break;
        }
    }
    if (mark == 0x0655 && base == 0x0627) return 0x0625;
    return 0;
}

std::u32string compose_arabic(const std::u32string& in) {
    std::u32string out;
    out.reserve(in.size());
    for (char32_t c : in) {
        if (!out.empty()) {
            if (char32_t composed = compose_pair(out.back(), c)) {
                out.back() = composed;
                continue;
            }
        }
        out.push_back(c);
    }
    return out;
}

// Removes configured literal emoticons, repeating until no literal remains
// so a removal cannot splice a new literal together.
std::u32string remove_emoticon_literals(std::u32string text,
                                        const std::vector<std::u32string>& literals) {
    if (literals.empty()) return text;
    bool changed = true;
    while (changed) {
        changed = false;
        std::u32string out;
        out.reserve(text.size());
        std::size_t i = 0;
        while (i < text.size()) {
            std::size_t matched = 0;
            for (const auto& lit : literals) {
                if (lit.empty() || lit.size() > text.size() - i) continue;
                if (lit.size() > matched && text.compare(i, lit.size(), lit) == 0)
                    matched = lit.size();
            }
            if (matched > 0) {
                i += matched;
                changed = true;
            } else {
                out.push_back(text[i]);
                ++i;
            }
        }
        text = std::move(out);
    }
    return text;
}

} // namespace

std::string normalize(std::string_view text, const NormalizationConfig& config) {
    std::u32string scalars = compose_arabic(utf8_decode(text));

    if (config.strip_emoticons && !config.emoticon_literals.empty()) {
        std::vector<std::u32string> literals;
        literals.reserve(config.emoticon_literals.size());
        for (const auto& lit : config.emoticon_literals)
            literals.push_back(utf8_decode(lit));
        scalars = remove_emoticon_literals(std::move(scalars), literals);
    }

    const auto char_map = config.resolved_char_map();

    std::u32string kept;
    kept.reserve(scalars.size());
    for (char32_t c : scalars) {
        if (auto it = char_map.find(c); it != char_map.end()) c = it->second;
        if (is_space(c)) {
            kept.push_back(U' ');
            continue;
        }
        if (is_arabic_diacritic(c)) continue;
        if (config.strip_emoticons && is_emoji(c)) continue;
        if (config.strip_digits && is_any_digit(c)) continue;
        if (config.strip_latin && is_latin_letter(c)) continue;
        if (config.strip_punctuation && is_punct_or_symbol(c)) continue;
        kept.push_back(c);
    }

    // Collapse elongation runs of a single Arabic letter.
    std::u32string collapsed;
    collapsed.reserve(kept.size());
    const std::size_t max_run = static_cast<std::size_t>(config.elongation_max_run);
    std::size_t i = 0;
    while (i < kept.size()) {
        std::size_t j = i + 1;
        while (j < kept.size() && kept[j] == kept[i]) ++j;
        std::size_t run = j - i;
        if (is_arabic_letter(kept[i]) && run > max_run) run = 1;
        collapsed.append(run, kept[i]);
        i = j;
    }

    // Collapse whitespace runs and trim.
    std::u32string out;
    out.reserve(collapsed.size());
    for (char32_t c : collapsed) {
        if (c == U' ') {
            if (!out.empty() && out.back() != U' ') out.push_back(U' ');
        } else {
            out.push_back(c);
        }
    }
    if (!out.empty() && out.back() == U' ') out.pop_back();

    return utf8_encode(out);
}

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> tokens;
    std::u32string scalars = utf8_decode(text);
    std::u32string current;
    int index = 0;
    auto flush = [&] {
        if (!current.empty()) {
            tokens.push_back(Token{utf8_encode(current), index++});
            current.clear();
        }
    };
    for (char32_t c : scalars) {
        if (is_space(c)) {
            flush();
        } else {
            current.push_back(c);
        }
    }
    flush();
    return tokens;
}

Token strip_wa_prefix(const Token& token, const NormalizationConfig& config) {
    std::u32string scalars = utf8_decode(token.surface);
    if (scalars.size() >= static_cast<std::size_t>(config.strip_wa_min_len) &&
        scalars.front() == 0x0648) {
        return Token{utf8_encode(scalars.substr(1)), token.index};
    }
    return token;
}

std::vector<std::string> preprocess(std::string_view raw_text, const NormalizationConfig& config) {
    std::vector<std::string> out;
    for (const Token& t : tokenize(normalize(raw_text, config)))
        out.push_back(strip_wa_prefix(t, config).surface);
    return out;
}

namespace {

std::string encode_char_map(const std::map<char32_t, char32_t>& m) {
    std::string out;
    for (const auto& [from, to] : m) {
        if (!out.empty()) out.push_back(',');
        out += utf8_encode(std::u32string(1, from));
        out.push_back('=');
        out += utf8_encode(std::u32string(1, to));
    }
    return out;
}

std::map<char32_t, char32_t> decode_char_map(const std::string& spec) {
    std::map<char32_t, char32_t> m;
    if (trim(spec).empty()) return m;
    for (const auto& pair : split_on(spec, ',')) {
        auto eq = pair.find('=');
        if (eq == std::string::npos)
            throw Error(ErrorKind::Config, "char_map entry '" + pair + "' is not from=to");
        std::u32string from = utf8_decode(trim(pair.substr(0, eq)));
        std::u32string to = utf8_decode(trim(pair.substr(eq + 1)));
        if (from.size() != 1 || to.size() != 1)
            throw Error(ErrorKind::Config,
                        "char_map entry '" + pair + "' must map one scalar to one scalar");
        m[from[0]] = to[0];
    }
    return m;
}

std::string encode_literals(const std::vector<std::string>& lits) {
    std::string out;
    for (const auto& l : lits) {
        if (!out.empty()) out.push_back(',');
        out += l;
    }
    return out;
}

} // namespace

std::map<std::string, std::string> NormalizationConfig::to_kv() const {
    return {
        {"char_map", encode_char_map(char_map)},
        {"strip_punctuation", strip_punctuation ? "true" : "false"},
        {"strip_digits", strip_digits ? "true" : "false"},
        {"strip_latin", strip_latin ? "true" : "false"},
        {"strip_emoticons", strip_emoticons ? "true" : "false"},
        {"elongation_max_run", std::to_string(elongation_max_run)},
        {"strip_wa_min_len", std::to_string(strip_wa_min_len)},
        {"emoticon_literals", encode_literals(emoticon_literals)},
    };
}

NormalizationConfig NormalizationConfig::from_kv(const std::map<std::string, std::string>& kv) {
    NormalizationConfig c = defaults();
    auto parse_bool = [](const std::string& key, const std::string& v) {
        std::string s = lower_ascii(trim(v));
        if (s == "true" || s == "1" || s == "yes") return true;
        if (s == "false" || s == "0" || s == "no") return false;
        throw Error(ErrorKind::Config, "key '" + key + "': expected a boolean, got '" + v + "'");
    };
    auto parse_int = [](const std::string& key, const std::string& v) {
        try {
            return std::stoi(trim(v));
        } catch (const std::exception&) {
            throw Error(ErrorKind::Config, "key '" + key + "': expected an integer, got '" + v + "'");
        }
    };
    for (const auto& [key, value] : kv) {
        if (key == "char_map") {
            for (const auto& [from, to] : decode_char_map(value)) c.char_map[from] = to;
        } else if (key == "strip_punctuation") {
            c.strip_punctuation = parse_bool(key, value);
        } else if (key == "strip_digits") {
            c.strip_digits = parse_bool(key, value);
        } else if (key == "strip_latin") {
            c.strip_latin = parse_bool(key, value);
        } else if (key == "strip_emoticons") {
            c.strip_emoticons = parse_bool(key, value);
        } else if (key == "elongation_max_run") {
            c.elongation_max_run = parse_int(key, value);
        } else if (key == "strip_wa_min_len") {
            c.strip_wa_min_len = parse_int(key, value);
        } else if (key == "emoticon_literals") {
            c.emoticon_literals.clear();
            for (const auto& lit : split_on(value, ','))
                if (!lit.empty()) c.emoticon_literals.push_back(lit);
        } else {
            throw Error(ErrorKind::Config, "unknown normalization key '" + key + "'");
        }
    }
    c.validate();
    return c;
}

std::string NormalizationConfig::fingerprint() const {
    Fnv1a h;
    for (const auto& [k, v] : to_kv()) {
        h.update(k);
        h.update("=");
        h.update(v);
        h.update("\n");
    }
    return h.hex();
}

} // namespace arasent
