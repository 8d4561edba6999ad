#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace arasent {

// FNV-1a 64-bit. Content fingerprints for manifests and train/serve
// consistency checks, not cryptographic integrity.
class Fnv1a {
public:
    void update(std::string_view data) {
        for (unsigned char c : data) {
            state_ ^= c;
            state_ *= 0x100000001b3ull;
        }
    }
    void update_u64(std::uint64_t v) {
        char buf[16];
        for (int i = 0; i < 16; ++i) {
            buf[i] = "0123456789abcdef"[(v >> (60 - 4 * i)) & 0xf];
        }
        update(std::string_view(buf, 16));
    }
    std::uint64_t value() const { return state_; }
    std::string hex() const;

private:
    std::uint64_t state_ = 0xcbf29ce484222325ull;
};

std::string fnv1a_hex(std::string_view data);

// Deterministic Fisher-Yates. std::shuffle is implementation-defined, so
// split/train reproducibility pins its own schedule.
template <typename T>
void deterministic_shuffle(std::vector<T>& items, std::mt19937_64& rng) {
    for (std::size_t i = items.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(rng() % i);
        std::swap(items[i - 1], items[j]);
    }
}

// Uniform double in [0,1) from the top 53 bits of one draw.
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0);
}

std::vector<std::string> split_on(std::string_view text, char sep);
std::string trim(std::string_view text);
std::string lower_ascii(std::string_view text);

// Shortest-edit-distance candidate, used for "did you mean" diagnostics.
std::string nearest_of(std::string_view word, const std::vector<std::string>& candidates);

// Round-trip-exact decimal rendering of a double (%.17g trimmed).
std::string format_double(double v);

} // namespace arasent
