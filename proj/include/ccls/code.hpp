#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace ccls {

// Integer values carried by potentials, utilities and protocol payloads.
// Everything in this library is exact integer arithmetic; there are no
// floating point ties anywhere.
using Value = long long;

// A vertex address in one of the structured graph families: a tuple of
// bounded non-negative integers. Bitstrings are tuples of 0/1 entries; the
// odd graph uses a single bitmask entry.
using VertexCode = std::vector<int>;

std::string code_str(const VertexCode& c); // "3:0:1"
VertexCode parse_code(const std::string& s);

// Fixed 384-bit key for hash/sort heavy passes over huge implicit graphs.
struct PackedCode {
    std::array<uint64_t, 6> w{};

    friend bool operator==(const PackedCode& a, const PackedCode& b) { return a.w == b.w; }
    friend bool operator<(const PackedCode& a, const PackedCode& b) { return a.w < b.w; }
};

struct PackedCodeHash {
    size_t operator()(const PackedCode& c) const {
        uint64_t h = 0x9E3779B97F4A7C15ull;
        for (uint64_t x : c.w) {
            h ^= x + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
            h *= 0xFF51AFD7ED558CCDull;
        }
        return static_cast<size_t>(h);
    }
};

// Per-coordinate bit widths of a code; packs codes into PackedCode keys.
// Widths must sum to at most 384.
class CodeLayout {
  public:
    CodeLayout() = default;
    explicit CodeLayout(std::vector<int> bits);

    int total_bits() const { return total_; }
    size_t arity() const { return bits_.size(); }

    PackedCode pack(const VertexCode& c) const;
    VertexCode unpack(const PackedCode& p) const;

  private:
    std::vector<int> bits_;
    std::vector<int> offset_;
    int total_ = 0;
};

} // namespace ccls
