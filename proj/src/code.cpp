#include "ccls/code.hpp"

#include <sstream>
#include <stdexcept>

namespace ccls {

std::string code_str(const VertexCode& c) {
    std::string out;
    for (size_t i = 0; i < c.size(); ++i) {
        if (i)
            out += ':';
        out += std::to_string(c[i]);
    }
    return out;
}

VertexCode parse_code(const std::string& s) {
    VertexCode c;
    std::string part;
    std::istringstream in(s);
    while (std::getline(in, part, ':')) {
        if (part.empty())
            throw std::invalid_argument("bad vertex code '" + s + "'");
        c.push_back(std::stoi(part));
    }
    if (c.empty())
        throw std::invalid_argument("empty vertex code");
    return c;
}

CodeLayout::CodeLayout(std::vector<int> bits) : bits_(std::move(bits)) {
    offset_.reserve(bits_.size());
    for (int b : bits_) {
        if (b < 1 || b > 64)
            throw std::invalid_argument("coordinate width out of range");
        offset_.push_back(total_);
        total_ += b;
    }
    if (total_ > 384)
        throw std::invalid_argument("code layout exceeds 384 bits");
}

PackedCode CodeLayout::pack(const VertexCode& c) const {
    if (c.size() != bits_.size())
        throw std::invalid_argument("code arity mismatch in pack");
    PackedCode p;
    for (size_t i = 0; i < bits_.size(); ++i) {
        uint64_t v = static_cast<uint64_t>(c[i]);
        if (c[i] < 0 || (bits_[i] < 64 && v >= (1ull << bits_[i])))
            throw std::out_of_range("coordinate does not fit its declared width");
        int off = offset_[i];
        int word = off / 64, shift = off % 64;
        p.w[word] |= v << shift;
        if (shift + bits_[i] > 64)
            p.w[word + 1] |= v >> (64 - shift);
    }
    return p;
}

VertexCode CodeLayout::unpack(const PackedCode& p) const {
    VertexCode c(bits_.size());
    for (size_t i = 0; i < bits_.size(); ++i) {
        int off = offset_[i];
        int word = off / 64, shift = off % 64;
        uint64_t v = p.w[word] >> shift;
        if (shift + bits_[i] > 64)
            v |= p.w[word + 1] << (64 - shift);
        uint64_t mask = bits_[i] == 64 ? ~0ull : (1ull << bits_[i]) - 1;
        c[i] = static_cast<int>(v & mask);
    }
    return c;
}

} // namespace ccls
