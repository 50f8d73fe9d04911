#include "nearhex/serialize.hpp"

#include <stdexcept>

namespace nearhex {

namespace {

int hex_digit(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    return -1;
}

}  // namespace

std::string mask_to_hex(PointSet s, int num_points) {
    if (num_points < 1 || num_points > 64)
        throw std::invalid_argument("mask_to_hex: num_points must be in 1..64");
    if (!full_set(num_points).contains(s))
        throw std::invalid_argument("mask_to_hex: mask has bits beyond num_points");
    static const char* digits = "0123456789abcdef";
    const int bytes = (num_points + 7) / 8;
    std::string out;
    out.reserve(static_cast<std::size_t>(bytes) * 2);
    for (int b = 0; b < bytes; ++b) {
        const unsigned byte = static_cast<unsigned>((s.mask >> (8 * b)) & 0xffu);
        out.push_back(digits[byte >> 4]);
        out.push_back(digits[byte & 0xfu]);
    }
    return out;
}

PointSet mask_from_hex(const std::string& text, int num_points) {
    if (num_points < 1 || num_points > 64)
        throw std::invalid_argument("mask_from_hex: num_points must be in 1..64");
    const int bytes = (num_points + 7) / 8;
    if (static_cast<int>(text.size()) != bytes * 2)
        throw std::invalid_argument("mask_from_hex: expected " + std::to_string(bytes * 2) +
                                    " hex characters");
    std::uint64_t mask = 0;
    for (int b = 0; b < bytes; ++b) {
        const int hi = hex_digit(text[static_cast<std::size_t>(2 * b)]);
        const int lo = hex_digit(text[static_cast<std::size_t>(2 * b + 1)]);
        if (hi < 0 || lo < 0)
            throw std::invalid_argument("mask_from_hex: non-hex character");
        mask |= static_cast<std::uint64_t>((hi << 4) | lo) << (8 * b);
    }
    const PointSet s{mask};
    if (!full_set(num_points).contains(s))
        throw std::invalid_argument("mask_from_hex: mask has bits beyond num_points");
    return s;
}

}  // namespace nearhex
