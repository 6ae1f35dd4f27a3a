#include "qmpgrover/bitstring.hpp"

#include "qmpgrover/errors.hpp"

namespace qmpgrover {

bool is_bitstring(const std::string& bits) {
    if (bits.empty()) return false;
    for (char c : bits) {
        if (c != '0' && c != '1') return false;
    }
    return true;
}

std::uint64_t bits_to_index(const std::string& bits) {
    if (!is_bitstring(bits)) {
        throw ValidationError("not a binary string: \"" + bits + "\"");
    }
    if (bits.size() > 64) {
        throw ValidationError("bitstring longer than 64 bits");
    }
    std::uint64_t value = 0;
    for (char c : bits) {
        value = (value << 1) | static_cast<std::uint64_t>(c - '0');
    }
    return value;
}

std::string index_to_bits(std::uint64_t index, int width) {
    if (width < 1 || width > 64) {
        throw ValidationError("bitstring width must be in [1, 64]");
    }
    if (width < 64 && (index >> width) != 0) {
        throw ValidationError("value " + std::to_string(index) + " does not fit in " +
                              std::to_string(width) + " bits");
    }
    std::string out(static_cast<std::size_t>(width), '0');
    for (int bit = 0; bit < width; ++bit) {
        if ((index >> bit) & 1ULL) {
            out[static_cast<std::size_t>(width - 1 - bit)] = '1';
        }
    }
    return out;
}

}  // namespace qmpgrover
