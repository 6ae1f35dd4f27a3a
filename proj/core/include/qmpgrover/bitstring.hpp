#pragma once

#include <cstdint>
#include <string>

namespace qmpgrover {

// Bitstrings are written MSB-left: the rightmost character is bit 0 (LSB)
// and maps to qubit 0. All conversions in the toolkit go through these two
// helpers so the convention lives in one place.

/// Parse an MSB-left binary string ("1011" -> 11). Throws ValidationError on
/// empty or non-binary input.
std::uint64_t bits_to_index(const std::string& bits);

/// Render `index` as an MSB-left binary string of exactly `width` characters.
/// Throws ValidationError if the value does not fit.
std::string index_to_bits(std::uint64_t index, int width);

/// True iff `bits` is a nonempty string over {0,1}.
bool is_bitstring(const std::string& bits);

}  // namespace qmpgrover
