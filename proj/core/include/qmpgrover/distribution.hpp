#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace qmpgrover {

/// Exact probability vector over the 2^bits basis states of a measurement
/// window. Indexed by basis value; keys render MSB-left.
class Distribution {
public:
    Distribution(int bits, std::vector<double> probabilities);

    int bits() const { return bits_; }
    std::uint64_t size() const { return static_cast<std::uint64_t>(probs_.size()); }
    const std::vector<double>& probabilities() const { return probs_; }
    double operator[](std::uint64_t outcome) const { return probs_[outcome]; }

private:
    int bits_;
    std::vector<double> probs_;
};

/// Integer shot counts keyed by fixed-length bitstrings (MSB-left). The
/// ordered map keeps serialization deterministic.
struct Counts {
    int bit_length = 0;
    std::uint64_t shots = 0;
    std::map<std::string, std::uint64_t> counts;

    std::uint64_t total() const;
};

/// Multinomial draw of `shots` outcomes from `dist` by inverse-CDF lookup
/// over the exact probabilities. Deterministic for a fixed seed. Only
/// outcomes that were actually drawn appear as keys.
Counts sample(const Distribution& dist, std::uint64_t shots, std::uint64_t seed);

/// Collapse N-bit counts onto the window of `n_bits` bits starting at bit
/// `least`, counted from the LSB (rightmost character). Every window value
/// appears in the output, zeros included; shots are conserved.
Counts marginalize_counts(const Counts& counts, int total_bits, int least, int n_bits);

}  // namespace qmpgrover
