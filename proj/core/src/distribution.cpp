#include "qmpgrover/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "qmpgrover/bitstring.hpp"
#include "qmpgrover/ir.hpp"

namespace qmpgrover {

Distribution::Distribution(int bits, std::vector<double> probabilities)
    : bits_(bits), probs_(std::move(probabilities)) {
    if (bits < 1 || bits > kMaxWidth) {
        throw ValidationError("distribution over " + std::to_string(bits) +
                              " bits is out of range");
    }
    if (probs_.size() != (1ULL << bits)) {
        throw ValidationError("distribution needs 2^bits probabilities");
    }
    double sum = 0.0;
    for (double p : probs_) {
        if (p < -1e-12 || !std::isfinite(p)) {
            throw ValidationError("probabilities must be finite and nonnegative");
        }
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
        throw ValidationError("probabilities sum to " + std::to_string(sum) +
                              ", expected 1");
    }
}

std::uint64_t Counts::total() const {
    std::uint64_t sum = 0;
    for (const auto& [key, value] : counts) {
        sum += value;
    }
    return sum;
}

Counts sample(const Distribution& dist, std::uint64_t shots, std::uint64_t seed) {
    if (shots < 1) {
        throw ValidationError("shot count must be at least 1");
    }
    std::vector<double> cdf(dist.size());
    double running = 0.0;
    for (std::uint64_t i = 0; i < dist.size(); ++i) {
        running += dist[i];
        cdf[i] = running;
    }
    cdf.back() = 1.0;

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    std::vector<std::uint64_t> hits(dist.size(), 0);
    for (std::uint64_t shot = 0; shot < shots; ++shot) {
        const double u = uniform(rng);
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        const std::uint64_t outcome =
            static_cast<std::uint64_t>(std::distance(cdf.begin(), it));
        ++hits[outcome < dist.size() ? outcome : dist.size() - 1];
    }

    Counts out;
    out.bit_length = dist.bits();
    out.shots = shots;
    for (std::uint64_t outcome = 0; outcome < hits.size(); ++outcome) {
        if (hits[outcome] > 0) {
            out.counts[index_to_bits(outcome, dist.bits())] = hits[outcome];
        }
    }
    return out;
}

Counts marginalize_counts(const Counts& counts, int total_bits, int least, int n_bits) {
    if (counts.bit_length != total_bits) {
        throw ValidationError("counts carry " + std::to_string(counts.bit_length) +
                              "-bit keys, expected " + std::to_string(total_bits));
    }
    if (n_bits < 1 || least < 0 || least + n_bits > total_bits) {
        throw ValidationError("window [" + std::to_string(least) + ", " +
                              std::to_string(least + n_bits) + ") outside " +
                              std::to_string(total_bits) + "-bit keys");
    }

    Counts out;
    out.bit_length = n_bits;
    out.shots = counts.shots;
    for (std::uint64_t value = 0; value < (1ULL << n_bits); ++value) {
        out.counts[index_to_bits(value, n_bits)] = 0;
    }
    // Keys are MSB-left, so bit positions [least, least+n) from the LSB sit
    // at character positions [N-least-n, N-least).
    const std::size_t from = static_cast<std::size_t>(total_bits - least - n_bits);
    for (const auto& [key, value] : counts.counts) {
        if (key.size() != static_cast<std::size_t>(total_bits) || !is_bitstring(key)) {
            throw ValidationError("counts key \"" + key +
                                  "\" is not a binary string of length " +
                                  std::to_string(total_bits));
        }
        out.counts[key.substr(from, static_cast<std::size_t>(n_bits))] += value;
    }
    return out;
}

}  // namespace qmpgrover
