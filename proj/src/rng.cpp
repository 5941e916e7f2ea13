#include "hjmfdr/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hjmfdr {

namespace {
constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kPhiloxW0 = 0x9E3779B9u;
constexpr std::uint32_t kPhiloxW1 = 0xBB67AE85u;

inline void mul_hi_lo(std::uint32_t a, std::uint32_t b, std::uint32_t& lo, std::uint32_t& hi) {
    const std::uint64_t prod = static_cast<std::uint64_t>(a) * b;
    lo = static_cast<std::uint32_t>(prod);
    hi = static_cast<std::uint32_t>(prod >> 32);
}

inline void philox_round(std::array<std::uint32_t, 4>& ctr, const std::array<std::uint32_t, 2>& key) {
    std::uint32_t lo0, hi0, lo1, hi1;
    mul_hi_lo(kPhiloxM0, ctr[0], lo0, hi0);
    mul_hi_lo(kPhiloxM1, ctr[2], lo1, hi1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
}

// uint64 -> double in (0,1), 53 significant bits, never 0 or 1
inline double to_unit_open(std::uint64_t x) {
    return (static_cast<double>(x >> 11) + 0.5) * 0x1.0p-53;
}
}  // namespace

std::array<std::uint32_t, 4> CounterRng::philox4x32(std::array<std::uint32_t, 4> counter,
                                                    std::array<std::uint32_t, 2> key) {
    for (int round = 0; round < 10; ++round) {
        philox_round(counter, key);
        if (round < 9) {
            key[0] += kPhiloxW0;
            key[1] += kPhiloxW1;
        }
    }
    return counter;
}

std::array<std::uint32_t, 4> CounterRng::block(std::uint64_t path, std::uint64_t step,
                                               std::uint32_t block_idx) const {
    const std::array<std::uint32_t, 4> ctr = {
        static_cast<std::uint32_t>(step), static_cast<std::uint32_t>(step >> 32),
        static_cast<std::uint32_t>(path),
        static_cast<std::uint32_t>(path >> 32) ^ block_idx};
    const std::array<std::uint32_t, 2> key = {static_cast<std::uint32_t>(seed_),
                                              static_cast<std::uint32_t>(seed_ >> 32) ^ stream_};
    return philox4x32(ctr, key);
}

double CounterRng::gaussian(std::uint64_t path, std::uint64_t step, std::uint32_t idx) const {
    const auto r = block(path, step, idx >> 1);
    const double u1 = to_unit_open((static_cast<std::uint64_t>(r[0]) << 32) | r[1]);
    const double u2 = to_unit_open((static_cast<std::uint64_t>(r[2]) << 32) | r[3]);
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    return (idx & 1u) ? radius * std::sin(angle) : radius * std::cos(angle);
}

double CounterRng::uniform(std::uint64_t path, std::uint64_t step, std::uint32_t idx) const {
    const auto r = block(path, step, idx >> 1);
    return (idx & 1u) ? to_unit_open((static_cast<std::uint64_t>(r[2]) << 32) | r[3])
                      : to_unit_open((static_cast<std::uint64_t>(r[0]) << 32) | r[1]);
}

BrownianLattice::BrownianLattice(std::uint64_t seed, double dt_fine, int n_fine, int factors)
    : rng_(seed), dt_fine_(dt_fine), sqrt_dt_(std::sqrt(dt_fine)), n_fine_(n_fine), factors_(factors) {
    if (!(dt_fine > 0.0)) throw std::invalid_argument("BrownianLattice: dt_fine must be positive");
    if (n_fine < 1 || factors < 1)
        throw std::invalid_argument("BrownianLattice: need at least one step and one factor");
}

double BrownianLattice::fine_increment(std::uint64_t path, int k, int factor) const {
    if (k < 0 || k >= n_fine_) throw std::out_of_range("BrownianLattice: fine step out of range");
    return sqrt_dt_ * rng_.gaussian(path, static_cast<std::uint64_t>(k), static_cast<std::uint32_t>(factor));
}

double BrownianLattice::coarse_increment(std::uint64_t path, int j, int ratio, int factor) const {
    double acc = 0.0;
    for (int k = j * ratio; k < (j + 1) * ratio; ++k) acc += fine_increment(path, k, factor);
    return acc;
}

std::vector<double> BrownianLattice::path_increments(std::uint64_t path, int ratio, int factor) const {
    if (ratio < 1 || n_fine_ % ratio != 0)
        throw std::invalid_argument("BrownianLattice: ratio must divide the fine step count");
    std::vector<double> out(static_cast<size_t>(n_fine_ / ratio));
    for (int j = 0; j < static_cast<int>(out.size()); ++j)
        out[static_cast<size_t>(j)] = coarse_increment(path, j, ratio, factor);
    return out;
}

}  // namespace hjmfdr
