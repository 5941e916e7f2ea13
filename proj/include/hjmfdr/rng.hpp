#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace hjmfdr {

// Philox4x32-10 counter-based generator. Draws are addressed by
// (seed, path, step, index), so parallel paths and step refinements are
// reproducible without any generator state.
//
// Salmon et al., "Parallel random numbers: as easy as 1, 2, 3", SC 2011.
class CounterRng {
  public:
    explicit CounterRng(std::uint64_t seed, std::uint32_t stream = 0)
        : seed_(seed), stream_(stream) {}

    std::uint64_t seed() const { return seed_; }

    static std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                                   std::array<std::uint32_t, 2> key);

    // Standard normal draw for (path, step, idx); one Philox block yields a
    // Box-Muller pair, consecutive idx values share a block.
    double gaussian(std::uint64_t path, std::uint64_t step, std::uint32_t idx = 0) const;

    // Uniform in (0,1).
    double uniform(std::uint64_t path, std::uint64_t step, std::uint32_t idx = 0) const;

  private:
    std::array<std::uint32_t, 4> block(std::uint64_t path, std::uint64_t step,
                                       std::uint32_t block_idx) const;
    std::uint64_t seed_;
    std::uint32_t stream_;
};

// Brownian increments on a fine step lattice plus their coarse aggregates.
// Coarse increments are literal sums of the fine ones, which is exactly the
// refinement-by-aggregation contract pathwise comparisons rely on.
class BrownianLattice {
  public:
    BrownianLattice(std::uint64_t seed, double dt_fine, int n_fine, int factors = 1);

    double dt_fine() const { return dt_fine_; }
    int n_fine() const { return n_fine_; }

    // Increment over fine step k for one factor.
    double fine_increment(std::uint64_t path, int k, int factor = 0) const;

    // Increment over coarse step j when each coarse step spans `ratio` fine
    // steps: the sum of the constituent fine increments.
    double coarse_increment(std::uint64_t path, int j, int ratio, int factor = 0) const;

    // All coarse increments of a path at the given refinement ratio.
    std::vector<double> path_increments(std::uint64_t path, int ratio, int factor = 0) const;

  private:
    CounterRng rng_;
    double dt_fine_;
    double sqrt_dt_;
    int n_fine_;
    int factors_;
};

}  // namespace hjmfdr
