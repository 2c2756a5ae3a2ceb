#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "bidscreen/types.hpp"

namespace bidscreen {

/// Empirical multiset of normalized mean deviations (b - mean)/mean taken
/// from every bid of every competitive tender. Each entry is > -1 because
/// bids are positive.
struct DeviationPool {
  std::vector<double> deviations;
  int source_tender_count = 0;
};

/// Throws EmptyCompetitiveSet when no tender with n >= 2 is present.
DeviationPool build_pool(const Dataset& competitive);

/// Adds m simulated bids to every tender: b_sim = mean_t * (1 + delta) with
/// delta drawn with replacement from the pool. The base mean is always the
/// pre-injection mean, even for m > 1. Injected bids are flagged simulated
/// and carry cartel_member = false. Draw order is tenders in dataset order,
/// m draws each, from one stream, so results are reproducible by seed.
Dataset inject(const Dataset& collusive, const DeviationPool& pool, int m, std::uint64_t seed);

/// The m = 0..5 contamination ladder: rung m is the union of the m-injected
/// collusive tenders and the untouched competitive tenders. Each rung's
/// injection seed is derived from (seed, m).
std::array<Dataset, 6> build_ladder(const Dataset& collusive, const Dataset& competitive,
                                    std::uint64_t seed);

/// Union helper used by the ladder; throws on colliding tender ids.
Dataset merge_datasets(const Dataset& a, const Dataset& b);

/// Tenders formed from only the simulated bids of each input tender
/// (skipping tenders with fewer than 2 simulated bids); feeds the
/// distribution-fidelity tests.
Dataset simulated_bids_only(const Dataset& injected);

}  // namespace bidscreen
