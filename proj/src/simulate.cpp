#include "bidscreen/simulate.hpp"

#include <unordered_set>

#include "bidscreen/error.hpp"
#include "bidscreen/moments.hpp"
#include "bidscreen/rng.hpp"

namespace bidscreen {

DeviationPool build_pool(const Dataset& competitive) {
  DeviationPool pool;
  for (const auto& t : competitive.tenders) {
    if (t.n_bids() < 2) continue;
    double mean = 0.0;
    for (const auto& b : t.bids) mean += b.value;
    mean /= static_cast<double>(t.bids.size());
    for (const auto& b : t.bids) pool.deviations.push_back((b.value - mean) / mean);
    ++pool.source_tender_count;
  }
  if (pool.source_tender_count == 0)
    throw Error(ErrorCode::EmptyCompetitiveSet,
                "build_pool: no competitive tender with at least 2 bids");
  return pool;
}

Dataset inject(const Dataset& collusive, const DeviationPool& pool, int m, std::uint64_t seed) {
  if (m < 1) throw Error(ErrorCode::DegenerateSpec, "inject: m must be >= 1");
  if (pool.deviations.empty()) throw Error(ErrorCode::EmptyPool, "inject: empty deviation pool");
  Dataset out = collusive;
  RandomStream rng(seed);
  for (auto& t : out.tenders) {
    double base_mean = 0.0;
    for (const auto& b : t.bids) base_mean += b.value;
    base_mean /= static_cast<double>(t.bids.size());
    for (int i = 0; i < m; ++i) {
      const double delta = pool.deviations[rng.uniform_index(pool.deviations.size())];
      Bid sim;
      sim.value = base_mean * (1.0 + delta);
      sim.cartel_member = false;
      sim.simulated = true;
      t.bids.push_back(sim);
    }
  }
  return out;
}

Dataset merge_datasets(const Dataset& a, const Dataset& b) {
  Dataset out = a;
  std::unordered_set<std::string> ids;
  for (const auto& t : out.tenders) ids.insert(t.tender_id);
  for (const auto& t : b.tenders) {
    if (!ids.insert(t.tender_id).second)
      throw Error(ErrorCode::DuplicateTenderConflict,
                  "merge_datasets: tender id appears in both datasets: " + t.tender_id);
    out.tenders.push_back(t);
  }
  return out;
}

std::array<Dataset, 6> build_ladder(const Dataset& collusive, const Dataset& competitive,
                                    std::uint64_t seed) {
  if (collusive.tenders.empty() || competitive.tenders.empty())
    throw Error(ErrorCode::EmptyCompetitiveSet, "build_ladder: both datasets must be non-empty");
  const DeviationPool pool = build_pool(competitive);
  std::array<Dataset, 6> ladder;
  for (int m = 0; m <= 5; ++m) {
    const Dataset rigged =
        m == 0 ? collusive
               : inject(collusive, pool, m, splitmix64(splitmix64(seed) + static_cast<std::uint64_t>(m)));
    ladder[static_cast<std::size_t>(m)] = merge_datasets(rigged, competitive);
  }
  return ladder;
}

Dataset simulated_bids_only(const Dataset& injected) {
  Dataset out;
  out.provenance = "simulated bids of: " + injected.provenance;
  for (const auto& t : injected.tenders) {
    Tender sim;
    sim.tender_id = t.tender_id;
    sim.label = t.label;
    sim.contract_type = t.contract_type;
    sim.anon_year = t.anon_year;
    sim.anon_date = t.anon_date;
    for (const auto& b : t.bids)
      if (b.simulated) sim.bids.push_back(b);
    if (sim.n_bids() >= 2) out.tenders.push_back(std::move(sim));
  }
  return out;
}

}  // namespace bidscreen
