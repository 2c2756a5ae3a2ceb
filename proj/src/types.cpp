#include "bidscreen/types.hpp"

namespace bidscreen {

Dataset filter_min_bids(const Dataset& ds, int k) {
  if (k < 2) throw Error(ErrorCode::DegenerateSpec, "filter_min_bids: k must be >= 2");
  Dataset out;
  out.provenance = ds.provenance;
  out.currency_scale_note = ds.currency_scale_note;
  for (const auto& t : ds.tenders)
    if (t.n_bids() >= k) out.tenders.push_back(t);
  return out;
}

Dataset filter_contract_type(const Dataset& ds, ContractType type) {
  Dataset out;
  out.provenance = ds.provenance;
  out.currency_scale_note = ds.currency_scale_note;
  for (const auto& t : ds.tenders)
    if (t.contract_type == type) out.tenders.push_back(t);
  if (out.tenders.empty())
    throw Error(ErrorCode::EmptyAfterFilter, "filter_contract_type: no tenders of requested type");
  return out;
}

Dataset filter_min_cartel_firms(const Dataset& ds, int min_firms) {
  Dataset out;
  out.provenance = ds.provenance;
  out.currency_scale_note = ds.currency_scale_note;
  for (const auto& t : ds.tenders) {
    if (t.label == Label::Collusive && t.cartel_bid_count() < min_firms) continue;
    out.tenders.push_back(t);
  }
  if (out.tenders.empty())
    throw Error(ErrorCode::EmptyAfterFilter, "filter_min_cartel_firms: nothing left");
  return out;
}

}  // namespace bidscreen
