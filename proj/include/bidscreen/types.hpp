#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bidscreen/error.hpp"

namespace bidscreen {

enum class Label { Competitive = 0, Collusive = 1, Unlabeled = 2 };

/// Contract-type coding used by the Swiss procurement records:
/// 1 = road construction and asphalting, 2 = mixed, 3 = civil engineering.
enum class ContractType { Unknown = 0, RoadAsphalt = 1, Mixed = 2, CivilEngineering = 3 };

struct Bid {
  double value = 0.0;  // strictly positive, same currency unit across a dataset
  std::optional<std::string> bidder_id;
  std::optional<bool> cartel_member;
  bool simulated = false;  // set by the bid simulator, never by ingestion
};

struct Tender {
  std::string tender_id;
  std::vector<Bid> bids;  // file order; screens sort internally
  Label label = Label::Unlabeled;
  ContractType contract_type = ContractType::Unknown;
  std::optional<int> anon_year;
  std::optional<int> anon_date;

  int n_bids() const { return static_cast<int>(bids.size()); }
  /// Number of bids flagged as cartel members (0 if flags absent).
  int cartel_bid_count() const {
    int c = 0;
    for (const auto& b : bids)
      if (b.cartel_member && *b.cartel_member) ++c;
    return c;
  }
};

struct Dataset {
  std::vector<Tender> tenders;
  std::string provenance;
  std::string currency_scale_note;
};

/// Keeps only tenders with at least `k` bids. The input is untouched.
Dataset filter_min_bids(const Dataset& ds, int k);

/// Keeps tenders of the given contract type. Throws EmptyAfterFilter if
/// nothing remains (also when the dataset carries no type information).
Dataset filter_contract_type(const Dataset& ds, ContractType type);

/// Swiss-sample ladder filter: keeps every competitive tender plus the
/// collusive tenders with at least `min_firms` cartel-member bids.
Dataset filter_min_cartel_firms(const Dataset& ds, int min_firms);

}  // namespace bidscreen
