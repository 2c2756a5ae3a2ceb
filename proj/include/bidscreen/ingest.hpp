#pragma once

#include <string>

#include "bidscreen/csv.hpp"
#include "bidscreen/screens.hpp"
#include "bidscreen/subgroups.hpp"
#include "bidscreen/types.hpp"

namespace bidscreen {

/// Column-name mapping for bid-summary files. tender and bid are required;
/// everything else is optional and skipped when absent.
struct IngestSchema {
  std::string tender = "tender";
  std::string bid = "bid";
  std::string label = "label";
  std::string contract_type = "contract_type";
  std::string anon_year = "anon_year";
  std::string anon_date = "anon_date";
  std::string bidder = "bidder";
  std::string cartel_member = "cartel_member";
  std::string simulated = "simulated";
};

/// One Tender per distinct tender id, bids grouped in file order. Rows with
/// non-numeric or non-positive bid values are rejected with NonPositiveBid;
/// conflicting labels for one tender id raise DuplicateTenderConflict.
/// Tenders left with fewer than 2 bids are dropped (noted in provenance).
/// A missing label column marks every tender Unlabeled; any nonzero integer
/// or "true" maps to Collusive.
Dataset ingest_csv(const std::string& path, const IngestSchema& schema = {});
Dataset ingest_table(const CsvTable& table, const IngestSchema& schema, const std::string& origin);

/// Inverse of ingestion, writing the canonical column names.
void write_bids_csv(const std::string& path, const Dataset& ds);

struct ScreenCsvOptions {
  KurtosisMode kurtosis = KurtosisMode::Standard;
  bool subgroups = false;                       // add MIN3CV ... MEDIAN4D columns
  enum class BidFilter { All, SimulatedOnly, RealOnly } bids = BidFilter::All;
};

/// Per-tender screen table. cv/spd/diffp and their subgroup summaries are
/// reported in percent (x100) to line up with the published tables; other
/// screens stay raw. Undefined screens serialize as empty cells.
CsvTable screens_csv(const Dataset& ds, const ScreenCsvOptions& opt = {});

/// Screen samples per screen name from a screens CSV (percent columns are
/// accepted as-is; the tests are scale-invariant).
std::map<std::string, std::vector<double>> screen_samples_from_csv(const CsvTable& table);

std::string label_to_string(Label l);
Label label_from_cell(const std::string& cell);

}  // namespace bidscreen
