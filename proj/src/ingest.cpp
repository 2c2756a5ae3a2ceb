#include "bidscreen/ingest.hpp"

#include <cctype>
#include <unordered_map>

#include "bidscreen/error.hpp"
#include "bidscreen/features.hpp"
#include "bidscreen/moments.hpp"

namespace bidscreen {

namespace {

std::string lower(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

bool truthy(const std::string& cell) {
  const std::string t = lower(cell);
  if (t == "true") return true;
  if (t == "false") return false;
  if (const auto v = parse_int(cell)) return *v != 0;
  return false;
}

}  // namespace

std::string label_to_string(Label l) {
  switch (l) {
    case Label::Competitive: return "0";
    case Label::Collusive: return "1";
    case Label::Unlabeled: return "";
  }
  return "";
}

Label label_from_cell(const std::string& cell) {
  const std::string t = lower(cell);
  if (t.empty()) return Label::Unlabeled;
  if (t == "true") return Label::Collusive;
  if (t == "false") return Label::Competitive;
  if (const auto v = parse_int(cell)) return *v != 0 ? Label::Collusive : Label::Competitive;
  return Label::Unlabeled;
}

Dataset ingest_table(const CsvTable& table, const IngestSchema& schema, const std::string& origin) {
  const int col_tender = table.column(schema.tender);
  const int col_bid = table.column(schema.bid);
  if (col_tender < 0) throw Error(ErrorCode::MissingColumn, "missing tender id column '" + schema.tender + "'");
  if (col_bid < 0) throw Error(ErrorCode::MissingColumn, "missing bid column '" + schema.bid + "'");
  const int col_label = table.column(schema.label);
  const int col_type = table.column(schema.contract_type);
  const int col_year = table.column(schema.anon_year);
  const int col_date = table.column(schema.anon_date);
  const int col_bidder = table.column(schema.bidder);
  const int col_cartel = table.column(schema.cartel_member);
  const int col_sim = table.column(schema.simulated);
  if (table.rows.empty()) throw Error(ErrorCode::EmptyFile, "no data rows in " + origin);

  Dataset ds;
  ds.provenance = origin;
  std::unordered_map<std::string, std::size_t> index;

  auto cell = [](const std::vector<std::string>& row, int col) -> std::string {
    if (col < 0 || static_cast<std::size_t>(col) >= row.size()) return "";
    return row[static_cast<std::size_t>(col)];
  };

  int row_number = 1;  // header is row 1
  int dropped_small = 0;
  for (const auto& row : table.rows) {
    ++row_number;
    const std::string id = cell(row, col_tender);
    if (id.empty())
      throw Error(ErrorCode::MissingColumn,
                  "row " + std::to_string(row_number) + ": empty tender id");
    const auto value = parse_double(cell(row, col_bid));
    if (!value || !(*value > 0.0))
      throw Error(ErrorCode::NonPositiveBid,
                  "row " + std::to_string(row_number) + ": bid value must be a positive number");

    auto it = index.find(id);
    if (it == index.end()) {
      Tender t;
      t.tender_id = id;
      t.label = col_label >= 0 ? label_from_cell(cell(row, col_label)) : Label::Unlabeled;
      if (const auto v = parse_int(cell(row, col_type))) {
        const long long ty = *v;
        t.contract_type = ty == 1   ? ContractType::RoadAsphalt
                          : ty == 2 ? ContractType::Mixed
                          : ty == 3 ? ContractType::CivilEngineering
                                    : ContractType::Unknown;
      }
      if (const auto v = parse_int(cell(row, col_year))) t.anon_year = static_cast<int>(*v);
      if (const auto v = parse_int(cell(row, col_date))) t.anon_date = static_cast<int>(*v);
      index.emplace(id, ds.tenders.size());
      ds.tenders.push_back(std::move(t));
      it = index.find(id);
    } else if (col_label >= 0) {
      const Label l = label_from_cell(cell(row, col_label));
      Tender& t = ds.tenders[it->second];
      if (l != Label::Unlabeled && t.label != Label::Unlabeled && l != t.label)
        throw Error(ErrorCode::DuplicateTenderConflict,
                    "tender " + id + " carries conflicting labels");
      if (t.label == Label::Unlabeled) t.label = l;
    }

    Bid b;
    b.value = *value;
    const std::string bidder = cell(row, col_bidder);
    if (!bidder.empty()) b.bidder_id = bidder;
    const std::string cartel = cell(row, col_cartel);
    if (!cartel.empty()) b.cartel_member = truthy(cartel);
    b.simulated = truthy(cell(row, col_sim));
    ds.tenders[it->second].bids.push_back(std::move(b));
  }

  // Tenders need two bids; singletons cannot feed any screen.
  std::vector<Tender> kept;
  kept.reserve(ds.tenders.size());
  for (auto& t : ds.tenders) {
    if (t.n_bids() >= 2) kept.push_back(std::move(t));
    else ++dropped_small;
  }
  ds.tenders = std::move(kept);
  if (dropped_small > 0)
    ds.provenance += " (dropped " + std::to_string(dropped_small) + " single-bid tenders)";
  if (ds.tenders.empty()) throw Error(ErrorCode::EmptyFile, "no usable tenders in " + origin);
  return ds;
}

Dataset ingest_csv(const std::string& path, const IngestSchema& schema) {
  return ingest_table(read_csv(path), schema, path);
}

void write_bids_csv(const std::string& path, const Dataset& ds) {
  CsvTable t;
  t.header = {"tender", "bid", "label", "contract_type", "anon_year",
              "anon_date", "bidder", "cartel_member", "simulated"};
  for (const auto& tender : ds.tenders) {
    for (const auto& b : tender.bids) {
      std::vector<std::string> row(9);
      row[0] = tender.tender_id;
      row[1] = format_g6(b.value);
      row[2] = label_to_string(tender.label);
      row[3] = tender.contract_type == ContractType::Unknown
                   ? ""
                   : std::to_string(static_cast<int>(tender.contract_type));
      row[4] = tender.anon_year ? std::to_string(*tender.anon_year) : "";
      row[5] = tender.anon_date ? std::to_string(*tender.anon_date) : "";
      row[6] = b.bidder_id.value_or("");
      row[7] = b.cartel_member ? (*b.cartel_member ? "1" : "0") : "";
      row[8] = b.simulated ? "1" : "0";
      t.rows.push_back(std::move(row));
    }
  }
  write_csv(path, t);
}

namespace {

bool percent_scaled(const std::string& name) {
  // cv/spd/diffp and their subgroup summaries print in percent
  if (name == "CV" || name == "SPD" || name == "DIFFP") return true;
  const bool summary = name.starts_with("MIN") || name.starts_with("MAX") ||
                       name.starts_with("MEAN") || name.starts_with("MEDIAN");
  return summary && (name.ends_with("CV") || name.ends_with("SPD") || name.ends_with("DIFFP"));
}

std::vector<std::string> screen_csv_columns(bool subgroups) {
  std::vector<std::string> cols = {"CV", "KURTO", "SKEW", "SPD", "DIFFP",
                                   "RD", "RDNOR", "RDALT", "KS", "D",
                                   "NBRBIDS", "MEANBIDS", "STDBIDS"};
  if (subgroups) {
    for (int k : {3, 4})
      for (const auto& s : subgroup_screen_names(k))
        for (const std::string stat : {"MIN", "MAX", "MEAN", "MEDIAN"})
          cols.push_back(stat + std::to_string(k) + s);
  }
  return cols;
}

}  // namespace

CsvTable screens_csv(const Dataset& ds, const ScreenCsvOptions& opt) {
  using BidFilter = ScreenCsvOptions::BidFilter;
  const auto cols = screen_csv_columns(opt.subgroups);
  CsvTable out;
  out.header = {"tender", "label"};
  for (const auto& c : cols) out.header.push_back(c);

  for (const auto& tender : ds.tenders) {
    Tender view = tender;
    if (opt.bids != BidFilter::All) {
      view.bids.clear();
      for (const auto& b : tender.bids)
        if (b.simulated == (opt.bids == BidFilter::SimulatedOnly)) view.bids.push_back(b);
    }
    if (view.n_bids() < 2) continue;

    const ScreenVector sv = screen_vector(view, opt.kurtosis);
    SubgroupSummary sub;
    if (opt.subgroups && view.n_bids() >= 4) sub = subgroup_summary(view, opt.kurtosis);

    std::vector<std::string> row;
    row.push_back(view.tender_id);
    row.push_back(label_to_string(view.label));
    for (const auto& c : cols) {
      std::optional<double> v;
      if (c == "NBRBIDS") {
        row.push_back(std::to_string(sv.nbrbids));
        continue;
      }
      if (opt.subgroups && (c.find('3') != std::string::npos || c.find('4') != std::string::npos) &&
          view.n_bids() < 4) {
        row.emplace_back();
        continue;
      }
      v = predictor_value(c, sv, sub);
      if (!v) {
        row.emplace_back();
        continue;
      }
      row.push_back(format_g6(percent_scaled(c) ? *v * 100.0 : *v));
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

std::map<std::string, std::vector<double>> screen_samples_from_csv(const CsvTable& table) {
  std::map<std::string, std::vector<double>> out;
  for (const auto& name : ratio_screen_names()) {
    const int col = table.column(name);
    if (col < 0) continue;
    auto& values = out[name];
    for (const auto& row : table.rows) {
      if (static_cast<std::size_t>(col) >= row.size()) continue;
      if (const auto v = parse_double(row[static_cast<std::size_t>(col)])) values.push_back(*v);
    }
  }
  return out;
}

}  // namespace bidscreen
