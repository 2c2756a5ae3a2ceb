#include "bidscreen/screens.hpp"

#include <cmath>

#include "bidscreen/error.hpp"

namespace bidscreen {

namespace {

void require_n(const TenderMoments& m, int k, const char* who) {
  if (m.n < k) throw Error(ErrorCode::TooFewBids, std::string(who) + ": needs n >= " + std::to_string(k));
}

void require_dispersion(const TenderMoments& m, const char* who) {
  if (m.std <= 0.0) throw Error(ErrorCode::ZeroDispersion, std::string(who) + ": zero bid dispersion");
}

}  // namespace

double cv(const TenderMoments& m) {
  require_n(m, 2, "cv");
  return m.std / m.mean;
}

double kurto(const TenderMoments& m, KurtosisMode mode) {
  require_n(m, 4, "kurto");
  require_dispersion(m, "kurto");
  const double n = m.n;
  double z4 = 0.0;
  for (double b : m.sorted_bids) {
    const double z = (b - m.mean) / m.std;
    z4 += z * z * z * z;
  }
  const double lead = n * (n + 1.0) / ((n - 1.0) * (n - 2.0) * (n - 3.0));
  const double p = mode == KurtosisMode::Paper ? 3.0 : 2.0;
  const double correction = 3.0 * std::pow(n - 1.0, p) / ((n - 2.0) * (n - 3.0));
  return lead * z4 - correction;
}

double skew(const TenderMoments& m) {
  require_n(m, 3, "skew");
  require_dispersion(m, "skew");
  const double n = m.n;
  double z3 = 0.0;
  for (double b : m.sorted_bids) {
    const double z = (b - m.mean) / m.std;
    z3 += z * z * z;
  }
  return n / ((n - 1.0) * (n - 2.0)) * z3;
}

double spd(const TenderMoments& m) {
  require_n(m, 2, "spd");
  return (m.max - m.min) / m.min;
}

double diffp(const TenderMoments& m) {
  require_n(m, 2, "diffp");
  return (m.sorted_bids[1] - m.sorted_bids[0]) / m.sorted_bids[0];
}

double d_abs(const TenderMoments& m) {
  require_n(m, 2, "d_abs");
  return m.sorted_bids[1] - m.sorted_bids[0];
}

double rd(const TenderMoments& m) {
  require_n(m, 3, "rd");
  if (!(m.losing_std > 0.0))
    throw Error(ErrorCode::ZeroDenominator, "rd: losing bids are tied");
  return (m.sorted_bids[1] - m.sorted_bids[0]) / m.losing_std;
}

double rdnor(const TenderMoments& m) {
  require_n(m, 2, "rdnor");
  double gap_sum = 0.0;
  for (int i = 1; i < m.n; ++i) gap_sum += m.sorted_bids[i] - m.sorted_bids[i - 1];
  const double mean_gap = gap_sum / (m.n - 1.0);
  if (!(mean_gap > 0.0)) throw Error(ErrorCode::ZeroDenominator, "rdnor: all bids tied");
  return (m.sorted_bids[1] - m.sorted_bids[0]) / mean_gap;
}

double rdalt(const TenderMoments& m) {
  require_n(m, 3, "rdalt");
  double gap_sum = 0.0;
  for (int i = 2; i < m.n; ++i) gap_sum += m.sorted_bids[i] - m.sorted_bids[i - 1];
  const double mean_gap = gap_sum / (m.n - 2.0);
  if (!(mean_gap > 0.0)) throw Error(ErrorCode::ZeroDenominator, "rdalt: losing bids tied");
  return (m.sorted_bids[1] - m.sorted_bids[0]) / mean_gap;
}

double ks_stat(const TenderMoments& m) {
  require_n(m, 2, "ks_stat");
  require_dispersion(m, "ks_stat");
  double d_plus = -1e300, d_minus = -1e300;
  for (int i = 1; i <= m.n; ++i) {
    const double x = m.sorted_bids[i - 1] / m.std;
    const double u = static_cast<double>(i) / (m.n + 1.0);
    d_plus = std::max(d_plus, x - u);
    d_minus = std::max(d_minus, u - x);
  }
  return std::max(d_plus, d_minus);
}

ScreenVector screen_vector(const TenderMoments& m, KurtosisMode mode) {
  ScreenVector sv;
  sv.nbrbids = m.n;
  sv.meanbids = m.mean;
  sv.stdbids = m.std;
  sv.cv = cv(m);
  sv.spd = spd(m);
  sv.diffp = diffp(m);
  sv.d = d_abs(m);
  if (m.n >= 4 && m.std > 0.0) sv.kurto = kurto(m, mode);
  if (m.n >= 3 && m.std > 0.0) sv.skew = skew(m);
  if (m.n >= 3 && m.losing_std > 0.0) sv.rd = rd(m);
  if (m.max > m.min) sv.rdnor = rdnor(m);
  if (m.n >= 3 && m.sorted_bids[m.n - 1] > m.sorted_bids[1]) sv.rdalt = rdalt(m);
  if (m.std > 0.0) sv.ks = ks_stat(m);
  return sv;
}

ScreenVector screen_vector(const Tender& t, KurtosisMode mode) {
  return screen_vector(moments(t), mode);
}

const std::vector<std::string>& ratio_screen_names() {
  static const std::vector<std::string> names = {"CV",    "KURTO", "SKEW", "SPD", "DIFFP",
                                                 "RD",    "RDNOR", "RDALT", "KS"};
  return names;
}

std::optional<double> screen_by_name(const ScreenVector& sv, const std::string& name) {
  if (name == "CV") return sv.cv;
  if (name == "KURTO") return sv.kurto;
  if (name == "SKEW") return sv.skew;
  if (name == "SPD") return sv.spd;
  if (name == "DIFFP") return sv.diffp;
  if (name == "RD") return sv.rd;
  if (name == "RDNOR") return sv.rdnor;
  if (name == "RDALT") return sv.rdalt;
  if (name == "KS") return sv.ks;
  if (name == "D") return sv.d;
  if (name == "MEANBIDS") return sv.meanbids;
  if (name == "STDBIDS") return sv.stdbids;
  if (name == "NBRBIDS") return static_cast<double>(sv.nbrbids);
  throw Error(ErrorCode::UndefinedScreen, "unknown screen name: " + name);
}

}  // namespace bidscreen
