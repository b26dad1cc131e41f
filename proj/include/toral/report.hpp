#pragma once

#include "toral/algebra.hpp"
#include "toral/lattice.hpp"
#include "toral/period_set.hpp"
#include "toral/periods.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace toral {

using json = nlohmann::json;

struct OracleData {
  std::uint32_t n_max = 0;
  PeriodWindow observed;

  friend bool operator==(const OracleData&, const OracleData&) = default;
};

/// Everything `toral classify` reports about one matrix.
struct Report {
  IntMatrix2 matrix;
  Invariants invariants;
  EigenStructure eigen;
  std::string minimal_poly;
  std::optional<int> finite_order;
  bool automorphism = false;
  int table_row = 0;
  PeriodSet per;
  PeriodSet mper;
  Period window = 12;  // truncation [1..window] shipped with per/mper
  std::optional<std::vector<Integer>> nielsen;
  std::optional<OracleData> oracle;

  friend bool operator==(const Report&, const Report&) = default;
};

struct ReportOptions {
  Period window = 12;
  std::optional<std::uint64_t> nielsen_limit;
  std::optional<std::uint32_t> oracle_n_max;
};

Report make_report(const IntMatrix2& a, const ReportOptions& options = {});

json to_json(const Report& report);
/// Inverse of to_json; throws std::invalid_argument on schema violations,
/// including a `window` list that disagrees with the symbolic set.
Report report_from_json(const json& j);

std::string render_text(const Report& report);

/// Oracle check of one classification. `sound` and `complete` are derived
/// from the stored sets on every call.
struct Verdict {
  IntMatrix2 matrix;
  int table_row = 0;
  PeriodSet per;
  Period window = 8;
  PeriodWindow classified_window;  // per ∩ [1..window]
  PeriodWindow observed;           // every cycle length seen on the scanned lattices
  std::uint32_t n_max = 0;
  std::uint32_t n_scanned = 0;

  bool sound() const;     // observed ⊆ per
  bool complete() const;  // classified_window ⊆ observed
  PeriodWindow unexpected() const;  // observed \ per
  PeriodWindow missing() const;     // classified_window \ observed
};

/// With `adaptive`, lattice growth stops once the classified window is seen.
Verdict verify_matrix(const IntMatrix2& a, Period window, std::uint32_t n_max, bool adaptive = true);

json to_json(const Verdict& verdict);

json integer_to_json(const Integer& v);
Integer integer_from_json(const json& j);
json to_json(const PeriodSet& set, Period window);
PeriodSet period_set_from_json(const json& j);
std::string window_string(const PeriodWindow& w);

}  // namespace toral
