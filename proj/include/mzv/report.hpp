#pragma once

#include <ostream>

#include <json.hpp>

#include "mzv/verify.hpp"

namespace mzv {

// JSON report: an array of CheckResult objects with the exact field names
// check_id, weight, depth, status, lhs, rhs, details. Key order and
// formatting are deterministic, so reports are byte-identical across runs.
inline void write_report_json(std::ostream& os, const std::vector<CheckResult>& results) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : results) {
    nlohmann::json obj;
    obj["check_id"] = r.check_id;
    obj["weight"] = r.weight;
    obj["depth"] = r.depth;
    obj["status"] = to_string(r.status);
    obj["lhs"] = r.lhs;
    obj["rhs"] = r.rhs;
    obj["details"] = r.details;
    arr.push_back(std::move(obj));
  }
  os << arr.dump(2) << '\n';
}

inline void write_report_csv(std::ostream& os, const std::vector<CheckResult>& results) {
  os << "check_id,N,r,status,lhs,rhs\n";
  for (const auto& r : results)
    os << r.check_id << ',' << r.weight << ',' << r.depth << ',' << to_string(r.status) << ','
       << r.lhs << ',' << r.rhs << '\n';
}

// CSV table (N, r, predicted_A, predicted_H, computed, provenance); the
// computed column is empty outside the range where ranks are evaluated.
inline void write_bk_csv(std::ostream& os, const BkTable& table) {
  os << "N,r,predicted_A,predicted_H,computed,provenance\n";
  for (const auto& row : table.rows) {
    os << row.weight << ',' << row.depth << ',' << row.predicted_a << ',' << row.predicted_h
       << ',';
    if (row.computed) os << *row.computed;
    os << ',' << row.provenance << '\n';
  }
}

// Coefficient table of a bivariate series as CSV (N, r, coefficient).
inline void write_series_csv(std::ostream& os, const BiSeries& s) {
  os << "N,r,coefficient\n";
  for (std::size_t n = 0; n <= s.order_x(); ++n)
    for (std::size_t r = 0; r <= s.order_y(); ++r)
      os << n << ',' << r << ',' << s.coeff(n, r).str() << '\n';
}

}  // namespace mzv
