#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qconv/metric.hpp"
#include "qconv/profiles.hpp"
#include "qconv/rational.hpp"

namespace qconv::lab {

using nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kProfileFormatVersion = 1;

/// {"exact": "n/d", "float": x}
ordered_json rational_json(const Rational& r);
/// Coordinates as "n/d" strings in subset-index order.
ordered_json point_json(const QuotientPoint& p);
QuotientPoint point_from_json(const ordered_json& j, int k);

/// Versioned ProfileSet record.
ordered_json profile_set_json(const ProfileSet& s);
ProfileSet profile_set_from_json(const ordered_json& j);

/// Point count and per-coordinate ranges.
ordered_json profile_summary(const ProfileSet& s);

ordered_json hausdorff_json(const HausdorffReport& h);

/// Long-format CSV: i,j,index_i,index_j,exact,float.
std::string distance_csv(const std::vector<std::vector<Rational>>& matrix, const std::vector<int>& indices);
/// Dense exact matrix of "n/d" strings and its float twin.
ordered_json matrix_json(const std::vector<std::vector<Rational>>& matrix);

std::string csv_double(double x);

}  // namespace qconv::lab
