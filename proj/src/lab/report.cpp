#include "qconv/lab/report.hpp"

#include <charconv>

#include "qconv/error.hpp"

namespace qconv::lab {

ordered_json rational_json(const Rational& r) {
  return {{"exact", r.to_string()}, {"float", r.to_double()}};
}

ordered_json point_json(const QuotientPoint& p) {
  ordered_json arr = ordered_json::array();
  for (const auto& c : p.coords) arr.push_back(c.to_string());
  return arr;
}

QuotientPoint point_from_json(const ordered_json& j, int k) {
  if (!j.is_array()) throw InvalidArgumentError("profile point must be an array of \"num/den\" strings");
  std::vector<Rational> coords;
  for (const auto& c : j) coords.push_back(Rational::parse(c.get<std::string>()));
  return QuotientPoint(k, std::move(coords));
}

ordered_json profile_set_json(const ProfileSet& s) {
  ordered_json j;
  j["format"] = "qconv-profile-set";
  j["version"] = kProfileFormatVersion;
  j["k"] = s.k();
  j["mode"] = std::string(mode_name(s.mode()));
  j["strategy"] = std::string(strategy_name(s.strategy().kind));
  j["seed"] = s.strategy().seed;
  j["samples"] = s.strategy().samples;
  j["source"] = s.source();
  j["index_convention"] = "coordinate I = sum over i in I of 2^(i-1)";
  ordered_json pts = ordered_json::array();
  for (const auto& p : s.points()) pts.push_back(point_json(p));
  j["points"] = std::move(pts);
  return j;
}

ProfileSet profile_set_from_json(const ordered_json& j) {
  if (j.value("format", "") != "qconv-profile-set") throw InvalidArgumentError("not a profile-set record");
  if (j.at("version").get<int>() != kProfileFormatVersion) {
    throw InvalidArgumentError("unsupported profile-set version " + j.at("version").dump());
  }
  const int k = j.at("k").get<int>();
  EnumStrategy strategy;
  strategy.kind = parse_strategy_kind(j.at("strategy").get<std::string>());
  strategy.seed = j.at("seed").get<std::uint64_t>();
  strategy.samples = j.at("samples").get<std::uint64_t>();
  std::vector<QuotientPoint> pts;
  for (const auto& p : j.at("points")) pts.push_back(point_from_json(p, k));
  return ProfileSet(k, parse_mode(j.at("mode").get<std::string>()), strategy, std::move(pts),
                    j.at("source").get<std::string>());
}

ordered_json profile_summary(const ProfileSet& s) {
  ordered_json j;
  j["points"] = s.size();
  ordered_json ranges = ordered_json::array();
  if (!s.empty()) {
    const std::size_t dim = s.points().front().coords.size();
    for (std::size_t c = 0; c < dim; ++c) {
      Rational lo = s.points().front().coords[c], hi = lo;
      for (const auto& p : s.points()) {
        lo = std::min(lo, p.coords[c]);
        hi = std::max(hi, p.coords[c]);
      }
      ranges.push_back({{"index", c}, {"min", lo.to_string()}, {"max", hi.to_string()}});
    }
  }
  j["coordinate_ranges"] = std::move(ranges);
  return j;
}

ordered_json hausdorff_json(const HausdorffReport& h) {
  return {{"distance", rational_json(h.distance)},
          {"directed_ab", rational_json(h.directed_ab)},
          {"directed_ba", rational_json(h.directed_ba)},
          {"witness_ab", point_json(h.witness_ab)},
          {"witness_ba", point_json(h.witness_ba)}};
}

std::string csv_double(double x) {
  char buf[40];
  const auto end = std::to_chars(buf, buf + sizeof buf, x).ptr;  // shortest round-trip form
  return {buf, end};
}

std::string distance_csv(const std::vector<std::vector<Rational>>& matrix, const std::vector<int>& indices) {
  std::string out = "i,j,index_i,index_j,exact,float\n";
  for (std::size_t i = 0; i < matrix.size(); ++i)
    for (std::size_t j = 0; j < matrix[i].size(); ++j) {
      out += std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(indices[i]) + "," +
             std::to_string(indices[j]) + "," + matrix[i][j].to_string() + "," + csv_double(matrix[i][j].to_double()) +
             "\n";
    }
  return out;
}

ordered_json matrix_json(const std::vector<std::vector<Rational>>& matrix) {
  ordered_json exact = ordered_json::array(), approx = ordered_json::array();
  for (const auto& row : matrix) {
    ordered_json e = ordered_json::array(), f = ordered_json::array();
    for (const auto& x : row) {
      e.push_back(x.to_string());
      f.push_back(x.to_double());
    }
    exact.push_back(std::move(e));
    approx.push_back(std::move(f));
  }
  return {{"exact", std::move(exact)}, {"float", std::move(approx)}};
}

}  // namespace qconv::lab
