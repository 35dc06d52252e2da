#include "maxangle/pointset_io.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <random>
#include <stdexcept>

#include <json.hpp>

namespace maxangle {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kFracDigits = 9;

[[noreturn]] void bad_coord(const std::string& text, const std::string& why) {
  throw std::invalid_argument("bad coordinate \"" + text + "\": " + why);
}

}  // namespace

std::int64_t parse_coordinate(const std::string& text) {
  if (text.empty()) bad_coord(text, "empty");
  std::size_t i = 0;
  bool negative = false;
  if (text[i] == '+' || text[i] == '-') {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) bad_coord(text, "no digits");

  std::int64_t whole = 0;
  bool any_digit = false;
  for (; i < text.size() && text[i] >= '0' && text[i] <= '9'; ++i) {
    any_digit = true;
    whole = whole * 10 + (text[i] - '0');
    if (whole > static_cast<std::int64_t>(kMaxCoord)) bad_coord(text, "magnitude above 4e6");
  }
  std::int64_t frac = 0;
  if (i < text.size() && text[i] == '.') {
    ++i;
    int digits = 0;
    for (; i < text.size() && text[i] >= '0' && text[i] <= '9'; ++i) {
      any_digit = true;
      if (++digits > kFracDigits)
        bad_coord(text, "more than 9 fractional digits exceeds the 1e-9 grid");
      frac = frac * 10 + (text[i] - '0');
    }
    for (; digits < kFracDigits; ++digits) frac *= 10;
  }
  if (!any_digit || i != text.size()) bad_coord(text, "not a plain decimal number");
  const std::int64_t scaled = whole * kScale + frac;
  if (scaled > static_cast<std::int64_t>(kMaxCoord) * kScale)
    bad_coord(text, "magnitude above 4e6");
  return negative ? -scaled : scaled;
}

std::int64_t coordinate_from_double(double v) {
  if (!std::isfinite(v)) throw std::invalid_argument("coordinate is not finite");
  if (std::abs(v) > kMaxCoord)
    throw std::invalid_argument("coordinate magnitude above 4e6");
  return std::llround(v * static_cast<double>(kScale));
}

std::string coordinate_to_string(std::int64_t v) {
  std::string sign = v < 0 ? "-" : "";
  const std::uint64_t mag = v < 0 ? -static_cast<std::uint64_t>(v) : v;
  std::string whole = std::to_string(mag / kScale);
  std::string frac = std::to_string(mag % kScale);
  frac.insert(frac.begin(), kFracDigits - frac.size(), '0');
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  return sign + whole + (frac.empty() ? "" : "." + frac);
}

namespace {

std::int64_t coordinate_from_json(const nlohmann::json& v) {
  if (v.is_string()) return parse_coordinate(v.get<std::string>());
  if (v.is_number_integer()) {
    const double d = static_cast<double>(v.get<std::int64_t>());
    return coordinate_from_double(d);
  }
  if (v.is_number_float()) return coordinate_from_double(v.get<double>());
  throw std::invalid_argument("coordinate must be a number or a decimal string");
}

}  // namespace

PointSetFile read_point_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open point file: " + path);
  nlohmann::json doc = nlohmann::json::parse(in);  // parse_error carries the byte position

  if (!doc.is_object() || !doc.contains("points"))
    throw std::invalid_argument(path + ": expected an object with a \"points\" array");
  const auto& arr = doc["points"];
  if (!arr.is_array())
    throw std::invalid_argument(path + ": \"points\" must be an array of [x, y] pairs");

  PointSetFile f;
  for (const auto& entry : arr) {
    if (!entry.is_array() || entry.size() != 2)
      throw std::invalid_argument(path + ": each point must be an [x, y] pair");
    f.points.push_back({coordinate_from_json(entry[0]), coordinate_from_json(entry[1])});
  }
  if (doc.contains("label")) f.label = doc["label"].get<std::string>();
  return f;
}

std::string point_file_json(const PointSetFile& f) {
  nlohmann::ordered_json doc;
  if (!f.label.empty()) doc["label"] = f.label;
  auto& arr = doc["points"] = nlohmann::ordered_json::array();
  for (const Point& p : f.points)
    arr.push_back({coordinate_to_string(p.x), coordinate_to_string(p.y)});
  return doc.dump(2) + "\n";
}

void write_point_file(const PointSetFile& f, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write point file: " + path);
  out << point_file_json(f);
  if (!out) throw std::runtime_error("write failed: " + path);
}

PointSet parse_pointset(const std::string& path) {
  return PointSet::create(read_point_file(path).points);
}

PointSetFile gen_random(int n, std::uint64_t seed, Bbox box) {
  if (n <= 3) throw std::invalid_argument("gen_random requires n > 3");
  if (!(box.max_x > box.min_x) || !(box.max_y > box.min_y))
    throw std::invalid_argument("gen_random: empty bounding box");
  for (const double b : {box.min_x, box.min_y, box.max_x, box.max_y})
    if (std::abs(b) > kMaxCoord)
      throw std::invalid_argument("gen_random: bounding box exceeds the coordinate range");

  constexpr std::uint64_t kSteps = 1'000'000;
  std::mt19937_64 rng(seed);
  auto draw = [&](double lo, double hi) {
    const std::uint64_t k = rng() % (kSteps + 1);
    return coordinate_from_double(lo + (hi - lo) * (static_cast<double>(k) / kSteps));
  };

  PointSetFile f;
  long long attempts = 0;
  const long long budget = 1000LL * n;
  while (static_cast<int>(f.points.size()) < n) {
    if (++attempts > budget)
      throw std::runtime_error("gen_random: rejection budget exhausted; box too degenerate");
    const Point cand{draw(box.min_x, box.max_x), draw(box.min_y, box.max_y)};
    bool ok = true;
    const int m = static_cast<int>(f.points.size());
    for (int i = 0; ok && i < m; ++i) {
      if (f.points[i] == cand) ok = false;
      for (int j = i + 1; ok && j < m; ++j)
        if (orientation(f.points[i], f.points[j], cand) == Orientation::kCollinear) ok = false;
    }
    if (ok) f.points.push_back(cand);
  }
  f.label = "random-n" + std::to_string(n) + "-seed" + std::to_string(seed);
  return f;
}

PointSetFile gen_star(int m) {
  if (m < 3) throw std::invalid_argument("gen_star requires m >= 3");
  if (m % 2 == 0)
    throw std::invalid_argument(
        "gen_star requires odd m: with even m each antipodal pair is collinear with the center");

  for (const double offset : {0.0, 1e-6}) {
    PointSetFile f;
    for (int k = 0; k < m; ++k) {
      const double theta = 2.0 * kPi * k / m + offset;
      f.points.push_back(
          {coordinate_from_double(std::cos(theta)), coordinate_from_double(std::sin(theta))});
    }
    f.points.push_back({0, 0});
    if (!collinear_triple(f.points)) {
      f.label = "star-m" + std::to_string(m);
      return f;
    }
  }
  throw std::runtime_error("gen_star: grid rounding left collinear triples even after rotation");
}

}  // namespace maxangle
