#include <json.hpp>
#include <sstream>

#include "qtail/errors.hpp"
#include "qtail/series.hpp"

namespace qtail {

std::string to_json(const TruncatedSeries& s) {
  nlohmann::ordered_json j;
  j["grid"] = s.grid();
  j["offset"] = s.offset();
  if (s.is_exact()) {
    j["trunc"] = nullptr;
  } else {
    j["trunc"] = s.trunc();
  }
  auto coeffs = nlohmann::json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(c.get_str());
  j["coeffs"] = std::move(coeffs);
  return j.dump();
}

TruncatedSeries series_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionViolated(std::string("malformed series JSON: ") + e.what());
  }
  try {
    const int grid = j.at("grid").get<int>();
    const auto offset = j.at("offset").get<std::int64_t>();
    std::int64_t trunc = TruncatedSeries::kExact;
    if (!j.at("trunc").is_null()) trunc = j.at("trunc").get<std::int64_t>();
    std::vector<Integer> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.emplace_back(c.get<std::string>(), 10);
    return {grid, offset, std::move(coeffs), trunc};
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionViolated(std::string("malformed series JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw PreconditionViolated(std::string("malformed coefficient: ") + e.what());
  }
}

std::string to_csv(const TruncatedSeries& s) {
  std::ostringstream os;
  os << "exponent,coefficient\n";
  for (std::size_t i = 0; i < s.coeffs().size(); ++i) {
    if (sgn(s.coeffs()[i]) == 0) continue;
    os << Exponent(s.offset() + static_cast<std::int64_t>(i), s.grid()).str() << "," << s.coeffs()[i].get_str()
       << "\n";
  }
  return os.str();
}

}  // namespace qtail
