#include "qps/serialize.hpp"

#include <stdexcept>

#include <nlohmann/json.hpp>

namespace qps {

namespace {

using nlohmann::json;

json parse(const std::string& text, const char* what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw std::invalid_argument(std::string(what) + ": malformed JSON");
  return j;
}

}  // namespace

std::string frequency_to_json(const Frequency& om) {
  json j;
  json qs = json::array();
  for (const BigInt& a : om.quotients()) qs.push_back(a.str());
  j["quotients"] = std::move(qs);
  if (om.float_hint()) j["float_hint"] = *om.float_hint();
  return j.dump();
}

Frequency frequency_from_json(const std::string& text) {
  json j = parse(text, "frequency_from_json");
  if (!j.contains("quotients") || !j["quotients"].is_array())
    throw std::invalid_argument("frequency_from_json: missing quotients array");
  std::vector<BigInt> qs;
  qs.reserve(j["quotients"].size());
  for (const auto& item : j["quotients"]) {
    if (!item.is_string())
      throw std::invalid_argument("frequency_from_json: quotients must be decimal strings");
    qs.emplace_back(item.get<std::string>());
  }
  Frequency om = Frequency::from_quotients(std::move(qs));
  if (j.contains("float_hint")) om.set_float_hint(j["float_hint"].get<double>());
  return om;
}

std::string potential_to_json(const Potential& pot) {
  json j;
  json cs = json::array();
  for (const auto& [k, c] : pot.coeffs()) {
    json entry;
    entry["k"] = k;
    entry["re"] = c.real();
    entry["im"] = c.imag();
    cs.push_back(std::move(entry));
  }
  j["coeffs"] = std::move(cs);
  return j.dump();
}

Potential potential_from_json(const std::string& text) {
  json j = parse(text, "potential_from_json");
  if (!j.contains("coeffs") || !j["coeffs"].is_array())
    throw std::invalid_argument("potential_from_json: missing coeffs array");
  std::map<int, std::complex<double>> coeffs;
  for (const auto& entry : j["coeffs"]) {
    int k = entry.at("k").get<int>();
    double re = entry.at("re").get<double>();
    double im = entry.at("im").get<double>();
    coeffs[k] = {re, im};
  }
  return Potential(coeffs);
}

}  // namespace qps
