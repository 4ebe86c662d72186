#ifndef QBOSON_SERIALIZE_HPP
#define QBOSON_SERIALIZE_HPP

#include <json.hpp>

#include "qboson/spectral.hpp"
#include "qboson/state.hpp"

namespace qboson {

using Json = nlohmann::ordered_json;

// StateFn wire format: an array of {weight: [int,...], re, im} records in
// float mode, {weight, num, den} in exact mode. Weight order is the map
// order, so output is deterministic.

inline Json to_json(const ComplexState& f) {
  Json arr = Json::array();
  for (const auto& [w, v] : f.support()) {
    Json rec;
    rec["weight"] = w.parts();
    rec["re"] = v.real();
    rec["im"] = v.imag();
    arr.push_back(std::move(rec));
  }
  return arr;
}

inline Json to_json(const ExactState& f) {
  Json arr = Json::array();
  for (const auto& [w, v] : f.support()) {
    Json rec;
    rec["weight"] = w.parts();
    rec["num"] = numerator(v).str();
    rec["den"] = denominator(v).str();
    arr.push_back(std::move(rec));
  }
  return arr;
}

inline ComplexState complex_state_from_json(const Json& arr, int grade) {
  ComplexState f(grade);
  for (const auto& rec : arr) {
    Weight w(rec.at("weight").get<std::vector<int>>());
    f.add(w, Complex(rec.at("re").get<double>(), rec.at("im").get<double>()));
  }
  return f;
}

inline Json to_json(const SpectralFn& fhat) {
  Json arr = Json::array();
  for (size_t i = 0; i < fhat.size(); ++i) {
    Json rec;
    rec["xi"] = fhat.grid->nodes[i];
    rec["re"] = fhat.values[i].real();
    rec["im"] = fhat.values[i].imag();
    arr.push_back(std::move(rec));
  }
  return arr;
}

}  // namespace qboson

#endif
