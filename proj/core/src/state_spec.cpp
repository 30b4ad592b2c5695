// Copyright 2026 The macroq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "macroq/state_spec.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

#include "macroq/error.hpp"

namespace macroq {
namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(const std::string& msg) {
  throw Error(ErrorKind::kParseError, msg);
}

const json& field(const json& j, const char* name) {
  const auto it = j.find(name);
  if (it == j.end()) parse_fail(std::string("missing field '") + name + "'");
  return *it;
}

double real_field(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_number()) {
    parse_fail(std::string("field '") + name + "' must be a real number");
  }
  return v.get<double>();
}

std::complex<double> complex_field(const json& j, const char* name) {
  const json& v = field(j, name);
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
    return {v[0].get<double>(), v[1].get<double>()};
  }
  parse_fail(std::string("field '") + name +
             "' must be a number or a [re, im] pair");
}

StateSpec from_json(const json& j) {
  if (!j.is_object()) parse_fail("state must be a JSON object");
  const json& type_field = field(j, "type");
  if (!type_field.is_string()) parse_fail("field 'type' must be a string");
  const std::string type = type_field.get<std::string>();

  if (type == "coherent") return {CoherentSpec{complex_field(j, "beta")}};
  if (type == "fock") {
    const json& n = field(j, "n");
    if (!n.is_number_integer() || n.get<long long>() < 0) {
      parse_fail("field 'n' must be a nonnegative integer");
    }
    return {FockSpec{n.get<int>()}};
  }
  if (type == "displaced_thermal" || type == "thermal") {
    const double d = j.contains("d") ? real_field(j, "d") : 0.0;
    return {DisplacedThermalSpec{real_field(j, "V"), d}};
  }
  if (type == "sigma_interference" || type == "sigma") {
    return {SigmaInterferenceSpec{real_field(j, "V"), real_field(j, "d")}};
  }
  if (type == "rho_M") {
    return {RhoMSpec{real_field(j, "V"), real_field(j, "d")}};
  }
  if (type == "rho_m" || type == "rho_small_m") {
    return {RhoSmallMSpec{real_field(j, "p"), real_field(j, "V")}};
  }
  if (type == "cat") {
    Parity parity = Parity::kEven;
    if (j.contains("parity")) {
      const json& par = j["parity"];
      if (par == "even") {
        parity = Parity::kEven;
      } else if (par == "odd") {
        parity = Parity::kOdd;
      } else {
        parse_fail("field 'parity' must be \"even\" or \"odd\"");
      }
    }
    return {CatSpec{complex_field(j, "beta"), parity}};
  }
  if (type == "mixture") {
    const json& comps = field(j, "components");
    if (!comps.is_array()) parse_fail("field 'components' must be an array");
    MixtureSpec mix;
    for (const json& c : comps) {
      if (!c.is_object()) parse_fail("mixture component must be an object");
      mix.components.push_back({real_field(c, "weight"), from_json(field(c, "state"))});
    }
    return {std::move(mix)};
  }
  parse_fail("unknown state type '" + type + "'");
}

json complex_json(std::complex<double> v) {
  return json::array({v.real(), v.imag()});
}

json to_json(const StateSpec& spec) {
  return std::visit(
      [](const auto& s) -> json {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, CoherentSpec>) {
          return {{"type", "coherent"}, {"beta", complex_json(s.beta)}};
        } else if constexpr (std::is_same_v<T, FockSpec>) {
          return {{"type", "fock"}, {"n", s.n}};
        } else if constexpr (std::is_same_v<T, DisplacedThermalSpec>) {
          return {{"type", "displaced_thermal"}, {"V", s.variance},
                  {"d", s.displacement}};
        } else if constexpr (std::is_same_v<T, SigmaInterferenceSpec>) {
          return {{"type", "sigma_interference"}, {"V", s.variance},
                  {"d", s.displacement}};
        } else if constexpr (std::is_same_v<T, RhoMSpec>) {
          return {{"type", "rho_M"}, {"V", s.variance}, {"d", s.displacement}};
        } else if constexpr (std::is_same_v<T, RhoSmallMSpec>) {
          return {{"type", "rho_m"}, {"p", s.photon_weight}, {"V", s.variance}};
        } else if constexpr (std::is_same_v<T, CatSpec>) {
          return {{"type", "cat"}, {"beta", complex_json(s.beta)},
                  {"parity", s.parity == Parity::kEven ? "even" : "odd"}};
        } else {
          json comps = json::array();
          for (const auto& c : s.components) {
            comps.push_back({{"weight", c.weight}, {"state", to_json(c.state)}});
          }
          return {{"type", "mixture"}, {"components", comps}};
        }
      },
      spec.value);
}

}  // namespace

StateSpec parse_state_spec(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    parse_fail(std::string("invalid JSON: ") + e.what());
  }
  return from_json(j);
}

std::string state_spec_to_json(const StateSpec& spec) {
  return to_json(spec).dump();
}

std::string describe(const StateSpec& spec) {
  std::ostringstream os;
  os.precision(6);
  std::visit(
      [&os](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, CoherentSpec>) {
          os << "coherent(" << s.beta.real() << "," << s.beta.imag() << ")";
        } else if constexpr (std::is_same_v<T, FockSpec>) {
          os << "fock(" << s.n << ")";
        } else if constexpr (std::is_same_v<T, DisplacedThermalSpec>) {
          os << "displaced_thermal(V=" << s.variance << ",d=" << s.displacement << ")";
        } else if constexpr (std::is_same_v<T, SigmaInterferenceSpec>) {
          os << "sigma(V=" << s.variance << ",d=" << s.displacement << ")";
        } else if constexpr (std::is_same_v<T, RhoMSpec>) {
          os << "rho_M(V=" << s.variance << ",d=" << s.displacement << ")";
        } else if constexpr (std::is_same_v<T, RhoSmallMSpec>) {
          os << "rho_m(p=" << s.photon_weight << ",V=" << s.variance << ")";
        } else if constexpr (std::is_same_v<T, CatSpec>) {
          os << "cat(" << s.beta.real() << "," << s.beta.imag() << ","
             << (s.parity == Parity::kEven ? "even" : "odd") << ")";
        } else {
          os << "mixture(" << s.components.size() << ")";
        }
      },
      spec.value);
  return os.str();
}

}  // namespace macroq
