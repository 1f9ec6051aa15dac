// Copyright 2026 The Chaoslab Authors
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

#include "chaoslab/serialize.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "chaoslab/errors.hpp"

namespace chaoslab {

namespace {

const nlohmann::json& need(const nlohmann::json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) {
    throw malformed_input(std::string("missing JSON field \"") + key + "\"");
  }
  return *it;
}

std::int64_t need_i64(const nlohmann::json& j, const char* key) {
  const auto& f = need(j, key);
  if (!f.is_number_integer()) {
    throw malformed_input(std::string("JSON field \"") + key + "\" must be an integer");
  }
  return f.get<std::int64_t>();
}

std::string need_string(const nlohmann::json& j, const char* key) {
  const auto& f = need(j, key);
  if (!f.is_string()) {
    throw malformed_input(std::string("JSON field \"") + key + "\" must be a string");
  }
  return f.get<std::string>();
}

std::vector<std::int64_t> need_i64_array(const nlohmann::json& j, const char* key) {
  const auto& f = need(j, key);
  if (!f.is_array()) {
    throw malformed_input(std::string("JSON field \"") + key + "\" must be an array");
  }
  std::vector<std::int64_t> out;
  out.reserve(f.size());
  for (const auto& e : f) {
    if (!e.is_number_integer()) {
      throw malformed_input(std::string("JSON field \"") + key +
                            "\" must hold integers only");
    }
    out.push_back(e.get<std::int64_t>());
  }
  return out;
}

bigint bigint_from_decimal(const std::string& text) {
  if (text.empty()) throw malformed_input("empty integer string");
  std::size_t i = text[0] == '-' || text[0] == '+' ? 1 : 0;
  if (i == text.size()) throw malformed_input("sign without digits");
  for (std::size_t k = i; k < text.size(); ++k) {
    if (text[k] < '0' || text[k] > '9') {
      throw malformed_input("invalid decimal integer string");
    }
  }
  // cpp_int's string constructor treats a leading 0 as an octal prefix;
  // trim the zeros so the digits read as decimal.
  while (i + 1 < text.size() && text[i] == '0') ++i;
  bigint mag(text.substr(i));
  return text[0] == '-' ? -mag : mag;
}

}  // namespace

nlohmann::json dyadic_to_json(const dyadic& d) {
  return nlohmann::json{{"m", d.magnitude().str()}, {"e", d.exponent()}, {"s", d.sign()}};
}

dyadic dyadic_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw malformed_input("scalar must be a JSON object");
  bigint mag = bigint_from_decimal(need_string(j, "m"));
  if (mag < 0) throw malformed_input("scalar mantissa must be non-negative");
  const std::int64_t e = need_i64(j, "e");
  const std::int64_t s = need_i64(j, "s");
  if (s < -1 || s > 1) throw malformed_input("scalar sign must be -1, 0 or 1");
  return dyadic::from_parts(static_cast<int>(s), std::move(mag), e);
}

nlohmann::json sparse_vec_to_json(const sparse_vec& v) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [k, c] : v.entries()) {
    entries.push_back(nlohmann::json::array({k, dyadic_to_json(c)}));
  }
  return nlohmann::json{{"entries", std::move(entries)}};
}

sparse_vec sparse_vec_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw malformed_input("vector must be a JSON object");
  const auto& entries = need(j, "entries");
  if (!entries.is_array()) throw malformed_input("\"entries\" must be an array");
  sparse_vec v;
  for (const auto& e : entries) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer()) {
      throw malformed_input("vector entries must be [index, scalar] pairs");
    }
    const auto k = e[0].get<std::int64_t>();
    if (k < 0) throw malformed_input("vector indices must be non-negative");
    v.accumulate(k, dyadic_from_json(e[1]));
  }
  return v;
}

std::string pretty(const sparse_vec& v) {
  if (v.is_zero()) return "0";
  std::string out;
  for (const auto& [k, c] : v.entries()) {
    const bool negative = c.sign() < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const dyadic a = abs(c);
    if (a.magnitude() == 1 && (a.exponent() < 0 || a.exponent() > 64)) {
      out += "2^" + std::to_string(a.exponent());
    } else {
      out += a.str();
    }
    out += " e_" + std::to_string(k);
  }
  return out;
}

nlohmann::json schedule_to_json(const schedule& s) {
  nlohmann::json j;
  j["phi"] = s.phi_table();
  j["delta"] = s.delta_table();
  std::vector<std::int64_t> tau(s.tau_table().begin() + 1, s.tau_table().end());
  std::vector<std::int64_t> mult(s.multiplier_table().begin() + 1,
                                 s.multiplier_table().end());
  j["tau"] = std::move(tau);
  j["b"] = s.b_table();
  j["N"] = std::move(mult);
  return j;
}

schedule schedule_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw malformed_input("schedule must be a JSON object");
  return schedule::from_parts(need_i64_array(j, "phi"), need_i64_array(j, "delta"),
                              need_i64_array(j, "tau"), need_i64_array(j, "b"),
                              need_i64_array(j, "N"));
}

nlohmann::json index_set_to_json(const index_set& a) {
  nlohmann::json j;
  j["elements"] = a.elements();
  j["horizon"] = a.horizon();
  if (a.progressions()) {
    nlohmann::json progs = nlohmann::json::array();
    for (const auto& [off, step] : *a.progressions()) {
      progs.push_back(nlohmann::json::array({off, step}));
    }
    j["progressions"] = std::move(progs);
  }
  return j;
}

index_set index_set_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw malformed_input("index set must be a JSON object");
  const std::int64_t horizon = need_i64(j, "horizon");
  if (auto it = j.find("progressions"); it != j.end()) {
    if (!it->is_array()) throw malformed_input("\"progressions\" must be an array");
    std::vector<std::pair<std::int64_t, std::int64_t>> progs;
    for (const auto& p : *it) {
      if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() ||
          !p[1].is_number_integer()) {
        throw malformed_input("progressions must be [offset, step] pairs");
      }
      progs.emplace_back(p[0].get<std::int64_t>(), p[1].get<std::int64_t>());
    }
    return index_set::from_progressions(std::move(progs), horizon);
  }
  return index_set(need_i64_array(j, "elements"), horizon);
}

nlohmann::json condition_report_to_json(const condition_report& r) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : r.entries) {
    nlohmann::json je{{"name", e.name}, {"pass", e.pass}, {"note", e.note}};
    if (e.first_violation) {
      je["first_violation"] = *e.first_violation;
    } else {
      je["first_violation"] = nullptr;
    }
    entries.push_back(std::move(je));
  }
  return nlohmann::json{{"conditions", std::move(entries)},
                        {"all_pass", r.all_pass()}};
}

nlohmann::json witness_report_to_json(const witness_report& r) {
  nlohmann::json ineqs = nlohmann::json::array();
  for (const auto& q : r.inequalities) {
    ineqs.push_back(nlohmann::json{{"description", q.description},
                                   {"lhs", q.lhs},
                                   {"relation", q.relation},
                                   {"rhs", q.rhs},
                                   {"holds", q.holds}});
  }
  return nlohmann::json{{"claim", r.claim},
                        {"objects", r.objects},
                        {"inequalities", std::move(ineqs)},
                        {"all_hold", r.all_hold()}};
}

nlohmann::json parse_json_text(const std::string& text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw malformed_input(std::string("invalid JSON: ") + e.what());
  }
}

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw malformed_input("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str());
}

void write_orbit_csv(std::ostream& os, const operator_t& op, const sparse_vec& v,
                     std::int64_t steps, const norm_kind& kind) {
  if (steps < 0) throw malformed_input("step count must be non-negative");
  os << "step,norm,approx\n";
  sparse_vec y = v;
  for (std::int64_t j = 0; j <= steps; ++j) {
    const norm_value nv = norm(y, kind);
    os << j << "," << nv.value.str() << "," << nv.value.to_double() << "\n";
    if (j < steps) y = op.apply(y);
  }
}

void write_profile_csv(std::ostream& os, const index_set& a) {
  os << "N,count,ratio,approx\n";
  const auto& elems = a.elements();
  std::size_t used = 0;
  std::int64_t count = 0;
  for (std::int64_t N = 0; N <= a.horizon(); ++N) {
    while (used < elems.size() && elems[used] <= N) {
      ++count;
      ++used;
    }
    os << N << "," << count << "," << count << "/" << (N + 1) << ","
       << (static_cast<double>(count) / static_cast<double>(N + 1)) << "\n";
  }
}

}  // namespace chaoslab
