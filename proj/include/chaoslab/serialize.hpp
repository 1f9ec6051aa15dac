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

#ifndef CHAOSLAB_SERIALIZE_HPP
#define CHAOSLAB_SERIALIZE_HPP

#include <cstdint>
#include <iosfwd>
#include <json.hpp>
#include <string>

#include "chaoslab/density.hpp"
#include "chaoslab/dyadic.hpp"
#include "chaoslab/operator_t.hpp"
#include "chaoslab/schedule.hpp"
#include "chaoslab/seqspace.hpp"
#include "chaoslab/verify.hpp"

namespace chaoslab {

/// Exact interchange forms. Scalars are {"m": "<decimal mantissa>",
/// "e": <exponent>, "s": <-1|0|1>}; vectors are sorted [index, scalar]
/// pairs with no zero entries; malformed documents throw malformed_input.

nlohmann::json dyadic_to_json(const dyadic& d);
dyadic dyadic_from_json(const nlohmann::json& j);

nlohmann::json sparse_vec_to_json(const sparse_vec& v);
sparse_vec sparse_vec_from_json(const nlohmann::json& j);

/// Human-readable basis expansion, e.g. "4 e_0 - 2^-78 e_1376"; "0" for the
/// zero vector. Pure powers of two print as "2^e"; other coefficients use
/// the exact dyadic rendering.
std::string pretty(const sparse_vec& v);

nlohmann::json schedule_to_json(const schedule& s);
schedule schedule_from_json(const nlohmann::json& j);

nlohmann::json index_set_to_json(const index_set& a);
index_set index_set_from_json(const nlohmann::json& j);

nlohmann::json condition_report_to_json(const condition_report& r);
nlohmann::json witness_report_to_json(const witness_report& r);

/// Parses text as JSON, mapping parse failures to malformed_input.
nlohmann::json parse_json_text(const std::string& text);
/// Reads and parses a JSON document from a file path.
nlohmann::json load_json_file(const std::string& path);

/// Orbit experiment: one row per step with the exact norm and a decimal
/// approximation. Columns: step,norm,approx. For lp kinds the norm column
/// carries the p-th power of the norm (the exact quantity).
void write_orbit_csv(std::ostream& os, const operator_t& op, const sparse_vec& v,
                     std::int64_t steps, const norm_kind& kind);

/// Density profile: columns N,count,ratio,approx with exact p/q ratios.
void write_profile_csv(std::ostream& os, const index_set& a);

}  // namespace chaoslab

#endif  // CHAOSLAB_SERIALIZE_HPP
