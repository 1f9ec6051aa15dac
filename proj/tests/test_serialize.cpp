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

#include <cstdio>
#include <doctest.h>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "chaoslab/errors.hpp"
#include "chaoslab/serialize.hpp"

using namespace chaoslab;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("scalar JSON round-trip") {
  const std::vector<dyadic> samples = {
      dyadic(0), dyadic(1),        dyadic(-42),
      dyadic::pow2(-80),           dyadic::from_parts(1, 3, 100),
      dyadic::from_parts(-1, 12345678901234567LL, -2000000000LL)};
  for (const dyadic& d : samples) {
    const nlohmann::json j = dyadic_to_json(d);
    CHECK(j.contains("m"));
    CHECK(j.contains("e"));
    CHECK(j.contains("s"));
    CHECK(dyadic_from_json(j) == d);
  }

  CHECK_THROWS_AS((void)dyadic_from_json(nlohmann::json::array()),
                  malformed_input);
  CHECK_THROWS_AS((void)dyadic_from_json(nlohmann::json{{"m", "1"}, {"e", 0}}),
                  malformed_input);
  CHECK_THROWS_AS(
      (void)dyadic_from_json(nlohmann::json{{"m", "1"}, {"e", 0}, {"s", 2}}),
      malformed_input);
  CHECK_THROWS_AS(
      (void)dyadic_from_json(nlohmann::json{{"m", "x1"}, {"e", 0}, {"s", 1}}),
      malformed_input);
  CHECK_THROWS_AS(
      (void)dyadic_from_json(nlohmann::json{{"m", "1"}, {"e", "0"}, {"s", 1}}),
      malformed_input);
}

TEST_CASE("vector JSON round-trip") {
  sparse_vec v;
  v.accumulate(0, dyadic(4));
  v.accumulate(1376, -dyadic::pow2(-78));
  v.accumulate(7, dyadic::from_parts(1, 3, -2));
  const nlohmann::json j = sparse_vec_to_json(v);
  CHECK(j["entries"].size() == 3);
  CHECK(j["entries"][0][0] == 0);  // sorted by index
  CHECK(j["entries"][1][0] == 7);
  CHECK(sparse_vec_from_json(j) == v);

  CHECK(sparse_vec_from_json(sparse_vec_to_json(sparse_vec())).is_zero());

  // Duplicate indices accumulate; a cancelling pair leaves nothing behind.
  nlohmann::json dup = {{"entries",
                         {{3, dyadic_to_json(dyadic(1))},
                          {3, dyadic_to_json(dyadic(-1))}}}};
  CHECK(sparse_vec_from_json(dup).is_zero());

  CHECK_THROWS_AS((void)sparse_vec_from_json(nlohmann::json{{"entries", 3}}),
                  malformed_input);
  nlohmann::json neg = {{"entries", {{-1, dyadic_to_json(dyadic(1))}}}};
  CHECK_THROWS_AS((void)sparse_vec_from_json(neg), malformed_input);
  nlohmann::json bad_pair = {{"entries", {{1, dyadic_to_json(dyadic(1)), 2}}}};
  CHECK_THROWS_AS((void)sparse_vec_from_json(bad_pair), malformed_input);
}

TEST_CASE("basis expansions print compactly") {
  CHECK(pretty(sparse_vec()) == "0");

  sparse_vec v;
  v.accumulate(0, dyadic(4));
  v.accumulate(1376, -dyadic::pow2(-78));
  CHECK(pretty(v) == "4 e_0 - 2^-78 e_1376");

  sparse_vec w;
  w.accumulate(2, dyadic(1024));
  w.accumulate(3, dyadic::pow2(100));
  w.accumulate(5, dyadic::from_parts(1, 3, -2));
  CHECK(pretty(w) == "1024 e_2 + 2^100 e_3 + 0.75 e_5");

  sparse_vec neg;
  neg.accumulate(0, dyadic(-1));
  neg.accumulate(1, dyadic(1));
  CHECK(pretty(neg) == "-1 e_0 + 1 e_1");
}

TEST_CASE("schedule JSON round-trip") {
  for (const schedule& s :
       {schedule::small2(6), schedule::canonical(3), schedule::small2(1)}) {
    const nlohmann::json j = schedule_to_json(s);
    CHECK(j["b"].size() == static_cast<std::size_t>(s.prefix() + 2));
    CHECK(j["tau"].size() == static_cast<std::size_t>(s.prefix()));
    CHECK(j["N"].size() == static_cast<std::size_t>(s.prefix()));
    CHECK(schedule_from_json(j) == s);
  }

  nlohmann::json j = schedule_to_json(schedule::small2(3));
  j.erase("tau");
  CHECK_THROWS_AS((void)schedule_from_json(j), malformed_input);
  CHECK_THROWS_AS((void)schedule_from_json(nlohmann::json(7)), malformed_input);
}

TEST_CASE("index set JSON round-trip") {
  const index_set plain({4, 1, 9}, 12);
  const nlohmann::json pj = index_set_to_json(plain);
  CHECK_FALSE(pj.contains("progressions"));
  const index_set plain2 = index_set_from_json(pj);
  CHECK(plain2.elements() == plain.elements());
  CHECK(plain2.horizon() == plain.horizon());

  const index_set structured = index_set::from_progressions({{0, 3}, {1, 4}}, 50);
  const nlohmann::json sj = index_set_to_json(structured);
  REQUIRE(sj.contains("progressions"));
  const index_set structured2 = index_set_from_json(sj);
  CHECK(structured2.elements() == structured.elements());
  CHECK(structured2.progressions() == structured.progressions());

  CHECK_THROWS_AS((void)index_set_from_json(nlohmann::json{{"horizon", 5}}),
                  malformed_input);
  CHECK_THROWS_AS((void)index_set_from_json(nlohmann::json(3)), malformed_input);
}

TEST_CASE("condition and witness reports serialize fully") {
  const condition_report cr = schedule::small2(4).validate();
  const nlohmann::json cj = condition_report_to_json(cr);
  CHECK(cj["all_pass"] == true);
  CHECK(cj["conditions"].size() == cr.entries.size());
  CHECK(cj["conditions"][0].contains("name"));
  CHECK(cj["conditions"][0]["pass"] == true);
  CHECK(cj["conditions"][0]["first_violation"].is_null());

  witness_report wr;
  wr.claim = "demo";
  wr.objects["answer"] = 42;
  wr.require("it holds", "1", "<", "2", true);
  wr.require("it fails", "2", "<", "1", false);
  const nlohmann::json wj = witness_report_to_json(wr);
  CHECK(wj["claim"] == "demo");
  CHECK(wj["objects"]["answer"] == 42);
  CHECK(wj["inequalities"].size() == 2);
  CHECK(wj["inequalities"][0]["holds"] == true);
  CHECK(wj["inequalities"][1]["description"] == "it fails");
  CHECK(wj["all_hold"] == false);
}

TEST_CASE("JSON text parsing maps failures to typed errors") {
  CHECK(parse_json_text("{\"a\": [1, 2]}")["a"][1] == 2);
  CHECK_THROWS_AS((void)parse_json_text("{ bad"), malformed_input);
  CHECK_THROWS_AS((void)parse_json_text(""), malformed_input);
  CHECK_THROWS_AS((void)load_json_file("/nonexistent/path.json"),
                  malformed_input);

  const std::string path = "serialize_roundtrip_tmp.json";
  {
    std::ofstream out(path);
    out << schedule_to_json(schedule::small2(2)).dump();
  }
  CHECK(schedule_from_json(load_json_file(path)) == schedule::small2(2));
  std::remove(path.c_str());
}

TEST_CASE("orbit CSV lists one exact norm per step") {
  const schedule s = schedule::small2(3);
  const operator_t op(s);
  std::ostringstream out;
  write_orbit_csv(out, op, sparse_vec::basis(0, dyadic(2)), 2, norm_kind::l1());
  const std::vector<std::string> rows = lines_of(out.str());
  REQUIRE(rows.size() == 4);
  CHECK(rows[0] == "step,norm,approx");
  CHECK(rows[1] == "0,2,2");
  CHECK(rows[2] == "1,2,2");

  // The lp writer reports the p-th power of the norm, which stays exact.
  std::ostringstream lp;
  write_orbit_csv(lp, op, sparse_vec::basis(0, dyadic(2)), 0, norm_kind::lp(2));
  CHECK(lines_of(lp.str())[1] == "0,4,4");

  std::ostringstream sink;
  CHECK_THROWS_AS(
      write_orbit_csv(sink, op, sparse_vec::basis(0), -1, norm_kind::l1()),
      malformed_input);
}

TEST_CASE("profile CSV carries exact prefix ratios") {
  std::ostringstream out;
  write_profile_csv(out, index_set({0, 2, 4}, 5));
  const std::vector<std::string> rows = lines_of(out.str());
  REQUIRE(rows.size() == 7);
  CHECK(rows[0] == "N,count,ratio,approx");
  CHECK(rows[1] == "0,1,1/1,1");
  CHECK(rows[2] == "1,1,1/2,0.5");
  CHECK(rows[4] == "3,2,2/4,0.5");
}
