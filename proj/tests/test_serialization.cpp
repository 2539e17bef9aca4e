// Copyright 2026 The arealab Authors
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

#include "arealab/serialization.hpp"

#include <filesystem>
#include <random>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"

using namespace arealab;

TEST_CASE("property: states round trip through JSON") {
    std::mt19937_64 rng(1);
    const Lattice lat(2, 3, 3);
    for (int trial = 0; trial < 10; ++trial) {
        const auto s = oracle::random_sparse_state(lat, 15, rng);
        const auto back = state_from_json(Json::parse(state_to_json(s).dump()));
        CHECK(back.lattice() == lat);
        REQUIRE(back.support_size() == s.support_size());
        for (std::size_t i = 0; i < s.support_size(); ++i) {
            CHECK(back.terms()[i].config == s.terms()[i].config);
            CHECK(back.terms()[i].amplitude == s.terms()[i].amplitude);
        }
    }
}

TEST_CASE("state files") {
    const auto dir = std::filesystem::temp_directory_path() / "arealab_serialization_test";
    std::filesystem::create_directories(dir);
    const auto path = (dir / "state.json").string();
    const auto s = SparseState::basis(Lattice(2, 2, 3), config_from_string("1200"));
    write_state_file(path, s);
    CHECK(fidelity(read_state_file(path), s) == doctest::Approx(1.0));
    CHECK_THROWS_AS(read_state_file((dir / "missing.json").string()), std::invalid_argument);
    std::filesystem::remove_all(dir);
}

TEST_CASE("malformed state documents are rejected") {
    CHECK_THROWS_AS(state_from_json(Json::array()), std::invalid_argument);
    CHECK_THROWS_AS(state_from_json(Json::parse(R"({"D":1,"L":2,"d":2})")), std::invalid_argument);
    CHECK_THROWS_AS(state_from_json(Json::parse(R"({"D":1,"L":2,"d":2,"terms":[["01",1]]})")), std::invalid_argument);
    CHECK_THROWS_AS(state_from_json(Json::parse(R"({"D":1,"L":2,"d":2,"terms":[["01",2,0]]})")), std::invalid_argument);
    CHECK_NOTHROW(state_from_json(Json::parse(R"({"D":1,"L":2,"d":2,"terms":[["01",0,1]]})")));
}

TEST_CASE("regions") {
    const Region r = parse_region("0,1:2,3");
    CHECK(r.offset == Coord{0, 1});
    CHECK(r.lengths == Coord{2, 3});
    CHECK(region_from_json(region_to_json(r)) == r);
    CHECK_THROWS_AS(parse_region("0,1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_region("0:1,1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_region("a,b:1,1"), std::invalid_argument);
}

TEST_CASE("Pauli lists and Renyi labels") {
    const auto paulis = paulis_from_json(Json::parse(R"(["XZZXI","IXZZX"])"));
    REQUIRE(paulis.size() == 2);
    CHECK(paulis[1].letters() == "IXZZX");
    CHECK(paulis_to_json(paulis) == Json::parse(R"(["XZZXI","IXZZX"])"));
    CHECK_THROWS_AS(paulis_from_json(Json::parse(R"(["XQ"])")), std::invalid_argument);

    CHECK(alpha_label(kInfiniteAlpha) == "inf");
    CHECK(alpha_label(0.5) == "0.5");
    CHECK(parse_alpha("inf") == kInfiniteAlpha);
    CHECK(parse_alpha("2") == 2.0);
    CHECK_THROWS_AS(parse_alpha("-1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_alpha("2x"), std::invalid_argument);
}

TEST_CASE("report documents") {
    const auto audit = area_law_audit(SparseState::vacuum(Lattice(2, 2, 3)), 2);
    const Json j = to_json(audit);
    CHECK(j["passed"] == true);
    CHECK(j["minimal_c"] == 0.0);
    CHECK(j["records"].size() == audit.records.size());

    std::ostringstream csv;
    write_audit_csv(csv, audit);
    const std::string text = csv.str();
    CHECK(std::count(text.begin(), text.end(), '\n') == static_cast<long>(audit.records.size() + 1));

    const Json c = to_json(counting_report(103.0, 0.1, 1000000));
    CHECK(c["net_exceeds_budget"] == false);
    CHECK(c.contains("constant_convention"));
}
