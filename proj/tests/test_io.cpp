#include <doctest.h>

#include <algorithm>

#include "sqdist/io.hpp"

using namespace sqdist;
using namespace sqdist::io;

namespace {

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

std::size_t line_count(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("round12 and exact_string") {
    CHECK(round12(0.1 + 0.2) == 0.3);
    CHECK(round12(24.0) == 24.0);
    CHECK(round12(0.0) == 0.0);
    CHECK(round12(6.605551275463989) == 6.60555127546);
    CHECK(exact_string(ExactRational(-4)) == "-4");
    CHECK(exact_string(ExactRational(6, 4)) == "3/2");
    CHECK(exact_string(ExactRational(-1, 3)) == "-1/3");
}

TEST_CASE("partition and polynomial JSON") {
    const auto j = to_json(Partition::parse("1,2,2"));
    CHECK(j["parts"] == Json::array({2, 2, 1}));
    CHECK(j["n"] == 5);
    CHECK(j["t"] == 3);
    CHECK(j["h"] == 1);
    CHECK(j["s"] == 2);

    const auto f = to_json(char_poly_factored(Partition::parse("2,1,1")));
    CHECK(f["x_plus_4_power"] == 1);
    CHECK(f["x_plus_1_power"] == 1);
    CHECK(f["residual"]["coeffs"] == Json::array({"0", "-5", "1"}));
    CHECK(f["residual"]["ascending"] == true);
}

TEST_CASE("spectrum, inertia and energy JSON") {
    const auto s = to_json(full_spectrum(Partition::parse("2,2,1")));
    REQUIRE(s["exact"].size() == 2);
    CHECK(s["exact"][0]["value"] == "2");
    CHECK(s["exact"][0]["mult"] == 1);
    CHECK(s["exact"][1]["value"] == "-4");
    CHECK(s["exact"][1]["mult"] == 2);
    REQUIRE(s["isolated"].size() == 2);
    CHECK(s["isolated"][0]["value"] == 6.60555127546);
    CHECK(s["isolated"][1]["value"] == -0.605551275464);

    const auto in = to_json(inertia(Partition::parse("2,1,1")));
    CHECK(in["n_plus"] == 1);
    CHECK(in["n_zero"] == 1);
    CHECK(in["n_minus"] == 2);

    const auto e = to_json(energy(Partition::parse("3,2")));
    CHECK(e.dump() == R"({"integer_part":"24","theta":null,"value":24.0})");

    const auto e2 = to_json(energy(Partition::parse("2,2,1")));
    CHECK(e2["theta"].is_number());
    CHECK(e2["theta_lo"].get<double>() <= e2["theta"].get<double>());
    CHECK(e2["theta"].get<double>() <= e2["theta_hi"].get<double>());
}

TEST_CASE("scan and chain JSON / CSV") {
    const auto r = scan_energy(6, 3);
    const auto j = to_json(r);
    CHECK(j["kind"] == "energy");
    CHECK(j["h"].is_null());
    CHECK(j["entries"].size() == 3);
    CHECK(j["energy_max_unique"] == true);
    CHECK(j["violated_claims"].empty());

    const auto csv = scan_csv(r);
    CHECK(first_line(csv) == "partition,h,energy,energy_integer_part,theta,radius,n_plus,n_zero,n_minus,lambda_s1_sign");
    CHECK(line_count(csv) == 4);
    CHECK(csv.find('"' + Partition::parse("2,2,2").to_string() + '"') != std::string::npos);

    CHECK(to_json(scan_energy_h(17, 10, 6))["h"] == 6);
    CHECK(to_json(scan_radius(5, 2))["kind"] == "radius");

    const auto c = verify_chain_monotone(Partition::parse("4,1,1"), Partition::parse("2,2,2"));
    const auto cj = to_json(c);
    CHECK(cj["length"] == 2);
    CHECK(cj["links"][0]["radius_decreases"] == true);
    const auto ccsv = chain_csv(c);
    CHECK(first_line(ccsv) == "index,partition,energy,radius,radius_decreases,energy_non_increasing");
    CHECK(line_count(ccsv) == 4);
}

TEST_CASE("verification JSON / CSV") {
    const auto s = sweep(5);
    const auto j = summary_json(s);
    CHECK(j["summary"] == "0 failures");
    CHECK(j["partitions"] == s.records.size());
    const auto rec = to_json(s.records.front());
    CHECK(rec["passed"] == true);
    CHECK(rec["oracle_inertia"].size() == 3);
    const auto csv = sweep_csv(s);
    CHECK(line_count(csv) == s.records.size() + 1);
    CHECK(first_line(csv) == "partition,passed,max_eigenvalue_deviation,energy_deviation,det,det_relative_deviation");
}
