#include <cmath>
#include <set>
#include <string>

#include <doctest.h>

#include "orbfuel/config.hpp"
#include "support.hpp"

using namespace orbfuel;
using testsupport::kDeg;

namespace {
const std::string kConfigDir = ORBFUEL_TEST_CONFIG_DIR;
}

TEST_CASE("the bundled four-plane config loads as documented") {
    const StudyConfig cfg = load_config(kConfigDir + "/starlink_like.json");
    REQUIRE(cfg.constellation.targets.size() == 12);
    CHECK(cfg.constellation.servicer_orbit.altitude == 550.0);
    std::set<double> planes;
    for (const CircularOrbit& t : cfg.constellation.targets) {
        planes.insert(t.inclination / kDeg);
        CHECK(t.altitude == 550.0);
    }
    CHECK(planes == std::set<double>{53.0, 53.2, 70.0, 97.6});
    CHECK(cfg.mission.n == 12);
    CHECK(cfg.mission.target_initial_mass == 1000.0);
    CHECK(cfg.mission.required_refuel == 200.0);
    CHECK(cfg.constellation.phasing.k1 == 1);
}

TEST_CASE("every bundled config loads and shares the trailing u-set") {
    for (const char* name : {"starlink_like", "set_b", "set_c", "set_d", "set_e"}) {
        const StudyConfig cfg = load_config(kConfigDir + "/" + name + ".json");
        REQUIRE(cfg.constellation.targets.size() == 12);
        for (std::size_t j = 0; j < 12; ++j) {
            const double expected = wrap_angle(-(static_cast<double>(j) + 1) * kTwoPi / 13.0);
            CHECK(cfg.constellation.targets[j].arg_latitude ==
                  doctest::Approx(expected).epsilon(1e-9));
        }
    }
}

TEST_CASE("missing targets array is a validation error") {
    CHECK_THROWS_AS(parse_config(R"({"constellation": {"altitude_km": 550,
        "servicer": {"inclination_deg": 53, "arg_latitude_deg": 0}}})"),
                    ValidationError);
}

TEST_CASE("out-of-domain angles are validation errors") {
    const std::string tpl = R"({"constellation": {"altitude_km": 550,
        "servicer": {"inclination_deg": 53, "arg_latitude_deg": 0},
        "targets": [{"inclination_deg": %I%, "arg_latitude_deg": %U%}]}})";
    auto with = [&](const std::string& inc, const std::string& u) {
        std::string text = tpl;
        text.replace(text.find("%I%"), 3, inc);
        text.replace(text.find("%U%"), 3, u);
        return text;
    };
    CHECK_THROWS_AS(parse_config(with("181", "10")), ValidationError);
    CHECK_THROWS_AS(parse_config(with("-1", "10")), ValidationError);
    CHECK_THROWS_AS(parse_config(with("53", "360")), ValidationError);
    CHECK_NOTHROW(parse_config(with("53", "359.9")));
}

TEST_CASE("malformed JSON is a parse error") {
    CHECK_THROWS_AS(parse_config("{ not json"), ParseError);
    CHECK_THROWS_AS(load_config(kConfigDir + "/does_not_exist.json"), ParseError);
}

TEST_CASE("bad sweep axes are validation errors") {
    const std::string base = R"({"constellation": {"altitude_km": 550,
        "servicer": {"inclination_deg": 53, "arg_latitude_deg": 0},
        "targets": [{"inclination_deg": 53, "arg_latitude_deg": 10}]},
        "sweeps": %S%})";
    auto with = [&](const std::string& sweeps) {
        std::string text = base;
        text.replace(text.find("%S%"), 3, sweeps);
        return text;
    };
    CHECK_THROWS_AS(parse_config(with(R"({"mass_ratio": {"start": 1, "stop": 2, "step": 0}})")),
                    ValidationError);
    CHECK_THROWS_AS(parse_config(with(R"({"mass_ratio": {"start": 3, "stop": 2, "step": 1}})")),
                    ValidationError);
    CHECK_THROWS_AS(parse_config(with(R"({"n_range": [0, 1]})")), ValidationError);
    CHECK_THROWS_AS(parse_config(with(R"({"n_range": [1, 5]})")), ValidationError);
    CHECK_THROWS_AS(parse_config(with(R"({"isp_pairs": []})")), ValidationError);
    CHECK_THROWS_AS(parse_config(with(R"({"pair": "B-D"})")), ValidationError);
    CHECK_THROWS_AS(parse_config(with(R"({"pair": "A-A"})")), ValidationError);
    CHECK_NOTHROW(parse_config(with(R"({"pair": "A-C"})")));
}

TEST_CASE("phasing policy fields are validated") {
    const std::string text = R"({"constellation": {"altitude_km": 550,
        "servicer": {"inclination_deg": 53, "arg_latitude_deg": 0},
        "targets": [{"inclination_deg": 53, "arg_latitude_deg": 10}]},
        "phasing": {"k1": 0, "k2": 1}})";
    CHECK_THROWS_AS(parse_config(text), ValidationError);
}

TEST_CASE("validation errors name the offending field") {
    try {
        parse_config(R"({"constellation": {"altitude_km": -1,
            "servicer": {"inclination_deg": 53, "arg_latitude_deg": 0},
            "targets": [{"inclination_deg": 53, "arg_latitude_deg": 10}]}})");
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("altitude_km") != std::string::npos);
    }
}

TEST_CASE("serialize then parse is the identity on semantic fields") {
    for (const char* name : {"starlink_like", "set_b", "set_e"}) {
        const StudyConfig a = load_config(kConfigDir + "/" + name + ".json");
        const StudyConfig b = parse_config(serialize_config(a));

        CHECK(b.constellation.gravity.mu == a.constellation.gravity.mu);
        CHECK(b.constellation.gravity.earth_radius == a.constellation.gravity.earth_radius);
        CHECK(b.mission.g0 == a.mission.g0);
        CHECK(b.constellation.servicer_orbit.altitude == a.constellation.servicer_orbit.altitude);
        CHECK(b.constellation.servicer_orbit.inclination ==
              doctest::Approx(a.constellation.servicer_orbit.inclination).epsilon(1e-15));
        REQUIRE(b.constellation.targets.size() == a.constellation.targets.size());
        for (std::size_t j = 0; j < a.constellation.targets.size(); ++j) {
            CHECK(b.constellation.targets[j].inclination ==
                  doctest::Approx(a.constellation.targets[j].inclination).epsilon(1e-15));
            CHECK(b.constellation.targets[j].arg_latitude ==
                  doctest::Approx(a.constellation.targets[j].arg_latitude).epsilon(1e-15));
        }
        CHECK(b.mission.servicer_final_mass == a.mission.servicer_final_mass);
        CHECK(b.mission.target_initial_mass == a.mission.target_initial_mass);
        CHECK(b.mission.required_refuel == a.mission.required_refuel);
        CHECK(b.mission.isp_servicer == a.mission.isp_servicer);
        CHECK(b.mission.isp_target == a.mission.isp_target);
        CHECK(b.constellation.phasing.k1 == a.constellation.phasing.k1);
        CHECK(b.constellation.phasing.k2 == a.constellation.phasing.k2);
        CHECK(b.optimizer_enabled == a.optimizer_enabled);
        CHECK(b.optimizer.num_starts == a.optimizer.num_starts);
        CHECK(b.optimizer.rng_seed == a.optimizer.rng_seed);
        CHECK(b.optimizer.convergence_tolerance == a.optimizer.convergence_tolerance);
        REQUIRE(b.sweeps.mass_ratio.has_value() == a.sweeps.mass_ratio.has_value());
        if (a.sweeps.mass_ratio) {
            CHECK(b.sweeps.mass_ratio->start == a.sweeps.mass_ratio->start);
            CHECK(b.sweeps.mass_ratio->stop == a.sweeps.mass_ratio->stop);
            CHECK(b.sweeps.mass_ratio->step == a.sweeps.mass_ratio->step);
        }
        CHECK(b.sweeps.n_range == a.sweeps.n_range);
        CHECK(b.sweeps.pair == a.sweeps.pair);
        // A second round trip is textually stable.
        CHECK(serialize_config(b) == serialize_config(a));
    }
}

TEST_CASE("architecture pair parsing") {
    CHECK(parse_architecture_pair("A-D") ==
          std::pair<Architecture, Architecture>{Architecture::A, Architecture::D});
    CHECK(parse_architecture_pair("A-B").second == Architecture::B);
    CHECK_THROWS_AS(parse_architecture_pair("AD"), ValidationError);
    CHECK_THROWS_AS(parse_architecture_pair("D-A"), ValidationError);
    CHECK_THROWS_AS(parse_architecture_pair("A-X"), ValidationError);
}
