#include "orbfuel/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace orbfuel {

namespace {

using nlohmann::json;

constexpr double kDegToRad = 3.14159265358979323847 / 180.0;

[[noreturn]] void fail(const std::string& field, const std::string& why) {
    throw ValidationError("config field '" + field + "': " + why);
}

const json* find(const json& obj, const std::string& key) {
    auto it = obj.find(key);
    return it == obj.end() ? nullptr : &*it;
}

double get_number(const json& obj, const std::string& key, const std::string& path,
                  std::optional<double> fallback = std::nullopt) {
    const json* v = find(obj, key);
    if (!v) {
        if (fallback) return *fallback;
        fail(path + "." + key, "missing");
    }
    if (!v->is_number()) fail(path + "." + key, "must be a number");
    return v->get<double>();
}

std::int64_t get_integer(const json& obj, const std::string& key, const std::string& path,
                         std::optional<std::int64_t> fallback = std::nullopt) {
    const json* v = find(obj, key);
    if (!v) {
        if (fallback) return *fallback;
        fail(path + "." + key, "missing");
    }
    if (!v->is_number_integer()) fail(path + "." + key, "must be an integer");
    return v->get<std::int64_t>();
}

double angle_deg_to_rad(const json& obj, const std::string& key, const std::string& path,
                        double lo_deg, double hi_deg, bool hi_inclusive,
                        std::optional<double> fallback = std::nullopt) {
    const double deg = get_number(obj, key, path, fallback);
    const bool ok = deg >= lo_deg && (hi_inclusive ? deg <= hi_deg : deg < hi_deg);
    if (!ok) {
        fail(path + "." + key, "must lie in [" + std::to_string(lo_deg) + ", " +
                                   std::to_string(hi_deg) + (hi_inclusive ? "]" : ")") +
                                   " degrees");
    }
    return deg * kDegToRad;
}

json section(const json& root, const std::string& name) {
    const json* v = find(root, name);
    if (!v) return json::object();
    if (!v->is_object()) fail(name, "must be an object");
    return *v;
}

CircularOrbit parse_orbit(const json& obj, double altitude, const std::string& path) {
    CircularOrbit orbit;
    orbit.altitude = altitude;
    orbit.inclination = angle_deg_to_rad(obj, "inclination_deg", path, 0.0, 180.0, true);
    orbit.arg_latitude = angle_deg_to_rad(obj, "arg_latitude_deg", path, 0.0, 360.0, false);
    return orbit;
}

json orbit_to_json(const CircularOrbit& orbit) {
    return json{{"inclination_deg", orbit.inclination / kDegToRad},
                {"arg_latitude_deg", orbit.arg_latitude / kDegToRad}};
}

}  // namespace

std::pair<Architecture, Architecture> parse_architecture_pair(const std::string& text) {
    auto letter = [&](char ch) -> Architecture {
        switch (ch) {
            case 'A': return Architecture::A;
            case 'B': return Architecture::B;
            case 'C': return Architecture::C;
            case 'D': return Architecture::D;
            default: fail("pair", "unknown architecture '" + std::string(1, ch) + "'");
        }
    };
    if (text.size() != 3 || text[1] != '-') fail("pair", "expected the form X-Y, got '" + text + "'");
    const Architecture lhs = letter(text[0]);
    const Architecture rhs = letter(text[2]);
    if (lhs != Architecture::A) fail("pair", "the left architecture must be the non-cooperative A");
    if (rhs == Architecture::A) fail("pair", "the right architecture must be cooperative (B, C or D)");
    return {lhs, rhs};
}

StudyConfig parse_config(const std::string& json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }
    if (!root.is_object()) throw ValidationError("config root must be a JSON object");

    StudyConfig cfg;

    const json gravity = section(root, "gravity");
    cfg.constellation.gravity.mu = get_number(gravity, "mu_km3_s2", "gravity", 398600.4418);
    cfg.constellation.gravity.earth_radius =
        get_number(gravity, "earth_radius_km", "gravity", 6378.137);
    cfg.mission.g0 = get_number(gravity, "g0_m_s2", "gravity", kStandardGravity);
    if (cfg.constellation.gravity.mu <= 0.0) fail("gravity.mu_km3_s2", "must be > 0");
    if (cfg.constellation.gravity.earth_radius <= 0.0) fail("gravity.earth_radius_km", "must be > 0");
    if (cfg.mission.g0 <= 0.0) fail("gravity.g0_m_s2", "must be > 0");

    const json* constellation = find(root, "constellation");
    if (!constellation) fail("constellation", "missing");
    const double altitude = get_number(*constellation, "altitude_km", "constellation", 550.0);
    if (altitude <= 0.0) fail("constellation.altitude_km", "must be > 0");
    const json* servicer = find(*constellation, "servicer");
    if (!servicer || !servicer->is_object()) fail("constellation.servicer", "missing");
    cfg.constellation.servicer_orbit = parse_orbit(*servicer, altitude, "constellation.servicer");
    const json* targets = find(*constellation, "targets");
    if (!targets || !targets->is_array() || targets->empty()) {
        fail("constellation.targets", "must be a non-empty array");
    }
    for (std::size_t j = 0; j < targets->size(); ++j) {
        cfg.constellation.targets.push_back(parse_orbit(
            (*targets)[j], altitude, "constellation.targets[" + std::to_string(j) + "]"));
    }

    const json mission = section(root, "mission");
    cfg.mission.n = static_cast<int>(cfg.constellation.targets.size());
    cfg.mission.servicer_final_mass =
        get_number(mission, "servicer_final_mass_kg", "mission", 500.0);
    cfg.mission.target_initial_mass =
        get_number(mission, "target_initial_mass_kg", "mission", 1000.0);
    cfg.mission.required_refuel = get_number(mission, "required_refuel_kg", "mission", 200.0);
    cfg.mission.isp_servicer = get_number(mission, "isp_servicer_s", "mission", 300.0);
    cfg.mission.isp_target = get_number(mission, "isp_target_s", "mission", 300.0);
    if (cfg.mission.servicer_final_mass <= 0.0) fail("mission.servicer_final_mass_kg", "must be > 0");
    if (cfg.mission.target_initial_mass <= 0.0) fail("mission.target_initial_mass_kg", "must be > 0");
    if (cfg.mission.required_refuel < 0.0) fail("mission.required_refuel_kg", "must be >= 0");
    if (cfg.mission.isp_servicer <= 0.0) fail("mission.isp_servicer_s", "must be > 0");
    if (cfg.mission.isp_target <= 0.0) fail("mission.isp_target_s", "must be > 0");

    const json phasing = section(root, "phasing");
    cfg.constellation.phasing.k1 = static_cast<int>(get_integer(phasing, "k1", "phasing", 1));
    cfg.constellation.phasing.k2 = static_cast<int>(get_integer(phasing, "k2", "phasing", 1));
    if (cfg.constellation.phasing.k1 < 1) fail("phasing.k1", "must be >= 1");
    if (cfg.constellation.phasing.k2 < 0) fail("phasing.k2", "must be >= 0");

    const json optimizer = section(root, "optimizer");
    cfg.optimizer_enabled = optimizer.value("enabled", false);
    cfg.optimizer.num_starts =
        static_cast<int>(get_integer(optimizer, "num_starts", "optimizer", 44));
    cfg.optimizer.rng_seed =
        static_cast<std::uint64_t>(get_integer(optimizer, "rng_seed", "optimizer", 1));
    cfg.optimizer.max_local_iterations =
        static_cast<int>(get_integer(optimizer, "max_local_iterations", "optimizer", 200));
    cfg.optimizer.convergence_tolerance =
        get_number(optimizer, "convergence_tolerance_kg", "optimizer", 1e-6);
    if (cfg.optimizer.num_starts < 1) fail("optimizer.num_starts", "must be >= 1");
    if (cfg.optimizer.max_local_iterations < 1) fail("optimizer.max_local_iterations", "must be >= 1");
    if (cfg.optimizer.convergence_tolerance <= 0.0) {
        fail("optimizer.convergence_tolerance_kg", "must be > 0");
    }
    if (const json* bounds = find(optimizer, "bounds_inclination_deg")) {
        if (!bounds->is_array() || bounds->size() != 2 || !(*bounds)[0].is_number() ||
            !(*bounds)[1].is_number()) {
            fail("optimizer.bounds_inclination_deg", "must be [lo_deg, hi_deg]");
        }
        const double lo = (*bounds)[0].get<double>();
        const double hi = (*bounds)[1].get<double>();
        if (lo < 0.0 || hi > 180.0 || lo > hi) {
            fail("optimizer.bounds_inclination_deg", "must satisfy 0 <= lo <= hi <= 180");
        }
        cfg.optimizer.bounds_inclination = {{lo * kDegToRad, hi * kDegToRad}};
    }

    const json sweeps = section(root, "sweeps");
    if (const json* ratio = find(sweeps, "mass_ratio")) {
        RatioRange range;
        range.start = get_number(*ratio, "start", "sweeps.mass_ratio");
        range.stop = get_number(*ratio, "stop", "sweeps.mass_ratio");
        range.step = get_number(*ratio, "step", "sweeps.mass_ratio");
        if (range.step <= 0.0) fail("sweeps.mass_ratio.step", "must be > 0");
        if (range.stop < range.start) fail("sweeps.mass_ratio", "stop must be >= start");
        if (range.start <= 0.0) fail("sweeps.mass_ratio.start", "must be > 0");
        cfg.sweeps.mass_ratio = range;
    }
    if (const json* nr = find(sweeps, "n_range")) {
        if (!nr->is_array() || nr->size() != 2 || !(*nr)[0].is_number_integer() ||
            !(*nr)[1].is_number_integer()) {
            fail("sweeps.n_range", "must be [lo, hi]");
        }
        const int lo = (*nr)[0].get<int>();
        const int hi = (*nr)[1].get<int>();
        if (lo < 1 || hi < lo) fail("sweeps.n_range", "must satisfy 1 <= lo <= hi");
        if (hi > static_cast<int>(cfg.constellation.targets.size())) {
            fail("sweeps.n_range", "hi exceeds the target count");
        }
        cfg.sweeps.n_range = {{lo, hi}};
    }
    if (const json* pairs = find(sweeps, "isp_pairs")) {
        if (!pairs->is_array() || pairs->empty()) fail("sweeps.isp_pairs", "must be a non-empty array");
        for (std::size_t j = 0; j < pairs->size(); ++j) {
            const std::string path = "sweeps.isp_pairs[" + std::to_string(j) + "]";
            IspPair pair;
            pair.isp_target = get_number((*pairs)[j], "isp_target_s", path);
            pair.isp_servicer = get_number((*pairs)[j], "isp_servicer_s", path);
            if (pair.isp_target <= 0.0 || pair.isp_servicer <= 0.0) fail(path, "isp must be > 0");
            cfg.sweeps.isp_pairs.push_back(pair);
        }
    }
    if (const json* pair = find(sweeps, "pair")) {
        if (!pair->is_string()) fail("sweeps.pair", "must be a string like \"A-D\"");
        cfg.sweeps.pair = parse_architecture_pair(pair->get<std::string>());
    }

    return cfg;
}

StudyConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open config file '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config(text.str());
}

std::string serialize_config(const StudyConfig& cfg) {
    json root;
    root["gravity"] = {{"mu_km3_s2", cfg.constellation.gravity.mu},
                       {"earth_radius_km", cfg.constellation.gravity.earth_radius},
                       {"g0_m_s2", cfg.mission.g0}};
    json targets = json::array();
    for (const CircularOrbit& t : cfg.constellation.targets) targets.push_back(orbit_to_json(t));
    root["constellation"] = {{"altitude_km", cfg.constellation.servicer_orbit.altitude},
                             {"servicer", orbit_to_json(cfg.constellation.servicer_orbit)},
                             {"targets", targets}};
    root["mission"] = {{"servicer_final_mass_kg", cfg.mission.servicer_final_mass},
                       {"target_initial_mass_kg", cfg.mission.target_initial_mass},
                       {"required_refuel_kg", cfg.mission.required_refuel},
                       {"isp_servicer_s", cfg.mission.isp_servicer},
                       {"isp_target_s", cfg.mission.isp_target}};
    root["phasing"] = {{"k1", cfg.constellation.phasing.k1}, {"k2", cfg.constellation.phasing.k2}};
    root["optimizer"] = {{"enabled", cfg.optimizer_enabled},
                         {"num_starts", cfg.optimizer.num_starts},
                         {"rng_seed", cfg.optimizer.rng_seed},
                         {"max_local_iterations", cfg.optimizer.max_local_iterations},
                         {"convergence_tolerance_kg", cfg.optimizer.convergence_tolerance}};
    if (cfg.optimizer.bounds_inclination) {
        root["optimizer"]["bounds_inclination_deg"] = {
            cfg.optimizer.bounds_inclination->first / kDegToRad,
            cfg.optimizer.bounds_inclination->second / kDegToRad};
    }
    json sweeps = json::object();
    if (cfg.sweeps.mass_ratio) {
        sweeps["mass_ratio"] = {{"start", cfg.sweeps.mass_ratio->start},
                                {"stop", cfg.sweeps.mass_ratio->stop},
                                {"step", cfg.sweeps.mass_ratio->step}};
    }
    if (cfg.sweeps.n_range) {
        sweeps["n_range"] = {cfg.sweeps.n_range->first, cfg.sweeps.n_range->second};
    }
    if (!cfg.sweeps.isp_pairs.empty()) {
        json pairs = json::array();
        for (const IspPair& p : cfg.sweeps.isp_pairs) {
            pairs.push_back({{"isp_target_s", p.isp_target}, {"isp_servicer_s", p.isp_servicer}});
        }
        sweeps["isp_pairs"] = pairs;
    }
    sweeps["pair"] = std::string(architecture_name(cfg.sweeps.pair.first)) + "-" +
                     architecture_name(cfg.sweeps.pair.second);
    root["sweeps"] = sweeps;
    return root.dump(2) + "\n";
}

}  // namespace orbfuel
