#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "orbfuel/config.hpp"
#include "orbfuel/optimizer.hpp"
#include "orbfuel/study.hpp"

namespace py = pybind11;
using namespace orbfuel;

namespace {

py::object optional_to_py(const std::optional<double>& v) {
    return v ? py::cast(*v) : py::none();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Delta-v and mass-budget models for multi-target on-orbit refueling trade studies";

    py::register_exception<PerigeeBelowSurface>(m, "PerigeeBelowSurfaceError");
    py::register_exception<InvalidPolicy>(m, "InvalidPolicyError");
    py::register_exception<NegativeRefuel>(m, "NegativeRefuelError");
    py::register_exception<CooperativeLegInNonCooperativeBudget>(m, "CooperativeLegError");
    py::register_exception<InfeasibleBounds>(m, "InfeasibleBoundsError");
    py::register_exception<ParseError>(m, "ConfigParseError");
    py::register_exception<ValidationError>(m, "ConfigValidationError");

    py::class_<GravityModel>(m, "GravityModel")
        .def(py::init<>())
        .def(py::init([](double mu, double earth_radius) {
                 return GravityModel{mu, earth_radius};
             }),
             py::arg("mu"), py::arg("earth_radius"))
        .def_readwrite("mu", &GravityModel::mu)
        .def_readwrite("earth_radius", &GravityModel::earth_radius);

    py::class_<CircularOrbit>(m, "CircularOrbit")
        .def(py::init<>())
        .def(py::init([](double altitude, double inclination, double arg_latitude) {
                 return CircularOrbit{altitude, inclination, arg_latitude};
             }),
             py::arg("altitude"), py::arg("inclination"), py::arg("arg_latitude"))
        .def_readwrite("altitude", &CircularOrbit::altitude)
        .def_readwrite("inclination", &CircularOrbit::inclination)
        .def_readwrite("arg_latitude", &CircularOrbit::arg_latitude);

    py::class_<PhasingPolicy>(m, "PhasingPolicy")
        .def(py::init<>())
        .def(py::init([](int k1, int k2) { return PhasingPolicy{k1, k2}; }), py::arg("k1"),
             py::arg("k2"))
        .def_readwrite("k1", &PhasingPolicy::k1)
        .def_readwrite("k2", &PhasingPolicy::k2);

    py::class_<MissionParams>(m, "MissionParams")
        .def(py::init<>())
        .def_readwrite("n", &MissionParams::n)
        .def_readwrite("servicer_final_mass", &MissionParams::servicer_final_mass)
        .def_readwrite("target_initial_mass", &MissionParams::target_initial_mass)
        .def_readwrite("required_refuel", &MissionParams::required_refuel)
        .def_readwrite("isp_servicer", &MissionParams::isp_servicer)
        .def_readwrite("isp_target", &MissionParams::isp_target)
        .def_readwrite("g0", &MissionParams::g0);

    py::class_<LegBudget>(m, "LegBudget")
        .def(py::init<>())
        .def(py::init([](double dv_servicer, double dv_target_in, double dv_target_out) {
                 return LegBudget{dv_servicer, dv_target_in, dv_target_out};
             }),
             py::arg("dv_servicer") = 0.0, py::arg("dv_target_in") = 0.0,
             py::arg("dv_target_out") = 0.0)
        .def_readwrite("dv_servicer", &LegBudget::dv_servicer)
        .def_readwrite("dv_target_in", &LegBudget::dv_target_in)
        .def_readwrite("dv_target_out", &LegBudget::dv_target_out);

    py::class_<CampaignBudget>(m, "CampaignBudget")
        .def(py::init<>())
        .def_readwrite("legs", &CampaignBudget::legs)
        .def_readwrite("dv_servicer_return", &CampaignBudget::dv_servicer_return);

    py::class_<CampaignResult>(m, "CampaignResult")
        .def(py::init<>())
        .def_readonly("servicer_initial_mass", &CampaignResult::servicer_initial_mass)
        .def_readonly("variable_fuel_mass", &CampaignResult::variable_fuel_mass)
        .def_readonly("servicer_fuel_consumed", &CampaignResult::servicer_fuel_consumed)
        .def_readonly("target_fuel_consumed", &CampaignResult::target_fuel_consumed)
        .def_readonly("per_leg_refuel_mass", &CampaignResult::per_leg_refuel_mass);

    py::class_<Constellation>(m, "Constellation")
        .def(py::init<>())
        .def_readwrite("servicer_orbit", &Constellation::servicer_orbit)
        .def_readwrite("targets", &Constellation::targets)
        .def_readwrite("gravity", &Constellation::gravity)
        .def_readwrite("phasing", &Constellation::phasing);

    py::class_<RendezvousPoint>(m, "RendezvousPoint")
        .def(py::init<>())
        .def(py::init([](double inclination, double arg_latitude) {
                 return RendezvousPoint{inclination, arg_latitude};
             }),
             py::arg("inclination"), py::arg("arg_latitude"))
        .def_readwrite("inclination", &RendezvousPoint::inclination)
        .def_readwrite("arg_latitude", &RendezvousPoint::arg_latitude);

    py::enum_<Architecture>(m, "Architecture")
        .value("A", Architecture::A)
        .value("B", Architecture::B)
        .value("C", Architecture::C)
        .value("D", Architecture::D)
        .value("E", Architecture::E);

    py::class_<OptimizerConfig>(m, "OptimizerConfig")
        .def(py::init<>())
        .def_readwrite("num_starts", &OptimizerConfig::num_starts)
        .def_readwrite("rng_seed", &OptimizerConfig::rng_seed)
        .def_readwrite("max_local_iterations", &OptimizerConfig::max_local_iterations)
        .def_readwrite("convergence_tolerance", &OptimizerConfig::convergence_tolerance)
        .def_readwrite("bounds_inclination", &OptimizerConfig::bounds_inclination);

    py::class_<StartRecord>(m, "StartRecord")
        .def_readonly("start_index", &StartRecord::start_index)
        .def_readonly("final_objective", &StartRecord::final_objective);

    py::class_<OptimizationReport>(m, "OptimizationReport")
        .def_readonly("best_plan", &OptimizationReport::best_plan)
        .def_readonly("best_result", &OptimizationReport::best_result)
        .def_readonly("matched_architecture", &OptimizationReport::matched_architecture)
        .def_readonly("per_start_history", &OptimizationReport::per_start_history)
        .def_readonly("seed", &OptimizationReport::seed);

    py::class_<StudyConfig>(m, "StudyConfig")
        .def_readwrite("constellation", &StudyConfig::constellation)
        .def_readwrite("mission", &StudyConfig::mission)
        .def_readwrite("optimizer", &StudyConfig::optimizer)
        .def_readwrite("optimizer_enabled", &StudyConfig::optimizer_enabled);

    m.def("circular_velocity", &circular_velocity, py::arg("orbit"), py::arg("gravity"));
    m.def("delta_v_inclination", &delta_v_inclination, py::arg("speed"), py::arg("delta_i"));
    m.def("delta_v_phasing", &delta_v_phasing, py::arg("orbit"), py::arg("delta_u"),
          py::arg("policy"), py::arg("gravity"));
    m.def("transfer_delta_v", &transfer_delta_v, py::arg("from_orbit"), py::arg("to_inclination"),
          py::arg("to_arg_latitude"), py::arg("chaser_is_self"), py::arg("policy"),
          py::arg("gravity"));
    m.def("wrap_angle", &wrap_angle, py::arg("angle"));

    m.def("rocket_mass_before", &rocket_mass_before, py::arg("mass_after"), py::arg("dv"),
          py::arg("isp"), py::arg("g0") = kStandardGravity);
    m.def("cooperative_refuel_mass", &cooperative_refuel_mass, py::arg("leg"), py::arg("params"));
    m.def("servicer_initial_mass_cooperative", &servicer_initial_mass_cooperative,
          py::arg("budget"), py::arg("params"));
    m.def("servicer_initial_mass_noncooperative", &servicer_initial_mass_noncooperative,
          py::arg("budget"), py::arg("params"));
    m.def(
        "critical_mass_ratio",
        [](const CampaignBudget& coop, const CampaignBudget& noncoop, const MissionParams& p) {
            return optional_to_py(critical_mass_ratio(coop, noncoop, p));
        },
        py::arg("budget_coop"), py::arg("budget_noncoop"), py::arg("params"),
        "Crossover mass ratio, or None when the servicer delta-v totals coincide");
    m.def(
        "critical_mass_ratio_a_d",
        [](const CampaignBudget& noncoop, const CampaignBudget& coop, const MissionParams& p) {
            return optional_to_py(critical_mass_ratio_a_d(noncoop, coop, p));
        },
        py::arg("budget_noncoop"), py::arg("budget_fully_coop"), py::arg("params"));

    m.def(
        "plan_for_architecture",
        [](const Constellation& c, Architecture arch) {
            return plan_for_architecture(c, ArchitectureId(arch));
        },
        py::arg("constellation"), py::arg("architecture"));
    m.def("build_budget", &build_budget, py::arg("constellation"), py::arg("plan"));
    m.def("simulate_masses", &simulate_masses, py::arg("budget"), py::arg("params"));
    m.def(
        "evaluate_architecture",
        [](const Constellation& c, Architecture arch, const MissionParams& p) {
            return evaluate_architecture(c, ArchitectureId(arch), p);
        },
        py::arg("constellation"), py::arg("architecture"), py::arg("params"));
    m.def("evaluate_plan", &evaluate_plan, py::arg("constellation"), py::arg("plan"),
          py::arg("params"));

    m.def("optimize_plan", &optimize_plan, py::arg("constellation"), py::arg("params"),
          py::arg("config"));

    m.def("load_config", &load_config, py::arg("path"));
    m.def("parse_config", &parse_config, py::arg("json_text"));
    m.def("serialize_config", &serialize_config, py::arg("config"));

    m.attr("STANDARD_GRAVITY") = kStandardGravity;
    m.attr("__version__") = "0.1.0";
}
