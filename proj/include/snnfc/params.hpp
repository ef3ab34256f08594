#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "snnfc/common.hpp"

namespace snnfc {

// ---------------------------------------------------------------------------
// Simulation parameters
//
// Discrete-time constants for the output and controller neurons. The decay
// factors are 1 - dt/tau and must stay strictly inside (0, 1), which requires
// every time constant to exceed the timestep.
// ---------------------------------------------------------------------------

struct SimulationParams {
    double dt = 1e-3;     // timestep (s)
    double tau_m = 10e-3; // output membrane time constant (s)
    double tau_c = 50e-3; // synaptic time constant (s), shared by all currents
    double tau_u = 5e-3;  // controller membrane time constant (s)
    double v_th = 1.0;    // output spike threshold
    double u_th = 1.0;    // controller spike threshold
    bool floor_voltages = false; // clamp membrane voltages at zero

    double alpha() const { return 1.0 - dt / tau_m; } // output voltage decay
    double beta() const { return 1.0 - dt / tau_c; }  // synaptic current decay
    double gamma() const { return 1.0 - dt / tau_u; } // controller voltage decay

    /// Throws ConfigError on invalid values; returns non-fatal warnings.
    std::vector<std::string> validate() const {
        if (!(dt > 0.0)) throw ConfigError("SimulationParams: dt must be > 0");
        auto check_tau = [&](double tau, const char* name) {
            if (!(tau > dt))
                throw ConfigError(std::string("SimulationParams: ") + name +
                                  " must exceed dt so the decay factor lies in (0,1)");
        };
        check_tau(tau_m, "tau_m");
        check_tau(tau_c, "tau_c");
        check_tau(tau_u, "tau_u");
        if (!(v_th > 0.0) || !(u_th > 0.0))
            throw ConfigError("SimulationParams: thresholds must be > 0");
        std::vector<std::string> warnings;
        if (!(tau_u < tau_c))
            warnings.push_back("tau_u >= tau_c: controller reset dynamics are no longer "
                               "negligible relative to the current estimators");
        return warnings;
    }
};

// ---------------------------------------------------------------------------
// Network layout
//
// n_logical output units, each realized by p physical neurons (p = 1 is the
// plain network). Each logical unit owns one positive/negative controller
// pair per physical member. Physical index = group * p + member.
// ---------------------------------------------------------------------------

struct NetworkLayout {
    std::size_t n_logical = 1;
    std::size_t p = 1;
    std::size_t n_inputs = 1;

    std::size_t outputs() const { return n_logical * p; }
    std::size_t units() const { return n_logical * p; } // controller pairs
    std::size_t group_of(std::size_t phys) const { return phys / p; }

    void validate() const {
        if (n_logical == 0 || p == 0 || n_inputs == 0)
            throw StructuralError("NetworkLayout: all sizes must be >= 1");
    }
};

}  // namespace snnfc
