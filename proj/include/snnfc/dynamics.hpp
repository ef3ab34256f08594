#pragma once

#include <cmath>
#include <cstdint>
#include <span>

#include "snnfc/params.hpp"
#include "snnfc/state.hpp"

namespace snnfc {

// ---------------------------------------------------------------------------
// Core discrete-time dynamics.
//
// Both layers advance with per-neuron decay factors so that device-mismatch
// runs reuse the same code path; the uniform network is the broadcast case.
// Update order within a timestep: currents, then voltage (soft reset by
// threshold subtraction against the previous spike), then spike. A spike is
// emitted when the voltage reaches the threshold exactly (H(0) = 1).
// ---------------------------------------------------------------------------

struct OutputLayerParams {
    std::vector<double> alpha; // voltage decay, per neuron
    std::vector<double> beta;  // current decay, per neuron
    std::vector<double> v_th;  // threshold, per neuron
    bool floor_voltages = false;

    std::size_t size() const { return alpha.size(); }
};

struct ControllerParams {
    std::vector<double> gamma_p; // positive controller voltage decay
    std::vector<double> gamma_n; // negative controller voltage decay
    std::vector<double> beta;    // estimator current decay
    std::vector<double> u_th_p;  // positive controller threshold
    std::vector<double> u_th_n;  // negative controller threshold
    bool floor_voltages = false;

    std::size_t size() const { return gamma_p.size(); }
};

inline OutputLayerParams broadcast_output(const SimulationParams& p, std::size_t n) {
    OutputLayerParams out;
    out.alpha.assign(n, p.alpha());
    out.beta.assign(n, p.beta());
    out.v_th.assign(n, p.v_th);
    out.floor_voltages = p.floor_voltages;
    return out;
}

inline ControllerParams broadcast_controller(const SimulationParams& p, std::size_t n) {
    ControllerParams c;
    c.gamma_p.assign(n, p.gamma());
    c.gamma_n.assign(n, p.gamma());
    c.beta.assign(n, p.beta());
    c.u_th_p.assign(n, p.u_th);
    c.u_th_n.assign(n, p.u_th);
    c.floor_voltages = p.floor_voltages;
    return c;
}

/// Advance the output layer one timestep.
///
/// s_in are this step's input spikes; s_p_prev / s_n_prev are the controller
/// spikes of the previous step (one-step feedback delay). When control is
/// inactive the feedback current only decays.
inline void step_output_layer(OutputLayerState& state, const WeightSet& weights,
                              std::span<const std::uint8_t> s_in,
                              std::span<const std::uint8_t> s_p_prev,
                              std::span<const std::uint8_t> s_n_prev,
                              const OutputLayerParams& params, bool control_active) {
    const std::size_t n = state.size();
    const std::size_t m = weights.w.cols;
    if (params.size() != n || weights.w.rows != n)
        throw StructuralError("step_output_layer: state/params/weights size mismatch");
    if (s_in.size() != m)
        throw StructuralError("step_output_layer: input spike vector has wrong length");
    if (control_active &&
        (s_p_prev.size() != weights.q_p.cols || s_n_prev.size() != weights.q_n.cols))
        throw StructuralError("step_output_layer: controller spike vector has wrong length");

    for (std::size_t i = 0; i < n; ++i) state.i_ff[i] *= params.beta[i];
    for (std::size_t j = 0; j < m; ++j) {
        if (!s_in[j]) continue;
        for (std::size_t i = 0; i < n; ++i) state.i_ff[i] += weights.w(i, j);
    }

    for (std::size_t i = 0; i < n; ++i) state.i_fb[i] *= params.beta[i];
    if (control_active) {
        for (std::size_t k = 0; k < s_p_prev.size(); ++k) {
            if (!s_p_prev[k]) continue;
            for (std::size_t i = 0; i < n; ++i) state.i_fb[i] += weights.q_p(i, k);
        }
        for (std::size_t k = 0; k < s_n_prev.size(); ++k) {
            if (!s_n_prev[k]) continue;
            for (std::size_t i = 0; i < n; ++i) state.i_fb[i] += weights.q_n(i, k);
        }
    }

    for (std::size_t i = 0; i < n; ++i) {
        double v = params.alpha[i] * state.v[i] - params.v_th[i] * state.s[i] +
                   state.i_ff[i] + state.i_fb[i];
        if (params.floor_voltages && v < 0.0) v = 0.0;
        if (!std::isfinite(v))
            throw DivergenceError("step_output_layer: non-finite membrane voltage");
        state.v[i] = v;
        state.s[i] = v >= params.v_th[i] ? 1 : 0;
    }
}

namespace detail {

template <typename Drive>
void step_controller_impl(ControllerState& state, std::span<const Drive> out_drive,
                          std::span<const Drive> trg_drive, const ControllerParams& params) {
    const std::size_t n = state.size();
    if (params.size() != n)
        throw StructuralError("step_controller: state/params size mismatch");
    if (out_drive.size() != n || trg_drive.size() != n)
        throw StructuralError("step_controller: drive vector has wrong length");

    for (std::size_t i = 0; i < n; ++i) {
        state.j_ff[i] = params.beta[i] * state.j_ff[i] + static_cast<double>(out_drive[i]);
        state.j_fb[i] = params.beta[i] * state.j_fb[i] + static_cast<double>(trg_drive[i]);
        const double diff = state.j_fb[i] - state.j_ff[i];
        double up = params.gamma_p[i] * state.u_p[i] - params.u_th_p[i] * state.s_p[i] + diff;
        double un = params.gamma_n[i] * state.u_n[i] - params.u_th_n[i] * state.s_n[i] - diff;
        if (params.floor_voltages) {
            if (up < 0.0) up = 0.0;
            if (un < 0.0) un = 0.0;
        }
        if (!std::isfinite(up) || !std::isfinite(un))
            throw DivergenceError("step_controller: non-finite controller voltage");
        state.u_p[i] = up;
        state.u_n[i] = un;
        state.s_p[i] = up >= params.u_th_p[i] ? 1 : 0;
        state.s_n[i] = un >= params.u_th_n[i] ? 1 : 0;
    }
}

}  // namespace detail

/// Advance the controller pairs one timestep. s_out are the output spikes of
/// this same timestep, s_trg the target spikes.
inline void step_controller(ControllerState& state, std::span<const std::uint8_t> s_out,
                            std::span<const std::uint8_t> s_trg,
                            const ControllerParams& params) {
    detail::step_controller_impl<std::uint8_t>(state, s_out, s_trg, params);
}

/// Drive overload for population runs, where each controller pair receives
/// the group-mean output spike (a fractional drive in [0, 1]).
inline void step_controller(ControllerState& state, std::span<const double> out_drive,
                            std::span<const double> trg_drive,
                            const ControllerParams& params) {
    detail::step_controller_impl<double>(state, out_drive, trg_drive, params);
}

/// Convenience single-step wrappers for uniform parameters.
inline void step_output_layer(OutputLayerState& state, const WeightSet& weights,
                              std::span<const std::uint8_t> s_in,
                              std::span<const std::uint8_t> s_p_prev,
                              std::span<const std::uint8_t> s_n_prev,
                              const SimulationParams& params, bool control_active) {
    step_output_layer(state, weights, s_in, s_p_prev, s_n_prev,
                      broadcast_output(params, state.size()), control_active);
}

inline void step_controller(ControllerState& state, std::span<const std::uint8_t> s_out,
                            std::span<const std::uint8_t> s_trg,
                            const SimulationParams& params) {
    step_controller(state, s_out, s_trg, broadcast_controller(params, state.size()));
}

}  // namespace snnfc
