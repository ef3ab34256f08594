#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "snnfc/common.hpp"

namespace snnfc {

// ---------------------------------------------------------------------------
// Dense row-major matrix, sized once at construction.
// ---------------------------------------------------------------------------

struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c, double fill = 0.0)
        : rows(r), cols(c), data(r * c, fill) {}

    double& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

    double* row(std::size_t r) { return data.data() + r * cols; }
    const double* row(std::size_t r) const { return data.data() + r * cols; }

    static Matrix identity(std::size_t n, double scale = 1.0) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = scale;
        return m;
    }

    bool same_shape(const Matrix& o) const { return rows == o.rows && cols == o.cols; }
};

// ---------------------------------------------------------------------------
// Weights
//
// w:   feedforward weights, one row per (physical) output neuron.
// q_p: positive-controller feedback weights (non-negative entries).
// q_n: negative-controller feedback weights (non-positive entries), so that
//      negative-controller spikes subtract feedback current.
// ---------------------------------------------------------------------------

struct WeightSet {
    Matrix w;   // n_out x n_in
    Matrix q_p; // n_out x n_units
    Matrix q_n; // n_out x n_units

    static WeightSet make(std::size_t n_out, std::size_t n_in) {
        WeightSet ws;
        ws.w = Matrix(n_out, n_in);
        ws.q_p = Matrix::identity(n_out, 1.0);
        ws.q_n = Matrix::identity(n_out, -1.0);
        return ws;
    }

    void validate() const {
        if (w.rows == 0 || w.cols == 0)
            throw StructuralError("WeightSet: empty feedforward matrix");
        if (q_p.rows != w.rows || q_n.rows != w.rows || !q_p.same_shape(q_n))
            throw StructuralError("WeightSet: feedback matrices inconsistent with w");
        for (double x : q_p.data)
            if (x < 0.0) throw StructuralError("WeightSet: q_p must be non-negative");
        for (double x : q_n.data)
            if (x > 0.0) throw StructuralError("WeightSet: q_n must be non-positive");
    }
};

// ---------------------------------------------------------------------------
// Per-layer state vectors, all indexed by physical neuron.
// ---------------------------------------------------------------------------

struct OutputLayerState {
    std::vector<double> v;         // membrane voltages
    std::vector<double> i_ff;      // feedforward synaptic currents
    std::vector<double> i_fb;      // feedback synaptic currents
    std::vector<std::uint8_t> s;   // spikes emitted this step

    explicit OutputLayerState(std::size_t n = 0)
        : v(n, 0.0), i_ff(n, 0.0), i_fb(n, 0.0), s(n, 0) {}

    std::size_t size() const { return v.size(); }
};

struct ControllerState {
    std::vector<double> u_p;        // positive controller voltages
    std::vector<double> u_n;        // negative controller voltages
    std::vector<double> j_ff;       // output-rate estimator currents
    std::vector<double> j_fb;       // target-rate estimator currents
    std::vector<std::uint8_t> s_p;  // positive controller spikes
    std::vector<std::uint8_t> s_n;  // negative controller spikes

    explicit ControllerState(std::size_t n = 0)
        : u_p(n, 0.0), u_n(n, 0.0), j_ff(n, 0.0), j_fb(n, 0.0), s_p(n, 0), s_n(n, 0) {}

    std::size_t size() const { return u_p.size(); }
};

/// Fresh all-zero states for n neurons (and n controller pairs).
inline std::pair<OutputLayerState, ControllerState> reset_states(std::size_t n) {
    if (n == 0) throw StructuralError("reset_states: n must be >= 1");
    return {OutputLayerState(n), ControllerState(n)};
}

}  // namespace snnfc
