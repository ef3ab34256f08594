#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "snnfc/raster.hpp"

namespace snnfc {

// ---------------------------------------------------------------------------
// Poisson rate coding and the two benchmark datasets.
// ---------------------------------------------------------------------------

/// One raster entry per (neuron, step), independently 1 with probability
/// rate * dt. Throws EncodingError when any rate * dt exceeds 1.
SpikeRaster poisson_encode(const std::vector<double>& rates_hz, std::size_t steps, double dt,
                           std::uint64_t seed);

struct LabeledSample {
    SpikeRaster input;
    SpikeRaster target;
    int label = 0;
    std::vector<double> input_rates_hz;
    std::vector<double> target_rates_hz;
};

struct Dataset {
    std::string task;          // "binary" or "yinyang"
    std::size_t n_inputs = 0;  // m
    std::size_t n_outputs = 0; // n (target rows)
    std::size_t n_classes = 0;
    std::size_t timesteps = 0;
    double dt = 1e-3;
    std::uint64_t seed = 0;
    // per class, the target rate template (Hz) for each output neuron
    std::vector<std::vector<double>> class_target_rates_hz;
    std::vector<LabeledSample> samples;
};

// --- binary task -----------------------------------------------------------

struct BinaryTaskParams {
    double f_hi = 100.0; // input rate of the preferred channel (Hz)
    double f_lo = 50.0;  // input rate of the other channel (Hz)
    double f1 = 100.0;   // high target rate (Hz)
    double f0 = 20.0;    // low target rate (Hz)
    int high_class = 0;  // which class the neuron is trained to fire f1 for
};

/// Two Poisson inputs A and B; class 0 has A at f_hi / B at f_lo, class 1 the
/// reverse. The single target row carries f1 for high_class and f0 otherwise.
/// Classes alternate so every split is exactly balanced.
Dataset gen_binary_dataset(std::size_t n_samples, std::size_t timesteps, double dt,
                           std::uint64_t seed, const BinaryTaskParams& task = {});

// --- yin-yang task ----------------------------------------------------------

enum class YinYangClass : int { Yin = 0, Yang = 1, Dot = 2 };

struct YinYangPoint {
    double x = 0.0;
    double y = 0.0;
    YinYangClass cls = YinYangClass::Yin;
};

/// Class of a point of the unit-square symbol: big disc of radius 0.5 at
/// (0.5, 0.5), S-curve built from half-discs of radius 0.25 around the two
/// dot centers (0.25, 0.5) and (0.75, 0.5), dot discs of radius 0.1.
YinYangClass yinyang_class(double x, double y);

/// Rejection-sample points uniformly inside the symbol disc with exact class
/// balance (count is spread over the three classes, remainder to the lowest
/// class indices first).
std::vector<YinYangPoint> gen_yinyang_points(std::size_t count, std::uint64_t seed);

struct YinYangTaskParams {
    double f_min = 10.0;  // rate at coordinate 0 (Hz)
    double f_max = 100.0; // rate at coordinate 1 (Hz)
    double f1 = 20.0;     // target rate of the correct class (Hz)
    double f0 = 2.0;      // target rate of the other classes (Hz)
};

/// Encode one point: inputs are (x, y, 1-x, 1-y) mapped linearly onto
/// [f_min, f_max]; targets are f1 for the point's class and f0 elsewhere.
LabeledSample encode_yinyang_sample(const YinYangPoint& point, std::size_t timesteps, double dt,
                                    const YinYangTaskParams& task, std::uint64_t seed);

Dataset gen_yinyang_dataset(std::size_t n_samples, std::size_t timesteps, double dt,
                            std::uint64_t seed, const YinYangTaskParams& task = {});

}  // namespace snnfc
