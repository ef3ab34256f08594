#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "snnfc/common.hpp"

namespace snnfc {

// ---------------------------------------------------------------------------
// Binary spike trains, neurons x timesteps, bit-packed per row.
// ---------------------------------------------------------------------------

class SpikeRaster {
public:
    SpikeRaster() = default;
    SpikeRaster(std::size_t neurons, std::size_t steps, double dt)
        : neurons_(neurons), steps_(steps), dt_(dt),
          words_per_row_((steps + 63) / 64), data_(neurons * words_per_row_, 0) {}

    std::size_t neurons() const { return neurons_; }
    std::size_t steps() const { return steps_; }
    double dt() const { return dt_; }

    bool get(std::size_t neuron, std::size_t t) const {
        return (data_[neuron * words_per_row_ + t / 64] >> (t % 64)) & 1ULL;
    }

    void set(std::size_t neuron, std::size_t t, bool value) {
        std::uint64_t& w = data_[neuron * words_per_row_ + t / 64];
        const std::uint64_t bit = 1ULL << (t % 64);
        if (value)
            w |= bit;
        else
            w &= ~bit;
    }

    /// Spikes of one row.
    std::size_t row_count(std::size_t neuron) const {
        std::size_t c = 0;
        const std::uint64_t* w = data_.data() + neuron * words_per_row_;
        for (std::size_t k = 0; k < words_per_row_; ++k) c += std::popcount(w[k]);
        return c;
    }

    /// Empirical rate of one row in spikes per step.
    double row_rate(std::size_t neuron) const {
        return steps_ == 0 ? 0.0
                           : static_cast<double>(row_count(neuron)) / static_cast<double>(steps_);
    }

    /// Empirical rate of one row in Hz.
    double row_rate_hz(std::size_t neuron) const { return row_rate(neuron) / dt_; }

    /// Extract the spike column at step t into out[0..neurons).
    void column(std::size_t t, std::uint8_t* out) const {
        const std::size_t word = t / 64;
        const std::uint64_t bit = 1ULL << (t % 64);
        for (std::size_t i = 0; i < neurons_; ++i)
            out[i] = (data_[i * words_per_row_ + word] & bit) ? 1 : 0;
    }

    bool operator==(const SpikeRaster& o) const {
        return neurons_ == o.neurons_ && steps_ == o.steps_ && dt_ == o.dt_ && data_ == o.data_;
    }

private:
    std::size_t neurons_ = 0;
    std::size_t steps_ = 0;
    double dt_ = 1e-3;
    std::size_t words_per_row_ = 0;
    std::vector<std::uint64_t> data_;
};

}  // namespace snnfc
