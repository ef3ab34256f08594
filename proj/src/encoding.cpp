#include "snnfc/encoding.hpp"

#include <cmath>

namespace snnfc {

SpikeRaster poisson_encode(const std::vector<double>& rates_hz, std::size_t steps, double dt,
                           std::uint64_t seed) {
    SpikeRaster raster(rates_hz.size(), steps, dt);
    Rng rng(seed);
    for (std::size_t i = 0; i < rates_hz.size(); ++i) {
        const double p = rates_hz[i] * dt;
        if (p < 0.0 || p > 1.0)
            throw EncodingError("poisson_encode: rate*dt outside [0,1] (rate " +
                                std::to_string(rates_hz[i]) + " Hz at dt " +
                                std::to_string(dt) + " s)");
        for (std::size_t t = 0; t < steps; ++t)
            if (rng.uniform() < p) raster.set(i, t, true);
    }
    return raster;
}

// --- binary task -------------------------------------------------------------

Dataset gen_binary_dataset(std::size_t n_samples, std::size_t timesteps, double dt,
                           std::uint64_t seed, const BinaryTaskParams& task) {
    if (n_samples == 0) throw StructuralError("gen_binary_dataset: need at least one sample");
    Dataset ds;
    ds.task = "binary";
    ds.n_inputs = 2;
    ds.n_outputs = 1;
    ds.n_classes = 2;
    ds.timesteps = timesteps;
    ds.dt = dt;
    ds.seed = seed;
    ds.class_target_rates_hz.resize(2);
    ds.class_target_rates_hz[task.high_class] = {task.f1};
    ds.class_target_rates_hz[1 - task.high_class] = {task.f0};

    ds.samples.reserve(n_samples);
    for (std::size_t k = 0; k < n_samples; ++k) {
        LabeledSample s;
        s.label = static_cast<int>(k % 2); // alternate for exact balance
        s.input_rates_hz = s.label == 0 ? std::vector<double>{task.f_hi, task.f_lo}
                                        : std::vector<double>{task.f_lo, task.f_hi};
        s.target_rates_hz = ds.class_target_rates_hz[s.label];
        s.input = poisson_encode(s.input_rates_hz, timesteps, dt, mix_seed(seed, "input", k));
        s.target = poisson_encode(s.target_rates_hz, timesteps, dt, mix_seed(seed, "target", k));
        ds.samples.push_back(std::move(s));
    }
    return ds;
}

// --- yin-yang task ------------------------------------------------------------

namespace {

double sq_dist(double x, double y, double cx, double cy) {
    return (x - cx) * (x - cx) + (y - cy) * (y - cy);
}

}  // namespace

YinYangClass yinyang_class(double x, double y) {
    const double d_left = std::sqrt(sq_dist(x, y, 0.25, 0.5));
    const double d_right = std::sqrt(sq_dist(x, y, 0.75, 0.5));
    if (d_left <= 0.1 || d_right <= 0.1) return YinYangClass::Dot;
    const bool yin = (y > 0.5 && d_right > 0.25) || (y <= 0.5 && d_left <= 0.25);
    return yin ? YinYangClass::Yin : YinYangClass::Yang;
}

std::vector<YinYangPoint> gen_yinyang_points(std::size_t count, std::uint64_t seed) {
    if (count == 0) throw StructuralError("gen_yinyang_points: need at least one point");
    std::size_t quota[3];
    for (int c = 0; c < 3; ++c)
        quota[c] = count / 3 + (static_cast<std::size_t>(c) < count % 3 ? 1 : 0);

    Rng rng(seed);
    std::vector<YinYangPoint> points;
    points.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        // cycle the class goal, skipping filled quotas, so the draw order is
        // reproducible and each class region is sampled uniformly
        int goal = static_cast<int>(k % 3);
        while (quota[goal] == 0) goal = (goal + 1) % 3;
        YinYangPoint pt;
        for (;;) {
            pt.x = rng.uniform();
            pt.y = rng.uniform();
            if (sq_dist(pt.x, pt.y, 0.5, 0.5) > 0.25) continue; // outside the symbol disc
            pt.cls = yinyang_class(pt.x, pt.y);
            if (static_cast<int>(pt.cls) == goal) break;
        }
        points.push_back(pt);
        --quota[goal];
    }
    return points;
}

LabeledSample encode_yinyang_sample(const YinYangPoint& point, std::size_t timesteps, double dt,
                                    const YinYangTaskParams& task, std::uint64_t seed) {
    if (!(task.f_min < task.f_max) || !(task.f0 < task.f1))
        throw ConfigError("encode_yinyang_sample: need f_min < f_max and f0 < f1");
    const double span = task.f_max - task.f_min;
    LabeledSample s;
    s.label = static_cast<int>(point.cls);
    s.input_rates_hz = {task.f_min + point.x * span, task.f_min + point.y * span,
                        task.f_min + (1.0 - point.x) * span, task.f_min + (1.0 - point.y) * span};
    s.target_rates_hz.assign(3, task.f0);
    s.target_rates_hz[s.label] = task.f1;
    s.input = poisson_encode(s.input_rates_hz, timesteps, dt, mix_seed(seed, "input"));
    s.target = poisson_encode(s.target_rates_hz, timesteps, dt, mix_seed(seed, "target"));
    return s;
}

Dataset gen_yinyang_dataset(std::size_t n_samples, std::size_t timesteps, double dt,
                            std::uint64_t seed, const YinYangTaskParams& task) {
    Dataset ds;
    ds.task = "yinyang";
    ds.n_inputs = 4;
    ds.n_outputs = 3;
    ds.n_classes = 3;
    ds.timesteps = timesteps;
    ds.dt = dt;
    ds.seed = seed;
    ds.class_target_rates_hz.resize(3);
    for (int c = 0; c < 3; ++c) {
        ds.class_target_rates_hz[c].assign(3, task.f0);
        ds.class_target_rates_hz[c][c] = task.f1;
    }

    const auto points = gen_yinyang_points(n_samples, mix_seed(seed, "points"));
    ds.samples.reserve(n_samples);
    for (std::size_t k = 0; k < n_samples; ++k)
        ds.samples.push_back(
            encode_yinyang_sample(points[k], timesteps, dt, task, mix_seed(seed, "sample", k)));
    return ds;
}

}  // namespace snnfc
