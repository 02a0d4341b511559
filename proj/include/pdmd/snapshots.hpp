#pragma once

#include <Eigen/Dense>
#include <filesystem>
#include <vector>

#include "pdmd/errors.hpp"

namespace pdmd {

class Plant;

/// A sampled input sequence. samples holds N_d+1 vectors of dimension n_u.
struct Signal {
    double dt = 0.0;
    std::vector<Eigen::VectorXd> samples;

    int input_dim() const { return samples.empty() ? 0 : static_cast<int>(samples.front().size()); }
    void validate() const;
};

/// Linear-frequency sweep amplitude*sin(2*pi*(f0*t + (f1-f0)*t^2/(2*duration)))
/// sampled at t = k*dt for k = 0..floor(duration/dt). Single input channel.
Signal generate_chirp(double f0, double f1, double duration, double dt, double amplitude);

/// One experiment window: states at N_d+1 instants, inputs and the scalar
/// scheduling parameter at the first N_d instants.
struct SnapshotEnsemble {
    double dt = 0.0;
    std::vector<Eigen::VectorXd> states;
    std::vector<Eigen::VectorXd> inputs;
    std::vector<double> theta;

    int num_snapshots() const { return static_cast<int>(inputs.size()); }
    int state_dim() const { return states.empty() ? 0 : static_cast<int>(states.front().size()); }
    int input_dim() const { return inputs.empty() ? 0 : static_cast<int>(inputs.front().size()); }
    void validate() const;
};

/// CSV schema: header `k,theta,u_1..u_{n_u},x_1..x_{n_x}`, one row per time
/// index k = 0..N_d; the terminal row carries only the state (theta and u
/// fields empty). `#`-prefixed comment lines may precede the header.
void save_snapshots(const SnapshotEnsemble& ensemble, const std::filesystem::path& path);
SnapshotEnsemble load_snapshots(const std::filesystem::path& path);

/// Scheduling-parameter source during collection: a fixed value, or the
/// state-derived rule theta = -asin(x[state_index]/v0).
struct ThetaSource {
    enum class Kind { Fixed, ArcsinRule };

    Kind kind = Kind::Fixed;
    double value = 0.0;
    int state_index = 0;
    double v0 = 1.0;

    static ThetaSource fixed(double theta);
    static ThetaSource arcsin_rule(int state_index, double v0);

    double eval(const Eigen::VectorXd& state) const;
};

/// Drive the plant with input.samples[0..N_d-1] from x0 and record the
/// trajectory. theta[k] is resolved from states[k] before stepping.
/// Aborts with numeric_error if any state entry exceeds divergence_bound.
SnapshotEnsemble collect_from_plant(const Plant& plant, const Signal& input,
                                    const Eigen::VectorXd& x0, const ThetaSource& theta_source,
                                    double divergence_bound = 1e6);

}  // namespace pdmd
