#include "pdmd/lifting.hpp"

#include <cmath>
#include <limits>

namespace pdmd {

using detail::require;

ThetaScale ThetaScale::from_range(double theta_min, double theta_max) {
    require(std::isfinite(theta_min) && std::isfinite(theta_max) && theta_min <= theta_max,
            "ThetaScale: invalid range");
    ThetaScale s;
    s.min = theta_min;
    s.max = theta_max;
    s.enabled = true;
    return s;
}

double ThetaScale::normalize(double theta) const {
    if (!enabled) return theta;
    const double width = max - min;
    if (width <= 0.0) return 0.0;
    return 2.0 * (theta - min) / width - 1.0;
}

Eigen::VectorXd theta_powers(double theta, int n_p) {
    require(std::isfinite(theta), "theta_powers: theta must be finite");
    require(n_p >= 0, "theta_powers: n_p must be nonnegative");
    Eigen::VectorXd powers(n_p);
    double acc = 1.0;
    for (int i = 0; i < n_p; ++i) {
        acc *= theta;
        powers[i] = acc;
    }
    return powers;
}

Eigen::VectorXd lift_vector(const Eigen::VectorXd& v, double theta, int n_p) {
    require(v.size() > 0, "lift_vector: vector must be nonempty");
    require(v.allFinite(), "lift_vector: vector must be finite");
    require(std::isfinite(theta), "lift_vector: theta must be finite");
    require(n_p >= 0, "lift_vector: n_p must be nonnegative");

    const auto n = v.size();
    Eigen::VectorXd lifted((n_p + 1) * n);
    lifted.head(n) = v;
    double acc = 1.0;
    for (int i = 1; i <= n_p; ++i) {
        acc *= theta;
        lifted.segment(i * n, n) = acc * v;
    }
    return lifted;
}

namespace {

LiftedData lift_windows(const std::vector<SnapshotEnsemble>& ensembles, int n_p,
                        const ThetaScale& scale) {
    const int n_x = ensembles.front().state_dim();
    const int n_u = ensembles.front().input_dim();
    int total = 0;
    for (const auto& e : ensembles) total += e.num_snapshots();

    LiftedData data;
    data.n_p = n_p;
    data.dt = ensembles.front().dt;
    data.theta_scale = scale;
    data.X.resize(n_x, total);
    data.Xplus.resize(n_x, total);
    data.U.resize(n_u, total);
    data.Xkr.resize(n_p * n_x, total);
    data.Ukr.resize(n_p * n_u, total);

    int col = 0;
    for (const auto& ensemble : ensembles) {
        const int n_d = ensemble.num_snapshots();
        for (int k = 0; k < n_d; ++k, ++col) {
            data.X.col(col) = ensemble.states[k];
            data.Xplus.col(col) = ensemble.states[k + 1];
            data.U.col(col) = ensemble.inputs[k];
            if (n_p > 0) {
                const Eigen::VectorXd powers =
                    theta_powers(scale.normalize(ensemble.theta[k]), n_p);
                for (int i = 0; i < n_p; ++i) {
                    data.Xkr.block(i * n_x, col, n_x, 1) = powers[i] * ensemble.states[k];
                    data.Ukr.block(i * n_u, col, n_u, 1) = powers[i] * ensemble.inputs[k];
                }
            }
        }
    }
    return data;
}

}  // namespace

Eigen::MatrixXd LiftedData::stacked_regressor() const {
    Eigen::MatrixXd Z(X.rows() + Xkr.rows() + U.rows() + Ukr.rows(), X.cols());
    Z << X, Xkr, U, Ukr;
    return Z;
}

LiftedData build_lifted(const SnapshotEnsemble& ensemble, int n_p, bool normalize_theta) {
    return build_lifted(std::vector<SnapshotEnsemble>{ensemble}, n_p, normalize_theta);
}

LiftedData build_lifted(const std::vector<SnapshotEnsemble>& ensembles, int n_p,
                        bool normalize_theta) {
    require(n_p >= 0, "build_lifted: n_p must be nonnegative");
    require(!ensembles.empty(), "build_lifted: at least one ensemble required");
    for (const auto& e : ensembles) e.validate();
    const auto& first = ensembles.front();
    for (const auto& e : ensembles) {
        require(e.state_dim() == first.state_dim() && e.input_dim() == first.input_dim(),
                "build_lifted: ensembles must share dimensions");
        require(e.dt == first.dt, "build_lifted: ensembles must share dt");
    }

    ThetaScale scale = ThetaScale::identity();
    if (normalize_theta) {
        double lo = std::numeric_limits<double>::infinity();
        double hi = -std::numeric_limits<double>::infinity();
        for (const auto& e : ensembles)
            for (double th : e.theta) {
                lo = std::min(lo, th);
                hi = std::max(hi, th);
            }
        scale = ThetaScale::from_range(lo, hi);
    }
    return lift_windows(ensembles, n_p, scale);
}

}  // namespace pdmd
