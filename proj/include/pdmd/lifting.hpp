#pragma once

#include <Eigen/Dense>
#include <vector>

#include "pdmd/snapshots.hpp"

namespace pdmd {

/// Affine map of the raw scheduling parameter onto [-1,1]. Raw powers of a
/// wide-ranged parameter make the lifted regressor ill-conditioned, so the
/// lifting stage normalizes by default; the record travels with the model so
/// evaluation accepts raw values.
struct ThetaScale {
    double min = -1.0;
    double max = 1.0;
    bool enabled = false;

    static ThetaScale identity() { return {}; }
    static ThetaScale from_range(double theta_min, double theta_max);

    /// Raw theta -> normalized theta. Identity when disabled; a degenerate
    /// (zero-width) range maps everything to 0.
    double normalize(double theta) const;
};

/// [theta^1, theta^2, ..., theta^{n_p}]
Eigen::VectorXd theta_powers(double theta, int n_p);

/// [v; theta*v; theta^2*v; ...; theta^{n_p}*v]
Eigen::VectorXd lift_vector(const Eigen::VectorXd& v, double theta, int n_p);

/// The five stacked data matrices plus the metadata needed downstream.
struct LiftedData {
    Eigen::MatrixXd X;      // n_x x N_d
    Eigen::MatrixXd Xkr;    // (n_p*n_x) x N_d
    Eigen::MatrixXd U;      // n_u x N_d
    Eigen::MatrixXd Ukr;    // (n_p*n_u) x N_d
    Eigen::MatrixXd Xplus;  // n_x x N_d
    int n_p = 0;
    double dt = 0.0;
    ThetaScale theta_scale;

    int num_columns() const { return static_cast<int>(X.cols()); }
    int state_dim() const { return static_cast<int>(X.rows()); }
    int input_dim() const { return static_cast<int>(U.rows()); }

    /// [X; Xkr; U; Ukr], (n_p+1)(n_x+n_u) rows.
    Eigen::MatrixXd stacked_regressor() const;
};

/// Stack one experiment window into the data matrices. When normalize_theta
/// is set the scale is taken from the observed theta range.
LiftedData build_lifted(const SnapshotEnsemble& ensemble, int n_p, bool normalize_theta = true);

/// Plain column concatenation of several windows (shared dt and dimensions);
/// the normalization range spans all windows.
LiftedData build_lifted(const std::vector<SnapshotEnsemble>& ensembles, int n_p,
                        bool normalize_theta = true);

}  // namespace pdmd
