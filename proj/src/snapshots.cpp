#include "pdmd/snapshots.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "pdmd/detail/csv.hpp"
#include "pdmd/plants.hpp"

namespace pdmd {

using detail::require;

void Signal::validate() const {
    require(dt > 0.0 && std::isfinite(dt), "Signal: dt must be positive and finite");
    require(!samples.empty(), "Signal: at least one sample required");
    const auto n_u = samples.front().size();
    require(n_u >= 1, "Signal: input dimension must be >= 1");
    for (const auto& s : samples) {
        require(s.size() == n_u, "Signal: all samples must share the input dimension");
        require(s.allFinite(), "Signal: samples must be finite");
    }
}

Signal generate_chirp(double f0, double f1, double duration, double dt, double amplitude) {
    require(std::isfinite(f0) && std::isfinite(f1) && std::isfinite(duration) &&
                std::isfinite(dt) && std::isfinite(amplitude),
            "generate_chirp: arguments must be finite");
    require(f0 > 0.0, "generate_chirp: f0 must be positive");
    require(f1 >= f0, "generate_chirp: f1 must be >= f0");
    require(duration > 0.0, "generate_chirp: duration must be positive");
    require(dt > 0.0 && dt < 1.0 / (2.0 * f1),
            "generate_chirp: dt must satisfy 0 < dt < 1/(2*f1)");

    const auto n_samples = static_cast<std::size_t>(std::floor(duration / dt)) + 1;
    Signal signal;
    signal.dt = dt;
    signal.samples.reserve(n_samples);
    const double rate = (f1 - f0) / (2.0 * duration);
    for (std::size_t k = 0; k < n_samples; ++k) {
        const double t = static_cast<double>(k) * dt;
        const double phase = 2.0 * std::numbers::pi * (f0 * t + rate * t * t);
        Eigen::VectorXd s(1);
        s[0] = amplitude * std::sin(phase);
        signal.samples.push_back(std::move(s));
    }
    return signal;
}

void SnapshotEnsemble::validate() const {
    require(dt > 0.0 && std::isfinite(dt), "SnapshotEnsemble: dt must be positive and finite");
    require(states.size() == inputs.size() + 1,
            "SnapshotEnsemble: states must have exactly one more entry than inputs");
    require(inputs.size() == theta.size(),
            "SnapshotEnsemble: inputs and theta must have equal length");
    require(!inputs.empty(), "SnapshotEnsemble: at least one snapshot (N_d >= 1) required");
    const auto n_x = states.front().size();
    const auto n_u = inputs.front().size();
    require(n_x >= 1 && n_u >= 1, "SnapshotEnsemble: dimensions must be >= 1");
    for (const auto& x : states) {
        require(x.size() == n_x, "SnapshotEnsemble: all states must share the dimension");
        require(x.allFinite(), "SnapshotEnsemble: states must be finite");
    }
    for (const auto& u : inputs) {
        require(u.size() == n_u, "SnapshotEnsemble: all inputs must share the dimension");
        require(u.allFinite(), "SnapshotEnsemble: inputs must be finite");
    }
    for (double th : theta)
        require(std::isfinite(th), "SnapshotEnsemble: theta must be finite");
}

void save_snapshots(const SnapshotEnsemble& ensemble, const std::filesystem::path& path) {
    ensemble.validate();
    auto out = detail::open_output(path);
    const int n_u = ensemble.input_dim();
    const int n_x = ensemble.state_dim();
    const int n_d = ensemble.num_snapshots();

    out << "# dt=" << detail::format_double(ensemble.dt) << "\n";
    out << "k,theta";
    for (int j = 1; j <= n_u; ++j) out << ",u_" << j;
    for (int j = 1; j <= n_x; ++j) out << ",x_" << j;
    out << "\n";

    for (int k = 0; k <= n_d; ++k) {
        out << k;
        if (k < n_d) {
            out << ',' << detail::format_double(ensemble.theta[k]);
            for (int j = 0; j < n_u; ++j)
                out << ',' << detail::format_double(ensemble.inputs[k][j]);
        } else {
            // terminal state row: theta and u fields are empty
            for (int j = 0; j <= n_u; ++j) out << ',';
        }
        for (int j = 0; j < n_x; ++j)
            out << ',' << detail::format_double(ensemble.states[k][j]);
        out << "\n";
    }
    if (!out) throw io_error("failed while writing '" + path.string() + "'");
}

SnapshotEnsemble load_snapshots(const std::filesystem::path& path) {
    auto in = detail::open_input(path);
    std::string line;
    double dt = 0.0;
    bool have_header = false;
    int n_u = 0, n_x = 0;
    std::size_t row = 0;
    SnapshotEnsemble ensemble;

    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line.front() == '#') {
            if (auto pos = line.find("dt="); pos != std::string::npos)
                dt = detail::parse_double(line.substr(pos + 3), "dt comment");
            continue;
        }
        auto fields = detail::split_csv_line(line);
        if (!have_header) {
            if (fields.size() < 4 || fields[0] != "k" || fields[1] != "theta")
                throw io_error("snapshot CSV header must start with 'k,theta' in '" +
                               path.string() + "'");
            for (const auto& f : fields) {
                if (f.rfind("u_", 0) == 0) ++n_u;
                if (f.rfind("x_", 0) == 0) ++n_x;
            }
            if (n_u < 1 || n_x < 1 || fields.size() != static_cast<std::size_t>(2 + n_u + n_x))
                throw io_error("snapshot CSV header malformed in '" + path.string() + "'");
            have_header = true;
            continue;
        }

        const std::string context = "row " + std::to_string(row) + " of '" + path.string() + "'";
        if (fields.size() != static_cast<std::size_t>(2 + n_u + n_x))
            throw io_error("wrong column count in " + context);
        const auto k = static_cast<std::size_t>(detail::parse_double(fields[0], context));
        if (k != row) throw io_error("non-consecutive time index in " + context);

        const bool terminal = fields[1].empty();
        if (!terminal) {
            ensemble.theta.push_back(detail::parse_double(fields[1], context));
            Eigen::VectorXd u(n_u);
            for (int j = 0; j < n_u; ++j) u[j] = detail::parse_double(fields[2 + j], context);
            ensemble.inputs.push_back(std::move(u));
        } else {
            for (int j = 0; j < n_u; ++j)
                if (!fields[2 + j].empty())
                    throw io_error("terminal row must leave u fields empty in " + context);
        }
        Eigen::VectorXd x(n_x);
        for (int j = 0; j < n_x; ++j) x[j] = detail::parse_double(fields[2 + n_u + j], context);
        ensemble.states.push_back(std::move(x));
        if (terminal) break;  // the terminal state row ends the window
        ++row;
    }

    if (!have_header) throw io_error("no header found in '" + path.string() + "'");
    if (dt <= 0.0) throw io_error("missing or invalid '# dt=' comment in '" + path.string() + "'");
    ensemble.dt = dt;
    try {
        ensemble.validate();
    } catch (const std::invalid_argument& e) {
        throw io_error("invalid snapshot file '" + path.string() + "': " + e.what());
    }
    return ensemble;
}

ThetaSource ThetaSource::fixed(double theta) {
    require(std::isfinite(theta), "ThetaSource: fixed theta must be finite");
    ThetaSource s;
    s.kind = Kind::Fixed;
    s.value = theta;
    return s;
}

ThetaSource ThetaSource::arcsin_rule(int state_index, double v0) {
    require(state_index >= 0, "ThetaSource: state index must be nonnegative");
    require(v0 != 0.0 && std::isfinite(v0), "ThetaSource: v0 must be nonzero and finite");
    ThetaSource s;
    s.kind = Kind::ArcsinRule;
    s.state_index = state_index;
    s.v0 = v0;
    return s;
}

double ThetaSource::eval(const Eigen::VectorXd& state) const {
    if (kind == Kind::Fixed) return value;
    require(state_index < state.size(), "ThetaSource: state index out of range");
    const double ratio = state[state_index] / v0;
    if (ratio < -1.0 || ratio > 1.0)
        throw numeric_error("ThetaSource: arcsin argument " + detail::format_double(ratio) +
                            " outside [-1,1]");
    return -std::asin(ratio);
}

SnapshotEnsemble collect_from_plant(const Plant& plant, const Signal& input,
                                    const Eigen::VectorXd& x0, const ThetaSource& theta_source,
                                    double divergence_bound) {
    input.validate();
    require(input.input_dim() == plant.input_dim(),
            "collect_from_plant: input dimension does not match the plant");
    require(x0.size() == plant.state_dim(),
            "collect_from_plant: x0 dimension does not match the plant");
    require(divergence_bound > 0.0, "collect_from_plant: divergence bound must be positive");

    const int n_d = static_cast<int>(input.samples.size()) - 1;
    require(n_d >= 1, "collect_from_plant: input must provide at least two samples");

    SnapshotEnsemble ensemble;
    ensemble.dt = input.dt;
    ensemble.states.reserve(n_d + 1);
    ensemble.inputs.reserve(n_d);
    ensemble.theta.reserve(n_d);
    ensemble.states.push_back(x0);

    for (int k = 0; k < n_d; ++k) {
        const Eigen::VectorXd& x = ensemble.states.back();
        const double theta = theta_source.eval(x);
        Eigen::VectorXd next = plant.step(x, input.samples[k], theta);
        if (!next.allFinite() || next.cwiseAbs().maxCoeff() > divergence_bound) {
            std::ostringstream msg;
            msg << "collect_from_plant: trajectory diverged at step " << k + 1
                << " (|state| bound " << divergence_bound << ")";
            throw numeric_error(msg.str());
        }
        ensemble.theta.push_back(theta);
        ensemble.inputs.push_back(input.samples[k]);
        ensemble.states.push_back(std::move(next));
    }
    return ensemble;
}

}  // namespace pdmd
