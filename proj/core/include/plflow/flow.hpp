#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "plflow/curvature.hpp"

namespace plflow {

// The four flows: Crf  l' = -R            (second order)
//                 Ncrf l' = -R + lam*l    (normalized second order)
//                 Lcf  l' = -L^T R        (fourth order)
//                 Nlcf l' = L^T (R_de - R) (fourth order toward a target)
enum class FlowKind { Crf, Ncrf, Lcf, Nlcf };

std::string to_string(FlowKind kind);
FlowKind flow_kind_from_name(const std::string& name);  // crf/ncrf/lcf/nlcf

struct FlowSpec {
    FlowKind kind = FlowKind::Crf;
    std::optional<Eigen::VectorXd> target;  // R_de; required for Nlcf
};

struct FlowConfig {
    double K = 0.0;
    double dt0 = 1e-2;   // initial step; halved on failed steps and kept
    double dt_min = 1e-9;
    double t_max = 10.0;
    double tol_converge = 1e-8;
    double h_rel = 1e-5;  // finite-difference step for L inside Lcf/Nlcf
    bool store_snapshots = true;
    std::uint64_t seed = 0;  // recorded in the trace header
};

struct TraceRecord {
    double t;
    double S, C, lam;
    double einstein_residual, flat_residual;
    double norm_l_sq;
    double min_margin;  // signed CM det (K=0) or min link slack (K!=0)
    double dt;          // step that produced this record; 0 for the initial one
    double sk_rel;      // cumulative trapezoidal quadrature of R.dl
    Eigen::VectorXd l, R;  // empty when snapshots are disabled
};

struct FlowTrace {
    FlowKind kind = FlowKind::Crf;
    double K = 0.0;
    std::uint64_t seed = 0;
    bool has_snapshots = true;
    std::vector<TraceRecord> records;
};

enum class FlowStatus {
    ConvergedEinstein,
    ConvergedFlat,
    Degenerated,
    StepUnderflow,
    MaxTimeReached,
};

std::string to_string(FlowStatus status);
bool is_converged(FlowStatus status);

struct FlowResult {
    FlowStatus status;
    PLMetric final_metric;
    CurvatureState final_state;
    FlowTrace trace;
    double wall_seconds;
};

// Right-hand side of the chosen flow at metric l.  Lcf/Nlcf assemble the
// symmetrized finite-difference Laplacian at l.
Eigen::VectorXd flow_field(const FlowSpec& spec, const Triangulation& tri,
                           const PLMetric& l, double K, double h_rel = 1e-5);

// Classic RK4 with step halving: a step whose stages or result leave the
// nondegenerate set is retried at dt/2 until dt_min.  Convergence is
// declared on state residuals, never on the field norm.
FlowResult run_flow(const FlowSpec& spec, const Triangulation& tri, const PLMetric& l0,
                    const FlowConfig& cfg);

struct MonitorCheck {
    std::string name;
    double max_increase;  // largest jump between consecutive records
    bool ok;              // every jump <= slack * (1 + |value|)
};

struct MonitorReport {
    std::vector<MonitorCheck> checks;
    bool all_ok;
    double slack;
};

// Monotonicity monitors applicable to the given flow: S (Crf at K=0, Ncrf),
// lambda (Ncrf), C (Lcf), sum((R_de - R)_i^2) (Nlcf), sk_rel (Crf at K!=0).
MonitorReport monitors(const FlowTrace& trace, const FlowSpec& spec, double slack = 1e-10);

// S_K(t) - S_K(0) along the trace by trapezoidal quadrature of R.dl;
// requires stored snapshots.
std::vector<double> sk_relative(const FlowTrace& trace);

// Multiplicative uniform noise: each length scaled by a factor drawn from
// [1 - amplitude, 1 + amplitude] with a seeded 64-bit generator.
PLMetric perturb_metric(const PLMetric& l, double amplitude, std::uint64_t seed);

struct AttractorReport {
    int trials = 0;
    int converged = 0;
    double success_rate = 0.0;
    double worst_residual = 0.0;  // max over trials of the final target residual
    std::vector<FlowStatus> statuses;
    std::vector<double> final_residuals;
};

// Runs n_trials perturbed starts around l_de with per-trial seeds derived
// from (cfg.seed, trial); trials are independent and may run concurrently.
AttractorReport attractor_probe(const FlowSpec& spec, const Triangulation& tri,
                                const PLMetric& l_de, const FlowConfig& cfg, int n_trials,
                                double noise);

}  // namespace plflow
