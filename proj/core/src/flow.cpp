#include "plflow/flow.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <random>

#include "plflow/errors.hpp"
#include "plflow/parallel.hpp"
#include "plflow/tet_geometry.hpp"

namespace plflow {

std::string to_string(FlowKind kind) {
    switch (kind) {
        case FlowKind::Crf: return "crf";
        case FlowKind::Ncrf: return "ncrf";
        case FlowKind::Lcf: return "lcf";
        case FlowKind::Nlcf: return "nlcf";
    }
    return "unknown";
}

FlowKind flow_kind_from_name(const std::string& name) {
    if (name == "crf") return FlowKind::Crf;
    if (name == "ncrf") return FlowKind::Ncrf;
    if (name == "lcf") return FlowKind::Lcf;
    if (name == "nlcf") return FlowKind::Nlcf;
    throw Error("unknown flow kind '" + name + "'");
}

std::string to_string(FlowStatus status) {
    switch (status) {
        case FlowStatus::ConvergedEinstein: return "ConvergedEinstein";
        case FlowStatus::ConvergedFlat: return "ConvergedFlat";
        case FlowStatus::Degenerated: return "Degenerated";
        case FlowStatus::StepUnderflow: return "StepUnderflow";
        case FlowStatus::MaxTimeReached: return "MaxTimeReached";
    }
    return "unknown";
}

bool is_converged(FlowStatus status) {
    return status == FlowStatus::ConvergedEinstein || status == FlowStatus::ConvergedFlat;
}

namespace {

Eigen::VectorXd field_at(const FlowSpec& spec, const Triangulation& tri,
                         const Eigen::VectorXd& lengths, double K, double h_rel) {
    const PLMetric l(lengths);
    switch (spec.kind) {
        case FlowKind::Crf:
            return -ricci(tri, l, K);
        case FlowKind::Ncrf: {
            const Eigen::VectorXd R = ricci(tri, l, K);
            const double lam = R.dot(lengths) / lengths.squaredNorm();
            return -R + lam * lengths;
        }
        case FlowKind::Lcf: {
            const Eigen::VectorXd R = ricci(tri, l, K);
            return -(jacobian(tri, l, K, h_rel).sym() * R);
        }
        case FlowKind::Nlcf: {
            if (!spec.target)
                throw Error("nlcf flow requires a target curvature vector");
            if (spec.target->size() != lengths.size())
                throw DimensionMismatch("nlcf target dimension mismatch");
            const Eigen::VectorXd R = ricci(tri, l, K);
            return jacobian(tri, l, K, h_rel).sym() * (*spec.target - R);
        }
    }
    throw Error("unreachable flow kind");
}

std::optional<FlowStatus> convergence_status(const CurvatureState& st, const FlowSpec& spec,
                                             double K, double tol) {
    const bool flat = st.ricci_flat_residual < tol;
    const bool einstein = st.einstein_residual < tol;
    switch (spec.kind) {
        case FlowKind::Crf:
            if (flat) return FlowStatus::ConvergedFlat;
            return std::nullopt;
        case FlowKind::Ncrf:
        case FlowKind::Nlcf:
            if (flat) return FlowStatus::ConvergedFlat;
            if (einstein) return FlowStatus::ConvergedEinstein;
            return std::nullopt;
        case FlowKind::Lcf:
            if (flat) return FlowStatus::ConvergedFlat;
            // For K = 0 the fourth-order flow stops on the kernel of L,
            // i.e. at Einstein metrics.  For K != 0 only R = 0 is a rest point.
            if (K == 0.0 && einstein) return FlowStatus::ConvergedEinstein;
            return std::nullopt;
    }
    return std::nullopt;
}

struct RecordInput {
    double t, dt, sk_rel, min_margin;
};

void append_record(FlowTrace& trace, const CurvatureState& st, const Eigen::VectorXd& l,
                   const RecordInput& in, bool store_snapshots) {
    TraceRecord rec;
    rec.t = in.t;
    rec.S = st.S;
    rec.C = st.C;
    rec.lam = st.lam;
    rec.einstein_residual = st.einstein_residual;
    rec.flat_residual = st.ricci_flat_residual;
    rec.norm_l_sq = l.squaredNorm();
    rec.min_margin = in.min_margin;
    rec.dt = in.dt;
    rec.sk_rel = in.sk_rel;
    if (store_snapshots) {
        rec.l = l;
        rec.R = st.R;
    }
    trace.records.push_back(std::move(rec));
}

}  // namespace

Eigen::VectorXd flow_field(const FlowSpec& spec, const Triangulation& tri, const PLMetric& l,
                           double K, double h_rel) {
    return field_at(spec, tri, l.values(), K, h_rel);
}

FlowResult run_flow(const FlowSpec& spec, const Triangulation& tri, const PLMetric& l0,
                    const FlowConfig& cfg) {
    const auto t_start = std::chrono::steady_clock::now();
    auto wall = [&] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start)
            .count();
    };

    FlowTrace trace;
    trace.kind = spec.kind;
    trace.K = cfg.K;
    trace.seed = cfg.seed;
    trace.has_snapshots = cfg.store_snapshots;

    Eigen::VectorXd l = l0.values();
    MetricAnalysis analysis = ricci_with_margin(tri, l0, cfg.K);
    CurvatureState st = functionals(analysis.R, l0);

    double t = 0.0;
    double dt = cfg.dt0;
    double sk_rel = 0.0;
    append_record(trace, st, l, {t, 0.0, sk_rel, analysis.min_margin}, cfg.store_snapshots);

    if (auto status = convergence_status(st, spec, cfg.K, cfg.tol_converge))
        return {*status, PLMetric(l), st, std::move(trace), wall()};

    enum class Fail { Degenerate, NonFinite };
    FlowStatus final_status = FlowStatus::MaxTimeReached;

    while (t < cfg.t_max) {
        const double dt_eff = std::min(dt, cfg.t_max - t);
        bool ok = false;
        Fail reason = Fail::Degenerate;
        Eigen::VectorXd l_new;
        MetricAnalysis next;
        try {
            const Eigen::VectorXd k1 = field_at(spec, tri, l, cfg.K, cfg.h_rel);
            const Eigen::VectorXd k2 =
                field_at(spec, tri, l + 0.5 * dt_eff * k1, cfg.K, cfg.h_rel);
            const Eigen::VectorXd k3 =
                field_at(spec, tri, l + 0.5 * dt_eff * k2, cfg.K, cfg.h_rel);
            const Eigen::VectorXd k4 = field_at(spec, tri, l + dt_eff * k3, cfg.K, cfg.h_rel);
            l_new = l + (dt_eff / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
            if (!l_new.allFinite()) {
                reason = Fail::NonFinite;
            } else if ((l_new.array() <= 0.0).any()) {
                reason = Fail::Degenerate;
            } else {
                next = ricci_with_margin(tri, PLMetric(l_new), cfg.K);
                ok = true;
            }
        } catch (const DegenerateMetric&) {
            reason = Fail::Degenerate;
        } catch (const InvalidMetric&) {
            reason = Fail::Degenerate;
        } catch (const StepTooLarge&) {
            reason = Fail::Degenerate;
        }

        if (!ok) {
            dt *= 0.5;
            if (dt < cfg.dt_min) {
                final_status = reason == Fail::NonFinite ? FlowStatus::StepUnderflow
                                                         : FlowStatus::Degenerated;
                break;
            }
            continue;
        }

        sk_rel += 0.5 * (st.R + next.R).dot(l_new - l);
        t += dt_eff;
        l = std::move(l_new);
        st = functionals(next.R, PLMetric(l));
        append_record(trace, st, l, {t, dt_eff, sk_rel, next.min_margin},
                      cfg.store_snapshots);

        if (auto status = convergence_status(st, spec, cfg.K, cfg.tol_converge)) {
            final_status = *status;
            break;
        }
    }

    return {final_status, PLMetric(l), st, std::move(trace), wall()};
}

MonitorReport monitors(const FlowTrace& trace, const FlowSpec& spec, double slack) {
    if (trace.records.size() < 2)
        throw TraceTooShort("monitors: trace needs at least 2 records");

    MonitorReport rep;
    rep.slack = slack;
    rep.all_ok = true;

    auto add_series = [&](const std::string& name, auto&& value_of) {
        MonitorCheck c{name, -std::numeric_limits<double>::infinity(), true};
        for (std::size_t i = 1; i < trace.records.size(); ++i) {
            const double prev = value_of(trace.records[i - 1]);
            const double cur = value_of(trace.records[i]);
            const double jump = cur - prev;
            c.max_increase = std::max(c.max_increase, jump);
            if (jump > slack * (1.0 + std::abs(prev))) c.ok = false;
        }
        rep.all_ok = rep.all_ok && c.ok;
        rep.checks.push_back(std::move(c));
    };

    switch (spec.kind) {
        case FlowKind::Crf:
            if (trace.K == 0.0)
                add_series("S", [](const TraceRecord& r) { return r.S; });
            add_series("SK_rel", [](const TraceRecord& r) { return r.sk_rel; });
            break;
        case FlowKind::Ncrf:
            add_series("S", [](const TraceRecord& r) { return r.S; });
            add_series("lambda", [](const TraceRecord& r) { return r.lam; });
            break;
        case FlowKind::Lcf:
            add_series("C", [](const TraceRecord& r) { return r.C; });
            break;
        case FlowKind::Nlcf: {
            if (!spec.target) throw Error("monitors: nlcf requires the target vector");
            if (!trace.has_snapshots)
                throw MissingSnapshots("monitors: nlcf energy needs R snapshots");
            const Eigen::VectorXd target = *spec.target;
            add_series("C_target", [&target](const TraceRecord& r) {
                return (target - r.R).squaredNorm();
            });
            break;
        }
    }
    return rep;
}

std::vector<double> sk_relative(const FlowTrace& trace) {
    if (!trace.has_snapshots)
        throw MissingSnapshots("sk_relative: trace was recorded without snapshots");
    std::vector<double> out;
    out.reserve(trace.records.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < trace.records.size(); ++i) {
        if (i > 0) {
            const auto& a = trace.records[i - 1];
            const auto& b = trace.records[i];
            acc += 0.5 * (a.R + b.R).dot(b.l - a.l);
        }
        out.push_back(acc);
    }
    return out;
}

PLMetric perturb_metric(const PLMetric& l, double amplitude, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> noise(-amplitude, amplitude);
    Eigen::VectorXd out = l.values();
    for (Eigen::Index i = 0; i < out.size(); ++i) out[i] *= 1.0 + noise(gen);
    return PLMetric(std::move(out));
}

namespace {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t trial) {
    // splitmix64 step on seed xor trial tag
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (trial + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

}  // namespace

AttractorReport attractor_probe(const FlowSpec& spec, const Triangulation& tri,
                                const PLMetric& l_de, const FlowConfig& cfg, int n_trials,
                                double noise) {
    AttractorReport rep;
    rep.trials = n_trials;
    rep.statuses.assign(n_trials, FlowStatus::MaxTimeReached);
    rep.final_residuals.assign(n_trials, std::numeric_limits<double>::quiet_NaN());

    parallel_for(n_trials, [&](int trial) {
        FlowConfig trial_cfg = cfg;
        trial_cfg.seed = mix_seed(cfg.seed, static_cast<std::uint64_t>(trial));
        trial_cfg.store_snapshots = false;
        const PLMetric start = perturb_metric(l_de, noise, trial_cfg.seed);
        const FlowResult res = run_flow(spec, tri, start, trial_cfg);
        rep.statuses[trial] = res.status;
        const bool flat_target =
            spec.kind == FlowKind::Crf || (spec.kind == FlowKind::Lcf && cfg.K != 0.0);
        rep.final_residuals[trial] = flat_target ? res.final_state.ricci_flat_residual
                                                 : res.final_state.einstein_residual;
    });

    for (int i = 0; i < n_trials; ++i)
        if (is_converged(rep.statuses[i])) ++rep.converged;
    rep.success_rate = n_trials > 0 ? static_cast<double>(rep.converged) / n_trials : 0.0;
    rep.worst_residual = 0.0;
    for (double r : rep.final_residuals)
        if (std::isfinite(r)) rep.worst_residual = std::max(rep.worst_residual, r);
    return rep;
}

}  // namespace plflow
