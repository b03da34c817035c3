#include "quasiq/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "quasiq/channels.hpp"
#include "quasiq/flip.hpp"
#include "quasiq/gallery.hpp"
#include "quasiq/measure.hpp"
#include "quasiq/rng.hpp"

namespace quasiq {

namespace {

Eigen::MatrixXd real_kron(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
    Eigen::MatrixXd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (long r = 0; r < a.rows(); ++r)
        for (long c = 0; c < a.cols(); ++c)
            out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
    return out;
}

// Collects the measure value of every state any property touches, so the
// global bound check at the end covers the whole suite's sample.
struct BoundTracker {
    long count = 0;
    double max_eq = -std::numeric_limits<double>::infinity();
    Json argmax_state;
    std::string argmax_source;

    void record(const DensityMatrix& rho, double eq, const char* source) {
        ++count;
        if (eq > max_eq) {
            max_eq = eq;
            argmax_state = state_to_json(rho);
            argmax_source = source;
        }
    }
};

void finish(PropertyResult& r, double raw_worst, double allowed) {
    r.worst_violation = std::max(0.0, raw_worst - allowed);
    r.pass = raw_worst <= allowed;
    r.details["worst"] = raw_worst;
    r.details["allowed"] = allowed;
}

class Harness {
public:
    explicit Harness(const SuiteConfig& cfg) : cfg_(cfg) {}

    SuiteReport run() {
        SuiteReport rep;
        rep.config = cfg_;
        rep.properties.push_back(ghz_attains_upper_bound());
        rep.properties.push_back(fully_mixed_flip_overlap());
        rep.properties.push_back(mixed_state_minimum());
        rep.properties.push_back(pure_product_measure_vanishes());
        rep.properties.push_back(separable_states_nonpositive());
        rep.properties.push_back(local_unitary_invariance());
        rep.properties.push_back(povm_monotonicity());
        rep.properties.push_back(picture_equivalence());
        rep.properties.push_back(inverter_matches_flip());
        rep.properties.push_back(concurrence_agreement());
        rep.properties.push_back(povm_block_contraction());
        rep.properties.push_back(werner_closed_form());
        rep.properties.push_back(eq_within_unit_bounds()); // must run last
        rep.all_pass = true;
        for (const PropertyResult& p : rep.properties) rep.all_pass = rep.all_pass && p.pass;
        return rep;
    }

private:
    const SuiteConfig& cfg_;
    BoundTracker tracker_;

    const std::vector<int>& dims_for(int trial) const {
        return cfg_.dims_set[static_cast<std::size_t>(trial) % cfg_.dims_set.size()];
    }

    std::uint64_t trial_seed(const char* prop, int trial) const {
        return rng::derive(cfg_.seed, rng::tag(prop), static_cast<std::uint64_t>(trial));
    }

    static double coherence_f(const DensityMatrix& rho) { return f_coherence(encode(rho)).f; }

    void track(const DensityMatrix& rho, const char* source) {
        tracker_.record(rho, f_coherence(encode(rho)).eq, source);
    }

    // Third, harness-local route to f: re-derive the diagonal weight of every
    // component from scratch and contract. Subject to the mutation hook.
    double weighted_f(const ExpandedCoherenceVector& v) const {
        const std::vector<int>& dims = v.dims();
        double acc = 0.0;
        for (int flat = 0; flat < v.size(); ++flat) {
            double w = g_weight(dims, unflatten_index(dims, flat));
            if (cfg_.mutate_gweight && *cfg_.mutate_gweight == flat) w = -w;
            const double m = v.data()(flat);
            acc += w * m * m;
        }
        const double offset =
            std::ldexp(1.0, static_cast<int>(dims.size())) / static_cast<double>(total_dimension(dims));
        return acc - offset;
    }

    PropertyResult ghz_attains_upper_bound() {
        PropertyResult r;
        r.name = "ghz_attains_upper_bound";
        double worst = 0.0;
        for (int n : {2, 3, 4}) {
            const DensityMatrix rho = ghz(n);
            const MeasureReport m = eq_measure(rho);
            tracker_.record(rho, m.eq, r.name.c_str());
            r.details["f_n" + std::to_string(n)] = m.f;
            if (n % 2 == 0) worst = std::max(worst, std::abs(m.eq - 1.0));
            ++r.trials;
        }
        finish(r, worst, 1e-10);
        return r;
    }

    PropertyResult fully_mixed_flip_overlap() {
        PropertyResult r;
        r.name = "fully_mixed_flip_overlap";
        double worst = 0.0;
        for (int n = 1; n <= 4; ++n) {
            const DensityMatrix rho = completely_mixed(std::vector<int>(n, 2));
            const double gross = gross_entanglement(rho);
            const double expected = std::ldexp(1.0, -n);
            worst = std::max(worst, std::abs(gross - expected));
            tracker_.record(rho, eq_measure(rho).eq, r.name.c_str());
            r.details["gross_n" + std::to_string(n)] = gross;
            ++r.trials;
        }
        finish(r, worst, 1e-12);
        return r;
    }

    PropertyResult mixed_state_minimum() {
        PropertyResult r;
        r.name = "mixed_state_minimum";
        double worst = 0.0;
        for (const std::vector<int>& dims : cfg_.dims_set) {
            const DensityMatrix rho = completely_mixed(dims);
            const int n = static_cast<int>(dims.size());
            const double total = static_cast<double>(total_dimension(dims));
            const double expected = 2.0 * (1.0 - std::ldexp(1.0, n - 1)) / total;
            const MeasureReport cm = eq_measure(rho);
            const MeasureReport dm = f_density(rho);
            worst = std::max({worst, std::abs(cm.f - expected), std::abs(dm.f - expected)});
            tracker_.record(rho, cm.eq, r.name.c_str());
            ++r.trials;
        }
        finish(r, worst, 1e-12);
        return r;
    }

    PropertyResult pure_product_measure_vanishes() {
        PropertyResult r;
        r.name = "pure_product_measure_vanishes";
        double worst = 0.0;
        int worst_trial = -1;
        for (int t = 0; t < cfg_.trials; ++t) {
            const std::vector<int>& dims = dims_for(t);
            auto [rho, ens] = random_separable(dims, 1, trial_seed("pure-product", t));
            const MeasureReport m = f_density(rho);
            const double dev = std::max(std::abs(m.gross), std::abs(m.unflip_term - m.offset));
            if (dev > worst) {
                worst = dev;
                worst_trial = t;
                r.counterexample = Counterexample{
                    t, dims,
                    Json{{"state", state_to_json(rho)},
                         {"gross", m.gross},
                         {"unflip_term", m.unflip_term},
                         {"offset", m.offset}}};
            }
            tracker_.record(rho, m.eq, r.name.c_str());
            ++r.trials;
        }
        r.details["worst_trial"] = worst_trial;
        finish(r, worst, 1e-10);
        if (r.pass) r.counterexample.reset();
        return r;
    }

    PropertyResult separable_states_nonpositive() {
        PropertyResult r;
        r.name = "separable_states_nonpositive";
        double worst = -std::numeric_limits<double>::infinity();
        for (int t = 0; t < cfg_.trials; ++t) {
            const std::vector<int>& dims = dims_for(t);
            const int terms = 1 + (t % 6);
            auto [rho, ens] = random_separable(dims, terms, trial_seed("separable", t));
            const MeasureReport m = eq_measure(rho);
            if (m.f > worst) {
                worst = m.f;
                r.counterexample = Counterexample{
                    t, dims,
                    Json{{"state", state_to_json(rho)},
                         {"ensemble", ensemble_to_json(ens)},
                         {"f", m.f}}};
            }
            tracker_.record(rho, m.eq, r.name.c_str());
            ++r.trials;
        }
        r.details["max_f"] = worst;
        finish(r, worst, 1e-9);
        if (r.pass) r.counterexample.reset();
        return r;
    }

    PropertyResult local_unitary_invariance() {
        PropertyResult r;
        r.name = "local_unitary_invariance";
        double worst = 0.0;
        for (int t = 0; t < cfg_.trials; ++t) {
            const std::vector<int>& dims = dims_for(t);
            const std::uint64_t s = trial_seed("unitary-invariance", t);
            const int rank = 1 + (t % static_cast<int>(total_dimension(dims)));
            const DensityMatrix rho = random_density(dims, rank, rng::derive(s, rng::tag("state")));
            const LocalUnitary u = random_local_unitary(dims, rng::derive(s, rng::tag("unitary")));
            const DensityMatrix rotated = apply_local_unitary(rho, u);
            const MeasureReport before = eq_measure(rho);
            const MeasureReport after = eq_measure(rotated);
            const double dev = std::abs(after.f - before.f);
            if (dev > worst) {
                worst = dev;
                r.counterexample = Counterexample{
                    t, dims,
                    Json{{"state", state_to_json(rho)},
                         {"unitary", unitary_to_json(u)},
                         {"f_before", before.f},
                         {"f_after", after.f}}};
            }
            tracker_.record(rho, before.eq, r.name.c_str());
            tracker_.record(rotated, after.eq, r.name.c_str());
            ++r.trials;
        }
        finish(r, worst, 1e-9);
        if (r.pass) r.counterexample.reset();
        return r;
    }

    PropertyResult povm_monotonicity() {
        PropertyResult r;
        r.name = "povm_monotonicity";
        double worst_f = -std::numeric_limits<double>::infinity();
        double worst_purity = -std::numeric_limits<double>::infinity();
        bool ce_is_f = true;
        for (int t = 0; t < cfg_.trials; ++t) {
            const std::vector<int>& dims = dims_for(t);
            const std::uint64_t s = trial_seed("povm-monotonicity", t);
            const int rank = 1 + (t % static_cast<int>(total_dimension(dims)));
            const DensityMatrix rho = random_density(dims, rank, rng::derive(s, rng::tag("state")));
            const LocalKrausChannel ch = random_local_povm(dims, rng::derive(s, rng::tag("channel")));
            const DensityMatrix out = apply_local_kraus(rho, ch);
            const MeasureReport before = eq_measure(rho);
            const MeasureReport after = eq_measure(out);
            const double f_excess = after.f - before.f;
            const double purity_excess = purity(out) - purity(rho);
            const bool new_worst =
                f_excess > worst_f || (purity_excess > worst_purity && purity_excess > 1e-10);
            if (new_worst) {
                ce_is_f = f_excess > worst_f;
                r.counterexample = Counterexample{
                    t, dims,
                    Json{{"state", state_to_json(rho)},
                         {"channel", channel_to_json(ch)},
                         {"f_before", before.f},
                         {"f_after", after.f},
                         {"purity_excess", purity_excess}}};
            }
            worst_f = std::max(worst_f, f_excess);
            worst_purity = std::max(worst_purity, purity_excess);
            tracker_.record(rho, before.eq, r.name.c_str());
            tracker_.record(out, after.eq, r.name.c_str());
            ++r.trials;
        }
        r.details["worst_f_excess"] = worst_f;
        r.details["worst_purity_excess"] = worst_purity;
        r.worst_violation =
            std::max({0.0, worst_f - 1e-9, worst_purity - 1e-10});
        r.pass = r.worst_violation == 0.0;
        r.details["ce_kind"] = ce_is_f ? "f" : "purity";
        if (r.pass) r.counterexample.reset();
        return r;
    }

    PropertyResult picture_equivalence() {
        PropertyResult r;
        r.name = "picture_equivalence";
        double worst = 0.0;
        for (int t = 0; t < cfg_.trials; ++t) {
            const std::vector<int>& dims = dims_for(t);
            const long total = total_dimension(dims);
            const int rank = 1 + (t % static_cast<int>(total));
            const DensityMatrix rho =
                random_density(dims, rank, trial_seed("picture-equivalence", t));
            const ExpandedCoherenceVector v = encode(rho);

            std::vector<double> fs;
            Json routes = Json::object();
            const MeasureReport dm = f_density(rho);
            const MeasureReport cm = f_coherence(v);
            fs.push_back(dm.f);
            fs.push_back(cm.f);
            fs.push_back(weighted_f(v));
            routes["density"] = fs[0];
            routes["coherence"] = fs[1];
            routes["reweighted"] = fs[2];
            if (std::all_of(dims.begin(), dims.end(), [](int d) { return d == 2; })) {
                fs.push_back(f_qubits_fast(rho).f);
                routes["qubit_fast"] = fs.back();
            }
            if (dims.size() == 2) {
                fs.push_back(f_bipartite_mixedness(rho).f);
                routes["bipartite_mixedness"] = fs.back();
            }
            double dev = 0.0;
            for (std::size_t a = 0; a < fs.size(); ++a)
                for (std::size_t b = a + 1; b < fs.size(); ++b)
                    dev = std::max(dev, std::abs(fs[a] - fs[b]));
            if (dev > worst) {
                worst = dev;
                r.counterexample = Counterexample{
                    t, dims, Json{{"state", state_to_json(rho)}, {"f_by_route", routes}}};
            }
            tracker_.record(rho, cm.eq, r.name.c_str());
            ++r.trials;
        }
        finish(r, worst, 1e-9);
        if (r.pass) r.counterexample.reset();
        return r;
    }

    PropertyResult inverter_matches_flip() {
        PropertyResult r;
        r.name = "inverter_matches_flip";
        std::vector<std::vector<int>> bipartite;
        for (const std::vector<int>& dims : cfg_.dims_set)
            if (dims.size() == 2) bipartite.push_back(dims);
        double worst = 0.0;
        for (int t = 0; t < cfg_.trials; ++t) {
            const std::vector<int>& dims = bipartite[static_cast<std::size_t>(t) % bipartite.size()];
            const long total = total_dimension(dims);
            const int rank = 1 + (t % static_cast<int>(total));
            const DensityMatrix rho = random_density(dims, rank, trial_seed("inverter", t));
            const double dev =
                (flip(rho) - universal_inverter(rho)).cwiseAbs().maxCoeff();
            if (dev > worst) {
                worst = dev;
                r.counterexample =
                    Counterexample{t, dims, Json{{"state", state_to_json(rho)}, {"dev", dev}}};
            }
            track(rho, r.name.c_str());
            ++r.trials;
        }
        finish(r, worst, 1e-10);
        if (r.pass) r.counterexample.reset();
        return r;
    }

    PropertyResult concurrence_agreement() {
        PropertyResult r;
        r.name = "concurrence_agreement";
        const std::vector<int> dims = {2, 2};
        double worst = 0.0;
        for (int t = 0; t < cfg_.trials; ++t) {
            std::mt19937_64 gen = rng::engine(trial_seed("concurrence", t));
            Eigen::VectorXcd psi = rng::gaussian_vector(4, gen);
            psi.normalize();
            const DensityMatrix rho = validate_density(psi * psi.adjoint(), dims);
            const MeasureReport m = eq_measure(rho);
            const double c2 = concurrence_sq_pure_two_qubit(psi);
            const double dev = std::abs(m.eq - c2);
            if (dev > worst) {
                worst = dev;
                r.counterexample = Counterexample{
                    t, dims,
                    Json{{"state", state_to_json(rho)}, {"eq", m.eq}, {"concurrence_sq", c2}}};
            }
            tracker_.record(rho, m.eq, r.name.c_str());
            ++r.trials;
        }
        finish(r, worst, 1e-9);
        if (r.pass) r.counterexample.reset();
        return r;
    }

    PropertyResult povm_block_contraction() {
        PropertyResult r;
        r.name = "povm_block_contraction";
        const std::vector<std::vector<int>> layouts = {{2}, {3}, {2, 2}, {2, 3}};
        double worst = 0.0;
        for (int t = 0; t < cfg_.trials; ++t) {
            const std::vector<int>& layout = layouts[static_cast<std::size_t>(t) % layouts.size()];
            const std::uint64_t s = trial_seed("block-contraction", t);
            const LocalKrausChannel ch = random_local_povm(layout, rng::derive(s, rng::tag("channel")));
            const CoherenceSuperoperator sup = coherence_superoperator(ch);
            const long size = sup.matrix.rows();

            // action on coefficients matches the density-picture application
            const int rank = 1 + (t % static_cast<int>(total_dimension(layout)));
            const DensityMatrix rho =
                random_density(layout, rank, rng::derive(s, rng::tag("state")));
            const DensityMatrix out = apply_local_kraus(rho, ch);
            const Eigen::VectorXd predicted = sup.matrix * encode(rho).data();
            const double faith_dev = (encode(out).data() - predicted).cwiseAbs().maxCoeff();

            // leading row and column pinned to (1, 0, ..., 0)
            double block_dev = std::abs(sup.matrix(0, 0) - 1.0);
            for (long i = 1; i < size; ++i) {
                block_dev = std::max(block_dev, std::abs(sup.matrix(0, i)));
                block_dev = std::max(block_dev, std::abs(sup.matrix(i, 0)));
            }

            // the traceless-sector block never expands any direction
            const Eigen::MatrixXd d = sup.matrix.block(1, 1, size - 1, size - 1);
            const double top_sv = Eigen::JacobiSVD<Eigen::MatrixXd>(d).singularValues()(0);
            const double sv_excess = top_sv - 1.0;

            // multipartite superoperators factor over the subsystems
            double kron_dev = 0.0;
            if (layout.size() > 1) {
                Eigen::MatrixXd assembled;
                for (std::size_t k = 0; k < layout.size(); ++k) {
                    const LocalKrausChannel part({layout[k]}, {ch.factors()[k]});
                    const Eigen::MatrixXd pk = coherence_superoperator(part).matrix;
                    assembled = k == 0 ? pk : real_kron(assembled, pk);
                }
                kron_dev = (assembled - sup.matrix).cwiseAbs().maxCoeff();
            }

            const double dev = std::max({faith_dev, block_dev, sv_excess, kron_dev});
            if (dev > worst) {
                worst = dev;
                r.counterexample = Counterexample{
                    t, layout,
                    Json{{"channel", channel_to_json(ch)},
                         {"faithfulness_dev", faith_dev},
                         {"block_dev", block_dev},
                         {"top_singular_value", top_sv},
                         {"kron_dev", kron_dev}}};
            }
            tracker_.record(rho, f_coherence(encode(rho)).eq, r.name.c_str());
            tracker_.record(out, f_coherence(encode(out)).eq, r.name.c_str());
            ++r.trials;
        }
        finish(r, worst, 1e-9);
        if (r.pass) r.counterexample.reset();
        return r;
    }

    PropertyResult werner_closed_form() {
        PropertyResult r;
        r.name = "werner_closed_form";
        const WernerSweep sweep = werner_sweep(-1.0, 1.0, 401);
        double f_dev = 0.0;
        double marginal_dev = 0.0;
        const ComplexMatrix half = ComplexMatrix::Identity(2, 2) / 2.0;
        for (std::size_t i = 0; i < sweep.rows.size(); ++i) {
            const WernerSweepRow& row = sweep.rows[i];
            const double expected = ((2.0 * row.phi + 1.0) * (2.0 * row.phi + 1.0) - 3.0) / 6.0;
            f_dev = std::max(f_dev, std::abs(row.f - expected));
            const DensityMatrix w = werner(row.phi);
            for (int keep : {0, 1}) {
                const DensityMatrix marg = partial_trace(w, {keep});
                marginal_dev =
                    std::max(marginal_dev, (marg.matrix() - half).cwiseAbs().maxCoeff());
            }
            if (i % 50 == 0) {
                f_dev = std::max(f_dev, std::abs(f_density(w).f - expected));
                tracker_.record(w, eq_measure(w).eq, r.name.c_str());
            }
            ++r.trials;
        }
        const double cell = 2.0 / 400.0;
        double crossing_dev = 1.0; // no crossing found at all
        for (double c : sweep.crossings)
            crossing_dev = std::min(crossing_dev, std::abs(c - sweep.derived_positive_root));
        r.details["f_dev"] = f_dev;
        r.details["marginal_dev"] = marginal_dev;
        r.details["crossings"] = sweep.crossings;
        r.details["derived_positive_root"] = sweep.derived_positive_root;
        r.details["quoted_interval"] =
            Json::array({sweep.quoted_interval_lo, sweep.quoted_interval_hi});
        r.details["interval_mismatch"] = sweep.interval_mismatch;
        r.details["note"] = sweep.note;
        r.worst_violation = std::max({0.0, f_dev - 1e-10, marginal_dev - 1e-12,
                                      crossing_dev - cell});
        r.pass = r.worst_violation == 0.0;
        return r;
    }

    PropertyResult eq_within_unit_bounds() {
        PropertyResult r;
        r.name = "eq_within_unit_bounds";
        r.trials = static_cast<int>(tracker_.count);
        r.details["states_tracked"] = tracker_.count;
        r.details["max_eq"] = tracker_.max_eq;
        const double excess = tracker_.max_eq - 1.0;
        finish(r, excess, 1e-9);
        if (!r.pass)
            r.counterexample = Counterexample{
                0, {}, Json{{"state", tracker_.argmax_state},
                            {"source", tracker_.argmax_source},
                            {"eq", tracker_.max_eq}}};
        return r;
    }
};

} // namespace

SuiteReport run_suite(const SuiteConfig& cfg) {
    if (cfg.trials < 1) throw std::invalid_argument("suite needs at least one trial");
    if (cfg.dims_set.empty()) throw std::invalid_argument("suite needs a non-empty dims set");
    bool any_bipartite = false;
    for (const std::vector<int>& dims : cfg.dims_set) any_bipartite |= dims.size() == 2;
    if (!any_bipartite)
        throw std::invalid_argument("dims set must contain at least one two-subsystem layout");
    Harness h(cfg);
    return h.run();
}

Json suite_report_to_json(const SuiteReport& rep) {
    Json cfg{{"seed", rep.config.seed},
             {"trials", rep.config.trials},
             {"dims", rep.config.dims_set},
             {"tolerances",
              Json{{"herm", rep.config.tol.herm},
                   {"trace", rep.config.tol.trace},
                   {"psd", rep.config.tol.psd},
                   {"eq", rep.config.tol.eq}}}};
    cfg["mutate_gweight"] =
        rep.config.mutate_gweight ? Json(*rep.config.mutate_gweight) : Json(nullptr);

    Json props = Json::array();
    for (const PropertyResult& p : rep.properties) {
        Json jp{{"name", p.name},
                {"pass", p.pass},
                {"trials", p.trials},
                {"worst_violation", p.worst_violation},
                {"details", p.details}};
        if (p.counterexample) {
            jp["counterexample"] = Json{{"trial", p.counterexample->trial},
                                        {"dims", p.counterexample->dims},
                                        {"detail", p.counterexample->detail}};
        }
        props.push_back(std::move(jp));
    }
    return Json{{"config", std::move(cfg)},
                {"all_pass", rep.all_pass},
                {"properties", std::move(props)}};
}

WernerSweep werner_sweep(double from, double to, int steps) {
    if (steps < 2) throw std::invalid_argument("sweep needs at least 2 grid points");
    if (!(from >= -1.0 && to <= 1.0 && from < to))
        throw std::invalid_argument("sweep range must satisfy -1 <= from < to <= 1");

    WernerSweep s;
    for (int i = 0; i < steps; ++i) {
        double phi = from + (to - from) * static_cast<double>(i) / (steps - 1);
        phi = std::clamp(phi, -1.0, 1.0);
        const MeasureReport m = eq_measure(werner(phi));
        s.rows.push_back({phi, m.f, m.eq});
    }
    for (std::size_t i = 0; i + 1 < s.rows.size(); ++i) {
        const double f0 = s.rows[i].f;
        const double f1 = s.rows[i + 1].f;
        if (f0 == 0.0) {
            s.crossings.push_back(s.rows[i].phi);
        } else if ((f0 < 0.0) != (f1 < 0.0)) {
            const double t = f0 / (f0 - f1);
            s.crossings.push_back(s.rows[i].phi + t * (s.rows[i + 1].phi - s.rows[i].phi));
        }
    }
    if (!s.rows.empty() && s.rows.back().f == 0.0) s.crossings.push_back(s.rows.back().phi);

    s.derived_positive_root = (std::sqrt(3.0) - 1.0) / 2.0;
    s.quoted_interval_lo = (-2.0 - std::sqrt(6.0)) / 4.0;
    s.quoted_interval_hi = (-2.0 + std::sqrt(6.0)) / 4.0;
    s.interval_mismatch =
        std::abs(s.derived_positive_root - s.quoted_interval_hi) > 1e-9;
    s.note = "zero crossings measured from the quadratic form disagree with the quoted "
             "interval endpoints; both are reported, neither is adopted silently";
    return s;
}

Json werner_sweep_to_json(const WernerSweep& s) {
    Json rows = Json::array();
    for (const WernerSweepRow& r : s.rows)
        rows.push_back(Json{{"phi", r.phi}, {"f", r.f}, {"eq", r.eq}});
    return Json{{"rows", std::move(rows)},
                {"crossings", s.crossings},
                {"derived_positive_root", s.derived_positive_root},
                {"quoted_interval", Json::array({s.quoted_interval_lo, s.quoted_interval_hi})},
                {"interval_mismatch", s.interval_mismatch},
                {"note", s.note}};
}

std::string werner_sweep_to_csv(const WernerSweep& s) {
    std::string out = "phi,f,eq\n";
    char line[128];
    for (const WernerSweepRow& r : s.rows) {
        std::snprintf(line, sizeof(line), "%.17g,%.17g,%.17g\n", r.phi, r.f, r.eq);
        out += line;
    }
    out += "# crossings:";
    for (double c : s.crossings) {
        std::snprintf(line, sizeof(line), " %.17g", c);
        out += line;
    }
    out += '\n';
    std::snprintf(line, sizeof(line), "# derived positive root: %.17g\n",
                  s.derived_positive_root);
    out += line;
    std::snprintf(line, sizeof(line), "# quoted interval: [%.17g, %.17g]\n",
                  s.quoted_interval_lo, s.quoted_interval_hi);
    out += line;
    out += std::string("# interval mismatch: ") + (s.interval_mismatch ? "yes" : "no") + "\n";
    return out;
}

} // namespace quasiq
