#include "gptcap/cli.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gptcap/asymptotic.hpp"
#include "gptcap/io.hpp"
#include "gptcap/random_instances.hpp"

namespace gptcap::cli {

namespace {

namespace fs = std::filesystem;

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

// State spec: "center", "corner", "cornerK", or a comma-separated coordinate
// list like "1,1/2,-1/3".
State parse_state_spec(const ModelPtr& model, const std::string& spec) {
    if (spec == "center") return center_state(model);
    if (spec.rfind("corner", 0) == 0) {
        int idx = 0;
        if (spec.size() > 6) idx = std::stoi(spec.substr(6));
        return corner_state(model, idx);
    }
    Vec coords;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) coords.push_back(parse_rational(item));
    return State::make(model, std::move(coords));
}

std::vector<Rational> parse_rational_list(const std::string& spec) {
    std::vector<Rational> out;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
    return out;
}

struct Output {
    std::optional<fs::path> dir;

    void write(const std::string& command, const json& report,
               const std::vector<std::string>& csv_lines) const {
        if (!dir) return;
        fs::create_directories(*dir);
        save_json_file(report, *dir / (command + ".json"));
        std::ofstream csv(*dir / (command + ".csv"));
        for (const auto& line : csv_lines) csv << line << "\n";
    }
};

int cmd_validate(const fs::path& model_path, int trials, std::uint64_t seed, const Output& out) {
    ModelPtr model = load_model_file(model_path);  // throws InvalidModel on failure
    PolarReport polar = polar_consistency_check(model->primal_rays, model->dual_rays,
                                                model->dim, trials, seed);
    json rep;
    rep["model"] = model->name;
    rep["valid"] = true;
    rep["polar_trials"] = polar.trials;
    rep["polar_failures"] = polar.failures;
    rep["polar_pass"] = polar.pass;
    if (polar.first_counterexample)
        rep["first_counterexample"] = vec_to_json(polar.first_counterexample->vector);
    out.write("validate", rep,
              {"model,polar_trials,polar_failures,pass",
               model->name + "," + std::to_string(polar.trials) + "," +
                   std::to_string(polar.failures) + "," + (polar.pass ? "1" : "0")});
    std::cout << "model " << model->name << ": invariants ok, polar check "
              << (polar.pass ? "pass" : "FAIL") << " (" << polar.failures << "/" << polar.trials
              << " failures)\n";
    return polar.pass ? 0 : 1;
}

int cmd_dht(const fs::path& model_path, const std::string& rho_spec,
            const std::string& sigma_spec, const Rational& eps, const Output& out) {
    ModelPtr model = load_model_file(model_path);
    State rho = parse_state_spec(model, rho_spec);
    State sigma = parse_state_spec(model, sigma_spec);
    HypothesisTestResult r = dht(rho, sigma, eps);
    json rep;
    rep["model"] = model->name;
    rep["epsilon"] = rat_str(eps);
    rep["beta_star"] = rat_str(r.beta_star);
    // JSON has no infinity; the exact beta carries the truth either way.
    if (std::isinf(r.d_value))
        rep["d_value_bits"] = "inf";
    else
        rep["d_value_bits"] = r.d_value;
    rep["optimal_q"] = vec_to_json(r.optimal_q.coords);
    out.write("dht", rep,
              {"model,epsilon,beta_star,d_bits",
               model->name + "," + rat_str(eps) + "," + rat_str(r.beta_star) + "," +
                   fmt_double(r.d_value)});
    std::cout << "beta_star = " << rat_str(r.beta_star) << "  D = " << fmt_double(r.d_value)
              << " bits\n";
    return 0;
}

int cmd_dpi(const fs::path& model_path, int count, std::uint64_t seed,
            const std::string& eps_list, int outcomes, const Output& out) {
    if (count < 1 || outcomes < 2) throw InvalidParameter("need --count >= 1, --outcomes >= 2");
    ModelPtr model = load_model_file(model_path);
    std::vector<Rational> epsilons = parse_rational_list(eps_list);
    if (epsilons.empty()) throw InvalidParameter("--eps-list is empty");
    SplitMix64 rng(seed);
    int violations = 0;
    std::vector<std::string> csv = {"instance,epsilon,beta_before,beta_after,holds"};
    json cases = json::array();
    for (int i = 0; i < count; ++i) {
        State rho = random_state(rng, model);
        State sigma = random_state(rng, model);
        int k = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(outcomes - 1)));
        Measurement meas = random_measurement(rng, model, k);
        const Rational& eps = epsilons[i % epsilons.size()];
        DpiReport rep = dpi_check(rho, sigma, eps, meas);
        if (!rep.holds || !rep.pulled_back_feasible || rep.pulled_back_type2 != rep.beta_after)
            ++violations;
        csv.push_back(std::to_string(i) + "," + rat_str(eps) + "," + rat_str(rep.beta_before) +
                      "," + rat_str(rep.beta_after) + "," + (rep.holds ? "1" : "0"));
        json c;
        c["epsilon"] = rat_str(eps);
        c["beta_before"] = rat_str(rep.beta_before);
        c["beta_after"] = rat_str(rep.beta_after);
        c["holds"] = rep.holds;
        cases.push_back(c);
    }
    json rep;
    rep["model"] = model->name;
    rep["count"] = count;
    rep["violations"] = violations;
    rep["cases"] = cases;
    out.write("dpi-check", rep, csv);
    std::cout << "dpi-check: " << count << " instances, " << violations << " violations\n";
    return violations == 0 ? 0 : 1;
}

int cmd_continuity(const fs::path& model_path, const std::string& rho_spec,
                   const std::string& sigma_spec, const Rational& eps, const Rational& eta,
                   int points, const Output& out) {
    ModelPtr model = load_model_file(model_path);
    State rho = parse_state_spec(model, rho_spec);
    State sigma = parse_state_spec(model, sigma_spec);

    // 21-point monotonicity grid plus the Lemma-4 style probe at eps.
    std::vector<Rational> grid;
    for (int i = 0; i <= 20; ++i) grid.push_back(ratio(i, 20));
    MonotonicityReport mono = monotonicity_scan(rho, sigma, grid);
    ContinuityProbeReport probe = left_continuity_probe(rho, sigma, eps, eta, points);

    json rep;
    rep["model"] = model->name;
    rep["monotone"] = mono.monotone;
    rep["alpha"] = rat_str(probe.alpha);
    rep["delta"] = rat_str(probe.delta);
    rep["probe_pass"] = probe.pass;
    json pts = json::array();
    std::vector<std::string> csv = {"delta_prime,beta,gap,ok"};
    for (const auto& p : probe.points) {
        json pj;
        pj["delta_prime"] = rat_str(p.delta_prime);
        pj["beta"] = rat_str(p.beta);
        pj["gap"] = rat_str(p.gap);
        pj["ok"] = p.ok;
        pts.push_back(pj);
        csv.push_back(rat_str(p.delta_prime) + "," + rat_str(p.beta) + "," + rat_str(p.gap) +
                      "," + (p.ok ? "1" : "0"));
    }
    rep["points"] = pts;
    out.write("continuity", rep, csv);
    std::cout << "monotone: " << (mono.monotone ? "yes" : "NO") << ", probe alpha="
              << rat_str(probe.alpha) << " delta=" << rat_str(probe.delta) << " "
              << (probe.pass ? "pass" : "FAIL") << "\n";
    return (mono.monotone && probe.pass) ? 0 : 1;
}

json capacity_json(const CapacityResult& res) {
    json j;
    j["epsilon"] = rat_str(res.epsilon);
    j["N_star"] = res.N_star;
    j["exact_bits"] = res.exact_bits;
    j["truncated"] = res.truncated;
    if (res.witness) {
        j["encoder"] = res.witness->encoder;
        json dec = json::array();
        for (const auto& e : res.witness->decoder.effects) dec.push_back(vec_to_json(e.coords));
        j["decoder"] = dec;
    }
    json by_n = json::array();
    for (std::size_t i = 0; i < res.best_error_by_N.size(); ++i) {
        json row;
        row["N"] = i + 1;
        row["best_error"] = rat_str(res.best_error_by_N[i]);
        by_n.push_back(row);
    }
    j["best_error_by_N"] = by_n;
    return j;
}

int cmd_capacity(const fs::path& channel_path, const Rational& eps, int nmax,
                 const Output& out) {
    ClassicalToGPTChannel ch = load_channel_file(channel_path);
    CapacityResult res = exact_one_shot_capacity(ch, eps, nmax);
    json rep = capacity_json(res);
    rep["channel"] = ch.name;
    std::vector<std::string> csv = {"N,best_error"};
    for (std::size_t i = 0; i < res.best_error_by_N.size(); ++i)
        csv.push_back(std::to_string(i + 1) + "," + rat_str(res.best_error_by_N[i]));
    out.write("capacity", rep, csv);
    std::cout << "N* = " << res.N_star << "  exact_bits = " << fmt_double(res.exact_bits)
              << (res.truncated ? "  (truncated at N_max)" : "") << "\n";
    return 0;
}

int cmd_bounds(const fs::path& channel_path, const Rational& eps, int nmax, int grid_k,
               const Output& out) {
    ClassicalToGPTChannel ch = load_channel_file(channel_path);
    CapacityReport rep = capacity_sandwich(ch, eps, nmax, grid_k);
    json j;
    j["channel"] = ch.name;
    j["epsilon"] = rat_str(eps);
    j["exact"] = capacity_json(rep.exact);
    j["theorem1_beta"] = rat_str(rep.upper.beta);
    j["theorem1_bits"] = rep.upper.bits;
    json t1p = json::array();
    for (const auto& p : rep.upper.best_P) t1p.push_back(rat_str(p));
    j["theorem1_best_P"] = t1p;
    j["theorem2_r"] = rat_str(rep.lower.r);
    j["theorem2_bits"] = rep.lower.bits;
    j["theorem2_bits_unclipped"] = rep.lower.bits_unclipped;
    j["theorem2_guaranteed_N"] = rep.lower.guaranteed_N;
    if (eps > 0) {
        json t2p = json::array();
        for (const auto& p : rep.lower.best_P) t2p.push_back(rat_str(p));
        j["theorem2_best_P"] = t2p;
        j["theorem2_eps_prime"] = rat_str(rep.lower.best_eps_prime);
        j["theorem2_s"] = rat_str(rep.lower.best_s);
        j["theorem2_t"] = rat_str(rep.lower.best_t);
    }
    j["sandwich_ok"] = rep.sandwich_ok;
    std::vector<std::string> csv = {
        "epsilon,N_star,exact_bits,t1_bits,t2_bits,beta_t1,r_t2,sandwich_ok",
        rat_str(eps) + "," + std::to_string(rep.exact.N_star) + "," +
            fmt_double(rep.exact.exact_bits) + "," + fmt_double(rep.upper.bits) + "," +
            fmt_double(rep.lower.bits) + "," + rat_str(rep.upper.beta) + "," +
            rat_str(rep.lower.r) + "," + (rep.sandwich_ok ? "1" : "0")};
    out.write("bounds", j, csv);
    std::cout << "exact " << fmt_double(rep.exact.exact_bits) << " bits in ["
              << fmt_double(rep.lower.bits) << ", " << fmt_double(rep.upper.bits)
              << "], sandwich " << (rep.sandwich_ok ? "ok" : "VIOLATED") << "\n";
    return rep.sandwich_ok ? 0 : 1;
}

int cmd_lemma3(const fs::path& model_path, int count, std::uint64_t seed, int family,
               const Rational& s, const Rational& t, const Output& out) {
    ModelPtr model = load_model_file(model_path);
    SplitMix64 rng(seed);
    int failures = 0;
    int double_nonneg = 0;
    std::vector<std::string> csv = {"instance,chosen,nonneg_b_count,pass"};
    for (int i = 0; i < count; ++i) {
        LemmaThreeInput in;
        in.s = s;
        in.t = t;
        for (int y = 0; y < family; ++y) in.effects.push_back(random_effect(rng, model));
        try {
            Measurement meas = lemma3_construct(in);
            Lemma3Report rep = lemma3_verify(in, meas);
            if (!rep.pass) ++failures;
            if (rep.nonneg_b_count > 1) ++double_nonneg;
            csv.push_back(std::to_string(i) + "," + std::to_string(rep.chosen_index) + "," +
                          std::to_string(rep.nonneg_b_count) + "," + (rep.pass ? "1" : "0"));
        } catch (const ContradictionDetected&) {
            ++double_nonneg;
            ++failures;
        }
    }
    json rep;
    rep["model"] = model->name;
    rep["count"] = count;
    rep["s"] = rat_str(s);
    rep["t"] = rat_str(t);
    rep["verify_failures"] = failures;
    rep["double_nonneg"] = double_nonneg;
    out.write("lemma3", rep, csv);
    std::cout << "lemma3: " << count << " families, " << failures << " verify failures, "
              << double_nonneg << " at-most-one violations\n";
    return (failures == 0 && double_nonneg == 0) ? 0 : 1;
}

int cmd_random_coding(const fs::path& channel_path, const std::string& p_spec, int n,
                      const Rational& eps_prime, const Rational& s, const Rational& t,
                      int trials, std::uint64_t seed, const Output& out) {
    ClassicalToGPTChannel ch = load_channel_file(channel_path);
    std::vector<Rational> P;
    if (p_spec == "uniform")
        P.assign(ch.size(), ratio(1, ch.size()));
    else
        P = parse_rational_list(p_spec);
    RandomCodingReport rep = random_coding_bound_check(ch, P, n, eps_prime, s, t, trials, seed);
    json j;
    j["channel"] = ch.name;
    j["N"] = n;
    j["eps_prime"] = rat_str(eps_prime);
    j["s"] = rat_str(s);
    j["t"] = rat_str(t);
    j["beta"] = rat_str(rep.beta);
    j["bound"] = rat_str(rep.bound);
    j["tight_bound"] = rat_str(rep.tight_bound);
    j["exhaustive"] = rep.exhaustive;
    j["expected_error"] = rat_str(rep.expected_error);
    j["encoders_checked"] = rep.encoders_checked;
    j["per_message_violations"] = rep.per_message_violations;
    j["expectation_within_bound"] = rep.expectation_within_bound;
    out.write("random-coding", j,
              {"beta,bound,expected_error,exhaustive,violations",
               rat_str(rep.beta) + "," + rat_str(rep.bound) + "," + rat_str(rep.expected_error) +
                   "," + (rep.exhaustive ? "1" : "0") + "," +
                   std::to_string(rep.per_message_violations)});
    std::cout << (rep.exhaustive ? "exact" : "sampled") << " E[error] = "
              << rat_str(rep.expected_error) << " vs bound " << rat_str(rep.bound) << " ("
              << rep.per_message_violations << " per-message violations)\n";
    // The checked claim is the expectation bound; per-message violations are
    // reported as data (the indicator decoder degenerates on some families).
    bool ok = !rep.exhaustive || rep.expectation_within_bound;
    return ok ? 0 : 1;
}

int cmd_sweep(const fs::path& channel_path, const Rational& eps, const Rational& eps_prime,
              int m_max, int grid_k, long budget, const Output& out) {
    ClassicalToGPTChannel ch = load_channel_file(channel_path);
    RateReport rep = rate_sweep(ch, eps, eps_prime, m_max, grid_k, budget);
    json j;
    j["channel"] = ch.name;
    j["epsilon"] = rat_str(eps);
    j["eps_prime"] = rat_str(eps_prime);
    j["all_ok"] = rep.all_ok;
    json rows = json::array();
    std::vector<std::string> csv = {
        "m,mode,N,exact_bits,exact_per_use,t1_bits,t1_per_use,t2_bits,t2_per_use,beta_t1,r_t2,"
        "sandwich_ok"};
    for (const auto& row : rep.rows) {
        json rj;
        rj["m"] = row.m;
        rj["mode"] = row.mode;
        rj["N"] = row.N;
        rj["exact_bits"] = row.exact_bits;
        rj["t1_bits"] = row.t1_bits;
        rj["t2_bits"] = row.t2_bits;
        rj["beta_t1"] = rat_str(row.beta_t1);
        rj["r_t2"] = rat_str(row.r_t2);
        rj["sandwich_ok"] = row.sandwich_ok;
        rows.push_back(rj);
        csv.push_back(std::to_string(row.m) + "," + row.mode + "," + std::to_string(row.N) +
                      "," + fmt_double(row.exact_bits) + "," +
                      fmt_double(row.exact_bits / row.m) + "," + fmt_double(row.t1_bits) + "," +
                      fmt_double(row.t1_bits / row.m) + "," + fmt_double(row.t2_bits) + "," +
                      fmt_double(row.t2_bits / row.m) + "," + rat_str(row.beta_t1) + "," +
                      rat_str(row.r_t2) + "," + (row.sandwich_ok ? "1" : "0"));
    }
    j["rows"] = rows;
    out.write("sweep", j, csv);
    for (const auto& row : rep.rows)
        std::cout << "m=" << row.m << " [" << row.mode << "] " << fmt_double(row.exact_bits / row.m)
                  << " bits/use in [" << fmt_double(row.t2_bits / row.m) << ", "
                  << fmt_double(row.t1_bits / row.m) << "] "
                  << (row.sandwich_ok ? "ok" : "VIOLATED") << "\n";
    return rep.all_ok ? 0 : 1;
}

int cmd_gap_probe(const fs::path& model_path, int trials, std::uint64_t seed, const Output& out) {
    ModelPtr model = load_model_file(model_path);
    GapProbeReport rep = min_max_gap_probe(model, trials, seed);
    json j;
    j["model"] = model->name;
    j["trials"] = rep.trials;
    j["product_states_ok"] = rep.product_states_ok;
    j["in_max_not_min"] = rep.in_max_not_min;
    if (rep.gap_witness) j["gap_witness"] = vec_to_json(*rep.gap_witness);
    if (rep.gap_separator) j["gap_separator"] = vec_to_json(*rep.gap_separator);
    out.write("gap-probe", j,
              {"trials,product_states_ok,in_max_not_min",
               std::to_string(rep.trials) + "," + (rep.product_states_ok ? "1" : "0") + "," +
                   std::to_string(rep.in_max_not_min)});
    std::cout << "gap-probe: product states " << (rep.product_states_ok ? "ok" : "FAIL") << ", "
              << rep.in_max_not_min << " sampled max-not-min witnesses\n";
    return rep.product_states_ok ? 0 : 1;
}

} // namespace

int dispatch(const std::vector<std::string>& args) {
    CLI::App app{"exact one-shot capacity and hypothesis-testing toolkit for polyhedral GPTs"};
    app.require_subcommand(1);

    std::string model_path, channel_path, rho_spec, sigma_spec, eps_str = "0",
                eta_str = "1/8", eps_prime_str = "0", s_str = "2", t_str = "3",
                p_spec = "uniform", eps_list = "1/10,1/2,9/10", out_dir;
    int trials = 200, count = 200, points = 8, nmax = 4, grid_k = 2, outcomes = 4, n_msgs = 2,
        m_max = 2;
    long budget = 20000;
    std::uint64_t seed = 0;

    auto add_out = [&](CLI::App* cmd) { cmd->add_option("--out", out_dir, "report directory"); };

    auto* validate = app.add_subcommand("validate", "validate a model file");
    validate->add_option("--model", model_path)->required();
    validate->add_option("--trials", trials);
    validate->add_option("--seed", seed)->required();
    add_out(validate);

    auto* dht_cmd = app.add_subcommand("dht", "hypothesis-testing relative entropy");
    dht_cmd->add_option("--model", model_path)->required();
    dht_cmd->add_option("--rho", rho_spec)->required();
    dht_cmd->add_option("--sigma", sigma_spec)->required();
    dht_cmd->add_option("--eps", eps_str)->required();
    add_out(dht_cmd);

    auto* dpi = app.add_subcommand("dpi-check", "data-processing inequality on random instances");
    dpi->add_option("--model", model_path)->required();
    dpi->add_option("--count", count);
    dpi->add_option("--seed", seed)->required();
    dpi->add_option("--eps-list", eps_list);
    dpi->add_option("--outcomes", outcomes, "max measurement outcomes (2..k)");
    add_out(dpi);

    auto* cont = app.add_subcommand("continuity", "left-continuity probe and monotonicity scan");
    cont->add_option("--model", model_path)->required();
    cont->add_option("--rho", rho_spec)->required();
    cont->add_option("--sigma", sigma_spec)->required();
    cont->add_option("--eps", eps_str)->required();
    cont->add_option("--eta", eta_str)->required();
    cont->add_option("--points", points);
    add_out(cont);

    auto* cap = app.add_subcommand("capacity", "exact one-shot capacity by brute force");
    cap->add_option("--channel", channel_path)->required();
    cap->add_option("--eps", eps_str)->required();
    cap->add_option("--nmax", nmax)->required();
    add_out(cap);

    auto* bounds = app.add_subcommand("bounds", "capacity with Theorem-1/2 sandwich");
    bounds->add_option("--channel", channel_path)->required();
    bounds->add_option("--eps", eps_str)->required();
    bounds->add_option("--nmax", nmax)->required();
    bounds->add_option("--grid-k", grid_k);
    add_out(bounds);

    auto* lem = app.add_subcommand("lemma3", "indicator-measurement construction on random families");
    lem->add_option("--model", model_path)->required();
    lem->add_option("--count", count);
    lem->add_option("--seed", seed)->required();
    lem->add_option("--family-size", outcomes);
    lem->add_option("--s", s_str);
    lem->add_option("--t", t_str);
    add_out(lem);

    auto* rc = app.add_subcommand("random-coding", "random-coding achievability check");
    rc->add_option("--channel", channel_path)->required();
    rc->add_option("--p", p_spec, "input distribution or 'uniform'");
    rc->add_option("--n", n_msgs)->required();
    rc->add_option("--eps-prime", eps_prime_str)->required();
    rc->add_option("--s", s_str);
    rc->add_option("--t", t_str);
    rc->add_option("--trials", trials);
    rc->add_option("--seed", seed)->required();
    add_out(rc);

    auto* sweep = app.add_subcommand("sweep", "finite-m rate sandwich");
    sweep->add_option("--channel", channel_path)->required();
    sweep->add_option("--eps", eps_str)->required();
    sweep->add_option("--eps-prime", eps_prime_str);
    sweep->add_option("--m", m_max)->required();
    sweep->add_option("--grid-k", grid_k);
    sweep->add_option("--budget", budget);
    add_out(sweep);

    auto* gap = app.add_subcommand("gap-probe", "minimal/maximal tensor cone membership probe");
    gap->add_option("--model", model_path)->required();
    gap->add_option("--trials", trials);
    gap->add_option("--seed", seed)->required();
    add_out(gap);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    Output out;
    if (!out_dir.empty()) out.dir = fs::path(out_dir);

    try {
        if (validate->parsed()) return cmd_validate(model_path, trials, seed, out);
        if (dht_cmd->parsed())
            return cmd_dht(model_path, rho_spec, sigma_spec, parse_rational(eps_str), out);
        if (dpi->parsed()) return cmd_dpi(model_path, count, seed, eps_list, outcomes, out);
        if (cont->parsed())
            return cmd_continuity(model_path, rho_spec, sigma_spec, parse_rational(eps_str),
                                  parse_rational(eta_str), points, out);
        if (cap->parsed()) return cmd_capacity(channel_path, parse_rational(eps_str), nmax, out);
        if (bounds->parsed())
            return cmd_bounds(channel_path, parse_rational(eps_str), nmax, grid_k, out);
        if (lem->parsed())
            return cmd_lemma3(model_path, count, seed, outcomes, parse_rational(s_str),
                              parse_rational(t_str), out);
        if (rc->parsed())
            return cmd_random_coding(channel_path, p_spec, n_msgs, parse_rational(eps_prime_str),
                                     parse_rational(s_str), parse_rational(t_str), trials, seed,
                                     out);
        if (sweep->parsed())
            return cmd_sweep(channel_path, parse_rational(eps_str), parse_rational(eps_prime_str),
                             m_max, grid_k, budget, out);
        if (gap->parsed()) return cmd_gap_probe(model_path, trials, seed, out);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::cerr << "no subcommand\n";
    return 2;
}

} // namespace gptcap::cli
