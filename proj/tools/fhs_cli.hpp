#pragma once

// Command-line front end. `fhs::cli::run` is the whole program; main() only
// forwards to it so the test suite can drive it in-process.
//
// Exit codes: 0 success, 1 invalid input or infeasible request,
// 2 verification failure.

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fhs/fhs.hpp"

namespace fhs::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_invalid = 1;
inline constexpr int exit_verify = 2;

namespace detail {

struct Source {
    std::string file;
    std::string builtin;

    void attach(CLI::App* cmd) {
        cmd->add_option("file", file, "Sequence set file (JSON)");
        cmd->add_option("--builtin", builtin, "Bundled set: example1_base, example2_base");
    }

    SequenceSetFile load() const {
        if (file.empty() == builtin.empty())
            throw invalid_input("give exactly one of FILE or --builtin NAME");
        if (!builtin.empty())
            return SequenceSetFile{fhs::builtin(builtin), json::object()};
        return load_set_file(file);
    }
};

inline std::string params(u64 n, u64 v, u64 lambda, u64 m) {
    return "(" + std::to_string(n) + ", " + std::to_string(v) + ", " + std::to_string(lambda) + "; " +
           std::to_string(m) + ")";
}

inline std::string params(const SetParams& p) { return params(p.length, p.alphabet, p.lambda, p.set_size); }

inline PrimePower prime_power(u64 p, unsigned a) { return PrimePower::make(p, a); }

inline std::string ring_name(const OneCoincidenceSet& e) {
    return (e.kind == OneCoincidenceSet::Kind::field ? "GF(" : "Z_") + std::to_string(e.alphabet_size) +
           (e.kind == OneCoincidenceSet::Kind::field ? ")" : "");
}

/// "c1:13", "c2:11^2", "field:2^3".
inline StepRequest parse_step(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw invalid_input("step '" + text + "' must look like METHOD:P or METHOD:P^A");
    const auto kind = parse_method(text.substr(0, colon));
    const std::string rest = text.substr(colon + 1);
    const auto caret = rest.find('^');
    try {
        const u64 p = std::stoull(rest.substr(0, caret));
        const unsigned a = caret == std::string::npos ? 1u : static_cast<unsigned>(std::stoul(rest.substr(caret + 1)));
        return {kind, PrimePower::make(p, a)};
    } catch (const std::logic_error& e) {
        if (dynamic_cast<const invalid_input*>(&e))
            throw;
        throw invalid_input("step '" + text + "': bad number");
    }
}

inline json profile_json(const FhsSet& s, const CorrelationProfile& prof, const OptimalityReport& rep) {
    json j = {{"length", s.length()},
              {"alphabet", s.alphabet().size},
              {"set_size", s.size()},
              {"multiplicity", multiplicity(s)},
              {"max_auto", prof.max_auto},
              {"max_cross", prof.max_cross},
              {"max_overall", prof.max_overall},
              {"peng_fan_bound", rep.bound},
              {"optimal", rep.optimal}};
    if (s.size() == 1 && s.length() >= 2) {
        const auto lg = is_optimal_sequence(s, prof);
        j["lempel_greenberger_bound"] = lg.bound;
        j["lg_optimal"] = lg.optimal;
    }
    return j;
}

inline void print_profile(std::ostream& out, const FhsSet& s, const CorrelationProfile& prof,
                          const OptimalityReport& rep) {
    out << "N=" << s.length() << " v=" << s.alphabet().size << " M=" << s.size() << "\n"
        << "m(X)=" << multiplicity(s) << "\n"
        << "H_a=" << prof.max_auto << " H_c=" << prof.max_cross << " H_m=" << prof.max_overall << "\n"
        << "Peng-Fan bound=" << rep.bound << " -> " << (rep.optimal ? "optimal" : "not optimal") << "\n";
    if (s.size() == 1 && s.length() >= 2) {
        const auto lg = is_optimal_sequence(s, prof);
        out << lg.bound_name << " bound=" << lg.bound << " -> " << (lg.optimal ? "optimal" : "not optimal")
            << "\n";
    }
}

inline FhsSet relabel(const FhsSet& s, std::optional<std::string> label) {
    return FhsSet(s.alphabet(), s.sequences(), std::move(label));
}

} // namespace detail

// ---------------------------------------------------------------------------

inline int cmd_analyze(const detail::Source& src, bool as_json, std::ostream& out) {
    const auto file = src.load();
    const auto prof = correlation_profile(file.set);
    const auto rep = is_optimal_set(file.set, prof);
    if (as_json)
        out << detail::profile_json(file.set, prof, rep).dump() << "\n";
    else
        detail::print_profile(out, file.set, prof, rep);
    return exit_ok;
}

struct BoundsArgs {
    u64 length = 0, alphabet = 0, set_size = 0;
    u64 q1 = 0, p = 0;
    unsigned a = 1;
};

inline int cmd_bounds(const BoundsArgs& b, std::ostream& out) {
    const u64 pf = peng_fan_bound(b.length, b.alphabet, b.set_size);
    out << "Peng-Fan(" << b.length << ", " << b.alphabet << ", " << b.set_size << ") = " << pf << "\n";
    if (b.length >= 2)
        out << "Lempel-Greenberger(" << b.length << ", " << b.alphabet << ") = " << lempel_greenberger_bound(b.length, b.alphabet) << "\n";
    if (b.q1) {
        PrimePower::from_value(b.q1);
        const u64 direct = peng_fan_bound(checked_mul(b.q1, b.length), checked_mul(b.q1, b.alphabet), b.set_size);
        out << "theorem1 condition (q1=" << b.q1 << "): "
            << (theorem1_condition(b.length, b.alphabet, b.set_size, b.q1) ? "holds" : "fails")
            << "; direct Peng-Fan on extension = " << direct << "\n";
    }
    if (b.p) {
        const auto pp = PrimePower::make(b.p, b.a);
        const u64 direct =
            peng_fan_bound(checked_mul(pp.totient(), b.length), checked_mul(pp.q, b.alphabet), b.set_size);
        out << "theorem2 condition (p=" << b.p << ", a=" << b.a << "): "
            << (theorem2_condition(b.length, b.alphabet, b.set_size, b.p, b.a) ? "holds" : "fails")
            << "; direct Peng-Fan on extension = " << direct << "\n";
    }
    return exit_ok;
}

inline int cmd_gen_ocs(const std::string& kind, u64 p, unsigned a, const std::string& out_path, std::ostream& out) {
    ExtensionKind k;
    if (kind == "dilation")
        k = ExtensionKind::construction1;
    else if (kind == "translate")
        k = ExtensionKind::construction2;
    else if (kind == "field")
        k = ExtensionKind::corollary3_field;
    else
        throw invalid_input("unknown kind '" + kind + "' (expected dilation, translate or field)");
    const auto pp = detail::prime_power(p, a);
    const auto e = generate_family({k, pp});
    out << kind << " family over " << detail::ring_name(e) << ": " << e.rows() << " sequences of length " << e.length()
        << ", generator g=" << e.generator << "\n"
        << "verified H_a=" << e.maxima.max_auto << " H_c=" << e.maxima.max_cross << "\n";
    if (!out_path.empty()) {
        json meta = {{"family", kind},      {"p", pp.p},
                     {"a", pp.a},           {"q", pp.q},
                     {"generator", e.generator}, {"max_auto", e.maxima.max_auto},
                     {"max_cross", e.maxima.max_cross}};
        save_set(e.to_fhs_set(), out_path, std::move(meta));
        out << "wrote " << out_path << "\n";
    }
    return exit_ok;
}

struct ExtendArgs {
    detail::Source source;
    std::string method;
    u64 p = 0;
    unsigned a = 1;
    std::string labeling_path;
    std::string out_path;
    bool no_verify = false;
};

inline int cmd_extend(const ExtendArgs& args, std::ostream& out, std::ostream& err) {
    const auto file = args.source.load();
    const FhsSet& x = file.set;
    const StepRequest req{parse_method(args.method), detail::prime_power(args.p, args.a)};

    const auto base_prof = correlation_profile(x);
    const auto base_rep = is_optimal_set(x, base_prof);
    const u64 lambda = base_prof.max_overall;

    Labeling w;
    if (args.labeling_path.empty()) {
        const auto plan = plan_recursive_extension(x, {req}, lambda);
        if (!plan.accepted) {
            err << "infeasible: " << plan.rejection << "\n";
            return exit_invalid;
        }
        w = cumulative_labeling(x);
    } else {
        w = load_labeling(args.labeling_path);
    }
    if (req.prime_power.p == 2 && req.kind != ExtensionKind::corollary3_field) {
        err << "infeasible: the " << args.method << " family needs an odd prime\n";
        return exit_invalid;
    }
    const auto e = generate_family(req);
    if (auto verdict = validate_labeling(x, w, e.rows()); !verdict) {
        err << "invalid labeling: " << verdict.reason << "\n";
        return exit_invalid;
    }
    const FhsSet s = extend_once(x, e, w);
    const SetParams predicted{s.length(), s.alphabet().size, lambda, s.size()};
    const u64 bound = peng_fan_bound(predicted.length, predicted.alphabet, predicted.set_size);
    const bool theorem = req.kind == ExtensionKind::construction1
                             ? theorem1_condition(x.length(), x.alphabet().size, x.size(), req.prime_power.q)
                             : theorem2_form(x.length(), x.alphabet().size, x.size(), e.length(), req.prime_power.q);

    out << "base " << detail::params(x.length(), x.alphabet().size, lambda, x.size())
        << (base_rep.optimal ? " optimal" : " not optimal") << ", m(X)=" << multiplicity(x) << "\n"
        << "auxiliary " << OneCoincidenceSet::kind_name(e.kind) << " family: " << e.rows() << " x " << e.length()
        << " over " << detail::ring_name(e) << ", g=" << e.generator << "\n"
        << "predicted " << detail::params(predicted) << ", Peng-Fan bound " << bound
        << (bound == lambda ? " (optimal)" : " (not optimal)") << "\n"
        << "theorem condition: " << (theorem ? "predicted preserved" : "not predicted") << "\n";

    int code = exit_ok;
    json meta = {{"construction", method_name(req.kind)},
                 {"p", req.prime_power.p},
                 {"a", req.prime_power.a},
                 {"q", req.prime_power.q},
                 {"generator", e.generator},
                 {"labeling", args.labeling_path.empty() ? "cumulative" : "file"},
                 {"lambda", lambda}};
    if (x.label())
        meta["base"] = *x.label();
    if (!args.no_verify) {
        const auto prof = correlation_profile(s);
        const auto rep = is_optimal_set(s, prof);
        out << "verified " << detail::params(s.length(), s.alphabet().size, prof.max_overall, s.size())
            << (rep.optimal ? " optimal" : " not optimal") << "\n";
        meta["verified"] = true;
        if (prof.max_overall != lambda) {
            err << "verification failed: H_m=" << prof.max_overall << " != lambda=" << lambda << "\n";
            code = exit_verify;
        } else if (base_rep.optimal && !rep.optimal) {
            err << "verification failed: optimality lost (bound " << rep.bound << ")\n";
            code = exit_verify;
        }
    }
    if (!args.out_path.empty()) {
        std::string label = (x.label() ? *x.label() : std::string("set")) + "+" + method_name(req.kind) + "(" +
                            std::to_string(req.prime_power.q) + ")";
        save_set(detail::relabel(s, label), args.out_path, std::move(meta));
        out << "wrote " << args.out_path << "\n";
    }
    return code;
}

struct PlanArgs {
    detail::Source source;
    std::vector<std::string> steps;
    std::vector<u64> factors;
    std::string plan_path;
    std::string save_plan_path;
    std::string out_path;
    bool as_json = false;
};

inline int cmd_plan(const PlanArgs& args, std::ostream& out, std::ostream& err) {
    const auto file = args.source.load();
    std::vector<StepRequest> requests;
    if (!args.plan_path.empty())
        requests = load_plan(args.plan_path);
    for (const auto& s : args.steps)
        requests.push_back(detail::parse_step(s));
    for (u64 f : args.factors)
        requests.push_back({ExtensionKind::construction1, PrimePower::from_value(f)});
    if (requests.empty())
        throw invalid_input("plan needs at least one step (--step, --factors or --plan)");
    if (!args.save_plan_path.empty())
        save_plan(requests, args.save_plan_path);

    const auto plan = plan_recursive_extension(file.set, requests);
    if (args.as_json) {
        json steps = json::array();
        for (const auto& st : plan.steps)
            steps.push_back({{"method", method_name(st.kind)},
                             {"p", st.prime_power.p},
                             {"a", st.prime_power.a},
                             {"feasible", st.feasible},
                             {"reason", st.reason},
                             {"multiplicity_before", st.multiplicity_before},
                             {"multiplicity_after", st.multiplicity_after},
                             {"capacity", st.capacity},
                             {"theorem_condition", st.theorem_condition},
                             {"predicted", {st.predicted.length, st.predicted.alphabet, st.predicted.lambda,
                                            st.predicted.set_size}},
                             {"peng_fan", st.peng_fan}});
        json j = {{"accepted", plan.accepted},
                  {"rejection", plan.rejection},
                  {"base", {plan.base.length, plan.base.alphabet, plan.base.lambda, plan.base.set_size}},
                  {"final", {plan.final_params.length, plan.final_params.alphabet, plan.final_params.lambda,
                             plan.final_params.set_size}},
                  {"final_bound", plan.final_bound},
                  {"predicted_optimal", plan.predicted_optimal},
                  {"warnings", plan.warnings},
                  {"steps", std::move(steps)}};
        out << j.dump() << "\n";
    } else {
        out << "base " << detail::params(plan.base) << ", m(X)=" << plan.base_multiplicity << "\n";
        out << "step  method  q        m    cap   predicted                      PF  theorem\n";
        for (std::size_t i = 0; i < plan.steps.size(); ++i) {
            const auto& st = plan.steps[i];
            std::ostringstream row;
            row << std::left << std::setw(6) << (i + 1) << std::setw(8) << method_name(st.kind) << std::setw(9)
                << st.prime_power.q << std::setw(5) << st.multiplicity_before << std::setw(6) << st.capacity;
            if (st.feasible)
                row << std::setw(31) << detail::params(st.predicted) << std::setw(4) << st.peng_fan
                    << (st.theorem_condition ? "holds" : "fails");
            else
                row << "infeasible: " << st.reason;
            out << row.str() << "\n";
        }
        for (const auto& w : plan.warnings)
            out << "warning: " << w << "\n";
        if (plan.accepted)
            out << "final " << detail::params(plan.final_params) << ", Peng-Fan bound " << plan.final_bound
                << (plan.predicted_optimal ? " -> predicted optimal" : " -> not predicted optimal") << "\n";
    }
    if (!plan.accepted) {
        err << "plan rejected: " << plan.rejection << "\n";
        return exit_invalid;
    }
    if (!args.out_path.empty()) {
        const FhsSet s = extend_recursive(file.set, plan);
        const auto prof = correlation_profile(s);
        const auto rep = is_optimal_set(s, prof);
        out << "verified " << detail::params(s.length(), s.alphabet().size, prof.max_overall, s.size())
            << (rep.optimal ? " optimal" : " not optimal") << "\n";
        json steps = json::array();
        for (const auto& st : plan.steps)
            steps.push_back({{"method", method_name(st.kind)}, {"p", st.prime_power.p}, {"a", st.prime_power.a}});
        json meta = {{"construction", "plan"}, {"steps", std::move(steps)}, {"lambda", plan.base.lambda},
                     {"verified", true}};
        if (file.set.label())
            meta["base"] = *file.set.label();
        save_set(s, args.out_path, std::move(meta));
        out << "wrote " << args.out_path << "\n";
        if (prof.max_overall != plan.base.lambda) {
            err << "verification failed: H_m=" << prof.max_overall << " != lambda=" << plan.base.lambda << "\n";
            return exit_verify;
        }
    }
    return exit_ok;
}

inline int cmd_verify(const detail::Source& src, bool as_json, std::ostream& out, std::ostream& err) {
    const auto file = src.load();
    const auto prof = correlation_profile(file.set);
    const auto rep = is_optimal_set(file.set, prof);
    if (as_json)
        out << detail::profile_json(file.set, prof, rep).dump() << "\n";
    else
        detail::print_profile(out, file.set, prof, rep);
    int code = exit_ok;
    if (auto it = file.meta.find("lambda"); it != file.meta.end() && it->is_number_integer()) {
        if (it->get<u64>() != prof.max_overall) {
            err << "verification failed: file claims lambda=" << it->get<u64>() << ", measured H_m="
                << prof.max_overall << "\n";
            code = exit_verify;
        }
    }
    if (!rep.optimal) {
        err << "verification failed: H_m=" << rep.achieved << " exceeds the Peng-Fan bound " << rep.bound << "\n";
        code = exit_verify;
    }
    if (code == exit_ok)
        out << "verification passed\n";
    return code;
}

/// CSV: shift,max_auto,max_cross. The in-phase autocorrelation (shift 0) and
/// the cross column of a single-sequence set are left empty.
inline void write_corrdump(const FhsSet& s, const CorrelationProfile& prof, std::ostream& out) {
    out << "shift,max_auto,max_cross\n";
    const std::size_t m = s.size();
    for (std::size_t tau = 0; tau < s.length(); ++tau) {
        u64 best_auto = 0, best_cross = 0;
        for (std::size_t i = 0; i < m; ++i) {
            best_auto = std::max(best_auto, prof.at(i, i, tau));
            for (std::size_t j = 0; j < m; ++j)
                if (i != j)
                    best_cross = std::max(best_cross, prof.at(i, j, tau));
        }
        out << tau << ",";
        if (tau != 0)
            out << best_auto;
        out << ",";
        if (m > 1)
            out << best_cross;
        out << "\n";
    }
}

inline int cmd_corrdump(const detail::Source& src, const std::string& out_path, std::ostream& out) {
    const auto file = src.load();
    const auto prof = correlation_profile(file.set);
    if (out_path.empty()) {
        write_corrdump(file.set, prof, out);
        return exit_ok;
    }
    std::ofstream f(out_path, std::ios::binary | std::ios::trunc);
    if (!f)
        throw invalid_input("cannot open '" + out_path + "' for writing");
    write_corrdump(file.set, prof, f);
    out << "wrote " << out_path << "\n";
    return exit_ok;
}

// ---------------------------------------------------------------------------

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"Construct and verify optimal frequency-hopping sequence sets"};
    app.require_subcommand(1);

    detail::Source analyze_src;
    bool analyze_json = false;
    auto* analyze = app.add_subcommand("analyze", "Correlation profile, multiplicity and optimality of a set");
    analyze_src.attach(analyze);
    analyze->add_flag("--json", analyze_json, "Machine-readable output");

    BoundsArgs bounds_args;
    auto* bounds = app.add_subcommand("bounds", "Evaluate the Peng-Fan and Lempel-Greenberger bounds");
    bounds->add_option("--N", bounds_args.length, "Sequence length")->required();
    bounds->add_option("--v", bounds_args.alphabet, "Alphabet size")->required();
    bounds->add_option("--M", bounds_args.set_size, "Number of sequences")->required();
    bounds->add_option("--q1", bounds_args.q1, "Construction-1 factor q1 = p1^a1");
    bounds->add_option("--p", bounds_args.p, "Construction-2 prime p");
    bounds->add_option("--a", bounds_args.a, "Construction-2 exponent a");

    std::string ocs_kind, ocs_out;
    u64 ocs_p = 0;
    unsigned ocs_a = 1;
    auto* gen = app.add_subcommand("gen-ocs", "Generate and verify a one-coincidence family");
    gen->add_option("--kind", ocs_kind, "dilation | translate | field")->required();
    gen->add_option("--p", ocs_p, "Prime p")->required();
    gen->add_option("--a", ocs_a, "Exponent a (default 1)");
    gen->add_option("--out", ocs_out, "Write the family as a sequence-set file");

    ExtendArgs ext;
    auto* extend = app.add_subcommand("extend", "Extend a set by one construction step and verify it");
    ext.source.attach(extend);
    extend->add_option("--method", ext.method, "c1 | c2 | field")->required();
    extend->add_option("--p", ext.p, "Prime p")->required();
    extend->add_option("--a", ext.a, "Exponent a (default 1)");
    extend->add_option("--labeling", ext.labeling_path, "Custom labeling file");
    extend->add_option("--out", ext.out_path, "Output sequence-set file");
    extend->add_flag("--no-verify", ext.no_verify, "Skip the exhaustive post-check");

    PlanArgs plan_args;
    auto* plan = app.add_subcommand("plan", "Check and predict a multi-step extension");
    plan_args.source.attach(plan);
    plan->add_option("--step", plan_args.steps, "METHOD:P[^A], repeatable, applied in order");
    plan->add_option("--factors", plan_args.factors, "Prime powers applied as c1 steps, e.g. 11,13")
        ->delimiter(',');
    plan->add_option("--plan", plan_args.plan_path, "Plan file");
    plan->add_option("--save-plan", plan_args.save_plan_path, "Write the step list as a plan file");
    plan->add_option("--out", plan_args.out_path, "Execute the plan and write the verified result");
    plan->add_flag("--json", plan_args.as_json, "Machine-readable output");

    detail::Source verify_src;
    bool verify_json = false;
    auto* verify = app.add_subcommand("verify", "Recompute the full profile and the bound verdict");
    verify_src.attach(verify);
    verify->add_flag("--json", verify_json, "Machine-readable output");

    detail::Source dump_src;
    std::string dump_out;
    auto* corrdump = app.add_subcommand("corrdump", "Per-shift maximum correlations as CSV");
    dump_src.attach(corrdump);
    corrdump->add_option("--out", dump_out, "CSV file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_invalid;
    }

    try {
        if (*analyze)
            return cmd_analyze(analyze_src, analyze_json, out);
        if (*bounds)
            return cmd_bounds(bounds_args, out);
        if (*gen)
            return cmd_gen_ocs(ocs_kind, ocs_p, ocs_a, ocs_out, out);
        if (*extend)
            return cmd_extend(ext, out, err);
        if (*plan)
            return cmd_plan(plan_args, out, err);
        if (*verify)
            return cmd_verify(verify_src, verify_json, out, err);
        if (*corrdump)
            return cmd_corrdump(dump_src, dump_out, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_invalid;
    }
    return exit_invalid;
}

} // namespace fhs::cli
