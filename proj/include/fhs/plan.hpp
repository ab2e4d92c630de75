#pragma once

/**
 * @file plan.hpp
 * @brief Multi-step extension plans: feasibility, parameter prediction, execution.
 *
 * Step kinds and their multiplicity conditions:
 *   construction1    dilation family,  factor q,            m <= p - 1
 *   construction2    translate family, factor (p-1)p^(a-1), m <= p
 *   corollary3_field field family,     factor q - 1,        m <= q
 *
 * The planner tracks the exact slot-count histogram through every step, so
 * each condition is checked against the multiplicity the intermediate set
 * will actually have under the cumulative labeling.
 */

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fhs/bounds.hpp"
#include "fhs/correlation.hpp"
#include "fhs/error.hpp"
#include "fhs/extension.hpp"
#include "fhs/labeling.hpp"
#include "fhs/numtheory.hpp"
#include "fhs/one_coincidence.hpp"
#include "fhs/sequence_set.hpp"

namespace fhs {

enum class ExtensionKind { construction1, construction2, corollary3_field };

inline const char* method_name(ExtensionKind k) {
    switch (k) {
    case ExtensionKind::construction1: return "c1";
    case ExtensionKind::construction2: return "c2";
    case ExtensionKind::corollary3_field: return "field";
    }
    return "?";
}

inline ExtensionKind parse_method(const std::string& s) {
    if (s == "c1")
        return ExtensionKind::construction1;
    if (s == "c2")
        return ExtensionKind::construction2;
    if (s == "field")
        return ExtensionKind::corollary3_field;
    throw invalid_input("unknown extension method '" + s + "' (expected c1, c2 or field)");
}

struct StepRequest {
    ExtensionKind kind;
    PrimePower prime_power;

    friend bool operator==(const StepRequest&, const StepRequest&) = default;
};

/// (N, v, lambda; M).
struct SetParams {
    u64 length = 0;
    u64 alphabet = 0;
    u64 lambda = 0;
    u64 set_size = 0;

    friend bool operator==(const SetParams&, const SetParams&) = default;
};

struct ExtensionStep {
    ExtensionKind kind;
    PrimePower prime_power;
    bool feasible = false;
    std::string reason;
    u64 multiplicity_before = 0;
    u64 multiplicity_after = 0;
    /// Rows available for labels (p-1, p or q).
    u64 capacity = 0;
    /// Length of the auxiliary sequences.
    u64 factor = 0;
    /// Whether the condition also holds against m of the base set.
    bool holds_for_base = false;
    /// The theorem-style equality of base and extended bounds.
    bool theorem_condition = false;
    SetParams predicted;
    u64 peng_fan = 0;
    bool predicted_optimal = false;
};

struct ExtensionPlan {
    SetParams base;
    u64 base_multiplicity = 0;
    std::vector<ExtensionStep> steps;
    SetParams final_params;
    bool accepted = false;
    std::string rejection;
    std::vector<std::string> warnings;
    u64 final_bound = 0;
    bool predicted_optimal = false;
};

namespace detail {

struct StepShape {
    u64 capacity;
    u64 factor;
    const char* condition;
};

inline StepShape step_shape(const StepRequest& r) {
    const auto& pp = r.prime_power;
    switch (r.kind) {
    case ExtensionKind::construction1: return {pp.p - 1, pp.q, "p-1"};
    case ExtensionKind::construction2: return {pp.p, pp.totient(), "p"};
    case ExtensionKind::corollary3_field: return {pp.q, pp.q - 1, "q"};
    }
    throw std::logic_error("bad extension kind");
}

inline std::string describe(const StepRequest& r) {
    std::string s = std::string(method_name(r.kind)) + " p=" + std::to_string(r.prime_power.p);
    if (r.prime_power.a != 1)
        s += " a=" + std::to_string(r.prime_power.a);
    return s;
}

/**
 * Slot-count histogram after one step under the cumulative labeling, where a
 * slot seen k times pairs with rows 0..k-1. Each new slot (c, f) counts the
 * rows among those k that contain c:
 *   dilation:  every row is a permutation of Z_q, so all q new slots keep k.
 *   translate: row l omits exactly the c with c = l (mod p), so k q/p new
 *              slots drop to k-1 and the other (p-k) q/p keep k.
 *   field:     row l omits exactly c = l, so k slots drop to k-1 and q-k keep k.
 */
inline std::map<u64, u64> next_histogram(const std::map<u64, u64>& hist, const StepRequest& r) {
    const auto& pp = r.prime_power;
    std::map<u64, u64> out;
    auto add = [&](u64 count, u64 slots) {
        if (count && slots)
            out[count] = checked_add(out[count], slots);
    };
    for (const auto& [k, slots] : hist) {
        switch (r.kind) {
        case ExtensionKind::construction1:
            add(k, checked_mul(slots, pp.q));
            break;
        case ExtensionKind::construction2:
            add(k - 1, checked_mul(slots, k * (pp.q / pp.p)));
            add(k, checked_mul(slots, (pp.p - k) * (pp.q / pp.p)));
            break;
        case ExtensionKind::corollary3_field:
            add(k - 1, checked_mul(slots, k));
            add(k, checked_mul(slots, pp.q - k));
            break;
        }
    }
    return out;
}

} // namespace detail

inline OneCoincidenceSet generate_family(const StepRequest& r, bool verify = true) {
    switch (r.kind) {
    case ExtensionKind::construction1: return gen_dilation_set(r.prime_power, verify);
    case ExtensionKind::construction2: return gen_translate_set(r.prime_power, verify);
    case ExtensionKind::corollary3_field: return gen_field_set(r.prime_power, verify);
    }
    throw std::logic_error("bad extension kind");
}

inline ExtensionPlan plan_recursive_extension(const FhsSet& x, const std::vector<StepRequest>& requests,
                                              std::optional<u64> lambda = {}) {
    ExtensionPlan plan;
    plan.base = {x.length(), x.alphabet().size, lambda ? *lambda : correlation_profile(x).max_overall,
                 x.size()};
    plan.final_params = plan.base;

    std::map<u64, u64> hist;
    for (const auto& slot : occurrence_map(x).slots)
        if (!slot.empty())
            ++hist[slot.size()];
    plan.base_multiplicity = hist.empty() ? 0 : hist.rbegin()->first;

    SetParams cur = plan.base;
    std::optional<u64> last_c1_prime;
    for (std::size_t s = 0; s < requests.size(); ++s) {
        const auto& req = requests[s];
        ExtensionStep step;
        step.kind = req.kind;
        step.prime_power = req.prime_power;
        step.multiplicity_before = hist.empty() ? 0 : hist.rbegin()->first;
        const std::string tag = "step " + std::to_string(s + 1) + " (" + detail::describe(req) + ")";

        auto reject = [&](std::string why) {
            step.feasible = false;
            step.reason = why;
            plan.steps.push_back(step);
            plan.accepted = false;
            plan.rejection = tag + ": " + why;
        };

        if (req.prime_power.p == 2 && req.kind != ExtensionKind::corollary3_field) {
            reject("unsupported: the " + std::string(method_name(req.kind)) + " family needs an odd prime");
            return plan;
        }
        const auto shape = detail::step_shape(req);
        step.capacity = shape.capacity;
        step.factor = shape.factor;
        step.holds_for_base = plan.base_multiplicity <= shape.capacity;
        if (step.multiplicity_before > shape.capacity) {
            reject("m=" + std::to_string(step.multiplicity_before) + " > " + shape.condition + "=" +
                   std::to_string(shape.capacity));
            return plan;
        }
        try {
            step.predicted = {checked_mul(cur.length, shape.factor),
                              checked_mul(cur.alphabet, req.prime_power.q), cur.lambda, cur.set_size};
            checked_mul(step.predicted.length, step.predicted.set_size);
        } catch (const invalid_input& err) {
            reject(std::string("parameters overflow: ") + err.what());
            return plan;
        }

        switch (req.kind) {
        case ExtensionKind::construction1:
            step.theorem_condition = theorem1_condition(cur.length, cur.alphabet, cur.set_size, req.prime_power.q);
            break;
        case ExtensionKind::construction2:
        case ExtensionKind::corollary3_field:
            step.theorem_condition =
                theorem2_form(cur.length, cur.alphabet, cur.set_size, shape.factor, req.prime_power.q);
            break;
        }
        step.peng_fan = peng_fan_bound(step.predicted.length, step.predicted.alphabet, step.predicted.set_size);
        step.predicted_optimal = step.peng_fan == step.predicted.lambda;

        hist = detail::next_histogram(hist, req);
        step.multiplicity_after = hist.empty() ? 0 : hist.rbegin()->first;
        step.feasible = true;

        if (!step.holds_for_base)
            plan.warnings.push_back(tag + ": condition holds for the intermediate set but not for the base (m=" +
                                    std::to_string(plan.base_multiplicity) + ")");
        if (req.kind == ExtensionKind::construction1) {
            if (last_c1_prime && req.prime_power.p <= *last_c1_prime)
                plan.warnings.push_back(tag + ": primes are not in ascending order");
            last_c1_prime = req.prime_power.p;
        }
        cur = step.predicted;
        plan.steps.push_back(step);
    }
    plan.accepted = true;
    plan.final_params = cur;
    plan.final_bound = peng_fan_bound(cur.length, cur.alphabet, cur.set_size);
    plan.predicted_optimal = plan.final_bound == cur.lambda;
    return plan;
}

/// Runs an accepted plan, regenerating the family and cumulative labeling at each step.
inline FhsSet extend_recursive(const FhsSet& x, const ExtensionPlan& plan) {
    if (!plan.accepted)
        throw invalid_input("extend_recursive: plan rejected: " + plan.rejection);
    FhsSet cur = x;
    for (const auto& step : plan.steps) {
        const StepRequest req{step.kind, step.prime_power};
        const u64 m = multiplicity(cur);
        if (m != step.multiplicity_before)
            throw std::logic_error("extend_recursive: multiplicity " + std::to_string(m) + " differs from plan (" +
                                   std::to_string(step.multiplicity_before) + ")");
        if (m > step.capacity)
            throw invalid_input("extend_recursive: " + detail::describe(req) + " infeasible, m=" +
                                std::to_string(m) + " > " + std::to_string(step.capacity));
        const auto family = generate_family(req);
        cur = extend_once(cur, family, cumulative_labeling(cur));
    }
    return cur;
}

} // namespace fhs
