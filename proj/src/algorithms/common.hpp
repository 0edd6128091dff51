#pragma once

#include <algorithm>
#include <cmath>
#include <memory>
#include <numeric>

#include "menagerie/algorithms.hpp"
#include "menagerie/components.hpp"
#include "menagerie/core.hpp"

namespace menagerie::detail {

/// Shared scaffolding: resolved params, the common state block, and the
/// iteration counter bump every concrete step performs.
class InstanceBase : public AlgorithmInstance {
public:
    explicit InstanceBase(ResolvedParams rp) : rp_(std::move(rp)) {}
    std::size_t population_size() const override { return rp_.population_size; }
    const AlgorithmState& state() const override { return state_; }

protected:
    double param(const char* name) const { return rp_.named.at(name); }
    std::size_t iparam(const char* name) const {
        return static_cast<std::size_t>(rp_.named.at(name) + 0.5);
    }
    ResolvedParams rp_;
    AlgorithmState state_;
};

inline std::vector<Candidate> snapshot(const Population& pop) { return pop.members; }

/// Schedule evaluated on the budget fraction already consumed.
inline double sched(const ops::DecaySchedule& s, const RunContext& ctx) {
    return ops::schedule_value(s, std::min(ctx.progress(), 1.0), 1.0);
}

/// Normalized goodness in [0, 1]: 1 at the population best, 0 at the worst;
/// all-equal values count as 1 everywhere.
inline double goodness(double v, double best, double worst) {
    return worst == best ? 1.0 : (worst - v) / (worst - best);
}

/// Largest-remainder apportionment of `total` trials over `weights`, each
/// share capped at `cap`. Caps bind only while other members can absorb the
/// excess.
inline std::vector<std::size_t> apportion(const std::vector<double>& weights, std::size_t total,
                                          std::size_t cap) {
    const std::size_t n = weights.size();
    std::vector<std::size_t> counts(n, 0);
    if (n == 0 || total == 0) return counts;
    const double sum = std::accumulate(weights.begin(), weights.end(), 0.0);
    std::vector<double> remainder(n, 0.0);
    std::size_t assigned = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double share = sum > 0.0 ? weights[i] / sum * static_cast<double>(total)
                                       : static_cast<double>(total) / static_cast<double>(n);
        counts[i] = std::min(cap, static_cast<std::size_t>(share));
        remainder[i] = share - static_cast<double>(counts[i]);
        assigned += counts[i];
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return remainder[a] > remainder[b]; });
    std::size_t at = 0;
    while (assigned < total) {
        const std::size_t i = order[at % n];
        if (counts[i] < cap) {
            ++counts[i];
            ++assigned;
        }
        ++at;
        if (at > n * (cap + 1)) break;  // every member capped
    }
    return counts;
}

inline double dist(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

std::unique_ptr<AlgorithmInstance> make_ga(ResolvedParams rp);
std::unique_ptr<AlgorithmInstance> make_pso(ResolvedParams rp);
std::unique_ptr<AlgorithmInstance> make_alo(ResolvedParams rp);
std::unique_ptr<AlgorithmInstance> make_abc(ResolvedParams rp);
std::unique_ptr<AlgorithmInstance> make_bfo(ResolvedParams rp);
std::unique_ptr<AlgorithmInstance> make_ba(ResolvedParams rp);
std::unique_ptr<AlgorithmInstance> make_bea(ResolvedParams rp);
std::unique_ptr<AlgorithmInstance> make_bbbc(ResolvedParams rp);
std::unique_ptr<AlgorithmInstance> make_bbo(ResolvedParams rp);
std::unique_ptr<AlgorithmInstance> make_bso(ResolvedParams rp);
std::unique_ptr<AlgorithmInstance> make_cso(ResolvedParams rp);
std::unique_ptr<AlgorithmInstance> make_css(ResolvedParams rp);
std::unique_ptr<AlgorithmInstance> make_cro(ResolvedParams rp);
std::unique_ptr<AlgorithmInstance> make_coa(ResolvedParams rp);
std::unique_ptr<AlgorithmInstance> make_cs(ResolvedParams rp);
std::unique_ptr<AlgorithmInstance> make_fa(ResolvedParams rp);
std::unique_ptr<AlgorithmInstance> make_fwa(ResolvedParams rp);
std::unique_ptr<AlgorithmInstance> make_fpa(ResolvedParams rp);
std::unique_ptr<AlgorithmInstance> make_foa(ResolvedParams rp);
std::unique_ptr<AlgorithmInstance> make_gwso(ResolvedParams rp);
std::unique_ptr<AlgorithmInstance> make_gsa(ResolvedParams rp);
std::unique_ptr<AlgorithmInstance> make_gwo(ResolvedParams rp);
std::unique_ptr<AlgorithmInstance> make_gso(ResolvedParams rp);
std::unique_ptr<AlgorithmInstance> make_hs(ResolvedParams rp);
std::unique_ptr<AlgorithmInstance> make_ica(ResolvedParams rp);
std::unique_ptr<AlgorithmInstance> make_iwo(ResolvedParams rp);
std::unique_ptr<AlgorithmInstance> make_kh(ResolvedParams rp);
std::unique_ptr<AlgorithmInstance> make_mbo(ResolvedParams rp);
std::unique_ptr<AlgorithmInstance> make_mfo(ResolvedParams rp);
std::unique_ptr<AlgorithmInstance> make_sfla(ResolvedParams rp);
std::unique_ptr<AlgorithmInstance> make_sca(ResolvedParams rp);
std::unique_ptr<AlgorithmInstance> make_tlbo(ResolvedParams rp);
std::unique_ptr<AlgorithmInstance> make_wca(ResolvedParams rp);
std::unique_ptr<AlgorithmInstance> make_woa(ResolvedParams rp);

}  // namespace menagerie::detail
