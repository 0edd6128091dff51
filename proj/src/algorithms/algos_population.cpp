#include "common.hpp"

// Population-structure family: selection, recombination, memory-bank and
// sub-population mechanics.

namespace menagerie::detail {

namespace {

// Truncation pool + fitness-proportional mates, uniform crossover, a decaying
// jitter move, and replacement of the worst half.
class GaInstance final : public InstanceBase {
public:
    using InstanceBase::InstanceBase;

    void step(RunContext& ctx, RngStream& rng) override {
        auto& pop = ctx.pop();
        const std::size_t n = pop.size();
        const std::size_t pool_size = std::max<std::size_t>(
            2, static_cast<std::size_t>(param("parent_fraction") * static_cast<double>(n)));
        const auto pool = ops::truncation_select(pop, pool_size);
        const double sigma = sched(ops::DecaySchedule::exponential(param("mutation_sigma_start"),
                                                                   param("mutation_sigma_end")),
                                   ctx) *
                             ctx.space().mean_range();

        const std::size_t children = std::max<std::size_t>(1, n / 2);
        std::vector<Candidate> brood;
        brood.reserve(children);
        for (std::size_t c = 0; c < children; ++c) {
            const Vec& pa = pop.members[pool[rng.index(pool.size())]].position;
            const Vec& pb = pop.members[ops::proportional_select(pop, rng)].position;
            Candidate child;
            child.position = ops::gaussian_sample(ops::recombine(pa, pb, rng), sigma, rng);
            if (!ctx.evaluate(child)) return;
            brood.push_back(std::move(child));
        }
        // the worst |brood| members leave the population
        auto order = ops::truncation_select(pop, n);
        for (std::size_t c = 0; c < brood.size(); ++c)
            pop.members[order[n - 1 - c]] = std::move(brood[c]);
        ++state_.iteration;
    }
};

// Per coordinate: worse members import donor coordinates more often, donors
// are picked fitness-proportionally, and mutation pressure also concentrates
// on the weak. Mutation width follows the per-coordinate population std.
class BboInstance final : public InstanceBase {
public:
    using InstanceBase::InstanceBase;

    void step(RunContext& ctx, RngStream& rng) override {
        auto& pop = ctx.pop();
        const auto snap = snapshot(pop);
        const std::size_t n = pop.size();
        const std::size_t dims = ctx.space().dims();

        std::vector<std::size_t> rank_of(n);
        {
            auto order = ops::truncation_select(pop, n);
            for (std::size_t r = 0; r < n; ++r) rank_of[order[r]] = r;
        }
        Vec coord_sigma(dims, 0.0);
        {
            Vec mean(dims, 0.0);
            for (const auto& m : snap)
                for (std::size_t d = 0; d < dims; ++d) mean[d] += m.position[d];
            for (auto& c : mean) c /= static_cast<double>(n);
            for (const auto& m : snap)
                for (std::size_t d = 0; d < dims; ++d) {
                    const double diff = m.position[d] - mean[d];
                    coord_sigma[d] += diff * diff;
                }
            for (std::size_t d = 0; d < dims; ++d)
                coord_sigma[d] = param("mutation_sigma") *
                                     std::sqrt(coord_sigma[d] / static_cast<double>(n)) +
                                 1e-12 * ctx.space().mean_range();
        }

        bool any_eval = false;
        for (std::size_t i = 0; i < n; ++i) {
            const double badness =
                n == 1 ? 0.0
                       : static_cast<double>(rank_of[i]) / static_cast<double>(n - 1);
            const double import_p = param("copy_prob_max") * badness;
            const double mutate_p = param("mutation_prob_max") * badness;
            Candidate cand = pop.members[i];
            bool dirty = false;
            for (std::size_t d = 0; d < dims; ++d) {
                if (rng.chance(import_p)) {
                    cand.position[d] = snap[ops::proportional_select(pop, rng)].position[d];
                    dirty = true;
                }
                if (rng.chance(mutate_p)) {
                    cand.position[d] += coord_sigma[d] * rng.normal();
                    dirty = true;
                }
            }
            if (!dirty) continue;
            cand.value.reset();
            if (!ctx.evaluate(cand)) return;
            pop.members[i] = cand;
            any_eval = true;
        }
        if (!any_eval) {
            // rare all-clean iteration: refresh the worst member so the run advances
            const std::size_t w = pop.worst_index();
            Candidate cand = pop.members[w];
            const std::size_t d = rng.index(dims);
            cand.position[d] = snap[ops::proportional_select(pop, rng)].position[d];
            cand.value.reset();
            if (!ctx.evaluate(cand)) return;
            pop.members[w] = cand;
        }
        ++state_.iteration;
    }
};

// Cluster the population, then challenge each member with a point built from
// cluster-best-biased picks (local move or recombination) or an injected
// random solution; the better of member and challenger survives.
class BsoInstance final : public InstanceBase {
public:
    explicit BsoInstance(ResolvedParams rp) : InstanceBase(std::move(rp)) {
        if (iparam("clusters") > rp_.population_size)
            throw std::invalid_argument("BSO clusters must not exceed the population size");
    }

    void step(RunContext& ctx, RngStream& rng) override {
        auto& pop = ctx.pop();
        std::vector<Vec> points;
        points.reserve(pop.size());
        for (const auto& m : pop.members) points.push_back(m.position);
        const auto clusters = ops::kmeans(points, iparam("clusters"), rng);

        std::vector<std::size_t> cluster_of(pop.size(), 0);
        std::vector<std::size_t> cluster_best(clusters.size(), 0);
        std::vector<double> cluster_sigma(clusters.size(), 0.0);
        for (std::size_t c = 0; c < clusters.size(); ++c) {
            if (clusters[c].members.empty()) continue;
            std::size_t best = clusters[c].members.front();
            double spread = 0.0;
            for (std::size_t idx : clusters[c].members) {
                cluster_of[idx] = c;
                if (pop.members[idx].val() < pop.members[best].val()) best = idx;
                spread += dist(pop.members[idx].position, clusters[c].centroid);
            }
            cluster_best[c] = best;
            cluster_sigma[c] = param("jitter_scale") * spread /
                                   static_cast<double>(clusters[c].members.size()) +
                               1e-9 * ctx.space().mean_range();
        }
        // bases come from the pre-step positions the clustering saw
        auto pick_base = [&](RngStream& r) -> std::pair<std::size_t, std::size_t> {
            const std::size_t idx = r.index(pop.size());  // size-weighted cluster choice
            const std::size_t c = cluster_of[idx];
            if (r.chance(param("p_cluster_best"))) return {c, cluster_best[c]};
            return {c, clusters[c].members[r.index(clusters[c].members.size())]};
        };

        for (std::size_t i = 0; i < pop.size(); ++i) {
            Candidate cand;
            if (rng.chance(param("p_random"))) {
                cand = ops::restart(ctx.space(), rng);
            } else if (rng.chance(param("p_single"))) {
                const auto [c, base] = pick_base(rng);
                cand.position = ops::gaussian_sample(points[base], cluster_sigma[c], rng);
            } else {
                const auto [c1, b1] = pick_base(rng);
                const auto [c2, b2] = pick_base(rng);
                cand.position = ops::recombine(points[b1], points[b2], rng);
                const double sigma = param("recombine_jitter") *
                                     0.5 * (cluster_sigma[c1] + cluster_sigma[c2]);
                cand.position = ops::gaussian_sample(cand.position, sigma, rng);
            }
            if (!ctx.evaluate(cand)) return;
            pop.members[i] = ops::greedy_accept(pop.members[i], cand);
        }
        ++state_.iteration;
    }
};

// Small population; each iteration the worst member is replaced by either a
// fresh uniform point or a heavy-tailed hop from a random member.
class CsInstance final : public InstanceBase {
public:
    using InstanceBase::InstanceBase;

    void step(RunContext& ctx, RngStream& rng) override {
        auto& pop = ctx.pop();
        const std::size_t worst = pop.worst_index();
        Candidate cand;
        if (rng.chance(param("p_uniform_restart"))) {
            cand = ops::restart(ctx.space(), rng);
        } else {
            const std::size_t src = rng.index(pop.size());
            const Vec step = ops::levy_step(param("levy_scale") * ctx.space().mean_range(),
                                            param("levy_tail"), ctx.space().dims(), rng);
            cand.position = pop.members[src].position;
            for (std::size_t d = 0; d < step.size(); ++d) cand.position[d] += step[d];
        }
        if (!ctx.evaluate(cand)) return;
        pop.members[worst] = cand;
        ++state_.iteration;
    }
};

// One challenger per iteration, built coordinate-wise from fresh values or
// jittered copies of random members; it replaces the worst member if better.
class HsInstance final : public InstanceBase {
public:
    using InstanceBase::InstanceBase;

    void step(RunContext& ctx, RngStream& rng) override {
        auto& pop = ctx.pop();
        const auto& space = ctx.space();
        const double bw = param("bandwidth") * space.mean_range();
        Candidate cand;
        cand.position.resize(space.dims());
        for (std::size_t d = 0; d < space.dims(); ++d) {
            if (rng.chance(param("memory_rate"))) {
                cand.position[d] = pop.members[rng.index(pop.size())].position[d];
                if (rng.chance(param("adjust_rate")))
                    cand.position[d] += rng.uniform(-bw, bw);
            } else {
                cand.position[d] = rng.uniform(space.lower[d], space.upper[d]);
            }
        }
        if (!ctx.evaluate(cand)) return;
        const std::size_t worst = pop.worst_index();
        if (cand.val() < pop.members[worst].val()) pop.members[worst] = cand;
        ++state_.iteration;
    }
};

// Sub-populations sized by their founder's fitness; colonies chase their
// imperialist (swapping roles when they pass it), the weakest empire bleeds
// colonies each iteration, and the run ends when one empire remains.
class IcaInstance final : public InstanceBase {
public:
    explicit IcaInstance(ResolvedParams rp) : InstanceBase(std::move(rp)) {
        if (iparam("empires") * 2 > rp_.population_size)
            throw std::invalid_argument("ICA needs a population at least twice the empire count");
    }

    void init_state(RunContext& ctx, RngStream& rng) override {
        auto& pop = ctx.pop();
        const std::size_t e = iparam("empires");
        const auto order = ops::truncation_select(pop, pop.size());
        empires_.assign(e, Empire{});
        for (std::size_t r = 0; r < e; ++r) empires_[r].imperialist = order[r];

        std::vector<double> founder_values;
        for (std::size_t r = 0; r < e; ++r)
            founder_values.push_back(pop.members[order[r]].val());
        std::vector<std::size_t> rest(order.begin() + static_cast<std::ptrdiff_t>(e), order.end());
        rng.shuffle(rest);
        const auto counts =
            apportion(ops::fitness_weights(founder_values), rest.size(), rest.size());
        std::size_t at = 0;
        for (std::size_t r = 0; r < e; ++r)
            for (std::size_t c = 0; c < counts[r] && at < rest.size(); ++c)
                empires_[r].colonies.push_back(rest[at++]);
        while (at < rest.size()) empires_[0].colonies.push_back(rest[at++]);
    }

    void step(RunContext& ctx, RngStream& rng) override {
        auto& pop = ctx.pop();
        for (auto& emp : empires_) {
            for (std::size_t c = 0; c < emp.colonies.size(); ++c) {
                const std::size_t idx = emp.colonies[c];
                const Vec& target = pop.members[emp.imperialist].position;
                const double jitter =
                    param("jitter_fraction") * dist(pop.members[idx].position, target);
                Candidate cand;
                cand.position = ops::move_toward(
                    pop.members[idx].position, target,
                    rng.uniform(0.0, param("move_fraction_max")), jitter, rng);
                if (!ctx.evaluate(cand)) return;
                pop.members[idx] = cand;
                if (cand.val() < pop.members[emp.imperialist].val())
                    std::swap(emp.colonies[c], emp.imperialist);
            }
        }

        // imperialistic competition: the weakest empire loses its worst colony
        if (empires_.size() > 1) {
            std::vector<double> power(empires_.size());
            for (std::size_t e = 0; e < empires_.size(); ++e) power[e] = value_of(pop, empires_[e]);
            std::size_t weakest = 0;
            for (std::size_t e = 1; e < empires_.size(); ++e)
                if (power[e] > power[weakest]) weakest = e;

            std::vector<double> rival_values;
            std::vector<std::size_t> rivals;
            for (std::size_t e = 0; e < empires_.size(); ++e)
                if (e != weakest) {
                    rivals.push_back(e);
                    rival_values.push_back(power[e]);
                }
            const auto w = ops::fitness_weights(rival_values);
            double u = rng.uniform01() * std::accumulate(w.begin(), w.end(), 0.0);
            std::size_t winner = rivals.back();
            for (std::size_t r = 0; r < rivals.size(); ++r) {
                u -= w[r];
                if (u < 0.0) {
                    winner = rivals[r];
                    break;
                }
            }

            auto& weak = empires_[weakest];
            if (weak.colonies.empty()) {
                empires_[winner].colonies.push_back(weak.imperialist);
                empires_.erase(empires_.begin() + static_cast<std::ptrdiff_t>(weakest));
            } else {
                std::size_t worst_c = 0;
                for (std::size_t c = 1; c < weak.colonies.size(); ++c)
                    if (pop.members[weak.colonies[c]].val() >
                        pop.members[weak.colonies[worst_c]].val())
                        worst_c = c;
                empires_[winner].colonies.push_back(weak.colonies[worst_c]);
                weak.colonies.erase(weak.colonies.begin() + static_cast<std::ptrdiff_t>(worst_c));
            }
        }
        ++state_.iteration;
    }

    bool terminated() const override { return empires_.size() <= 1; }

private:
    struct Empire {
        std::size_t imperialist = 0;
        std::vector<std::size_t> colonies;
    };

    double value_of(const Population& pop, const Empire& e) const {
        double mean = 0.0;
        for (std::size_t idx : e.colonies) mean += pop.members[idx].val();
        if (!e.colonies.empty()) mean /= static_cast<double>(e.colonies.size());
        return pop.members[e.imperialist].val() + param("blend") * mean;
    }

    std::vector<Empire> empires_;
};

// Random walks from elites with per-walk decaying steps; walk points recombine
// with the walk's start at a value-tied, walk-decaying probability, and the
// best products replace the worst members. A local-search pass picks its
// operator by empirical success rate.
class MboInstance final : public InstanceBase {
public:
    explicit MboInstance(ResolvedParams rp) : InstanceBase(std::move(rp)) {
        if (iparam("elite_count") * 2 > rp_.population_size)
            throw std::invalid_argument("MBO needs a population at least twice the elite count");
    }

    void init_state(RunContext&, RngStream&) override {
        successes_.assign(3, 0);
        trials_.assign(3, 0);
    }

    void step(RunContext& ctx, RngStream& rng) override {
        auto& pop = ctx.pop();
        const double range = ctx.space().mean_range();
        const std::size_t e = iparam("elite_count");
        const auto elites = ops::truncation_select(pop, e);
        const double fbest = pop.members[elites.front()].val();
        const double fworst = pop.members[pop.worst_index()].val();
        const double sigma0 = sched(ops::DecaySchedule::exponential(param("walk_sigma_start"),
                                                                    param("walk_sigma_end")),
                                    ctx) *
                              range;

        std::vector<Candidate> brood;
        for (std::size_t r = 0; r < e; ++r) {
            const Vec& start = pop.members[elites[r]].position;
            const double rel = goodness(pop.members[elites[r]].val(), fbest, fworst);
            std::size_t hops = 0;
            auto sampler = [&](RngStream& rg) {
                const double sigma = sigma0 * std::pow(param("walk_decay"),
                                                       static_cast<double>(hops++));
                Vec step(start.size());
                for (auto& s : step) s = sigma * rg.normal();
                return step;
            };
            const auto path =
                ops::random_walk(start, iparam("walk_length"), ctx.space(), sampler, rng);
            for (std::size_t k = 1; k < path.size(); ++k) {
                const double p = param("recombine_prob") * rel *
                                 std::pow(param("recombine_decay"), static_cast<double>(k - 1));
                if (!rng.chance(p)) continue;
                Candidate cand;
                cand.position = ops::recombine(start, path[k], rng);
                if (!ctx.evaluate(cand)) return;
                brood.push_back(std::move(cand));
            }
        }
        if (!brood.empty()) {
            std::stable_sort(brood.begin(), brood.end(),
                             [](const Candidate& a, const Candidate& b) { return a.val() < b.val(); });
            auto order = ops::truncation_select(pop, pop.size());
            const std::size_t replace = std::min(brood.size(), pop.size() - e);
            for (std::size_t c = 0; c < replace; ++c)
                pop.members[order[pop.size() - 1 - c]] = std::move(brood[c]);
        }

        const double spread = pop.spatial_spread() + 1e-12 * range;
        for (std::size_t m = 0; m < iparam("local_moves"); ++m) {
            const std::size_t op = pick_operator(rng);
            const std::size_t i = rng.index(pop.size());
            Candidate cand = pop.members[i];
            switch (op) {
                case 0:
                    cand.position =
                        ops::gaussian_sample(cand.position, param("local_small") * spread, rng);
                    break;
                case 1:
                    cand.position =
                        ops::gaussian_sample(cand.position, param("local_large") * spread, rng);
                    break;
                default: {
                    const std::size_t d = rng.index(ctx.space().dims());
                    cand.position[d] =
                        rng.uniform(ctx.space().lower[d], ctx.space().upper[d]);
                    break;
                }
            }
            cand.value.reset();
            if (!ctx.evaluate(cand)) return;
            ++trials_[op];
            if (cand.val() < pop.members[i].val()) {
                ++successes_[op];
                pop.members[i] = cand;
            }
        }
        ++state_.iteration;
    }

private:
    std::size_t pick_operator(RngStream& rng) {
        double rates[3];
        double total = 0.0;
        for (std::size_t o = 0; o < 3; ++o) {
            rates[o] = (static_cast<double>(successes_[o]) + 1.0) /
                       (static_cast<double>(trials_[o]) + 2.0);  // Laplace smoothing
            total += rates[o];
        }
        double u = rng.uniform01() * total;
        for (std::size_t o = 0; o < 3; ++o) {
            u -= rates[o];
            if (u < 0.0) return o;
        }
        return 2;
    }

    std::vector<std::uint64_t> successes_;
    std::vector<std::uint64_t> trials_;
};

// Value-interleaved memeplexes; in each, repeatedly move the worst of a random
// sub-sample toward the sub-sample best, falling back to the population best
// and then to a fresh restart.
class SflaInstance final : public InstanceBase {
public:
    explicit SflaInstance(ResolvedParams rp) : InstanceBase(std::move(rp)) {
        if (iparam("memeplexes") > rp_.population_size)
            throw std::invalid_argument("SFLA memeplexes must not exceed the population size");
        if (iparam("subsample") * iparam("memeplexes") > rp_.population_size)
            throw std::invalid_argument("SFLA subsample does not fit the memeplex size");
    }

    void step(RunContext& ctx, RngStream& rng) override {
        auto& pop = ctx.pop();
        const std::size_t m = iparam("memeplexes");
        const auto order = ops::truncation_select(pop, pop.size());
        std::vector<std::vector<std::size_t>> plexes(m);
        for (std::size_t r = 0; r < order.size(); ++r) plexes[r % m].push_back(order[r]);

        for (auto& plex : plexes) {
            for (std::size_t sub = 0; sub < iparam("submoves"); ++sub) {
                std::vector<std::size_t> sample = plex;
                rng.shuffle(sample);
                sample.resize(iparam("subsample"));
                std::size_t best = sample[0], worst = sample[0];
                for (std::size_t idx : sample) {
                    if (pop.members[idx].val() < pop.members[best].val()) best = idx;
                    if (pop.members[idx].val() > pop.members[worst].val()) worst = idx;
                }
                Candidate cand;
                cand.position = ops::move_toward(pop.members[worst].position,
                                                 pop.members[best].position, rng.uniform01(),
                                                 0.0, rng);
                if (!ctx.evaluate(cand)) return;
                if (cand.val() < pop.members[worst].val()) {
                    pop.members[worst] = cand;
                    continue;
                }
                const Vec& gbest = pop.members[pop.best_index()].position;
                cand.position = ops::move_toward(pop.members[worst].position, gbest,
                                                 rng.uniform01(), 0.0, rng);
                cand.value.reset();
                if (!ctx.evaluate(cand)) return;
                if (cand.val() < pop.members[worst].val()) {
                    pop.members[worst] = cand;
                    continue;
                }
                Candidate fresh = ops::restart(ctx.space(), rng);
                if (!ctx.evaluate(fresh)) return;
                pop.members[worst] = fresh;
            }
        }
        ++state_.iteration;
    }
};

// Distance clustering, movement toward per-cluster elites, then a second
// stage over the pooled elites toward the overall best.
class ScaInstance final : public InstanceBase {
public:
    explicit ScaInstance(ResolvedParams rp) : InstanceBase(std::move(rp)) {
        if (iparam("clusters") > rp_.population_size)
            throw std::invalid_argument("SCA clusters must not exceed the population size");
    }

    void step(RunContext& ctx, RngStream& rng) override {
        auto& pop = ctx.pop();
        std::vector<Vec> points;
        points.reserve(pop.size());
        for (const auto& m : pop.members) points.push_back(m.position);
        const auto clusters = ops::kmeans(points, iparam("clusters"), rng);
        const double jitter = param("jitter_scale") * pop.spatial_spread();
        const double fmax = param("move_fraction_max");

        std::vector<std::size_t> pooled;
        for (const auto& cluster : clusters) {
            if (cluster.members.empty()) continue;
            std::vector<std::size_t> local = cluster.members;
            std::stable_sort(local.begin(), local.end(), [&](std::size_t a, std::size_t b) {
                return pop.members[a].val() < pop.members[b].val();
            });
            const std::size_t elite_count = std::max<std::size_t>(
                1, static_cast<std::size_t>(param("elite_fraction") *
                                            static_cast<double>(local.size())));
            for (std::size_t r = 0; r < elite_count; ++r) pooled.push_back(local[r]);
            for (std::size_t r = elite_count; r < local.size(); ++r) {
                const std::size_t target = local[rng.index(elite_count)];
                Candidate cand;
                cand.position = ops::move_toward(pop.members[local[r]].position,
                                                 pop.members[target].position,
                                                 rng.uniform(0.0, fmax), jitter, rng);
                if (!ctx.evaluate(cand)) return;
                pop.members[local[r]] = cand;
            }
        }

        std::stable_sort(pooled.begin(), pooled.end(), [&](std::size_t a, std::size_t b) {
            return pop.members[a].val() < pop.members[b].val();
        });
        const Vec best = pop.members[pooled.front()].position;
        for (std::size_t r = (pooled.size() + 1) / 2; r < pooled.size(); ++r) {
            Candidate cand;
            cand.position = ops::move_toward(pop.members[pooled[r]].position, best,
                                             rng.uniform(0.0, fmax), jitter, rng);
            if (!ctx.evaluate(cand)) return;
            pop.members[pooled[r]] = cand;
        }
        ++state_.iteration;
    }
};

}  // namespace

std::unique_ptr<AlgorithmInstance> make_ga(ResolvedParams rp) {
    return std::make_unique<GaInstance>(std::move(rp));
}
std::unique_ptr<AlgorithmInstance> make_bbo(ResolvedParams rp) {
    return std::make_unique<BboInstance>(std::move(rp));
}
std::unique_ptr<AlgorithmInstance> make_bso(ResolvedParams rp) {
    return std::make_unique<BsoInstance>(std::move(rp));
}
std::unique_ptr<AlgorithmInstance> make_cs(ResolvedParams rp) {
    return std::make_unique<CsInstance>(std::move(rp));
}
std::unique_ptr<AlgorithmInstance> make_hs(ResolvedParams rp) {
    return std::make_unique<HsInstance>(std::move(rp));
}
std::unique_ptr<AlgorithmInstance> make_ica(ResolvedParams rp) {
    return std::make_unique<IcaInstance>(std::move(rp));
}
std::unique_ptr<AlgorithmInstance> make_mbo(ResolvedParams rp) {
    return std::make_unique<MboInstance>(std::move(rp));
}
std::unique_ptr<AlgorithmInstance> make_sfla(ResolvedParams rp) {
    return std::make_unique<SflaInstance>(std::move(rp));
}
std::unique_ptr<AlgorithmInstance> make_sca(ResolvedParams rp) {
    return std::make_unique<ScaInstance>(std::move(rp));
}

}  // namespace menagerie::detail
