#include "menagerie/core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace menagerie {

SearchSpace::SearchSpace(Vec lo, Vec hi) : lower(std::move(lo)), upper(std::move(hi)) {
    if (lower.empty()) throw std::invalid_argument("search space needs at least one dimension");
    if (lower.size() != upper.size())
        throw std::invalid_argument("search space bound vectors differ in length");
    for (std::size_t i = 0; i < lower.size(); ++i)
        if (!(lower[i] < upper[i]))
            throw std::invalid_argument("search space requires lower[i] < upper[i]");
}

SearchSpace SearchSpace::box(std::size_t dims, double lo, double hi) {
    return SearchSpace(Vec(dims, lo), Vec(dims, hi));
}

double SearchSpace::mean_range() const {
    double s = 0.0;
    for (std::size_t i = 0; i < dims(); ++i) s += upper[i] - lower[i];
    return s / static_cast<double>(dims());
}

Vec clamp(std::span<const double> position, const SearchSpace& space) {
    if (position.size() != space.dims())
        throw std::invalid_argument("position length does not match search space dimension");
    Vec out(position.begin(), position.end());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = std::min(space.upper[i], std::max(space.lower[i], out[i]));
    return out;
}

double Candidate::val() const {
    if (!value) throw std::invalid_argument("candidate has not been evaluated");
    return *value;
}

std::size_t Population::best_index() const {
    if (members.empty()) throw std::invalid_argument("empty population");
    std::size_t best = 0;
    for (std::size_t i = 1; i < members.size(); ++i)
        if (members[i].val() < members[best].val()) best = i;
    return best;
}

std::size_t Population::worst_index() const {
    if (members.empty()) throw std::invalid_argument("empty population");
    std::size_t worst = 0;
    for (std::size_t i = 1; i < members.size(); ++i)
        if (members[i].val() > members[worst].val()) worst = i;
    return worst;
}

std::vector<double> Population::values() const {
    std::vector<double> v;
    v.reserve(members.size());
    for (const auto& m : members) v.push_back(m.val());
    return v;
}

double Population::mean_value() const {
    if (members.empty()) throw std::invalid_argument("empty population");
    double s = 0.0;
    for (const auto& m : members) s += m.val();
    return s / static_cast<double>(members.size());
}

double Population::value_spread() const {
    if (members.empty()) throw std::invalid_argument("empty population");
    const double mu = mean_value();
    double ss = 0.0;
    for (const auto& m : members) {
        const double d = m.val() - mu;
        ss += d * d;
    }
    return std::sqrt(ss / static_cast<double>(members.size()));
}

double Population::spatial_spread() const {
    if (members.empty()) throw std::invalid_argument("empty population");
    const std::size_t d = members.front().position.size();
    Vec centroid(d, 0.0);
    for (const auto& m : members)
        for (std::size_t i = 0; i < d; ++i) centroid[i] += m.position[i];
    for (auto& c : centroid) c /= static_cast<double>(members.size());
    double dist = 0.0;
    for (const auto& m : members) {
        double ss = 0.0;
        for (std::size_t i = 0; i < d; ++i) {
            const double diff = m.position[i] - centroid[i];
            ss += diff * diff;
        }
        dist += std::sqrt(ss);
    }
    return dist / static_cast<double>(members.size());
}

namespace {
std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
}  // namespace

RngStream::RngStream(std::uint64_t seed) : seed_(seed) {
    std::uint64_t sm = seed;
    for (auto& s : state_) s = splitmix64(sm);
}

std::uint64_t RngStream::next_u64() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
}

double RngStream::uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::uniform(double a, double b) { return a + (b - a) * uniform01(); }

double RngStream::uniform_pos() {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
}

double RngStream::normal() {
    const double u1 = uniform_pos();
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::size_t RngStream::index(std::size_t n) {
    if (n == 0) throw std::invalid_argument("index() requires n >= 1");
    // Lemire multiply-shift; bias is unmeasurable at 64 bits and it is portable.
    return static_cast<std::size_t>(
        (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
}

std::size_t RngStream::index_excluding(std::size_t n, std::size_t skip) {
    if (n < 2) throw std::invalid_argument("index_excluding() requires n >= 2");
    const std::size_t i = index(n - 1);
    return i >= skip ? i + 1 : i;
}

Vec RngStream::normal_vec(std::size_t dims) {
    Vec v(dims);
    for (auto& x : v) x = normal();
    return v;
}

Vec RngStream::unit_vec(std::size_t dims) {
    while (true) {
        Vec v = normal_vec(dims);
        double norm = 0.0;
        for (double x : v) norm += x * x;
        norm = std::sqrt(norm);
        if (norm > 0.0) {
            for (auto& x : v) x /= norm;
            return v;
        }
    }
}

double RunTrace::final_best() const {
    if (records.empty()) throw std::invalid_argument("empty trace");
    return records.back().best;
}

std::uint64_t RunTrace::total_evals() const {
    return records.empty() ? 0 : records.back().evals;
}

RunContext::RunContext(const Objective& objective, const SearchSpace& space, Population& pop,
                       std::uint64_t budget)
    : objective_(&objective), space_(&space), pop_(&pop), budget_(budget) {}

bool RunContext::evaluate(Candidate& c) {
    if (pop_->evals_used >= budget_) return false;
    c.position = clamp(c.position, *space_);
    c.value = (*objective_)(c.position);
    ++pop_->evals_used;
    if (!pop_->best_ever.evaluated() || c.val() < pop_->best_ever.val()) pop_->best_ever = c;
    return true;
}

std::uint64_t RunContext::remaining() const {
    return budget_ > pop_->evals_used ? budget_ - pop_->evals_used : 0;
}

double RunContext::progress() const {
    return budget_ == 0 ? 1.0 : static_cast<double>(pop_->evals_used) / static_cast<double>(budget_);
}

Population init_population(const SearchSpace& space, std::size_t n, const Objective& objective,
                           RngStream& rng) {
    if (n == 0) throw std::invalid_argument("population size must be at least 1");
    Population pop;
    pop.members.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Candidate c;
        c.position.resize(space.dims());
        for (std::size_t d = 0; d < space.dims(); ++d)
            c.position[d] = rng.uniform(space.lower[d], space.upper[d]);
        c.value = objective(c.position);
        ++pop.evals_used;
        if (!pop.best_ever.evaluated() || c.val() < pop.best_ever.val()) pop.best_ever = c;
        pop.members.push_back(std::move(c));
    }
    return pop;
}

namespace {
TraceRecord snapshot(std::uint64_t iteration, const Population& pop) {
    return TraceRecord{iteration, pop.evals_used, pop.best_ever.val(), pop.mean_value(),
                       pop.value_spread()};
}
}  // namespace

RunTrace run(AlgorithmInstance& instance, const Objective& objective, const SearchSpace& space,
             std::uint64_t budget, RngStream& rng) {
    const std::size_t n = instance.population_size();
    if (budget < n)
        throw std::invalid_argument("budget must cover at least the initial population");

    Population pop = init_population(space, n, objective, rng);
    RunContext ctx(objective, space, pop, budget);
    instance.init_state(ctx, rng);

    RunTrace trace;
    trace.records.push_back(snapshot(0, pop));
    std::uint64_t iteration = 1;
    while (ctx.remaining() > 0 && !instance.terminated()) {
        const std::uint64_t before = pop.evals_used;
        instance.step(ctx, rng);
        if (pop.evals_used == before && !instance.terminated())
            throw std::logic_error("algorithm step consumed no evaluations");
        trace.records.push_back(snapshot(iteration++, pop));
    }
    return trace;
}

}  // namespace menagerie
