#include "menagerie/benchmarks.hpp"

#include <cmath>
#include <numbers>

#include "menagerie/components.hpp"

namespace menagerie::bench {

namespace {
double sphere(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return s;
}

double rosenbrock(std::span<const double> x) {
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        const double a = x[i + 1] - x[i] * x[i];
        const double b = 1.0 - x[i];
        s += 100.0 * a * a + b * b;
    }
    return s;
}

double rastrigin(std::span<const double> x) {
    double s = 10.0 * static_cast<double>(x.size());
    for (double v : x) s += v * v - 10.0 * std::cos(2.0 * std::numbers::pi * v);
    return s;
}

double ackley(std::span<const double> x) {
    const double n = static_cast<double>(x.size());
    double sum_sq = 0.0, sum_cos = 0.0;
    for (double v : x) {
        sum_sq += v * v;
        sum_cos += std::cos(2.0 * std::numbers::pi * v);
    }
    return -20.0 * std::exp(-0.2 * std::sqrt(sum_sq / n)) - std::exp(sum_cos / n) + 20.0 +
           std::numbers::e;
}

double griewank(std::span<const double> x) {
    double sum = 0.0, prod = 1.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sum += x[i] * x[i] / 4000.0;
        prod *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
    }
    return 1.0 + sum - prod;
}

// Domains follow widespread benchmarking convention for each function.
const std::vector<BenchmarkFunction> kBenchmarks = {
    {"sphere", -5.12, 5.12, 0.0, &sphere},
    {"rosenbrock", -5.0, 10.0, 0.0, &rosenbrock},
    {"rastrigin", -5.12, 5.12, 0.0, &rastrigin},
    {"ackley", -32.768, 32.768, 0.0, &ackley},
    {"griewank", -600.0, 600.0, 0.0, &griewank},
};
}  // namespace

Vec BenchmarkFunction::optimum_position(std::size_t dims) const {
    return Vec(dims, name == "rosenbrock" ? 1.0 : 0.0);
}

Objective BenchmarkFunction::objective() const {
    auto fn = eval;
    return [fn](std::span<const double> x) { return fn(x); };
}

const std::vector<BenchmarkFunction>& all_benchmarks() { return kBenchmarks; }

const BenchmarkFunction& benchmark(const std::string& name) {
    for (const auto& b : kBenchmarks)
        if (b.name == name) return b;
    throw std::invalid_argument("unknown benchmark: " + name);
}

double evaluate_benchmark(const std::string& name, std::span<const double> x) {
    if (x.empty()) throw std::invalid_argument("benchmark input must be non-empty");
    return benchmark(name).eval(x);
}

namespace {
/// Population of one; each step draws one fresh uniform sample.
class RandomSearchInstance final : public AlgorithmInstance {
public:
    std::size_t population_size() const override { return 1; }
    void step(RunContext& ctx, RngStream& rng) override {
        Candidate c = ops::restart(ctx.space(), rng);
        if (!ctx.evaluate(c)) return;
        ctx.pop().members[0] = std::move(c);
        ++state_.iteration;
    }
    const AlgorithmState& state() const override { return state_; }

private:
    AlgorithmState state_;
};
}  // namespace

RunTrace random_search(const Objective& objective, const SearchSpace& space, std::uint64_t budget,
                       RngStream& rng) {
    if (budget < 1) throw std::invalid_argument("random search budget must be at least 1");
    RandomSearchInstance instance;
    return run(instance, objective, space, budget, rng);
}

}  // namespace menagerie::bench
