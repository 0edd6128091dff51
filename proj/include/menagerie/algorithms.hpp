#pragma once

#include <array>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "menagerie/core.hpp"

namespace menagerie {

/// The 34-algorithm roster. String spellings are stable API.
enum class AlgorithmId {
    GA,
    PSO,
    ALO,
    ABC,
    BFO,
    BA,
    BeA,
    BB_BC,
    BBO,
    BSO,
    CSO,
    CSS,
    CRO,
    COA,
    CS,
    FA,
    FWA,
    FPA,
    FOA,
    GwSO,
    GSA,
    GWO,
    GSO,
    HS,
    ICA,
    IWO,
    KH,
    MBO,
    MFO,
    SFLA,
    SCA,
    TLBO,
    WCA,
    WOA,
};

inline constexpr std::size_t kAlgorithmCount = 34;

const std::array<AlgorithmId, kAlgorithmCount>& all_algorithm_ids();
std::string to_string(AlgorithmId id);
AlgorithmId algorithm_id_from_string(const std::string& s);
bool is_algorithm_id(const std::string& s);

/// Population size plus named numeric parameters. Unset fields are filled
/// from the documented defaults at construction.
struct AlgorithmParams {
    std::optional<std::size_t> population_size;
    std::map<std::string, double> named;
};

/// One named parameter with its default and validity range.
struct ParamSpec {
    std::string name;
    double value;
    double min;
    double max;
};

/// Parameter schema for an algorithm: minimum population size, default
/// population size, and the named parameter specs.
struct ParamSchema {
    std::size_t min_population;
    std::size_t default_population;
    std::vector<ParamSpec> params;
};

const ParamSchema& param_schema(AlgorithmId id);

/// The documented default parameter set (see docs/defaults.md for rationale).
AlgorithmParams default_params(AlgorithmId id);

/// Construct an instance; validates ranges and rejects unknown parameter names.
std::unique_ptr<AlgorithmInstance> make_algorithm(AlgorithmId id, AlgorithmParams params = {});

/// Resolved parameter values of a constructed instance (defaults merged in).
/// Exposed mainly so harness output headers can record the full configuration.
struct ResolvedParams {
    std::size_t population_size;
    std::map<std::string, double> named;
};
ResolvedParams resolve_params(AlgorithmId id, const AlgorithmParams& params);

}  // namespace menagerie
