// bath_suite.hpp: seeded random baths and the discrete-bath invariant checks

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qbm/discrete_bath.hpp"

namespace qbm {

/// Uniform double in [0, 1) from the top 53 bits of one draw.
double uniform01(std::mt19937_64& rng);

/// N oscillators with log-uniform frequencies in [0.1, 10] (relative gaps >= 1e-3),
/// masses in [0.5, 2], random-sign couplings rescaled so γ(0)/ω₀² is uniform in [0.05, 5].
DiscreteBath random_bath(std::size_t n, std::mt19937_64& rng);

struct CheckResult {
    std::string name;
    bool passed = true;
    /// Worst observed value of the checked quantity (residual or margin).
    double worst = 0.0;
    std::string detail;
};

struct SuiteReport {
    std::size_t baths = 0;
    std::vector<CheckResult> checks;
    bool all_passed() const;
};

struct SuiteOptions {
    std::size_t count = 200;
    std::uint64_t seed = 42;
    std::size_t max_n = 12;
    /// When set, every bath has exactly this many oscillators.
    std::optional<std::size_t> fixed_n;
    double hbar = 1.0;
};

/// Interlacing, sum/product rules, energy bounds, K >= 0, residue reconciliation,
/// per-mode sign and eigen-oracle agreement over a batch of random baths.
SuiteReport run_bath_suite(const SuiteOptions& opts);

}  // namespace qbm
