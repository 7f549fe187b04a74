#pragma once

#include "golodkit/complex.hpp"
#include "golodkit/simplicial.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace golodkit {

struct RandomIdealShape {
    std::size_t max_generators = 6;
    std::size_t max_vars = 5;
    std::uint32_t max_exponent = 3;
};

/// Minimalized random ideal; the generator count may drop below the draw.
MonomialIdeal random_ideal(std::mt19937_64& rng, const RandomIdealShape& shape);
/// Random complex on r vertices that contains every vertex.
SimplicialComplex random_complex(std::mt19937_64& rng, std::size_t r);

struct PropertyFailure {
    std::string property;
    std::string ideal;     // reproducer input
    std::uint64_t seed = 0; // reproducer seed for the ideal-level checks
    std::string detail;
};

struct PropertyReport {
    std::size_t ideals = 0;
    std::size_t strand_pairs = 0;
    std::size_t independence_ideals = 0;
    std::map<std::string, std::size_t> checks; // property -> evaluations
    std::vector<PropertyFailure> failures;
    bool ok() const { return failures.empty(); }
};

/// Morse, transfer and Stasheff invariants of one ideal over QQ, using the
/// greedy matching random:<seed>.
void check_ideal_properties(const MonomialIdeal& ideal, std::uint64_t seed, PropertyReport& report);

/// F_Δ is a resolution iff every lcm-lattice restriction of Δ is acyclic;
/// cross-checked against the homology of the k-strands of F_Δ.
void check_strand_pair(const SimplicialComplex& delta, const MonomialIdeal& ideal, std::uint64_t seed,
                       PropertyReport& report);

/// Critical counts and product triviality agree across the default
/// strategies (and the staged construction when it is maximal).
void check_matching_independence(const MonomialIdeal& ideal, std::uint64_t seed, PropertyReport& report);

struct SuiteConfig {
    std::uint64_t seed = 20240611;
    std::size_t ideals = 200;
    std::size_t strand_pairs = 25;
    std::size_t independence = 50;
    RandomIdealShape shape;
    bool stop_on_first = true;
    std::function<void(const std::string&)> progress; // optional
};

PropertyReport run_property_suite(const SuiteConfig& config);

} // namespace golodkit
