#pragma once

// Deterministic pseudo-random quasi-SL models for property testing.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qtorb/model.hpp"

namespace qtorb {

/// The n-simplex with λ_i = e_i for i < n and λ_n = last.
Model simplex_model(int n, const IntVec& last);

/// Product of `steps` random elementary operations (row additions with
/// multiplier ±1, swaps, negations).
IntMat random_unimodular(std::mt19937_64& rng, int n, int steps);

/// A uniformly random permutation of 0..m-1.
std::vector<int> random_permutation(std::mt19937_64& rng, int m);

struct GeneratedCorpus {
  std::vector<Model> models;
  /// One entry per model slot whose attempt budget ran out.
  std::vector<std::string> failures;
};

/// `count` valid quasi-SL models of dimension n ∈ {2, 3, 4}: a simplex with a
/// random last vector, followed by random blowups and a random basis change.
/// `budget` bounds the attempts spent on each model.
GeneratedCorpus generate_test_models(std::uint64_t seed, int count, int n, int budget = 200);

}  // namespace qtorb
