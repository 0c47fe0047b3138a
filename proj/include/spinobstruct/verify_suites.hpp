#pragma once

#include "spinobstruct/jetalg.hpp"
#include "spinobstruct/vecalg.hpp"

#include <random>
#include <string>
#include <vector>

namespace spinobstruct::verify {

struct SuiteResult {
    bool pass = false;
    std::string summary;
    std::vector<std::string> lines; // per-property pass/fail, counterexamples
};

/// Enumerates the graded ideals of truncated Vec_1 and checks them against
/// the two families (tails and {1} u {3..K}) plus the expected K+3 count.
SuiteResult suite_vec1_ideals(int K);

/// Runs sl_span_check and reports per-degree dimensions.
SuiteResult suite_sl_span(int n, int K);

/// Jacobi identity and anchor homomorphism on seeded random jet sections.
SuiteResult suite_jet_jacobi(int n, int k, unsigned seed, int triples = 100);

/// Divergence 1-cocycle identity for omega in {0, dx1} on seeded random
/// polynomial field pairs, plus the density-change coboundary check.
SuiteResult suite_cocycle(int n, unsigned seed, int pairs = 50);

// Seeded random generators shared by the suites and the test oracles.
Polynomial random_polynomial(std::mt19937& rng, int nvars, int max_degree, int max_terms);
vecalg::PolyVectorField random_field(std::mt19937& rng, int n, int nvars, int max_degree);
jetalg::JetField random_jet_field(std::mt19937& rng, int n, int k, int max_degree);

} // namespace spinobstruct::verify
