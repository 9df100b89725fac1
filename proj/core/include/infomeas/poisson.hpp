#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "infomeas/measure.hpp"

namespace infomeas {

/// Poisson point process on a finite alphabet: each symbol's count is an
/// independent Poisson variable whose mean is the expectation measure's
/// weight at that symbol.
struct PoissonProcessSpec {
    DiscreteMeasure expectation;
};

/// One realization of the process, aligned with the alphabet.
struct CountVector {
    std::vector<std::uint64_t> counts;
};

/// One Poisson draw from the given stream. Inversion by sequential search
/// for mean <= 10, transformed rejection for larger means; no normal
/// approximation anywhere. Deterministic given the generator state.
std::uint64_t draw_poisson(std::mt19937_64& rng, double mean);

/// The generator for stream `index` of a run keyed by `seed`. Streams are
/// independent std::mt19937_64 engines (portable by the standard) seeded by
/// a splitmix64 mix of (seed, index); parallel callers partition by index
/// and never share an engine.
std::mt19937_64 stream_rng(std::uint64_t seed, std::uint64_t index);

/// n independent realizations of the process; draw i uses stream i of the
/// seed, so identical (seed, n) reproduce the exact same table everywhere.
std::vector<CountVector> sample_process(const PoissonProcessSpec& spec,
                                        std::uint64_t seed, std::size_t n);

/// D(Po(mu) || Po(nu)) for product-Poisson processes, which collapses to the
/// plain measure divergence; evaluated through the same code path.
double poisson_divergence_closed_form(const DiscreteMeasure& mu, const DiscreteMeasure& nu);

/// Partial sum sum_{k=0}^{truncation} p_k ln(p_k/q_k) for p ~ Po(lambda1),
/// q ~ Po(lambda2), computed in log space. Converges to
/// scalar_divergence(lambda1, lambda2) as the truncation grows. Throws
/// std::domain_error unless both rates are positive.
double poisson_marginal_divergence_truncated(double lambda1, double lambda2,
                                             int truncation);

struct SymbolMeanCheck {
    std::string symbol;
    double sample_mean = 0.0;
    double expected = 0.0;
    double bound = 0.0;  // sigmas * sqrt(expected / n)
    bool pass = false;
};

struct ExpectationCheckReport {
    std::vector<SymbolMeanCheck> symbols;
    bool pass = true;
};

/// Per-symbol CLT check that sample means track the expectation measure:
/// |mean - mu(a)| <= sigmas * sqrt(mu(a)/n). Zero-mean symbols must match
/// exactly. Throws std::invalid_argument on an empty sample list.
ExpectationCheckReport empirical_expectation_check(const PoissonProcessSpec& spec,
                                                   const std::vector<CountVector>& samples,
                                                   double sigmas);

}  // namespace infomeas
