#pragma once

#include <span>

#include "lingomotion/codebook.hpp"
#include "lingomotion/types.hpp"

// Plain single-threaded implementations kept as oracles for the OpenMP
// kernels. The tests require bit-identical results; the benchmark compares
// wall time against the parallel paths.
namespace lingomotion::reference {

// Naive Lloyd iteration: one pass over the points per step, no member-list
// machinery. Same seeding, convergence and empty-cluster rules as the
// production kernel.
KMeansResult kmeans(const std::vector<NormalizedShape>& shapes, std::size_t k, std::uint64_t seed);

// Two-pass textbook formulas for rmse / nmse / r2.
ChannelScore score(std::span<const double> reference, std::span<const double> reconstruction);

}  // namespace lingomotion::reference
