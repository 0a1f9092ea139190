#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bqcnn/ansatz.hpp"
#include "bqcnn/dataset.hpp"

namespace bqcnn {

/// Uniform angles on [0, 2pi), one per circuit parameter, deterministic per
/// seed.
std::vector<double> random_parameters(const BranchingCircuit& circuit,
                                      std::uint64_t seed);

/// Perfectly classifiable dataset: every computational basis state |x> is
/// run through the inverse of the branch whose pooling outcomes equal x's
/// pooled-qubit bits, labeled with bit 0 of x. Classifying the result with
/// the generating parameters reproduces the label exactly.
LabeledDataset artificial_dataset(const BranchingCircuit& circuit,
                                  std::span<const double> params);

/// FNV-1a digest of a parameter vector, for provenance records.
std::uint64_t parameter_digest(std::span<const double> params);

} // namespace bqcnn
