#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "bqcnn/statevector.hpp"

namespace bqcnn {

/// One training example: a normalized state, its binary label, and a
/// free-form provenance record (generator parameters, couplings, ...).
struct DatasetItem {
  Statevector state;
  int label;
  nlohmann::json provenance;
};

struct LabeledDataset {
  int n_qubits = 0;
  std::string kind;          // "artificial", "spt", ...
  nlohmann::json metadata;   // dataset-level provenance
  std::vector<DatasetItem> items;

  std::size_t size() const { return items.size(); }
};

/// Serialization to/from the shared dataset schema:
/// {schema, n_qubits, kind, metadata, items:[{re[], im[], label, provenance}]}
nlohmann::json dataset_to_json(const LabeledDataset& ds);
LabeledDataset dataset_from_json(const nlohmann::json& j);

void save_dataset(const LabeledDataset& ds, const std::string& path);
LabeledDataset load_dataset(const std::string& path);

} // namespace bqcnn
