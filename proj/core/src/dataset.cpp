#include "bqcnn/dataset.hpp"

#include <fstream>

#include "bqcnn/errors.hpp"

namespace bqcnn {

namespace {
constexpr const char* kSchemaName = "bqcnn.dataset.v1";
}

nlohmann::json dataset_to_json(const LabeledDataset& ds) {
  nlohmann::json j;
  j["schema"] = kSchemaName;
  j["n_qubits"] = ds.n_qubits;
  j["kind"] = ds.kind;
  j["metadata"] = ds.metadata;
  auto& items = j["items"] = nlohmann::json::array();
  for (const auto& item : ds.items) {
    nlohmann::json ij;
    auto amps = item.state.amplitudes();
    std::vector<double> re(amps.size()), im(amps.size());
    for (std::size_t i = 0; i < amps.size(); ++i) {
      re[i] = amps[i].real();
      im[i] = amps[i].imag();
    }
    ij["re"] = re;
    ij["im"] = im;
    ij["label"] = item.label;
    ij["provenance"] = item.provenance;
    items.push_back(std::move(ij));
  }
  return j;
}

LabeledDataset dataset_from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object() || j.value("schema", "") != kSchemaName)
      throw schema_error("not a " + std::string(kSchemaName) + " document");
    LabeledDataset ds;
    ds.n_qubits = j.at("n_qubits").get<int>();
    ds.kind = j.value("kind", "");
    ds.metadata = j.value("metadata", nlohmann::json::object());
    const std::size_t dim = std::size_t{1} << ds.n_qubits;
    for (const auto& ij : j.at("items")) {
      const auto& re = ij.at("re");
      const auto& im = ij.at("im");
      if (re.size() != dim || im.size() != dim)
        throw schema_error("item amplitude arrays have wrong length");
      std::vector<Complex> amps(dim);
      for (std::size_t i = 0; i < dim; ++i)
        amps[i] = Complex{re[i].get<double>(), im[i].get<double>()};
      const int label = ij.at("label").get<int>();
      if (label != 0 && label != 1) throw schema_error("labels must be 0 or 1");
      ds.items.push_back({Statevector::from_amplitudes(ds.n_qubits, std::move(amps)),
                          label, ij.value("provenance", nlohmann::json::object())});
    }
    return ds;
  } catch (const nlohmann::json::exception& e) {
    throw schema_error(std::string("malformed dataset: ") + e.what());
  } catch (const numerical_error& e) {
    throw schema_error(std::string("invalid dataset state: ") + e.what());
  }
}

void save_dataset(const LabeledDataset& ds, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << dataset_to_json(ds).dump(2) << '\n';
  if (!out) throw std::runtime_error("failed writing " + path);
}

LabeledDataset load_dataset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw schema_error(std::string("cannot parse ") + path + ": " + e.what());
  }
  return dataset_from_json(j);
}

} // namespace bqcnn
