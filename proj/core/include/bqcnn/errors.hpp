#pragma once

#include <stdexcept>
#include <string>

namespace bqcnn {

/// Thrown when a state or matrix has lost the numerical properties an
/// operation relies on (norm collapse, non-Hermitian input, ...).
class numerical_error : public std::runtime_error {
public:
  explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when an on-disk dataset or result file does not match the
/// documented schema.
class schema_error : public std::runtime_error {
public:
  explicit schema_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace bqcnn
