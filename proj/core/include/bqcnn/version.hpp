#pragma once

namespace bqcnn {

inline constexpr const char* kVersion = "0.1.0";

} // namespace bqcnn
