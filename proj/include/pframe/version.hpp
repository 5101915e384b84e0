#pragma once

namespace pframe {

inline constexpr const char* kVersion = "0.1.0";

} // namespace pframe
