#pragma once

namespace menagerie {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace menagerie
