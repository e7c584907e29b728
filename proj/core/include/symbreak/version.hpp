#pragma once

namespace symbreak {
inline constexpr const char* kVersion = "0.3.0";
}
