#pragma once

namespace domlab {

inline constexpr const char* kVersion = "1.0.0";

}
