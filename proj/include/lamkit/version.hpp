#pragma once

namespace lamkit {

inline constexpr const char* kVersion = "0.1.0";

}
