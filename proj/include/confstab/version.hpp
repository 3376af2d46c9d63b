#pragma once

namespace confstab {

inline constexpr const char* version_string = "0.1.0";

}
