#pragma once

#include <iostream>
#include <string_view>

namespace mmrec {

inline void log_warn(std::string_view msg) { std::cerr << "[warn] " << msg << "\n"; }
inline void log_info(std::string_view msg) { std::cerr << "[info] " << msg << "\n"; }

}  // namespace mmrec
