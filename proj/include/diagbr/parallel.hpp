#pragma once

#include <string_view>

namespace diagbr {

// Every parallel kernel has a serial twin; both must return identical data.
enum class Exec { serial, parallel };

int max_threads();
void set_threads(int n);
bool openmp_enabled();
std::string_view exec_name(Exec e);

}  // namespace diagbr
