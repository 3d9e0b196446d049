#pragma once

#include <string>

namespace sinc {

/// Scientific notation with 17 significant digits, enough to round-trip a double.
std::string format_real(double value);

}  // namespace sinc
