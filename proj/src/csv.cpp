#include "sinc_expdecay/csv.hpp"

#include <cstdio>

namespace sinc {

std::string format_real(double value) {
  char buf[40];
  const int len = std::snprintf(buf, sizeof buf, "%.16e", value);
  return std::string(buf, static_cast<std::size_t>(len));
}

}  // namespace sinc
