#include "povmqm/io.hpp"

#include <cstdio>

namespace povmqm::io {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.16e", v);
  return buf;
}

}  // namespace povmqm::io
