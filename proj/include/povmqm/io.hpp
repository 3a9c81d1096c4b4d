#pragma once

#include <string>

namespace povmqm::io {

/// 17 significant decimal digits: the shortest width that round-trips every
/// double bit-exactly through text.
std::string fmt17(double v);

}  // namespace povmqm::io
