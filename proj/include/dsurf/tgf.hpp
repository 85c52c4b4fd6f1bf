#pragma once

#include <string>
#include <vector>

#include "dsurf/surface.hpp"

namespace dsurf {

// Text graph format. Reals carry 17 significant digits; round-trips are
// lossless.
//
//   tgf 1
//   period <r>
//   lattice <x> <y> <z>          (r lines)
//   vertices <n>
//   v <id> <x> <y> <z>
//   edges <m>
//   e <id> <a> <b> [<s1> ... <sr>]
//   rotations <n>
//   r <vertex> <e1> <e2> <e3>    (oriented edge ids; class m -> 2m / 2m+1)
std::string serialize_tgf(const DiscreteSurface& surface);
DiscreteSurface parse_tgf(const std::string& text);

DiscreteSurface load_tgf(const std::string& path);
void save_tgf(const DiscreteSurface& surface, const std::string& path);

}  // namespace dsurf
