#pragma once

#include <string>

#include "fpl/gb.hpp"

// JSON serialization of ideals: polynomial strings plus ring metadata {p, n},
// where n is the vertex count of a binomial-edge ring (nvars = 2n).

namespace fpl {

std::string ideal_json(const Ideal& ideal);
Ideal ideal_from_json(const std::string& text);

}  // namespace fpl
