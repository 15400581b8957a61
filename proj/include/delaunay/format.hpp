#pragma once

#include <string>

namespace delaunay::format {

/// Shortest decimal that round-trips, independent of the locale.
std::string number(double x);

}  // namespace delaunay::format
