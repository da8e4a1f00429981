#pragma once

#include <stdexcept>
#include <string>

#include "zonelab/zone.hpp"

namespace zonelab {

struct RenderError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Static SVG picture of a planar instance: hyperplanes, the body, zone
// cells shaded, outer borders highlighted. The viewport clips to the
// bounding box of all arrangement and body vertices, inflated by 20%;
// clipping is presentation-only. Throws RenderError unless d = 2.
std::string render_svg(const Arrangement& arr, const ConvexBody& body);

}  // namespace zonelab
