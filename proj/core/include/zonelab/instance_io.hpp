#pragma once

#include <string>

#include "zonelab/instance_gen.hpp"

namespace zonelab {

// Instance interchange format (all rationals as exact "p/q" strings):
// {"dim": d, "seed": s,
//  "hyperplanes": [{"a": ["p/q", ...], "b": "p/q"}, ...],
//  "body": {"dim": d, "halfspaces": [{"c": ["p/q", ...], "d": "p/q"}, ...]}}
std::string instance_to_json(const Instance& instance);
Instance instance_from_json(const std::string& text);

std::string body_to_json(const ConvexBody& body);
ConvexBody body_from_json(const std::string& text);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace zonelab
