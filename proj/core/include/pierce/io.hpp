#pragma once

#include <stdexcept>
#include <string>

#include "pierce/body.hpp"
#include "pierce/gen.hpp"

namespace pierce {

// Malformed input, tagged with the 1-based line it was found on.
struct ParseError : std::runtime_error {
  long long line;
  ParseError(const std::string& msg, long long line_no)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
};

// Compact JSON body description, e.g. {"kind":"ball","radius":1.0},
// {"kind":"box","half_widths":[1,2]}. A ball spec takes its dimension from a
// "dim" field or from dim_hint; the other kinds carry it in their parameters.
ConvexBody parse_body_spec(const std::string& text, int dim_hint = 0);
std::string body_spec_to_json(const ConvexBody& body);

// Instance serialization. JSON carries points and the truth block losslessly;
// CSV (header x1,...,xd, one point per row) carries points only.
Instance parse_instance_json(const std::string& text);
std::string instance_to_json(const Instance& inst);
Instance parse_instance_csv(const std::string& text);
std::string instance_to_csv(const Instance& inst);

// Path-level wrappers dispatching on the .json extension (CSV otherwise).
Instance load_instance(const std::string& path);
void save_instance(const Instance& inst, const std::string& path);

}  // namespace pierce
