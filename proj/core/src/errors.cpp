#include "urbanveg/errors.hpp"

#include <cstdio>

namespace urbanveg {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kValidation: return "validation_error";
    case ErrorCode::kParameterRange: return "parameter_out_of_range";
    case ErrorCode::kParse: return "parse_error";
    case ErrorCode::kConfig: return "configuration_error";
    case ErrorCode::kNoSample: return "no_sample";
    case ErrorCode::kIo: return "io_error";
  }
  return "error";
}

namespace {
std::string range_message(const std::string& field, double value, double lo, double hi) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%s=%g outside allowed range [%g, %g]", field.c_str(), value, lo, hi);
  return buf;
}
}  // namespace

ParameterRangeError::ParameterRangeError(std::string field, double value, double lo, double hi)
    : Error(ErrorCode::kParameterRange, field, range_message(field, value, lo, hi)), lo_(lo), hi_(hi) {}

}  // namespace urbanveg
