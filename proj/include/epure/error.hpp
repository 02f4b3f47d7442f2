#pragma once

#include <stdexcept>
#include <string>

namespace epure {

// Every failure the library can signal.  One exception type carries the code;
// the message adds instance data (which input, which coordinate).
enum class errc {
  zero_denominator,
  invalid_tolerance,
  mixed_backend,
  zero_vector,
  coincident_points,
  coincident_lines,
  not_collinear,
  degenerate_quadruple,
  degenerate_pairs,
  not_on_line,
  singular_matrix,
  collinear_points,
  coincident_planes,
  line_in_plane,
  undefined_projection,
  invalid_frame,
  invalid_sheet,
  plane_contains_fold,
  ray_misses_fold,
  hypothesis_fails,
  degenerate_triangle,
  coincident_sides,
  degenerate_axis,
  degenerate_base,
  line_through_base_point,
  no_unique_conic,
  point_not_on_conic,
  singular_point,
  secant_misses_conic,
  secant_not_through_apex,
  no_same_side_tangents,
  invalid_circle,
  carrier_incidence_violated,
  invalid_incidence,
  budget_exhausted,
  parse_error,
  evaluation_error,
  no_render_directive,
  io_error,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail),
        code_(code) {}

  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& detail) {
  throw Error(code, detail);
}

}  // namespace epure
