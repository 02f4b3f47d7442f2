#include "epure/error.hpp"

namespace epure {

const char* errc_name(errc c) {
  switch (c) {
    case errc::zero_denominator: return "ZeroDenominator";
    case errc::invalid_tolerance: return "InvalidTolerance";
    case errc::mixed_backend: return "MixedBackend";
    case errc::zero_vector: return "ZeroVector";
    case errc::coincident_points: return "CoincidentPoints";
    case errc::coincident_lines: return "CoincidentLines";
    case errc::not_collinear: return "NotCollinear";
    case errc::degenerate_quadruple: return "DegenerateQuadruple";
    case errc::degenerate_pairs: return "DegeneratePairs";
    case errc::not_on_line: return "NotOnLine";
    case errc::singular_matrix: return "SingularMatrix";
    case errc::collinear_points: return "CollinearPoints";
    case errc::coincident_planes: return "CoincidentPlanes";
    case errc::line_in_plane: return "LineInPlane";
    case errc::undefined_projection: return "UndefinedProjection";
    case errc::invalid_frame: return "InvalidFrame";
    case errc::invalid_sheet: return "InvalidSheet";
    case errc::plane_contains_fold: return "PlaneContainsFold";
    case errc::ray_misses_fold: return "RayMissesFold";
    case errc::hypothesis_fails: return "HypothesisFails";
    case errc::degenerate_triangle: return "DegenerateTriangle";
    case errc::coincident_sides: return "CoincidentSides";
    case errc::degenerate_axis: return "DegenerateAxis";
    case errc::degenerate_base: return "DegenerateBase";
    case errc::line_through_base_point: return "LineThroughBasePoint";
    case errc::no_unique_conic: return "NoUniqueConic";
    case errc::point_not_on_conic: return "PointNotOnConic";
    case errc::singular_point: return "SingularPoint";
    case errc::secant_misses_conic: return "SecantMissesConic";
    case errc::secant_not_through_apex: return "SecantNotThroughApex";
    case errc::no_same_side_tangents: return "NoSameSideTangents";
    case errc::invalid_circle: return "InvalidCircle";
    case errc::carrier_incidence_violated: return "CarrierIncidenceViolated";
    case errc::invalid_incidence: return "InvalidIncidence";
    case errc::budget_exhausted: return "BudgetExhausted";
    case errc::parse_error: return "ParseError";
    case errc::evaluation_error: return "EvaluationError";
    case errc::no_render_directive: return "NoRenderDirective";
    case errc::io_error: return "IoError";
  }
  return "UnknownError";
}

}  // namespace epure
