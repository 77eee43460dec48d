#pragma once

#include "unitfield/bundle.hpp"

namespace unitfield {

// How to produce the second fundamental form of the image surface.
//   curvature_form: off-diagonal via K and e0(lambda)
//   frame_form:     off-diagonal via sigma and e0(lambda)
//   lift_oracle:    differentiate the section through the bundle connection
//                   and project on the normal; no curvature formula involved
enum class SffVariant { curvature_form, frame_form, lift_oracle };

// Pointwise scalar inputs of the curvature formulas, computed once per point.
// At degenerate points the lambda-derivative entries are set to their
// parallel-field limits (zero).
struct FrameScalars {
  SingularFrame frame;
  FrameCurvatures connection;
  double K = 0.0;         // Gaussian curvature of the base
  double e0_lambda = 0.0;
  double e0_K = 0.0;
  double e1_slope = 0.0;  // e1(lambda / sqrt(1+lambda^2))
  double e1_inv = 0.0;    // e1(1 / (1+lambda^2))
};

FrameScalars frame_scalars(const UnitVectorField& field, const Point2& p,
                           const DiffConfig& cfg = {});

// Entry builders used by every consumer. Kept separate and pure so tests can
// feed them mirrored frame conventions (lambda and orientation negated
// together) and check the assembled form only flips sign as a whole.
double sff_entry_00(const FrameScalars& s);
double sff_entry_11(const FrameScalars& s);
double sff_entry_01_curvature(const FrameScalars& s);
double sff_entry_01_frame(const FrameScalars& s);

// Assembly of the curvature values from precomputed scalars; the pointwise
// entry points below all route through these.
double ambient_sectional_from(const FrameScalars& s);
double image_gauss_curvature_from(const FrameScalars& s);

// Second fundamental form in the adapted frame (t0, t1) of the image
// surface. Symmetric by construction; the lift_oracle variant symmetrizes
// the off-diagonal pair and throws DegenerateOperator where the frame
// degenerates.
Mat2 second_fundamental_form(const UnitVectorField& field, const Point2& p,
                             SffVariant variant = SffVariant::curvature_form,
                             const DiffConfig& cfg = {});

// Sectional curvature of the bundle along the tangent plane of the image:
// closed form K^2/4 + K(1-K)/(1+l^2) + (-1)^{s+1} l e0(K)/(1+l^2).
double ambient_sectional(const UnitVectorField& field, const Point2& p,
                         const DiffConfig& cfg = {});
// Same plane, evaluated through the full curvature-tensor expression.
double ambient_sectional_direct(const UnitVectorField& field, const Point2& p,
                                const SectionalOptions& opts = {}, const DiffConfig& cfg = {});

// Gaussian curvature of the image surface.
double image_gauss_curvature(const UnitVectorField& field, const Point2& p,
                             const DiffConfig& cfg = {});

// det of the second fundamental form (difference between surface and ambient
// curvature along the tangent plane).
double extrinsic_curvature(const UnitVectorField& field, const Point2& p,
                           SffVariant variant = SffVariant::curvature_form,
                           const DiffConfig& cfg = {});

// Image curvature of a field making a constant angle with the frame of a
// constant-curvature profile chart (so mu = 0, lambda = |sigma|, and
// e0(lambda) = -(K + sigma^2)): K - ((K+s^2)/(1+s^2))^2 with s = sigma.
double geodesic_field_image_curvature(double K, double sigma);

bool is_totally_geodesic(const UnitVectorField& field, const Point2& p, double tol = 1e-8,
                         const DiffConfig& cfg = {});

// One point's worth of output for the reporters.
struct CurvatureReport {
  Point2 p;
  double K = 0.0, lambda = 0.0, k = 0.0, kappa = 0.0, mu = 0.0, sigma = 0.0;
  int s = 1;
  bool degenerate = false;
  Mat2 omega;                        // curvature_form off-diagonal
  double k_t1m = 0.0;                // ambient sectional along the image plane
  double det_omega = 0.0;
  double k_xi = 0.0;                 // image curvature, closed formula
  double k_xi_oracle = 0.0;          // pullback-metric reference (NaN if skipped)
  double resid_forms = 0.0;          // off-diagonal form disagreement
  double resid_oracle = 0.0;         // k_xi - k_xi_oracle (NaN if skipped)
  double resid_identity = 0.0;       // k_xi - (k_t1m + det_omega)
  double resid_gradient_norm = 0.0;  // lambda^2 - (k^2 + kappa^2)
  double resid_curvature_link = 0.0; // (-1)^s K - (e0(lambda) - lambda sigma)
};

struct ReportOptions {
  bool with_oracle = true;
  DiffConfig cfg;
};

CurvatureReport compute_report(const UnitVectorField& field, const Point2& p,
                               const ReportOptions& opts = {});

}  // namespace unitfield
