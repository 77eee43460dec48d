#include "unitfield/submanifold.hpp"

#include <cmath>
#include <limits>

#include "unitfield/errors.hpp"

namespace unitfield {

namespace {

BundleVector add(const BundleVector& a, const BundleVector& b) {
  return {a.at, a.h + b.h, a.v + b.v};
}

// Second fundamental form by brute force: push the adapted frame fields
// through the section, differentiate with the bundle connection, project on
// the normal. Shares nothing with the closed-form entries above except the
// frame itself.
Mat2 sff_lift_oracle(const UnitVectorField& field, const Point2& p, const DiffConfig& cfg) {
  SingularFrame fr = singular_frame(field, p, cfg);
  if (fr.degenerate)
    throw DegenerateOperator("second-fundamental-form reference needs a regular frame");
  const MetricChart& ch = field.chart();
  ImageFrame imf = image_tangent_frame(field, p, cfg);

  const VecField* E[2] = {&field.e0_field(), &field.e1_field()};
  TangentVector Ep[2] = {fr.e0, fr.e1};
  VecField A[2];  // gradient of xi along each frame field, as a field
  for (int j = 0; j < 2; ++j) A[j] = gradient_field_along(field, *E[j], cfg);

  double om[2][2];
  for (int i = 0; i < 2; ++i) {
    TangentVector AXp = covariant_derivative(ch, Ep[i], field.xi(), p, cfg);
    for (int j = 0; j < 2; ++j) {
      BundleVector d =
          add(add(sasaki_derivative(ch, imf.at, Lift::horizontal, Ep[i], Lift::horizontal, *E[j],
                                    cfg),
                  sasaki_derivative(ch, imf.at, Lift::horizontal, Ep[i], Lift::vertical, A[j],
                                    cfg)),
              add(sasaki_derivative(ch, imf.at, Lift::vertical, AXp, Lift::horizontal, *E[j], cfg),
                  sasaki_derivative(ch, imf.at, Lift::vertical, AXp, Lift::vertical, A[j], cfg)));
      om[i][j] = sasaki_inner(ch, d, imf.normal);
    }
  }
  // The tangent frame scales the e1 slot by 1/sqrt(1+lambda^2).
  double r = std::sqrt(1.0 + fr.lambda * fr.lambda);
  double off = 0.5 * (om[0][1] + om[1][0]) / r;
  return {om[0][0], off, off, om[1][1] / (r * r)};
}

}  // namespace

double ambient_sectional_from(const FrameScalars& s) {
  double lam = s.frame.lambda, K = s.K;
  double inv = 1.0 / (1.0 + lam * lam);
  return 0.25 * K * K + K * (1.0 - K) * inv - orientation_sign(s.frame.s) * lam * inv * s.e0_K;
}

double image_gauss_curvature_from(const FrameScalars& s) {
  double o01 = sff_entry_01_curvature(s);
  return ambient_sectional_from(s) + 0.5 * s.connection.mu * s.e1_inv - o01 * o01;
}

FrameScalars frame_scalars(const UnitVectorField& field, const Point2& p, const DiffConfig& cfg) {
  const MetricChart& ch = field.chart();
  FrameScalars out;
  out.frame = singular_frame(field, p, cfg);
  out.connection = frame_curvatures(field, p, cfg);
  out.K = gauss_curvature(ch, p, cfg);
  out.e0_K = scalar_derivative(ch, out.frame.e0, ch.curvature_field(), p, cfg);
  if (!out.frame.degenerate) {
    out.e0_lambda = scalar_derivative(ch, out.frame.e0, field.lambda_field(), p, cfg);
    out.e1_slope = scalar_derivative(ch, out.frame.e1, field.slope_field(), p, cfg);
    out.e1_inv = scalar_derivative(ch, out.frame.e1, field.inv_one_plus_field(), p, cfg);
  }
  return out;
}

double sff_entry_00(const FrameScalars& s) {
  double lam = s.frame.lambda;
  return -s.connection.mu * lam / std::sqrt(1.0 + lam * lam);
}

double sff_entry_11(const FrameScalars& s) { return s.e1_slope; }

double sff_entry_01_curvature(const FrameScalars& s) {
  double lam = s.frame.lambda;
  return -orientation_sign(s.frame.s) * 0.5 * s.K + s.e0_lambda / (1.0 + lam * lam);
}

double sff_entry_01_frame(const FrameScalars& s) {
  double lam = s.frame.lambda;
  return 0.5 * (s.connection.sigma * lam +
                (1.0 - lam * lam) / (1.0 + lam * lam) * s.e0_lambda);
}

Mat2 second_fundamental_form(const UnitVectorField& field, const Point2& p, SffVariant variant,
                             const DiffConfig& cfg) {
  if (variant == SffVariant::lift_oracle) return sff_lift_oracle(field, p, cfg);
  FrameScalars s = frame_scalars(field, p, cfg);
  double o00 = sff_entry_00(s);
  double o11 = sff_entry_11(s);
  double o01 = (s.frame.degenerate || variant == SffVariant::curvature_form)
                   ? sff_entry_01_curvature(s)
                   : sff_entry_01_frame(s);
  return {o00, o01, o01, o11};
}

double ambient_sectional(const UnitVectorField& field, const Point2& p, const DiffConfig& cfg) {
  return ambient_sectional_from(frame_scalars(field, p, cfg));
}

double ambient_sectional_direct(const UnitVectorField& field, const Point2& p,
                                const SectionalOptions& opts, const DiffConfig& cfg) {
  ImageFrame f = image_tangent_frame(field, p, cfg);
  return bundle_sectional(field.chart(), f.t0, f.t1, opts, cfg);
}

double image_gauss_curvature(const UnitVectorField& field, const Point2& p,
                             const DiffConfig& cfg) {
  return image_gauss_curvature_from(frame_scalars(field, p, cfg));
}

double extrinsic_curvature(const UnitVectorField& field, const Point2& p, SffVariant variant,
                           const DiffConfig& cfg) {
  return second_fundamental_form(field, p, variant, cfg).det();
}

double geodesic_field_image_curvature(double K, double sigma) {
  double q = (K + sigma * sigma) / (1.0 + sigma * sigma);
  return K - q * q;
}

bool is_totally_geodesic(const UnitVectorField& field, const Point2& p, double tol,
                         const DiffConfig& cfg) {
  return second_fundamental_form(field, p, SffVariant::curvature_form, cfg).max_abs() <= tol;
}

CurvatureReport compute_report(const UnitVectorField& field, const Point2& p,
                               const ReportOptions& opts) {
  const DiffConfig& cfg = opts.cfg;
  FrameScalars s = frame_scalars(field, p, cfg);
  CurvatureReport r;
  r.p = p;
  r.K = s.K;
  r.lambda = s.frame.lambda;
  r.k = s.connection.k;
  r.kappa = s.connection.kappa;
  r.mu = s.connection.mu;
  r.sigma = s.connection.sigma;
  r.s = s.frame.s;
  r.degenerate = s.frame.degenerate;

  double o00 = sff_entry_00(s);
  double o11 = sff_entry_11(s);
  double o01 = sff_entry_01_curvature(s);
  double o01f = s.frame.degenerate ? o01 : sff_entry_01_frame(s);
  r.omega = {o00, o01, o01, o11};
  r.k_t1m = ambient_sectional_from(s);
  r.det_omega = o00 * o11 - o01 * o01;
  r.k_xi = r.k_t1m + 0.5 * s.connection.mu * s.e1_inv - o01 * o01;
  r.resid_forms = o01 - o01f;
  r.resid_identity = r.k_xi - (r.k_t1m + r.det_omega);
  r.resid_gradient_norm =
      s.frame.lambda * s.frame.lambda -
      (s.connection.k * s.connection.k + s.connection.kappa * s.connection.kappa);
  r.resid_curvature_link = orientation_sign(s.frame.s) * s.K -
                           (s.e0_lambda - s.frame.lambda * s.connection.sigma);
  if (opts.with_oracle) {
    r.k_xi_oracle = pullback_gauss_curvature(field, p, cfg);
    r.resid_oracle = r.k_xi - r.k_xi_oracle;
  } else {
    r.k_xi_oracle = std::numeric_limits<double>::quiet_NaN();
    r.resid_oracle = std::numeric_limits<double>::quiet_NaN();
  }
  return r;
}

}  // namespace unitfield
