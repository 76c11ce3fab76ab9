#pragma once

#include "coframe/fields.hpp"

namespace coframe {

enum class DerivativeMode { analytic, finite_difference };

struct DerivativeOptions {
    DerivativeMode mode = DerivativeMode::analytic;
    double step = 1e-4;
};

/// Central difference in coordinate k with one Richardson step:
/// (4 D(h/2) - D(h)) / 3. Throws StepOutOfChart if a stencil point is not
/// admissible. Works for any value type with vector-space arithmetic.
template <typename F>
auto richardson_partial(const F& f, const Point3& p, int k, double h);

Vec3 numerical_gradient(const std::function<double(const Point3&)>& f, const Point3& p, double h);

// Derivatives that honour the mode: analytic callables are used only in
// analytic mode and only when present.
Vec3 gradient_at(const ScalarField& f, const Point3& p, const DerivativeOptions& opts = {});
Mat3 hessian_at(const ScalarField& f, const Point3& p, const DerivativeOptions& opts = {});
Mat3 jacobian_at(const OneFormField& a, const Point3& p, const DerivativeOptions& opts = {});
Jacobian3 jacobian_at(const CoframeField& w, const Point3& p, const DerivativeOptions& opts = {});

OneFormValue d_scalar(const ScalarField& f, const Point3& p, const DerivativeOptions& opts = {});
TwoFormValue d_oneform(const OneFormField& a, const Point3& p, const DerivativeOptions& opts = {});

/// Value of a coframe and the exterior derivatives of its rows (row i = d omega^i).
struct CoframeJet {
    Mat3 value;
    Mat3 d;
};
CoframeJet coframe_jet(const CoframeField& w, const Point3& p, const DerivativeOptions& opts = {});

/// Throws SingularCoframe when |det m| < 1e-12.
void require_nonsingular(const Mat3& m);

/// Coefficients of df in the coframe whose rows are `m`, from the coordinate gradient.
Vec3 directional_derivatives(const Vec3& grad, const Mat3& m);
Vec3 coframe_directional_derivatives(const ScalarField& f, const CoframeField& w, const Point3& p,
                                     const DerivativeOptions& opts = {});

/// Coefficients (c1,c2,c3) with b = c1 w2^w3 + c2 w3^w1 + c3 w1^w2.
Vec3 expand_2form(const TwoFormValue& b, const Mat3& m);
Vec3 expand_2form_in_coframe(const TwoFormValue& b, const CoframeField& w, const Point3& p);
/// Inverse of expand_2form.
TwoFormValue assemble_2form(const Vec3& c, const Mat3& m);

/// Coefficients of a one-form in the coframe: a = c1 w1 + c2 w2 + c3 w3.
Vec3 expand_1form(const OneFormValue& a, const Mat3& m);

/// The scalar field f_j (j = 0,1,2) of directional derivatives w.r.t. `w`.
/// Its gradient is exact when f has a Hessian and w a Jacobian.
ScalarField directional_derivative_field(const ScalarField& f, const CoframeField& w, int j,
                                         const DerivativeOptions& opts = {});

/// A field with no analytic derivatives; gradients are always numerical.
ScalarField numerical_field(std::function<double(const Point3&)> value);

} // namespace coframe

#include "coframe/detail/richardson.hpp"
