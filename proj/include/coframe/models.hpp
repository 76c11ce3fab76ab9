#pragma once

// Closed-form coframes, templated on the scalar so that AutoDiff can
// differentiate them. Each functor maps chart coordinates to a 3x3 matrix
// whose rows are the components of three one-forms.

#include "coframe/autodiff.hpp"

#include <cmath>

namespace coframe::models {

template <typename V>
using ScalarOf = typename V::Scalar;

/// Derivative of a one-variable template at t.
template <typename F, typename Scalar>
Scalar derivative(const F& f, const Scalar& t)
{
    using D = Eigen::AutoDiffScalar<Eigen::Matrix<Scalar, 1, 1>>;
    D arg(t, Eigen::Matrix<Scalar, 1, 1>::Constant(Scalar(1)));
    D y = f(arg);
    return y.derivatives().size() == 0 ? Scalar(0) : Scalar(y.derivatives()(0));
}

template <typename Scalar>
Vec3T<Scalar> row3(const Scalar& a, const Scalar& b, const Scalar& c)
{
    return Vec3T<Scalar>(a, b, c);
}

template <typename Scalar>
Mat3T<Scalar> rows(const Vec3T<Scalar>& r1, const Vec3T<Scalar>& r2, const Vec3T<Scalar>& r3)
{
    Mat3T<Scalar> m;
    m.row(0) = r1.transpose();
    m.row(1) = r2.transpose();
    m.row(2) = r3.transpose();
    return m;
}

// ---------------------------------------------------------------- SU(2)
// Chart (a1, b0, b1) with a0 = sqrt(1 - a1^2 - b0^2 - b1^2).

template <typename V>
ScalarOf<V> su2_a0(const V& x)
{
    using S = ScalarOf<V>;
    using std::sqrt;
    return S(sqrt(S(1) - x(0) * x(0) - x(1) * x(1) - x(2) * x(2)));
}

/// d a0 in the chart cobasis.
template <typename V>
Vec3T<ScalarOf<V>> su2_da0(const V& x)
{
    using S = ScalarOf<V>;
    const S a0 = su2_a0(x);
    return row3<S>(S(-x(0) / a0), S(-x(1) / a0), S(-x(2) / a0));
}

/// Right-invariant Maurer-Cartan forms dg g^{-1}, scaled by 2 so that
/// d beta1 = beta2^beta3 and cyclically (the K = 1 standard structure).
struct Su2MaurerCartan {
    template <typename V>
    Mat3T<ScalarOf<V>> operator()(const V& x) const
    {
        using S = ScalarOf<V>;
        const S a1 = x(0), b0 = x(1), b1 = x(2), a0 = su2_a0(x);
        const Vec3T<S> da0 = su2_da0(x);
        const Vec3T<S> r1 = S(-b0) * da0 + row3<S>(b1, a0, S(-a1));
        const Vec3T<S> r2 = S(-b1) * da0 + row3<S>(S(-b0), a1, a0);
        const Vec3T<S> r3 = S(-a1) * da0 + row3<S>(a0, S(-b1), b0);
        return S(2) * rows<S>(r1, r2, r3);
    }
};

/// u = b0^2 + b1^2.
struct Su2U {
    template <typename V>
    ScalarOf<V> operator()(const V& x) const
    {
        using S = ScalarOf<V>;
        return S(x(1) * x(1) + x(2) * x(2));
    }
};

/// Denominator a0 b1 - a1 b0 of the arctan argument.
template <typename V>
ScalarOf<V> su2_w_denominator(const V& x)
{
    using S = ScalarOf<V>;
    return S(su2_a0(x) * x(2) - x(0) * x(1));
}

/// v = arctan((a0 b0 + a1 b1) / (a0 b1 - a1 b0)).
struct Su2V {
    template <typename V>
    ScalarOf<V> operator()(const V& x) const
    {
        using S = ScalarOf<V>;
        const S a0 = su2_a0(x);
        const S w = S((a0 * x(1) + x(0) * x(2)) / su2_w_denominator(x));
        return arctan(w);
    }
};

/// f = Phi(u, v) for a two-variable template Phi.
template <typename Phi>
struct Su2Potential {
    Phi phi;

    template <typename V>
    ScalarOf<V> operator()(const V& x) const
    {
        using S = ScalarOf<V>;
        return S(phi(Su2U{}(x), Su2V{}(x)));
    }
};

/// (beta1, df - beta3, beta2).
template <typename F>
struct Su2Deformed {
    F f;

    template <typename V>
    Mat3T<ScalarOf<V>> operator()(const V& x) const
    {
        using S = ScalarOf<V>;
        const Mat3T<S> beta = Su2MaurerCartan{}(x);
        const Vec3T<S> df = gradient(f, Vec3T<S>(x));
        return rows<S>(beta.row(0).transpose(), Vec3T<S>(df - beta.row(2).transpose()),
                       beta.row(1).transpose());
    }
};

/// (beta1 / sqrt K, -beta3 / sqrt K, beta2), the trivial (0, 0, K) structure.
struct Su2Trivial {
    double K;

    template <typename V>
    Mat3T<ScalarOf<V>> operator()(const V& x) const
    {
        using S = ScalarOf<V>;
        const Mat3T<S> beta = Su2MaurerCartan{}(x);
        const S r = S(1.0 / std::sqrt(K));
        return rows<S>(Vec3T<S>(r * beta.row(0).transpose()), Vec3T<S>(-r * beta.row(2).transpose()),
                       beta.row(1).transpose());
    }
};

// ---------------------------------------------------------------- lens family
// z1 = a0 + i a1, z2 = b0 + i b1 on the hemisphere chart.

/// S = a |z1|^2 + (1 - a) |z2|^2.
template <typename V>
ScalarOf<V> lens_weight(const V& x, double a)
{
    using S = ScalarOf<V>;
    const S a0 = su2_a0(x);
    return S(S(a) * (a0 * a0 + x(0) * x(0)) + S(1.0 - a) * (x(1) * x(1) + x(2) * x(2)));
}

/// alpha1 + i alpha2 = 4 (a z1 dz2 - (1 - a) z2 dz1), with the connection form
/// eta = (Im(conj(z1) dz1) + Im(conj(z2) dz2)) / S as third row.
struct LensCoframe {
    double a;

    template <typename V>
    Mat3T<ScalarOf<V>> operator()(const V& x) const
    {
        using S = ScalarOf<V>;
        const S a1 = x(0), b0 = x(1), b1 = x(2), a0 = su2_a0(x);
        const Vec3T<S> da0 = su2_da0(x);
        const Vec3T<S> da1 = row3<S>(S(1), S(0), S(0));
        const Vec3T<S> db0 = row3<S>(S(0), S(1), S(0));
        const Vec3T<S> db1 = row3<S>(S(0), S(0), S(1));
        const S p(a), q(1.0 - a);
        const Vec3T<S> r1 = S(4) * (p * (a0 * db0 - a1 * db1) - q * (b0 * da0 - b1 * da1));
        const Vec3T<S> r2 = S(4) * (p * (a0 * db1 + a1 * db0) - q * (b0 * da1 + b1 * da0));
        const Vec3T<S> twist = a0 * da1 - a1 * da0 + b0 * db1 - b1 * db0;
        const Vec3T<S> r3 = twist / lens_weight(x, a);
        return rows<S>(r1, r2, r3);
    }
};

/// Curvature of LensCoframe: 1 / (8 S^3).
struct LensCurvature {
    double a;

    template <typename V>
    ScalarOf<V> operator()(const V& x) const
    {
        using S = ScalarOf<V>;
        const S w = lens_weight(x, a);
        return S(S(1) / (S(8) * w * w * w));
    }
};

/// The third form Im(conj(z1) dz1) / a + Im(conj(z2) dz2) / (1 - a). It agrees
/// with the connection form only at a = 1/2.
struct LensTwistedForm {
    double a;

    template <typename V>
    Vec3T<ScalarOf<V>> operator()(const V& x) const
    {
        using S = ScalarOf<V>;
        const S a1 = x(0), b0 = x(1), b1 = x(2), a0 = su2_a0(x);
        const Vec3T<S> da0 = su2_da0(x);
        const Vec3T<S> first = a0 * row3<S>(S(1), S(0), S(0)) - a1 * da0;
        const Vec3T<S> second = b0 * row3<S>(S(0), S(0), S(1)) - b1 * row3<S>(S(0), S(1), S(0));
        return first / S(a) + second / S(1.0 - a);
    }
};

/// 1 / (8 a (1 - a) S), the coefficient of d of LensTwistedForm on alpha1^alpha2.
inline double lens_twisted_curvature(const Vec3& x, double a)
{
    return 1.0 / (8.0 * a * (1.0 - a) * lens_weight(x, a));
}

/// (sqrt(Kc) a1, -a3, sqrt(Kc) a2) over a Cartan template with curvature template.
template <typename Frame, typename Curvature>
struct ZollGfs {
    Frame frame;
    Curvature curvature;

    template <typename V>
    Mat3T<ScalarOf<V>> operator()(const V& x) const
    {
        using S = ScalarOf<V>;
        using std::sqrt;
        const Mat3T<S> alpha = frame(x);
        const S r = S(sqrt(curvature(x)));
        return rows<S>(Vec3T<S>(r * alpha.row(0).transpose()), Vec3T<S>(-alpha.row(2).transpose()),
                       Vec3T<S>(r * alpha.row(1).transpose()));
    }
};

// ---------------------------------------------------------------- E2 and SL2
// Chart (x, y, theta).

struct E2MaurerCartan {
    template <typename V>
    Mat3T<ScalarOf<V>> operator()(const V& x) const
    {
        using S = ScalarOf<V>;
        using std::cos;
        using std::sin;
        const S c = S(cos(x(2))), s = S(sin(x(2)));
        return rows<S>(row3<S>(c, s, S(0)), row3<S>(S(-s), c, S(0)), row3<S>(S(0), S(0), S(-1)));
    }
};

struct Sl2MaurerCartan {
    template <typename V>
    Mat3T<ScalarOf<V>> operator()(const V& x) const
    {
        using S = ScalarOf<V>;
        using std::cos;
        using std::sin;
        const S c = S(cos(x(2))), s = S(sin(x(2))), y = x(1);
        return rows<S>(row3<S>(S(c / y), S(s / y), S(0)), row3<S>(S(-s / y), S(c / y), S(0)),
                       row3<S>(S(S(-1) / y), S(0), S(-1)));
    }
};

/// Plane GFS from phi = f dx + g dy with D = -f_y + g_x > 0:
/// (sqrt D a1, -phi - a3, sqrt D a2). F and G are templates in (x, y).
template <typename F, typename G>
struct E2TorusGfs {
    F f;
    G g;

    template <typename V>
    Mat3T<ScalarOf<V>> operator()(const V& x) const
    {
        using S = ScalarOf<V>;
        using std::sqrt;
        const Vec3T<S> p(x);
        const Vec3T<S> df = gradient(f, p), dg = gradient(g, p);
        const S root = S(sqrt(S(-df(1) + dg(0))));
        const Mat3T<S> alpha = E2MaurerCartan{}(x);
        const Vec3T<S> middle = row3<S>(S(-f(p)), S(-g(p)), S(1));
        return rows<S>(Vec3T<S>(root * alpha.row(0).transpose()), middle,
                       Vec3T<S>(root * alpha.row(1).transpose()));
    }
};

/// Hyperbolic-plane GFS for translation-invariant phi = (f(y) dx + g(y) dy) / y
/// with D = -y f'(y) + f - 1 > 0. F and G are one-variable templates.
template <typename F, typename G>
struct Sl2TranslationGfs {
    F f;
    G g;

    template <typename V>
    Mat3T<ScalarOf<V>> operator()(const V& x) const
    {
        using S = ScalarOf<V>;
        using std::sqrt;
        const S y = x(1);
        const S fy = S(f(y)), gy = S(g(y));
        const S root = S(sqrt(S(-y * derivative(f, y) + fy - S(1))));
        const Mat3T<S> alpha = Sl2MaurerCartan{}(x);
        const Vec3T<S> middle = row3<S>(S((S(1) - fy) / y), S(-gy / y), S(1));
        return rows<S>(Vec3T<S>(root * alpha.row(0).transpose()), middle,
                       Vec3T<S>(root * alpha.row(1).transpose()));
    }
};

/// Hyperbolic-plane GFS for dilatation-invariant phi = gbar(x / y) dy / y with
/// D = gbar'(tau) - 1 > 0.
template <typename Gbar>
struct Sl2DilatationGfs {
    Gbar gbar;

    template <typename V>
    Mat3T<ScalarOf<V>> operator()(const V& x) const
    {
        using S = ScalarOf<V>;
        using std::sqrt;
        const S y = x(1);
        const S tau = S(x(0) / y);
        const S root = S(sqrt(S(derivative(gbar, tau) - S(1))));
        const Mat3T<S> alpha = Sl2MaurerCartan{}(x);
        const Vec3T<S> middle = row3<S>(S(S(1) / y), S(-S(gbar(tau)) / y), S(1));
        return rows<S>(Vec3T<S>(root * alpha.row(0).transpose()), middle,
                       Vec3T<S>(root * alpha.row(1).transpose()));
    }
};

} // namespace coframe::models
