#include "geoflow/hyperbolic.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace geoflow {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double reduce_angle(double a) {
    double r = std::fmod(a, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    if (r >= kTwoPi) r = 0.0;  // fmod rounding can land exactly on 2pi
    return r;
}

}  // namespace

UpperHalfPoint::UpperHalfPoint(double x, double y) : x(x), y(y) {
    if (!(y > 0.0)) throw std::invalid_argument("UpperHalfPoint: y must be positive");
    if (!std::isfinite(x) || !std::isfinite(y))
        throw std::invalid_argument("UpperHalfPoint: coordinates must be finite");
}

UpperHalfPoint UpperHalfPoint::from_z(std::complex<double> z) {
    return {z.real(), z.imag()};
}

double hyperbolic_distance(const UpperHalfPoint& p, const UpperHalfPoint& q) {
    const double dx = p.x - q.x, dy = p.y - q.y;
    return std::acosh(1.0 + (dx * dx + dy * dy) / (2.0 * p.y * q.y));
}

MobiusTransform MobiusTransform::from_entries(double a, double b, double c, double d) {
    const double det = a * d - b * c;
    if (!std::isfinite(det) || det <= 0.0)
        throw std::invalid_argument("MobiusTransform: determinant must be positive");
    const double s = std::sqrt(det);
    a /= s; b /= s; c /= s; d /= s;
    // Canonical sign: first nonzero of (a, b, c) positive.
    double lead = a;
    if (lead == 0.0) lead = b;
    if (lead == 0.0) lead = c;
    if (lead < 0.0) { a = -a; b = -b; c = -c; d = -d; }
    return {a, b, c, d};
}

MobiusTransform MobiusTransform::inverse() const {
    return from_entries(d_, -b_, -c_, a_);
}

std::ostream& operator<<(std::ostream& os, const MobiusTransform& m) {
    return os << "[" << m.a() << " " << m.b() << "; " << m.c() << " " << m.d() << "]";
}

Pointer::Pointer(UpperHalfPoint base, double angle)
    : base(base), angle(reduce_angle(angle)) {}

Pointer base_pointer() { return {UpperHalfPoint{0.0, 1.0}, std::numbers::pi / 2.0}; }

MobiusTransform compose(const MobiusTransform& f, const MobiusTransform& g) {
    return MobiusTransform::from_entries(
        f.a() * g.a() + f.b() * g.c(), f.a() * g.b() + f.b() * g.d(),
        f.c() * g.a() + f.d() * g.c(), f.c() * g.b() + f.d() * g.d());
}

double matrix_distance(const MobiusTransform& f, const MobiusTransform& g) {
    double d = 0.0;
    d = std::max(d, std::abs(f.a() - g.a()));
    d = std::max(d, std::abs(f.b() - g.b()));
    d = std::max(d, std::abs(f.c() - g.c()));
    d = std::max(d, std::abs(f.d() - g.d()));
    return d;
}

bool approx_identity(const MobiusTransform& m, double tol) {
    return matrix_distance(m, MobiusTransform::identity()) <= tol;
}

UpperHalfPoint apply(const MobiusTransform& m, const UpperHalfPoint& p) {
    const std::complex<double> z = p.z();
    const std::complex<double> w =
        (m.a() * z + m.b()) / (m.c() * z + m.d());
    return UpperHalfPoint::from_z(w);
}

IdealPoint apply_boundary(const MobiusTransform& m, const IdealPoint& p) {
    if (p.infinite) {
        if (m.c() == 0.0) return IdealPoint::at_infinity();
        return IdealPoint::at(m.a() / m.c());
    }
    const double denom = m.c() * p.value + m.d();
    if (denom == 0.0) return IdealPoint::at_infinity();
    return IdealPoint::at((m.a() * p.value + m.b()) / denom);
}

Pointer apply_pointer(const MobiusTransform& m, const Pointer& pt) {
    const std::complex<double> z = pt.base.z();
    const std::complex<double> denom = m.c() * z + m.d();
    // d/dz (az+b)/(cz+d) = 1/(cz+d)^2 for det 1; arg of that is -2 arg(cz+d).
    const double dtheta = -2.0 * std::arg(denom);
    return {apply(m, pt.base), pt.angle + dtheta};
}

MobiusTransform geodesic_flow(double t) {
    if (!std::isfinite(t)) throw std::invalid_argument("geodesic_flow: t must be finite");
    return MobiusTransform::from_entries(std::exp(t / 2.0), 0.0, 0.0, std::exp(-t / 2.0));
}

MobiusTransform horocycle(double s, HoroSign sign) {
    if (!std::isfinite(s)) throw std::invalid_argument("horocycle: parameter must be finite");
    if (sign == HoroSign::minus)
        return MobiusTransform::from_entries(1.0, 0.0, s, 1.0);
    return MobiusTransform::from_entries(1.0, s, 0.0, 1.0);
}

MobiusTransform translation_to(const UpperHalfPoint& p) {
    const double r = std::sqrt(p.y);
    return MobiusTransform::from_entries(r, p.x / r, 0.0, 1.0 / r);
}

MobiusTransform rotation_about(const UpperHalfPoint& p, double theta) {
    const double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
    const MobiusTransform k = MobiusTransform::from_entries(c, s, -s, c);
    const MobiusTransform t = translation_to(p);
    return compose(compose(t, k), t.inverse());
}

Pointer group_to_pointer(const MobiusTransform& b) {
    return apply_pointer(b.inverse(), base_pointer());
}

MobiusTransform pointer_to_group(const Pointer& pt) {
    return pointer_to_group_cov(pt).inverse();
}

Pointer group_to_pointer_cov(const MobiusTransform& b) {
    return apply_pointer(b, base_pointer());
}

MobiusTransform pointer_to_group_cov(const Pointer& pt) {
    // translation_to has positive real derivative, so the fiber angle is
    // carried entirely by the rotation about i.
    const MobiusTransform k =
        rotation_about(UpperHalfPoint{0.0, 1.0}, pt.angle - std::numbers::pi / 2.0);
    return compose(translation_to(pt.base), k);
}

Pointer flow_pointer(const Pointer& pt, double t) {
    if (!std::isfinite(t)) throw std::invalid_argument("flow_pointer: t must be finite");
    const MobiusTransform carrier = pointer_to_group_cov(pt);
    return apply_pointer(compose(carrier, geodesic_flow(t)), base_pointer());
}

}  // namespace geoflow
