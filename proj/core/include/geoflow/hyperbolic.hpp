#pragma once

// Upper half-plane hyperbolic geometry: Mobius isometries as sign-normalized
// unit-determinant 2x2 real matrices, unit tangent vectors ("pointers"),
// geodesic and horocycle flows, and the dictionary between group elements
// and pointers.
//
// Conventions fixed here and relied on throughout:
//  * A MobiusTransform is stored with det = 1 and the first nonzero entry of
//    (a, b, c) positive, so each value is a canonical representative of an
//    element of the isometry group modulo +-identity.
//  * Pointer angles live in [0, 2pi). The base pointer is (i, pi/2).
//  * flow_pointer(pt, t) moves the base point distance t in the direction
//    the pointer points. Under the covariant dictionary B -> B(base pointer)
//    this is right multiplication by geodesic_flow(t); under the
//    contravariant dictionary B -> B^{-1}(base pointer) it is left
//    multiplication by geodesic_flow(-t).

#include <complex>
#include <iosfwd>

namespace geoflow {

inline constexpr double kMatrixTol = 1e-12;   // algebraic identities on matrices
inline constexpr double kGeomTol = 1e-10;     // composed geometric operations

struct UpperHalfPoint {
    double x = 0.0;
    double y = 1.0;  // must stay positive

    UpperHalfPoint() = default;
    UpperHalfPoint(double x, double y);

    std::complex<double> z() const { return {x, y}; }
    static UpperHalfPoint from_z(std::complex<double> z);
};

double hyperbolic_distance(const UpperHalfPoint& p, const UpperHalfPoint& q);

// Point of the ideal boundary R u {inf}.
struct IdealPoint {
    double value = 0.0;
    bool infinite = false;

    static IdealPoint at_infinity() { return {0.0, true}; }
    static IdealPoint at(double v) { return {v, false}; }
    bool operator==(const IdealPoint&) const = default;
};

// Unoriented-carrier data of a geodesic by its ideal endpoints; for axes of
// hyperbolic elements `start` is the repelling and `end` the attracting
// fixed point.
struct BoundaryGeodesic {
    IdealPoint start;
    IdealPoint end;
};

class MobiusTransform {
  public:
    MobiusTransform() = default;  // identity

    // Normalizes to det = 1 and canonical sign. Rejects det <= 0.
    static MobiusTransform from_entries(double a, double b, double c, double d);

    double a() const { return a_; }
    double b() const { return b_; }
    double c() const { return c_; }
    double d() const { return d_; }

    double trace() const { return a_ + d_; }
    MobiusTransform inverse() const;

    static MobiusTransform identity() { return {}; }

  private:
    MobiusTransform(double a, double b, double c, double d)
        : a_(a), b_(b), c_(c), d_(d) {}
    double a_ = 1.0, b_ = 0.0, c_ = 0.0, d_ = 1.0;
};

std::ostream& operator<<(std::ostream& os, const MobiusTransform& m);

struct Pointer {
    UpperHalfPoint base;
    double angle = 0.0;  // reduced to [0, 2pi)

    Pointer() = default;
    Pointer(UpperHalfPoint base, double angle);
};

// Base pointer (i, pi/2) used by both dictionary maps.
Pointer base_pointer();

MobiusTransform compose(const MobiusTransform& f, const MobiusTransform& g);

// Entrywise distance after matching canonical signs.
double matrix_distance(const MobiusTransform& f, const MobiusTransform& g);
bool approx_identity(const MobiusTransform& m, double tol = kGeomTol);

UpperHalfPoint apply(const MobiusTransform& m, const UpperHalfPoint& p);
IdealPoint apply_boundary(const MobiusTransform& m, const IdealPoint& p);

// Base by `apply`, angle shifted by the argument of the complex derivative
// 1/(cz+d)^2.
Pointer apply_pointer(const MobiusTransform& m, const Pointer& pt);

// G_t = diag(e^{t/2}, e^{-t/2}).
MobiusTransform geodesic_flow(double t);

enum class HoroSign { plus, minus };

// H^-_s = (1 0; s 1), H^+_u = (1 u; 0 1).
MobiusTransform horocycle(double s, HoroSign sign);

// Elliptic element fixing p with rotation angle theta; trace 2 cos(theta/2)
// up to sign. rotation_about(i, theta) rotates pointer angles at i by +theta.
MobiusTransform rotation_about(const UpperHalfPoint& p, double theta);

// Isometry taking i to p with positive real derivative (no fiber rotation).
MobiusTransform translation_to(const UpperHalfPoint& p);

// Contravariant dictionary B -> apply_pointer(B^{-1}, base_pointer()) and its
// inverse. Round trips are identities to kGeomTol.
Pointer group_to_pointer(const MobiusTransform& b);
MobiusTransform pointer_to_group(const Pointer& pt);

// Covariant dictionary B -> apply_pointer(B, base_pointer()); this is the
// variant for which the geodesic flow is right multiplication by G_t.
Pointer group_to_pointer_cov(const MobiusTransform& b);
MobiusTransform pointer_to_group_cov(const Pointer& pt);

// Advance the pointer signed distance t along its own geodesic.
Pointer flow_pointer(const Pointer& pt, double t);

}  // namespace geoflow
