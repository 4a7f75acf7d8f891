#include "geoflow/seifert.hpp"

#include <numeric>
#include <stdexcept>

namespace geoflow {

SeifertInvariants ut_invariants(long long n, long long k) {
    if (n < 2 || k < 2) throw std::invalid_argument("ut_invariants: need n, k >= 2");
    SeifertInvariants inv;
    inv.singular = {{k, 1}, {n, 1}};
    for (auto& [mu, nu] : inv.singular) {
        if (std::gcd(mu, nu) != 1 || nu < 0 || 2 * nu > mu)
            throw std::logic_error("ut_invariants: singular pair not normalized");
    }
    return inv;
}

CurveClass::CurveClass(CurveBasis basis, long long c0, long long c1)
    : basis(basis), coeffs{c0, c1} {
    if (c0 == 0 && c1 == 0)
        throw std::invalid_argument("CurveClass: coefficients must not both vanish");
}

GluingMatrix::GluingMatrix(long long m00, long long m01, long long m10, long long m11)
    : e_{{m00, m01}, {m10, m11}} {
    if (det() != -1) throw std::invalid_argument("GluingMatrix: determinant must be -1");
}

CurveClass GluingMatrix::apply(const CurveClass& v) const {
    return {v.basis, e_[0][0] * v.coeffs[0] + e_[0][1] * v.coeffs[1],
            e_[1][0] * v.coeffs[0] + e_[1][1] * v.coeffs[1]};
}

GluingMatrix gluing_matrix(long long n, long long k, long long c) {
    return {k * c - 1, n + k - n * k * c, c, 1 - n * c};
}

std::string LensSpace::canonical_name() const {
    switch (kind) {
        case LensKind::S3: return "S3";
        case LensKind::S2xS1: return "S2xS1";
        case LensKind::lens: break;
    }
    return "L(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

namespace {

long long mod(long long a, long long m) {
    long long r = a % m;
    return r < 0 ? r + m : r;
}

// Inverse of q mod p for gcd(q,p) = 1, p >= 2.
long long mod_inverse(long long q, long long p) {
    long long t = 0, new_t = 1, r = p, new_r = mod(q, p);
    while (new_r != 0) {
        const long long quot = r / new_r;
        t = std::exchange(new_t, t - quot * new_t);
        r = std::exchange(new_r, r - quot * new_r);
    }
    return mod(t, p);
}

}  // namespace

LensSpace normalize_lens(long long p, long long q) {
    if (p < 0) p = -p;  // L(p,q) = L(-p,q)
    if (p == 0) {
        if (q != 1 && q != -1)
            throw std::invalid_argument("normalize_lens: L(0,q) needs q = +-1");
        return {LensKind::S2xS1, 0, 1};
    }
    if (p == 1) return {LensKind::S3, 1, 0};
    const long long q0 = mod(q, p);
    if (std::gcd(q0, p) != 1)
        throw std::invalid_argument("normalize_lens: p and q must be coprime");
    const long long qi = mod_inverse(q0, p);
    long long best = q0;
    for (long long cand : {p - q0, qi, p - qi}) best = std::min(best, mod(cand, p));
    return {LensKind::lens, p, best};
}

bool lens_equivalent(long long p1, long long q1, long long p2, long long q2) {
    if (p1 < 0) p1 = -p1;
    if (p2 < 0) p2 = -p2;
    if (p1 != p2) return false;
    if (p1 == 0) return (q1 == 1 || q1 == -1) && (q2 == 1 || q2 == -1);
    if (p1 == 1) return true;
    const long long a = mod(q1, p1), b = mod(q2, p1);
    if (std::gcd(a, p1) != 1 || std::gcd(b, p1) != 1) return false;
    if (b == a || b == mod(-a, p1)) return true;
    // b = +-a^{-1}: scan residues rather than invert.
    for (long long x = 0; x < p1; ++x)
        if (mod(a * x, p1) == 1) return b == x || b == mod(-x, p1);
    return false;
}

LensSpace lens_from_embedding(long long n, long long k, long long c) {
    return normalize_lens(n + k - n * k * c, 1 - n * c);
}

EmbeddingWitness s3_embedding_exists(long long n, long long k) {
    if (n < 2 || k < 2) throw std::invalid_argument("s3_embedding_exists: need n, k >= 2");
    // n+k-nkc = +-1  <=>  nk divides n+k-+1.
    for (long long target : {1LL, -1LL}) {
        const long long num = n + k - target;
        if (num % (n * k) == 0) return {true, num / (n * k)};
    }
    return {false, 0};
}

long long euler_from_c(long long c) { return c - 1; }
long long c_from_euler(long long b) { return b + 1; }

BoundaryCurves boundary_curves(long long k, long long b) {
    if (k < 3 || k % 2 == 0)
        throw std::invalid_argument("boundary_curves: k must be odd and >= 3");
    BoundaryCurves out;
    out.alpha = {CurveBasis::meridian_longitude, -1, -1};
    out.beta = {CurveBasis::meridian_longitude, 1, 0};
    out.gamma = {CurveBasis::meridian_longitude, b, 1};
    return out;
}

}  // namespace geoflow
