#pragma once

// Exact integer calculus for the Seifert data of unit tangent bundles of
// (n,k) orbifolds: the two singular-torus invariants, the one-parameter
// family of boundary gluings, the lens spaces they produce, the Euler
// number, and the homology coordinates of the three boundary curves of the
// crossing section.
//
// Curve coordinates are column vectors (longitude, meridian) on the named
// boundary torus, so a longitude is (1,0) and a regular fiber of the (k,1)
// torus is (k,1). GluingMatrix values act on these columns.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace geoflow {

struct SeifertInvariants {
    bool orientable_total = true;  // O
    bool orientable_base = true;   // o
    long long genus = 0;
    std::optional<long long> euler;  // undetermined for open bundles
    std::vector<std::pair<long long, long long>> singular;  // (mu, nu), gcd 1, 0 <= nu <= mu/2
};

// {O, o, 0 | . ; (k,1), (n,1)}: genus-0 base, undetermined Euler number,
// singular fibers of orders k and n.
SeifertInvariants ut_invariants(long long n, long long k);

enum class CurveBasis { meridian_longitude, crossing_fiber };

struct CurveClass {
    CurveBasis basis = CurveBasis::meridian_longitude;
    long long coeffs[2] = {0, 0};  // (longitude, meridian) or (crossing, fiber)

    CurveClass() = default;
    CurveClass(CurveBasis basis, long long c0, long long c1);
    bool operator==(const CurveClass&) const = default;
};

class GluingMatrix {
  public:
    // Entries (m00 m01; m10 m11); determinant must be exactly -1.
    GluingMatrix(long long m00, long long m01, long long m10, long long m11);

    long long at(int r, int c) const { return e_[r][c]; }
    long long det() const { return e_[0][0] * e_[1][1] - e_[0][1] * e_[1][0]; }
    CurveClass apply(const CurveClass& v) const;

  private:
    long long e_[2][2];
};

// M_{n,k,c} = (kc-1, n+k-nkc; c, 1-nc): the orientation-reversing boundary
// identifications gluing an (n,1) curve to a (k,1) curve.
GluingMatrix gluing_matrix(long long n, long long k, long long c);

enum class LensKind { S3, S2xS1, lens };

struct LensSpace {
    LensKind kind = LensKind::lens;
    long long p = 0;
    long long q = 0;
    std::string canonical_name() const;
    bool operator==(const LensSpace&) const = default;
};

// Canonical form of L(p,q): sign of p dropped, q reduced mod p and then
// minimized over the homeomorphism moves q -> -q, q -> q^{-1} (mod p).
// |p| = 1 names S3, p = 0 (with q = +-1) names S2 x S1; any other p = 0
// input is rejected as not a lens presentation, as is gcd(p,q) > 1.
LensSpace normalize_lens(long long p, long long q);

// Homeomorphism predicate on raw (p,q) pairs via the +-q^{+-1} rule,
// evaluated by brute force over residues (independent of normalize_lens).
bool lens_equivalent(long long p1, long long q1, long long p2, long long q2);

// L(n+k-nkc, 1-nc), normalized.
LensSpace lens_from_embedding(long long n, long long k, long long c);

struct EmbeddingWitness {
    bool exists = false;
    long long c = 0;  // witness when exists
};

// Whether some gluing lands in S3, i.e. n+k-nkc = +-1 has an integer
// solution. For n = 2 and odd k >= 3 this holds only at k = 3.
EmbeddingWitness s3_embedding_exists(long long n, long long k);

// Euler number b of the closed manifold vs the gluing parameter: b = c - 1.
long long euler_from_c(long long c);
long long c_from_euler(long long b);

struct BoundaryCurves {
    CurveClass alpha;  // on the (2,1)-torus boundary
    CurveClass beta;   // on the (k,1)-torus boundary
    CurveClass gamma;  // on the cusp torus; longitude there is a fiber
};

// alpha' = (-1,-1), beta' = (1,0), gamma' = meridian + b longitudes.
// The (-1,0) alternative for alpha' is ruled out because only (-1,-1)
// decomposes as -beta' + (c-1) f under every gluing in the family.
BoundaryCurves boundary_curves(long long k, long long b);

}  // namespace geoflow
