#pragma once

#include <array>
#include <vector>

#include "maxarc/conic.hpp"
#include "maxarc/plane.hpp"

namespace maxarc {

struct Mat3 {
    std::array<std::array<Elem, 3>, 3> m{};

    friend bool operator==(const Mat3& a, const Mat3& b) { return a.m == b.m; }
};

Mat3 mat_identity(const Field& F);
Mat3 mat_mul(const Field& F, const Mat3& a, const Mat3& b);
Mat3 mat_inverse(const Field& F, const Mat3& a);
Mat3 mat_frobenius(const Field& F, const Mat3& a, int l);
Elem mat_det(const Field& F, const Mat3& a);

/// Semilinear collineation p -> mat * p^(2^frob).
struct Collineation {
    Mat3 mat;
    int frob = 0;
};

Collineation identity_collineation(const Field& F);
Collineation compose(const Field& F, const Collineation& g1, const Collineation& g2);
Collineation inverse(const Field& F, const Collineation& g);

Point apply(const Field& F, const Collineation& g, const Point& p);
Line apply(const Field& F, const Collineation& g, const Line& l);
GeneralConic apply(const Field& F, const Collineation& g, const GeneralConic& q);
GeneralConic apply(const Field& F, const Collineation& g, const Conic& c);

/// Image as a nucleus-adapted conic; throws if the frame is not preserved.
Conic apply_conic(const Field& F, const Collineation& g, const Conic& c);

/// The collineation with matrix rows (m,0,0), (t,m,0), (sqrt(mt+t^2),0,1),
/// m = sqrt(lambda)^(-sigma), composed with the Frobenius x -> x^(2^sigma_exp).
/// Fixes (0,0,1) and (0,1,0) and maps the pencil conic C_lambda onto C_1; as
/// (t, sigma) range over GF(q) x Aut these are all such collineations.
Collineation theta_family(const Field& F, Elem lambda, Elem t, int sigma_exp);

/// The elation with the given center on the given axis: p -> p + mu*(axis.p)*center.
Collineation elation(const Field& F, const Point& center, const Line& axis, Elem mu);

/// Collineation mapping four points in general position onto four others.
Collineation frame_map(const Field& F, const std::array<Point, 4>& src, const std::array<Point, 4>& dst);

/// Solves u^2 + u = c; throws when Tr(c) = 1. Returns the root with the
/// smaller canonical key.
Elem solve_artin_schreier(const Field& F, Elem c);

/// A collineation of shape ((a,0,0),(b,c,0),(0,0,1)) mapping the given conic
/// onto C_1 = F_{1,1,1}; fixes (0,0,1), (0,1,0) and the line z = 0.
Collineation conic_to_c1_map(const Field& F, const Conic& c);

/// A collineation sending the given nucleus to (0,0,1) and the given line to
/// z = 0; conics on that nucleus to which the line is external become
/// admissible members of the standard family in the image frame.
Collineation frame_to_adapted(const Plane& P, const Point& nucleus, const Line& external);

/// Full stabilizer of (C_1, line x=0, line z=0): the theta maps with
/// lambda = 1, t in {0,1} and arbitrary Frobenius; order 2h.
std::vector<Collineation> configuration_stabilizer(const Field& F);

/// Orbits of 2-dimensional GF(2)-subspaces of GF(q) under x -> a x^(2^l).
struct SubspaceOrbit {
    std::array<Elem, 3> representative;  // the nonzero elements, sorted by bits
    uint64_t size = 0;
};
struct SubspaceOrbits {
    uint64_t subspace_count = 0;
    std::vector<SubspaceOrbit> orbits;
};
SubspaceOrbits field_group_orbits(const Field& F);

/// Canonical key of the orbit of span{a,b} under x -> a x^(2^l); equal keys
/// iff the subspaces are equivalent.
uint64_t subspace_orbit_key(const Field& F, Elem a, Elem b);

/// Size of the stabilizer of A = {0,a,b,a+b} in G = {x -> c x^sigma},
/// sigma ranging over Aut GF(q^2); the subfield-trivial Frobenius doubles
/// every count, so the result is twice the number of stabilizing maps
/// x -> c x^(2^l), 0 <= l < h.
uint64_t subgroup_stabilizer_order(const Field& F, Elem a, Elem b);

}  // namespace maxarc
