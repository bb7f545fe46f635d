#include "maxarc/collineation.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace maxarc {

Mat3 mat_identity(const Field& F) {
    Mat3 r;
    r.m[0][0] = r.m[1][1] = r.m[2][2] = F.one();
    return r;
}

Mat3 mat_mul(const Field& F, const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Elem s{0};
            for (int k = 0; k < 3; ++k) s = F.add(s, F.mul(a.m[i][k], b.m[k][j]));
            r.m[i][j] = s;
        }
    return r;
}

Elem mat_det(const Field& F, const Mat3& a) {
    Elem det{0};
    for (int j = 0; j < 3; ++j) {
        int j1 = (j + 1) % 3, j2 = (j + 2) % 3;
        Elem minor = F.add(F.mul(a.m[1][j1], a.m[2][j2]), F.mul(a.m[1][j2], a.m[2][j1]));
        det = F.add(det, F.mul(a.m[0][j], minor));
    }
    return det;
}

Mat3 mat_inverse(const Field& F, const Mat3& a) {
    Mat3 adj;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            int r0 = (i + 1) % 3, r1 = (i + 2) % 3, c0 = (j + 1) % 3, c1 = (j + 2) % 3;
            adj.m[j][i] = F.add(F.mul(a.m[r0][c0], a.m[r1][c1]), F.mul(a.m[r0][c1], a.m[r1][c0]));
        }
    Elem det = mat_det(F, a);
    if (det.bits == 0) throw std::invalid_argument("matrix is singular");
    Elem di = F.inv(det);
    for (auto& row : adj.m)
        for (auto& v : row) v = F.mul(v, di);
    return adj;
}

Mat3 mat_frobenius(const Field& F, const Mat3& a, int l) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r.m[i][j] = F.frobenius(a.m[i][j], l);
    return r;
}

Collineation identity_collineation(const Field& F) { return Collineation{mat_identity(F), 0}; }

Collineation compose(const Field& F, const Collineation& g1, const Collineation& g2) {
    return Collineation{mat_mul(F, g1.mat, mat_frobenius(F, g2.mat, g1.frob)),
                        (g1.frob + g2.frob) % F.degree()};
}

Collineation inverse(const Field& F, const Collineation& g) {
    int k = (F.degree() - g.frob) % F.degree();
    return Collineation{mat_frobenius(F, mat_inverse(F, g.mat), k), k};
}

Point apply(const Field& F, const Collineation& g, const Point& p) {
    Elem v[3] = {F.frobenius(p.x, g.frob), F.frobenius(p.y, g.frob), F.frobenius(p.z, g.frob)};
    Elem r[3];
    for (int i = 0; i < 3; ++i) {
        Elem s{0};
        for (int k = 0; k < 3; ++k) s = F.add(s, F.mul(g.mat.m[i][k], v[k]));
        r[i] = s;
    }
    return normalized_point(F, r[0], r[1], r[2]);
}

Line apply(const Field& F, const Collineation& g, const Line& l) {
    Mat3 mt = mat_inverse(F, g.mat);
    Elem v[3] = {F.frobenius(l.u, g.frob), F.frobenius(l.v, g.frob), F.frobenius(l.w, g.frob)};
    Elem r[3];
    for (int i = 0; i < 3; ++i) {
        Elem s{0};
        for (int k = 0; k < 3; ++k) s = F.add(s, F.mul(mt.m[k][i], v[k]));  // (M^-1)^T
        r[i] = s;
    }
    return normalized_line(F, r[0], r[1], r[2]);
}

GeneralConic apply(const Field& F, const Collineation& g, const GeneralConic& q) {
    // Congruence (M^-1)^T Q^sigma M^-1, then fold the symmetric part back
    // into the upper-triangular coefficient convention.
    Mat3 Q;
    Q.m[0][0] = F.frobenius(q.a, g.frob);
    Q.m[1][1] = F.frobenius(q.b, g.frob);
    Q.m[2][2] = F.frobenius(q.c, g.frob);
    Q.m[0][1] = F.frobenius(q.d, g.frob);
    Q.m[1][2] = F.frobenius(q.e, g.frob);
    Q.m[0][2] = F.frobenius(q.f, g.frob);
    Mat3 mi = mat_inverse(F, g.mat);
    Mat3 mit;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) mit.m[i][j] = mi.m[j][i];
    Mat3 B = mat_mul(F, mat_mul(F, mit, Q), mi);
    GeneralConic r;
    r.a = B.m[0][0];
    r.b = B.m[1][1];
    r.c = B.m[2][2];
    r.d = F.add(B.m[0][1], B.m[1][0]);
    r.e = F.add(B.m[1][2], B.m[2][1]);
    r.f = F.add(B.m[0][2], B.m[2][0]);
    return r;
}

GeneralConic apply(const Field& F, const Collineation& g, const Conic& c) {
    return apply(F, g, to_general(F, c));
}

Conic apply_conic(const Field& F, const Collineation& g, const Conic& c) {
    return to_conic(F, apply(F, g, c));
}

Collineation theta_family(const Field& F, Elem lambda, Elem t, int sigma_exp) {
    if (lambda.bits == 0) throw std::invalid_argument("theta map needs lambda != 0");
    Elem m = F.inv(F.frobenius(F.sqrt(lambda), sigma_exp));
    Elem s = F.sqrt(F.add(F.mul(m, t), F.square(t)));
    Mat3 M;
    M.m[0][0] = m;
    M.m[1][0] = t;
    M.m[1][1] = m;
    M.m[2][0] = s;
    M.m[2][2] = F.one();
    return Collineation{M, ((sigma_exp % F.degree()) + F.degree()) % F.degree()};
}

Collineation elation(const Field& F, const Point& center, const Line& axis, Elem mu) {
    Elem c[3] = {center.x, center.y, center.z};
    Elem u[3] = {axis.u, axis.v, axis.w};
    Elem dot = F.add(F.add(F.mul(c[0], u[0]), F.mul(c[1], u[1])), F.mul(c[2], u[2]));
    if (dot.bits != 0) throw std::invalid_argument("elation center must lie on the axis");
    Mat3 M = mat_identity(F);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) M.m[i][j] = F.add(M.m[i][j], F.mul(F.mul(mu, c[i]), u[j]));
    return Collineation{M, 0};
}

namespace {

// Columns of the matrix sending the standard frame e1,e2,e3,(1,1,1) to the
// given four points: scale each point column so their sum hits the fourth.
Mat3 frame_matrix(const Field& F, const std::array<Point, 4>& pts) {
    Mat3 base;
    for (int j = 0; j < 3; ++j) {
        base.m[0][j] = pts[j].x;
        base.m[1][j] = pts[j].y;
        base.m[2][j] = pts[j].z;
    }
    Mat3 inv = mat_inverse(F, base);
    Elem v[3] = {pts[3].x, pts[3].y, pts[3].z};
    Elem coef[3];
    for (int i = 0; i < 3; ++i) {
        Elem s{0};
        for (int k = 0; k < 3; ++k) s = F.add(s, F.mul(inv.m[i][k], v[k]));
        coef[i] = s;
    }
    for (int j = 0; j < 3; ++j) {
        if (coef[j].bits == 0) throw std::invalid_argument("frame points are not in general position");
        for (int i = 0; i < 3; ++i) base.m[i][j] = F.mul(base.m[i][j], coef[j]);
    }
    return base;
}

}  // namespace

Collineation frame_map(const Field& F, const std::array<Point, 4>& src, const std::array<Point, 4>& dst) {
    Mat3 ms = frame_matrix(F, src);
    Mat3 md = frame_matrix(F, dst);
    return Collineation{mat_mul(F, md, mat_inverse(F, ms)), 0};
}

Elem solve_artin_schreier(const Field& F, Elem c) {
    if (F.trace(c) != 0) throw std::invalid_argument("Tr(c) = 1: u^2 + u = c has no solution");
    for (uint32_t u = 0; u < F.order(); ++u) {
        Elem e{u};
        if (F.add(F.square(e), e) == c) {
            Elem other = F.add(e, F.one());
            return F.order_key(e) <= F.order_key(other) ? e : other;
        }
    }
    throw std::logic_error("unreachable: Artin-Schreier equation with Tr = 0 has roots");
}

Collineation conic_to_c1_map(const Field& F, const Conic& conic) {
    require_admissible(F, conic);
    // Shape ((a,0,0),(b,c,0),(0,0,1)) sends F_{alpha,beta,lambda} to
    // F_{(alpha c + b + beta b^2/c)/a, beta a / c, lambda a c}; solving for
    // the image (1,1,1) leaves a quadratic in b that the trace condition
    // makes solvable.
    Elem alpha = conic.alpha, beta = conic.beta, lambda = conic.lambda;
    Elem c = F.sqrt(F.mul(beta, F.inv(lambda)));
    Elem a = F.mul(c, F.inv(beta));
    Elem p = a;  // coefficient of b in b^2 + p b + r = 0
    Elem r = F.mul(F.mul(c, F.add(F.mul(alpha, c), a)), F.inv(beta));
    Elem u = solve_artin_schreier(F, F.mul(r, F.inv(F.square(p))));
    Elem b = F.mul(p, u);
    Mat3 M;
    M.m[0][0] = a;
    M.m[1][0] = b;
    M.m[1][1] = c;
    M.m[2][2] = F.one();
    Collineation g{M, 0};
    if (!(apply_conic(F, g, conic) == Conic{F.one(), F.one(), F.one()}))
        throw std::logic_error("conic normalization failed to reach C_1");
    return g;
}

Collineation frame_to_adapted(const Plane& P, const Point& nucleus, const Line& external) {
    const Field& F = P.field();
    if (P.incident(nucleus, external))
        throw std::invalid_argument("nucleus may not lie on the external line");
    auto on_line = P.points_on(P.line_rank(external));
    Point p1 = P.point_at(on_line[0]);
    Point p2 = P.point_at(on_line[1]);
    Line n1 = P.join(nucleus, p1);
    Line n2 = P.join(nucleus, p2);
    Point p4{};
    bool found = false;
    for (uint32_t pr = 0; pr < P.point_count() && !found; ++pr) {
        Point cand = P.point_at(pr);
        if (P.incident(cand, external) || P.incident(cand, n1) || P.incident(cand, n2)) continue;
        p4 = cand;
        found = true;
    }
    if (!found) throw std::logic_error("no fourth frame point found");
    std::array<Point, 4> src{p1, p2, nucleus, p4};
    std::array<Point, 4> dst{Point{F.one(), F.zero(), F.zero()}, Point{F.zero(), F.one(), F.zero()},
                             Point{F.zero(), F.zero(), F.one()}, Point{F.one(), F.one(), F.one()}};
    return frame_map(F, src, dst);
}

std::vector<Collineation> configuration_stabilizer(const Field& F) {
    std::vector<Collineation> out;
    out.reserve(2 * F.degree());
    for (int l = 0; l < F.degree(); ++l) {
        out.push_back(theta_family(F, F.one(), F.zero(), l));
        out.push_back(theta_family(F, F.one(), F.one(), l));
    }
    return out;
}

namespace {

uint64_t subspace_key(Elem a, Elem b, Elem c) {
    uint32_t v[3] = {a.bits, b.bits, c.bits};
    std::sort(v, v + 3);
    return (static_cast<uint64_t>(v[0]) << 42) | (static_cast<uint64_t>(v[1]) << 21) | v[2];
}

}  // namespace

uint64_t subspace_orbit_key(const Field& F, Elem a, Elem b) {
    if (a.bits == 0 || b.bits == 0 || a == b) throw std::invalid_argument("need two independent elements");
    uint64_t best = ~0ull;
    for (int l = 0; l < F.degree(); ++l) {
        Elem af = F.frobenius(a, l), bf = F.frobenius(b, l);
        for (uint32_t cb = 1; cb < F.order(); ++cb) {
            Elem c{cb};
            Elem ia = F.mul(c, af), ib = F.mul(c, bf);
            best = std::min(best, subspace_key(ia, ib, F.add(ia, ib)));
        }
    }
    return best;
}

SubspaceOrbits field_group_orbits(const Field& F) {
    const uint32_t q = F.order();
    SubspaceOrbits result;
    std::unordered_set<uint64_t> seen;
    for (uint32_t ab = 1; ab < q; ++ab)
        for (uint32_t bb = ab + 1; bb < q; ++bb) {
            uint32_t cb = ab ^ bb;
            if (cb < bb) continue;  // each subspace once: a < b < a+b
            ++result.subspace_count;
            uint64_t key = subspace_key(Elem{ab}, Elem{bb}, Elem{cb});
            if (seen.count(key)) continue;
            // new orbit: sweep the whole group
            std::unordered_set<uint64_t> orbit;
            for (int l = 0; l < F.degree(); ++l) {
                Elem af = F.frobenius(Elem{ab}, l), bf = F.frobenius(Elem{bb}, l);
                for (uint32_t s = 1; s < q; ++s) {
                    Elem ia = F.mul(Elem{s}, af), ib = F.mul(Elem{s}, bf);
                    orbit.insert(subspace_key(ia, ib, F.add(ia, ib)));
                }
            }
            for (uint64_t k : orbit) seen.insert(k);
            result.orbits.push_back(
                SubspaceOrbit{{Elem{ab}, Elem{bb}, Elem{cb}}, static_cast<uint64_t>(orbit.size())});
        }
    std::sort(result.orbits.begin(), result.orbits.end(), [](const SubspaceOrbit& x, const SubspaceOrbit& y) {
        return subspace_key(x.representative[0], x.representative[1], x.representative[2]) <
               subspace_key(y.representative[0], y.representative[1], y.representative[2]);
    });
    return result;
}

uint64_t subgroup_stabilizer_order(const Field& F, Elem a, Elem b) {
    Elem c = F.add(a, b);
    uint64_t target = subspace_key(a, b, c);
    uint64_t fixed = 0;
    for (int l = 0; l < F.degree(); ++l) {
        Elem af = F.frobenius(a, l), bf = F.frobenius(b, l);
        for (uint32_t s = 1; s < F.order(); ++s) {
            Elem ia = F.mul(Elem{s}, af), ib = F.mul(Elem{s}, bf);
            if (subspace_key(ia, ib, F.add(ia, ib)) == target) ++fixed;
        }
    }
    return 2 * fixed;  // sigma ranges over Aut GF(q^2): each subfield map counted twice
}

}  // namespace maxarc
