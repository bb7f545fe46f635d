#pragma once

#include <string>
#include <vector>

#include "maxarc/plane.hpp"

namespace maxarc {

/// Conic alpha x^2 + xy + beta y^2 + lambda z^2 = 0 in the nucleus-adapted
/// frame: nucleus (0,0,1), line z = 0 external whenever Tr(alpha beta) = 1.
struct Conic {
    Elem alpha, beta, lambda;

    friend bool operator==(const Conic& a, const Conic& b) {
        return a.alpha == b.alpha && a.beta == b.beta && a.lambda == b.lambda;
    }
    friend bool operator!=(const Conic& a, const Conic& b) { return !(a == b); }
};

/// a x^2 + b y^2 + c z^2 + d xy + e yz + f xz = 0 in an arbitrary frame.
struct GeneralConic {
    Elem a, b, c, d, e, f;

    friend bool operator==(const GeneralConic& p, const GeneralConic& q) {
        return p.a == q.a && p.b == q.b && p.c == q.c && p.d == q.d && p.e == q.e && p.f == q.f;
    }
};

/// The family {F_{alpha,beta,lambda} : lambda != 0} on the nucleus (0,0,1).
struct Pencil {
    Elem alpha, beta;
};

bool conic_admissible(const Field& F, const Conic& c);
void require_admissible(const Field& F, const Conic& c);

Point conic_nucleus(const Field& F);

/// The q+1 points of the conic, in canonical plane order.
std::vector<Point> conic_points(const Plane& P, const Conic& c);
std::vector<uint32_t> conic_point_ranks(const Plane& P, const Conic& c);

/// Mathon composition; requires distinct lambda.
Conic compose(const Field& F, const Conic& c, const Conic& d);

/// Tr((alpha (+) alpha')(beta (+) beta')) of the composition.
int composition_trace(const Field& F, const Conic& c, const Conic& d);

/// True iff the two conics (and their composition) are mutually disjoint.
bool trace_disjoint(const Field& F, const Conic& c, const Conic& d);

GeneralConic to_general(const Field& F, const Conic& c);

/// Renormalizes a nucleus-adapted general conic (e = f = 0, d != 0) by its
/// xy coefficient; throws otherwise.
Conic to_conic(const Field& F, const GeneralConic& g);

bool on_conic(const Field& F, const GeneralConic& g, const Point& p);

/// The unique line L with Q_c + t Q_d = (linear form of L)^2 for some t: the
/// rank-1 member of the pencil spanned by two disjoint conics on a common
/// nucleus. Throws when no combination kills all cross terms.
Line infinity_line(const Plane& P, const GeneralConic& c, const GeneralConic& d);

Pencil standard_pencil(const Field& F, Elem alpha);
Pencil pencil_of(const Conic& c);
std::vector<Conic> pencil_conics(const Field& F, const Pencil& p);
Line pencil_infinity_line(const Field& F);

std::string conic_to_string(const Field& F, const Conic& c);

}  // namespace maxarc
