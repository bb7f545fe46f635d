#include "maxarc/conic.hpp"

#include <algorithm>
#include <stdexcept>

namespace maxarc {

bool conic_admissible(const Field& F, const Conic& c) {
    return c.lambda.bits != 0 && F.trace(F.mul(c.alpha, c.beta)) == 1;
}

void require_admissible(const Field& F, const Conic& c) {
    if (c.lambda.bits == 0) throw std::invalid_argument("lambda = 0 denotes the nucleus, not a conic");
    if (F.trace(F.mul(c.alpha, c.beta)) != 1)
        throw std::invalid_argument("conic violates the trace condition Tr(alpha beta) = 1");
}

Point conic_nucleus(const Field& F) { return Point{F.zero(), F.zero(), F.one()}; }

std::vector<uint32_t> conic_point_ranks(const Plane& P, const Conic& c) {
    const Field& F = P.field();
    if (c.lambda.bits == 0) throw std::invalid_argument("lambda = 0 denotes the nucleus, not a conic");
    std::vector<uint32_t> out;
    out.reserve(P.q() + 1);
    Elem il = F.inv(c.lambda);
    for (uint32_t yb = 0; yb < P.q(); ++yb) {
        Elem y{yb};
        // x = 1: z^2 = (alpha + y + beta y^2) / lambda, one root in char 2
        Elem rhs = F.add(F.add(c.alpha, y), F.mul(c.beta, F.square(y)));
        Elem z = F.sqrt(F.mul(rhs, il));
        out.push_back(P.point_rank(Point{F.one(), y, z}));
    }
    // x = 0: beta y^2 + lambda z^2 = 0
    if (c.beta.bits != 0) {
        Elem y0 = F.sqrt(F.mul(c.lambda, F.inv(c.beta)));
        out.push_back(P.point_rank(P.normalize_point(F.zero(), y0, F.one())));
    } else {
        out.push_back(P.point_rank(Point{F.zero(), F.one(), F.zero()}));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Point> conic_points(const Plane& P, const Conic& c) {
    std::vector<Point> pts;
    for (uint32_t r : conic_point_ranks(P, c)) pts.push_back(P.point_at(r));
    return pts;
}

Conic compose(const Field& F, const Conic& c, const Conic& d) {
    if (c.lambda == d.lambda) throw std::invalid_argument("composition undefined for equal lambda");
    Elem sum = F.add(c.lambda, d.lambda);
    Elem isum = F.inv(sum);
    Elem alpha = F.mul(F.add(F.mul(c.alpha, c.lambda), F.mul(d.alpha, d.lambda)), isum);
    Elem beta = F.mul(F.add(F.mul(c.beta, c.lambda), F.mul(d.beta, d.lambda)), isum);
    return Conic{alpha, beta, sum};
}

int composition_trace(const Field& F, const Conic& c, const Conic& d) {
    Conic e = compose(F, c, d);
    return F.trace(F.mul(e.alpha, e.beta));
}

bool trace_disjoint(const Field& F, const Conic& c, const Conic& d) {
    return composition_trace(F, c, d) == 1;
}

GeneralConic to_general(const Field& F, const Conic& c) {
    return GeneralConic{c.alpha, c.beta, c.lambda, F.one(), F.zero(), F.zero()};
}

Conic to_conic(const Field& F, const GeneralConic& g) {
    if (g.e.bits != 0 || g.f.bits != 0)
        throw std::invalid_argument("general conic is not adapted to the nucleus (0,0,1)");
    if (g.d.bits == 0) throw std::invalid_argument("degenerate quadric: xy coefficient vanishes");
    Elem id = F.inv(g.d);
    return Conic{F.mul(g.a, id), F.mul(g.b, id), F.mul(g.c, id)};
}

bool on_conic(const Field& F, const GeneralConic& g, const Point& p) {
    Elem v = F.add(F.add(F.mul(g.a, F.square(p.x)), F.mul(g.b, F.square(p.y))),
                   F.mul(g.c, F.square(p.z)));
    v = F.add(v, F.mul(g.d, F.mul(p.x, p.y)));
    v = F.add(v, F.mul(g.e, F.mul(p.y, p.z)));
    v = F.add(v, F.mul(g.f, F.mul(p.x, p.z)));
    return v.bits == 0;
}

Line infinity_line(const Plane& P, const GeneralConic& c, const GeneralConic& d) {
    const Field& F = P.field();
    // Find t with all three cross terms of Q_c + t Q_d vanishing.
    bool have = false;
    Elem t{0};
    const Elem cs[3] = {c.d, c.e, c.f};
    const Elem ds[3] = {d.d, d.e, d.f};
    for (int i = 0; i < 3; ++i) {
        if (ds[i].bits == 0) {
            if (cs[i].bits != 0)
                throw std::invalid_argument("conics do not span a rank-1 member (no common nucleus)");
            continue;
        }
        Elem cand = F.mul(cs[i], F.inv(ds[i]));
        if (have && cand != t)
            throw std::invalid_argument("conics do not span a rank-1 member (no common nucleus)");
        t = cand;
        have = true;
    }
    if (!have) throw std::invalid_argument("both conics are already cross-term free in every slot");
    Elem a = F.add(c.a, F.mul(t, d.a));
    Elem b = F.add(c.b, F.mul(t, d.b));
    Elem cc = F.add(c.c, F.mul(t, d.c));
    if (a.bits == 0 && b.bits == 0 && cc.bits == 0)
        throw std::invalid_argument("pencil member degenerates to zero, inputs are equal quadrics");
    return P.normalize_line(F.sqrt(a), F.sqrt(b), F.sqrt(cc));
}

Pencil standard_pencil(const Field& F, Elem alpha) {
    if (F.trace(alpha) != 1) throw std::invalid_argument("standard pencil requires Tr(alpha) = 1");
    return Pencil{alpha, F.one()};
}

Pencil pencil_of(const Conic& c) { return Pencil{c.alpha, c.beta}; }

std::vector<Conic> pencil_conics(const Field& F, const Pencil& p) {
    std::vector<Conic> out;
    out.reserve(F.order() - 1);
    for (uint32_t l = 1; l < F.order(); ++l) out.push_back(Conic{p.alpha, p.beta, Elem{l}});
    return out;
}

Line pencil_infinity_line(const Field& F) { return Line{F.zero(), F.zero(), F.one()}; }

std::string conic_to_string(const Field& F, const Conic& c) {
    return "alpha=" + F.to_string(c.alpha) + " beta=" + F.to_string(c.beta) +
           " lambda=" + F.to_string(c.lambda);
}

}  // namespace maxarc
