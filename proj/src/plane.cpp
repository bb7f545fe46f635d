#include "maxarc/plane.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace maxarc {

namespace {

uint64_t pack(const Point& p) {
    return (static_cast<uint64_t>(p.x.bits) << 42) | (static_cast<uint64_t>(p.y.bits) << 21) | p.z.bits;
}

}  // namespace

Plane::Plane(const Field& field) : field_(&field) {
    const Field& F = *field_;
    if (F.degree() > 8) throw std::invalid_argument("plane materialization is limited to q <= 256");
    const uint32_t q = F.order();

    points_.reserve(static_cast<std::size_t>(q) * q + q + 1);
    for (uint32_t b = 0; b < q; ++b)
        for (uint32_t c = 0; c < q; ++c) points_.push_back(Point{F.one(), Elem{b}, Elem{c}});
    for (uint32_t c = 0; c < q; ++c) points_.push_back(Point{F.zero(), F.one(), Elem{c}});
    points_.push_back(Point{F.zero(), F.zero(), F.one()});

    std::vector<std::array<uint32_t, 3>> keys(points_.size());
    std::vector<uint32_t> idx(points_.size());
    for (std::size_t i = 0; i < points_.size(); ++i) {
        keys[i] = {F.order_key(points_[i].x), F.order_key(points_[i].y), F.order_key(points_[i].z)};
        idx[i] = static_cast<uint32_t>(i);
    }
    std::sort(idx.begin(), idx.end(), [&](uint32_t a, uint32_t b) { return keys[a] < keys[b]; });
    std::vector<Point> sorted;
    sorted.reserve(points_.size());
    for (uint32_t i : idx) sorted.push_back(points_[i]);
    points_ = std::move(sorted);

    rank_.reserve(points_.size() * 2);
    for (uint32_t r = 0; r < points_.size(); ++r) rank_.emplace(pack(points_[r]), r);

    lines_.reserve(points_.size());
    for (const Point& p : points_) lines_.push_back(Line{p.x, p.y, p.z});

    // Incidence tables, built line by line from a kernel basis of the form.
    points_on_.assign(lines_.size(), {});
    lines_through_.assign(points_.size(), {});
    for (uint32_t lr = 0; lr < lines_.size(); ++lr) {
        const Line& l = lines_[lr];
        // two independent points spanning the line
        Point b1{}, b2{};
        if (l.u.bits != 0) {
            Elem iu = F.inv(l.u);
            b1 = Point{F.mul(l.v, iu), F.one(), F.zero()};  // (v/u, 1, 0)
            b2 = Point{F.mul(l.w, iu), F.zero(), F.one()};  // (w/u, 0, 1)
        } else if (l.v.bits != 0) {
            Elem iv = F.inv(l.v);
            b1 = Point{F.one(), F.zero(), F.zero()};
            b2 = Point{F.zero(), F.mul(l.w, iv), F.one()};
        } else {
            b1 = Point{F.one(), F.zero(), F.zero()};
            b2 = Point{F.zero(), F.one(), F.zero()};
        }
        auto& on = points_on_[lr];
        on.reserve(q + 1);
        on.push_back(point_rank(normalize_point(b2.x, b2.y, b2.z)));
        for (uint32_t t = 0; t < q; ++t) {
            Elem te{t};
            Point p = normalize_point(F.add(b1.x, F.mul(te, b2.x)), F.add(b1.y, F.mul(te, b2.y)),
                                      F.add(b1.z, F.mul(te, b2.z)));
            on.push_back(point_rank(p));
        }
        std::sort(on.begin(), on.end());
        for (uint32_t pr : on) lines_through_[pr].push_back(lr);
    }
}

Point normalized_point(const Field& F, Elem a, Elem b, Elem c) {
    Elem lead = a.bits ? a : (b.bits ? b : c);
    if (lead.bits == 0) throw std::invalid_argument("(0,0,0) is not a projective point");
    Elem i = F.inv(lead);
    return Point{F.mul(a, i), F.mul(b, i), F.mul(c, i)};
}

Line normalized_line(const Field& F, Elem u, Elem v, Elem w) {
    Point p = normalized_point(F, u, v, w);
    return Line{p.x, p.y, p.z};
}

Point Plane::normalize_point(Elem a, Elem b, Elem c) const {
    return normalized_point(*field_, a, b, c);
}

Line Plane::normalize_line(Elem u, Elem v, Elem w) const {
    return normalized_line(*field_, u, v, w);
}

bool Plane::incident(const Point& p, const Line& l) const {
    const Field& F = *field_;
    Elem s = F.add(F.add(F.mul(p.x, l.u), F.mul(p.y, l.v)), F.mul(p.z, l.w));
    return s.bits == 0;
}

Line Plane::join(const Point& a, const Point& b) const {
    const Field& F = *field_;
    Elem u = F.add(F.mul(a.y, b.z), F.mul(a.z, b.y));
    Elem v = F.add(F.mul(a.z, b.x), F.mul(a.x, b.z));
    Elem w = F.add(F.mul(a.x, b.y), F.mul(a.y, b.x));
    return normalize_line(u, v, w);
}

Point Plane::meet(const Line& a, const Line& b) const {
    const Field& F = *field_;
    Elem x = F.add(F.mul(a.v, b.w), F.mul(a.w, b.v));
    Elem y = F.add(F.mul(a.w, b.u), F.mul(a.u, b.w));
    Elem z = F.add(F.mul(a.u, b.v), F.mul(a.v, b.u));
    return normalize_point(x, y, z);
}

uint32_t Plane::point_rank(const Point& p) const {
    auto it = rank_.find(pack(p));
    if (it == rank_.end()) throw std::invalid_argument("point is not normalized or not in this plane");
    return it->second;
}

uint32_t Plane::line_rank(const Line& l) const {
    auto it = rank_.find(pack(Point{l.u, l.v, l.w}));
    if (it == rank_.end()) throw std::invalid_argument("line is not normalized or not in this plane");
    return it->second;
}

std::vector<Point> Plane::points_on_line(const Line& l) const {
    std::vector<Point> out;
    for (uint32_t pr : points_on_[line_rank(l)]) out.push_back(points_[pr]);
    return out;
}

std::vector<Line> Plane::lines_through_point(const Point& p) const {
    std::vector<Line> out;
    for (uint32_t lr : lines_through_[point_rank(p)]) out.push_back(lines_[lr]);
    return out;
}

std::string Plane::to_string(const Point& p) const {
    const Field& F = *field_;
    return "(" + F.to_string(p.x) + " : " + F.to_string(p.y) + " : " + F.to_string(p.z) + ")";
}

std::string Plane::to_string(const Line& l) const {
    const Field& F = *field_;
    return "[" + F.to_string(l.u) + " : " + F.to_string(l.v) + " : " + F.to_string(l.w) + "]";
}

}  // namespace maxarc
