#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "maxarc/gf2.hpp"

namespace maxarc {

/// Point of PG(2,q), normalized so the first nonzero coordinate is 1.
struct Point {
    Elem x, y, z;

    friend bool operator==(const Point& a, const Point& b) {
        return a.x == b.x && a.y == b.y && a.z == b.z;
    }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
};

/// Line [u : v : w]; a point lies on it iff xu + yv + zw = 0. Same
/// normalization as points, so the coordinate model is self-dual.
struct Line {
    Elem u, v, w;

    friend bool operator==(const Line& a, const Line& b) {
        return a.u == b.u && a.v == b.v && a.w == b.w;
    }
    friend bool operator!=(const Line& a, const Line& b) { return !(a == b); }
};

Point normalized_point(const Field& F, Elem a, Elem b, Elem c);
Line normalized_line(const Field& F, Elem u, Elem v, Elem w);

/// PG(2,q) with points and lines materialized in canonical order.
///
/// Canonical order is lexicographic on the per-coordinate key (0 for the zero
/// element, 1 + dlog otherwise) of normalized triples; ranks index that order.
/// Materialization is limited to q <= 256; larger fields only ever need
/// field-level computations here.
class Plane {
public:
    explicit Plane(const Field& field);

    const Field& field() const { return *field_; }
    uint32_t q() const { return field_->order(); }
    uint32_t point_count() const { return static_cast<uint32_t>(points_.size()); }
    uint32_t line_count() const { return point_count(); }

    Point normalize_point(Elem a, Elem b, Elem c) const;
    Line normalize_line(Elem u, Elem v, Elem w) const;

    bool incident(const Point& p, const Line& l) const;
    Line join(const Point& a, const Point& b) const;
    Point meet(const Line& a, const Line& b) const;

    uint32_t point_rank(const Point& p) const;
    const Point& point_at(uint32_t rank) const { return points_[rank]; }
    uint32_t line_rank(const Line& l) const;
    const Line& line_at(uint32_t rank) const { return lines_[rank]; }

    const std::vector<uint32_t>& points_on(uint32_t line_rank) const { return points_on_[line_rank]; }
    const std::vector<uint32_t>& lines_through(uint32_t point_rank) const { return lines_through_[point_rank]; }

    std::vector<Point> points_on_line(const Line& l) const;
    std::vector<Line> lines_through_point(const Point& p) const;

    std::string to_string(const Point& p) const;
    std::string to_string(const Line& l) const;

private:
    const Field* field_;
    std::vector<Point> points_;
    std::vector<Line> lines_;
    std::unordered_map<uint64_t, uint32_t> rank_;  // packed normalized triple -> rank
    std::vector<std::vector<uint32_t>> points_on_;
    std::vector<std::vector<uint32_t>> lines_through_;
};

}  // namespace maxarc
