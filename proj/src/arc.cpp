#include "maxarc/arc.hpp"

#include <algorithm>
#include <stdexcept>

#include "maxarc/parallel.hpp"

namespace maxarc {

namespace {

std::vector<uint8_t> membership(const Plane& P, const std::vector<uint32_t>& points) {
    std::vector<uint8_t> in(P.point_count(), 0);
    for (uint32_t r : points) in[r] = 1;
    return in;
}

std::vector<uint32_t> touched_lines(const Plane& P, const std::vector<uint32_t>& points) {
    std::vector<uint32_t> lines;
    lines.reserve(points.size() * (P.q() + 1));
    for (uint32_t pr : points)
        for (uint32_t lr : P.lines_through(pr)) lines.push_back(lr);
    std::sort(lines.begin(), lines.end());
    lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
    return lines;
}

}  // namespace

bool Arc::adapted() const {
    if (frame.frob != 0) return false;
    const auto& m = frame.mat.m;
    Elem s = m[0][0];
    if (s.bits == 0) return false;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i == j && !(m[i][j] == s)) return false;
            if (i != j && m[i][j].bits != 0) return false;
        }
    return true;
}

bool conic_less(const Field& F, const Conic& a, const Conic& b) {
    auto key = [&](const Conic& c) {
        return std::array<uint32_t, 3>{F.order_key(c.alpha), F.order_key(c.beta), F.order_key(c.lambda)};
    };
    return key(a) < key(b);
}

AdditiveSubgroup AdditiveSubgroup::from_elements(const Field& F, std::vector<Elem> elems) {
    elems.push_back(F.zero());
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    for (Elem e : elems) (void)F.element(e.bits);  // range check
    if (!is_closed(elems)) throw std::invalid_argument("set is not closed under addition");
    return AdditiveSubgroup{std::move(elems)};
}

bool AdditiveSubgroup::is_closed(const std::vector<Elem>& elems) {
    if ((elems.size() & (elems.size() - 1)) != 0) return false;  // must be a power of two
    std::vector<uint32_t> bits;
    for (Elem e : elems) bits.push_back(e.bits);
    for (uint32_t a : bits)
        for (uint32_t b : bits)
            if (!std::binary_search(bits.begin(), bits.end(), a ^ b)) return false;
    return true;
}

std::vector<Elem> AdditiveSubgroup::basis() const {
    std::vector<Elem> out;
    std::vector<uint32_t> span{0};
    for (Elem e : elements) {
        if (e.bits == 0) continue;
        if (std::find(span.begin(), span.end(), e.bits) != span.end()) continue;
        std::vector<uint32_t> next = span;
        for (uint32_t s : span) next.push_back(s ^ e.bits);
        span = std::move(next);
        out.push_back(e);
    }
    return out;
}

int AdditiveSubgroup::dimension() const {
    int d = 0;
    for (std::size_t s = elements.size(); s > 1; s >>= 1) ++d;
    return d;
}

ClosedSetCheck closed_set_check(const Field& F, const std::vector<Conic>& conics) {
    for (std::size_t i = 0; i < conics.size(); ++i) {
        if (!conic_admissible(F, conics[i]))
            return ClosedSetCheck{false, static_cast<int>(i), static_cast<int>(i),
                                  "member violates Tr(alpha beta) = 1 or has lambda = 0"};
        for (std::size_t j = i + 1; j < conics.size(); ++j)
            if (conics[i].lambda == conics[j].lambda)
                return ClosedSetCheck{false, static_cast<int>(i), static_cast<int>(j),
                                      "two members share the same lambda"};
    }
    for (std::size_t i = 0; i < conics.size(); ++i)
        for (std::size_t j = i + 1; j < conics.size(); ++j) {
            Conic comp = compose(F, conics[i], conics[j]);
            if (std::find(conics.begin(), conics.end(), comp) == conics.end())
                return ClosedSetCheck{false, static_cast<int>(i), static_cast<int>(j),
                                      "composition of members is not a member"};
        }
    return ClosedSetCheck{true, -1, -1, ""};
}

namespace {

Arc arc_from_conics(const Plane& P, std::vector<Conic> conics) {
    const Field& F = P.field();
    std::sort(conics.begin(), conics.end(),
              [&](const Conic& a, const Conic& b) { return conic_less(F, a, b); });
    Arc arc;
    arc.degree = static_cast<int>(conics.size()) + 1;
    arc.frame = identity_collineation(F);
    arc.nucleus = P.point_rank(conic_nucleus(F));
    std::vector<uint32_t> pts;
    pts.reserve(conics.size() * (P.q() + 1) + 1);
    for (const Conic& c : conics) {
        auto ranks = conic_point_ranks(P, c);
        pts.insert(pts.end(), ranks.begin(), ranks.end());
    }
    pts.push_back(*arc.nucleus);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const uint64_t expected =
        static_cast<uint64_t>(P.q()) * (arc.degree - 1) + static_cast<uint64_t>(arc.degree);
    if (pts.size() != expected)
        throw std::logic_error("conics are not pairwise disjoint: arc has wrong cardinality");
    arc.conics = std::move(conics);
    arc.points = std::move(pts);
    return arc;
}

}  // namespace

Arc denniston_arc(const Plane& P, Elem alpha, const AdditiveSubgroup& A) {
    const Field& F = P.field();
    if (F.trace(alpha) != 1) throw std::invalid_argument("Denniston arc requires Tr(alpha) = 1");
    if (A.elements.size() < 2) throw std::invalid_argument("subgroup must contain a nonzero element");
    if (!AdditiveSubgroup::is_closed(A.elements))
        throw std::invalid_argument("subgroup is not additively closed");
    std::vector<Conic> conics;
    for (Elem l : A.elements)
        if (l.bits != 0) conics.push_back(Conic{alpha, F.one(), l});
    return arc_from_conics(P, std::move(conics));
}

Arc mathon_arc(const Plane& P, std::vector<Conic> conics) {
    auto check = closed_set_check(P.field(), conics);
    if (!check.ok)
        throw std::invalid_argument("conic set is not closed: " + check.reason + " (members " +
                                    std::to_string(check.i) + ", " + std::to_string(check.j) + ")");
    return arc_from_conics(P, std::move(conics));
}

Arc mathon_exponent_arc(const Plane& P, int k, int l, int m, const std::vector<Elem>& lambda_basis) {
    const Field& F = P.field();
    std::vector<Conic> conics;
    for (uint32_t mask = 1; mask < (1u << lambda_basis.size()); ++mask) {
        Elem lambda{0};
        for (std::size_t i = 0; i < lambda_basis.size(); ++i)
            if (mask & (1u << i)) lambda = F.add(lambda, lambda_basis[i]);
        Elem beta = F.add(F.add(F.exp(k), F.mul(F.exp(l), lambda)), F.mul(F.exp(m), F.pow(lambda, 3)));
        conics.push_back(Conic{F.one(), beta, lambda});
    }
    if (conics.size() != (1u << lambda_basis.size()) - 1)
        throw std::invalid_argument("lambda basis is linearly dependent");
    return mathon_arc(P, std::move(conics));
}

VerifyResult verify_maximal_arc(const Plane& P, const std::vector<uint32_t>& points) {
    VerifyResult res;
    const uint32_t q = P.q();
    if (points.empty()) {
        res.message = "empty point set";
        return res;
    }
    const uint64_t n = points.size();
    if ((n + q) % (q + 1) != 0) {
        res.message = "cardinality " + std::to_string(n) + " is not q(d-1)+d for any d";
        return res;
    }
    const int d = static_cast<int>((n + q) / (q + 1));
    res.degree = d;
    if (d <= 0 || q % static_cast<uint32_t>(d) != 0) {
        res.message = "degree " + std::to_string(d) + " does not divide q";
        return res;
    }

    auto in = membership(P, points);
    auto lines = touched_lines(P, points);

    std::vector<int> counts(lines.size(), 0);
    parallel_chunks(lines.size(), 4096, [&](unsigned, std::size_t b, std::size_t e) {
        for (std::size_t i = b; i < e; ++i) {
            int c = 0;
            for (uint32_t pr : P.points_on(lines[i])) c += in[pr];
            counts[i] = c;
        }
    });

    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (counts[i] != d) {
            res.offending_line = lines[i];
            res.message = "line " + P.to_string(P.line_at(lines[i])) + " meets the set in " +
                          std::to_string(counts[i]) + " points, expected " + std::to_string(d);
            res.histogram[counts[i]] += 1;
            return res;
        }
    }
    res.ok = true;
    res.histogram[d] = static_cast<long>(lines.size());
    long ext = static_cast<long>(P.line_count()) - static_cast<long>(lines.size());
    if (ext > 0) res.histogram[0] = ext;
    return res;
}

Arc extend_by_conic(const Plane& P, const Arc& M, const Conic& c) {
    const Field& F = P.field();
    if (!M.adapted()) throw std::invalid_argument("extension requires an arc in the adapted frame");
    if (M.conics.empty()) throw std::invalid_argument("extension requires a conic-built arc");
    if (static_cast<uint32_t>(M.degree) * 2 >= P.q())
        throw std::invalid_argument("extension requires degree d < q/2");
    if (c.lambda.bits == 0) throw std::invalid_argument("lambda = 0 denotes the nucleus, not a conic");
    for (const Conic& ci : M.conics)
        if (ci.lambda == c.lambda) throw std::invalid_argument("lambda collision with the arc");

    auto close_over = [&](std::vector<Conic> base, const Conic& extra) {
        const std::size_t n = base.size();
        std::vector<Conic> conics = std::move(base);
        conics.push_back(extra);
        for (std::size_t i = 0; i < n; ++i) conics.push_back(compose(F, conics[i], extra));
        auto check = closed_set_check(F, conics);
        if (!check.ok) throw std::logic_error("extension did not close: " + check.reason);
        return conics;
    };

    if (F.trace(F.mul(c.alpha, c.beta)) == 1) {
        // frame-compatible: the trace test is exact for members of the family
        for (const Conic& ci : M.conics)
            if (!trace_disjoint(F, ci, c))
                throw std::invalid_argument("conic is not disjoint from the arc (trace check fails)");
        return arc_from_conics(P, close_over(M.conics, c));
    }

    // The line z = 0 is secant to c, so the algebra cannot run in this frame.
    // Re-coordinatize along a line external to M and c (one exists for
    // d < q/2), extend there, and carry the result back.
    {
        auto in = membership(P, M.points);
        for (uint32_t r : conic_point_ranks(P, c))
            if (in[r]) throw std::invalid_argument("conic is not disjoint from the arc");
    }
    Line r = find_external_line(P, M, c);
    Collineation g = frame_to_adapted(P, conic_nucleus(F), r);
    std::vector<Conic> adapted;
    adapted.reserve(M.conics.size());
    for (const Conic& ci : M.conics) adapted.push_back(to_conic(F, apply(F, g, ci)));
    Conic ca = to_conic(F, apply(F, g, c));
    Arc in_frame = arc_from_conics(P, close_over(std::move(adapted), ca));
    return apply_arc(P, inverse(F, g), in_frame);
}

Line find_external_line(const Plane& P, const Arc& M, const Conic& c) {
    if (!M.adapted()) throw std::invalid_argument("requires an arc in the adapted frame");
    auto in = membership(P, M.points);
    for (uint32_t r : conic_point_ranks(P, c)) in[r] = 1;
    for (uint32_t lr = 0; lr < P.line_count(); ++lr) {
        bool hit = false;
        for (uint32_t pr : P.points_on(lr))
            if (in[pr]) {
                hit = true;
                break;
            }
        if (!hit) return P.line_at(lr);
    }
    throw std::logic_error("no external line exists; inputs are not a valid (arc, conic) pair");
}

SecantCensus secant_census(const Plane& P, const Arc& M, const Conic& c) {
    auto in_m = membership(P, M.points);
    std::vector<uint8_t> in_c(P.point_count(), 0);
    for (uint32_t r : conic_point_ranks(P, c)) in_c[r] = 1;
    SecantCensus out;
    for (uint32_t lr = 0; lr < P.line_count(); ++lr) {
        bool hit_m = false, hit_c = false;
        for (uint32_t pr : P.points_on(lr)) {
            hit_m = hit_m || in_m[pr];
            hit_c = hit_c || in_c[pr];
        }
        out.secants_m += hit_m;
        out.externals_m += !hit_m;
        out.secants_mc += (hit_m || hit_c);
        out.c_only += (hit_c && !hit_m);
    }
    return out;
}

std::vector<uint32_t> external_lines(const Plane& P, const std::vector<uint32_t>& points) {
    auto in = membership(P, points);
    std::vector<uint32_t> out;
    for (uint32_t lr = 0; lr < P.line_count(); ++lr) {
        bool hit = false;
        for (uint32_t pr : P.points_on(lr))
            if (in[pr]) {
                hit = true;
                break;
            }
        if (!hit) out.push_back(lr);
    }
    return out;
}

Arc dual_arc(const Plane& P, const Arc& M) {
    // Lines and points share one canonical coordinate enumeration, so a line
    // rank is already the rank of the corresponding dual point.
    Arc dual;
    dual.points = external_lines(P, M.points);
    dual.frame = identity_collineation(P.field());
    const uint32_t q = P.q();
    dual.degree = static_cast<int>(q) / M.degree;
    const uint64_t expected = static_cast<uint64_t>(q) * (q - M.degree + 1) / M.degree;
    if (dual.points.size() != expected)
        throw std::logic_error("external line count does not match the dual arc size");
    return dual;
}

FanoStructure fano_decomposition(const Field& F, const Arc& K) {
    if (K.conics.size() != 7) throw std::invalid_argument("Fano decomposition needs a 7-conic arc");
    FanoStructure fano;
    std::vector<std::array<int, 3>> triples;
    for (int i = 0; i < 7; ++i)
        for (int j = i + 1; j < 7; ++j) {
            Conic comp = compose(F, K.conics[i], K.conics[j]);
            auto it = std::find(K.conics.begin(), K.conics.end(), comp);
            if (it == K.conics.end())
                throw std::invalid_argument("conic set is not closed; not a Mathon 8-arc");
            int k = static_cast<int>(it - K.conics.begin());
            std::array<int, 3> t{i, j, k};
            std::sort(t.begin(), t.end());
            if (std::find(triples.begin(), triples.end(), t) == triples.end()) triples.push_back(t);
        }
    if (triples.size() != 7) throw std::logic_error("expected exactly 7 Denniston subarcs");
    std::sort(triples.begin(), triples.end());
    // PG(2,2) sanity: every conic in 3 subarcs, two subarcs share one conic.
    std::array<int, 7> deg{};
    for (const auto& t : triples)
        for (int x : t) deg[x]++;
    for (int x : deg)
        if (x != 3) throw std::logic_error("subarc incidence is not PG(2,2)");
    for (std::size_t a = 0; a < triples.size(); ++a)
        for (std::size_t b = a + 1; b < triples.size(); ++b) {
            int common = 0;
            for (int x : triples[a])
                for (int y : triples[b]) common += (x == y);
            if (common != 1) throw std::logic_error("subarc incidence is not PG(2,2)");
        }
    for (std::size_t i = 0; i < 7; ++i) fano.subarcs[i] = triples[i];
    return fano;
}

InfinityData infinity_data(const Plane& P, const Arc& K, const FanoStructure& fano) {
    const Field& F = P.field();
    InfinityData data;
    for (const auto& t : fano.subarcs) {
        Line l = infinity_line(P, to_general(F, K.conics[t[0]]), to_general(F, K.conics[t[1]]));
        // all three pairs of the subarc must agree
        Line l2 = infinity_line(P, to_general(F, K.conics[t[0]]), to_general(F, K.conics[t[2]]));
        if (!(l == l2)) throw std::logic_error("subarc conics disagree on the line at infinity");
        data.lines.push_back(apply(F, K.frame, l));
    }
    bool all_equal = true;
    for (const Line& l : data.lines) all_equal = all_equal && l == data.lines[0];
    if (all_equal) {
        data.denniston = true;
        return data;
    }
    for (std::size_t a = 0; a < data.lines.size(); ++a)
        for (std::size_t b = a + 1; b < data.lines.size(); ++b)
            if (data.lines[a] == data.lines[b])
                throw std::logic_error("infinity lines neither all equal nor all distinct");
    Point c = P.meet(data.lines[0], data.lines[1]);
    for (const Line& l : data.lines)
        if (!P.incident(c, l)) throw std::logic_error("infinity lines are not concurrent");
    data.center = c;
    return data;
}

InfinityData infinity_data(const Plane& P, const Arc& K) {
    return infinity_data(P, K, fano_decomposition(P.field(), K));
}

Collineation elation_involution(const Plane& P, const Arc& K) {
    const Field& F = P.field();
    auto data = infinity_data(P, K);
    if (!data.center) throw std::invalid_argument("arc is of Denniston type; no unique involution");
    if (!K.nucleus) throw std::invalid_argument("arc has no recorded nucleus");
    Point n = P.point_at(*K.nucleus);
    Line axis = P.join(n, *data.center);

    // the actual conic is frame(c), so conjugate candidates back to the frame
    auto fixes_arc = [&](const Collineation& g) {
        Collineation h = compose(F, compose(F, inverse(F, K.frame), g), K.frame);
        for (const Conic& c : K.conics) {
            if (!(to_conic(F, apply(F, h, c)) == c)) return false;
        }
        return true;
    };

    for (uint32_t mu = 1; mu < P.q(); ++mu) {
        Collineation g = elation(F, *data.center, axis, Elem{mu});
        if (fixes_arc(g)) return g;
    }
    throw std::logic_error("no elation stabilizes every conic of the arc");
}

Arc apply_arc(const Plane& P, const Collineation& g, const Arc& K) {
    const Field& F = P.field();
    Arc img;
    img.degree = K.degree;
    img.conics = K.conics;
    img.frame = compose(F, g, K.frame);
    if (K.nucleus) img.nucleus = P.point_rank(apply(F, g, P.point_at(*K.nucleus)));
    img.points.reserve(K.points.size());
    for (uint32_t pr : K.points) img.points.push_back(P.point_rank(apply(F, g, P.point_at(pr))));
    std::sort(img.points.begin(), img.points.end());
    return img;
}

}  // namespace maxarc
