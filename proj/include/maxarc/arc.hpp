#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "maxarc/collineation.hpp"
#include "maxarc/conic.hpp"
#include "maxarc/plane.hpp"

namespace maxarc {

/// A GF(2)-subspace of GF(q), stored with 0 included.
struct AdditiveSubgroup {
    std::vector<Elem> elements;  // sorted by bits, elements[0] == 0

    static AdditiveSubgroup from_elements(const Field& F, std::vector<Elem> elems);
    static bool is_closed(const std::vector<Elem>& elems);
    std::vector<Elem> basis() const;
    int dimension() const;
};

/// Maximal arc: the point set together with its conic decomposition.
///
/// Conics are stored in the nucleus-adapted frame; `frame` maps that frame to
/// the arc's actual position (identity for arcs built in place). The point
/// set is authoritative for verification, the conic list for algebra.
struct Arc {
    int degree = 0;
    std::vector<Conic> conics;            // d-1 conics, canonically sorted
    Collineation frame;                   // adapted frame -> actual position
    std::optional<uint32_t> nucleus;      // actual nucleus rank (conic-built arcs)
    std::vector<uint32_t> points;         // sorted point ranks, size q(d-1)+d

    bool adapted() const;                 // frame is the identity
};

struct VerifyResult {
    bool ok = false;
    int degree = 0;
    std::map<int, long> histogram;        // intersection size -> line count
    std::optional<uint32_t> offending_line;
    std::string message;
};

struct ClosedSetCheck {
    bool ok = false;
    int i = -1, j = -1;                   // witness pair on failure
    std::string reason;
};

/// PG(2,2) incidence between the 7 conics and the 7 Denniston subarcs of a
/// degree-8 arc; triples index into Arc::conics.
struct FanoStructure {
    std::array<std::array<int, 3>, 7> subarcs{};
};

struct InfinityData {
    bool denniston = false;               // all 7 lines coincide
    std::vector<Line> lines;              // one per subarc, subarc order
    std::optional<Point> center;          // concurrency point when proper
};

struct SecantCensus {
    long secants_m = 0;    // lines meeting M
    long externals_m = 0;  // lines missing M
    long secants_mc = 0;   // lines meeting M union C
    long c_only = 0;       // lines meeting C but not M
};

bool conic_less(const Field& F, const Conic& a, const Conic& b);

ClosedSetCheck closed_set_check(const Field& F, const std::vector<Conic>& conics);

Arc denniston_arc(const Plane& P, Elem alpha, const AdditiveSubgroup& A);
Arc mathon_arc(const Plane& P, std::vector<Conic> conics);

/// Mathon's exponent form: beta(lambda) = w^k + w^l lambda + w^m lambda^3,
/// lambda ranging over span(lambda_basis) minus 0.
Arc mathon_exponent_arc(const Plane& P, int k, int l, int m, const std::vector<Elem>& lambda_basis);

VerifyResult verify_maximal_arc(const Plane& P, const std::vector<uint32_t>& points);

/// Degree-2d extension determined by M and a disjoint conic (trace-checked).
Arc extend_by_conic(const Plane& P, const Arc& M, const Conic& c);

/// First line in canonical order external to M and C; throws if none exists.
Line find_external_line(const Plane& P, const Arc& M, const Conic& c);

SecantCensus secant_census(const Plane& P, const Arc& M, const Conic& c);

/// The lines external to M, as an arc of degree q/d in the dual plane.
Arc dual_arc(const Plane& P, const Arc& M);

FanoStructure fano_decomposition(const Field& F, const Arc& K);

InfinityData infinity_data(const Plane& P, const Arc& K, const FanoStructure& fano);
InfinityData infinity_data(const Plane& P, const Arc& K);

/// The unique involution stabilizing a proper Mathon 8-arc and each of its
/// conics: the elation with center the concurrency point and axis the line
/// joining it to the nucleus.
Collineation elation_involution(const Plane& P, const Arc& K);

Arc apply_arc(const Plane& P, const Collineation& g, const Arc& K);

std::vector<uint32_t> external_lines(const Plane& P, const std::vector<uint32_t>& points);

}  // namespace maxarc
