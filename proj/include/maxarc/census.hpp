#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "maxarc/arc.hpp"
#include "maxarc/canonical.hpp"

namespace maxarc {

/// Which closed forms back the two trace conditions.
///
/// `geometric` is equivalent to point-set disjointness of the theta images
/// (checked exhaustively against brute force in the tests). `published_pg32`
/// follows the closed forms that accompany the published PG(2,32) t-value
/// tables; the two agree except in the C_1-fixed case, where the published
/// forms drop an l^sigma factor and their t-values do not give disjoint
/// conics. The census always uses `geometric`.
enum class TraceConditions { geometric, published_pg32 };

/// Which conic of the moved arc {C_1, C_l, C_{l+1}} lands on C_1.
enum class ThetaCase { map_l_plus_1, map_l, fix_c1 };

/// Two GF(2)-linear conditions Tr(n1 t) = Tr(n2 t) = 0 cutting out the valid
/// t-values of theta(lambda0, t, sigma) moving {C_1, C_l, C_{l+1}} against
/// the fixed arc {C_1, C_k, C_{k+1}}.
struct TraceConditionSystem {
    Elem n1, n2;
    Elem lambda0;
    bool degenerate = false;  // vanishing denominator: no valid t for this sigma
    std::string note;
};

TraceConditionSystem build_trace_system(const Field& F, Elem k, Elem l, int sigma_exp, ThetaCase which,
                                        TraceConditions variant = TraceConditions::geometric);

/// All t with both traces zero, solved by intersecting the two hyperplane
/// kernels (no scan over GF(q)); sorted canonically. Size is q/4.
std::vector<Elem> solve_t_values(const Field& F, Elem k, Elem l, int sigma_exp, ThetaCase which,
                                 TraceConditions variant = TraceConditions::geometric);

/// Partner pairing t' = t + sqrt(lambda0)^(-sigma): both members induce the
/// same degree-4 extension. Pairs are (t, t') with t the canonically smaller
/// member, sorted; throws if the set is not a perfect matching.
std::vector<std::pair<Elem, Elem>> pair_t_values(const Field& F, Elem lambda0, int sigma_exp,
                                                 const std::vector<Elem>& ts);

struct CensusPair {
    Elem t_low, t_high;
    Conic first, second;     // the two conics added by this pair's 4-arc
    bool denniston_pencil;   // authoritative: both conics in the standard pencil
    bool denniston_infline;  // exposed cross-check: infinity line z = 0
};

struct CensusCell {
    Elem l;        // moved arc {C_1, C_l, C_{l+1}}
    ThetaCase which;
    Elem lambda0;
    int sigma_exp;
    std::vector<Elem> ts;
    std::vector<CensusPair> pairs;
};

struct DisjointConicCensus {
    Elem k;  // fixed arc D = {C_1, C_k, C_{k+1}}
    std::vector<CensusCell> cells;
    std::vector<Conic> d_conics;
    std::vector<Conic> m_conics;
};

/// All conics disjoint from D reachable through the theta family (concurrency
/// point pinned at (0,1,0)), classified as Denniston- or Mathon-extending.
/// D must be adapted, lie in the standard (1,1)-pencil and contain C_1.
/// Moved arcs range over one representative per isomorphism class of
/// degree-4 pencil arcs, so each disjoint conic is counted exactly once.
DisjointConicCensus disjoint_conic_census(const Plane& P, const Arc& D);

/// The degree-8 Mathon arcs through D: one extension per M-conic,
/// deduplicated by point set.
std::vector<Arc> mathon_8arcs_through(const Plane& P, const Arc& D, const DisjointConicCensus& census);

/// Exhaustive count of degree-4 arcs in the standard pencil (the
/// 2-dimensional additive subgroups of GF(q)).
uint64_t count_pencil_4arcs(const Field& F);

/// Isomorphism class count N of degree-4 Denniston arcs, by orbit enumeration.
uint64_t classify_denniston4(const Field& F);

struct Mathon8Formula {
    bool applicable = false;  // needs 2h+1 prime, not in {2,3,7}
    std::string reason;
    uint64_t class_count = 0;
    uint64_t denniston4_classes = 0;  // N
};

/// Class-count formula N/14 (2^(2h-2)-1)((6h+3)N-1) for degree-8 proper
/// Mathon arcs in PG(2,2^(2h+1)).
Mathon8Formula mathon8_class_count_formula(int field_degree);

struct Mathon8Classification {
    std::vector<Arc> arcs;             // all arcs through the base 4-arc reps
    std::vector<std::string> forms;    // distinct canonical forms, sorted
    std::vector<Arc> representatives;  // one per form
    Mathon8Formula formula;
    bool outside_theorem_hypotheses = false;
};

/// Full classification at desk scale (q <= 32); throws beyond unless forced.
Mathon8Classification classify_mathon8(const Plane& P, bool force = false);

struct Pg32Report {
    std::vector<std::string> checks;      // "ok: ..." lines
    std::vector<std::string> mismatches;  // golden diffs; empty means success
    std::vector<std::string> notes;       // known discrepancies, informational
    DisjointConicCensus census;
    std::vector<Arc> arcs;
    std::vector<std::string> class_forms;
    std::string report_json;              // machine-checkable rendering
};

/// Reconstructs the full PG(2,32) classification and diffs it against the
/// embedded golden values; any mismatch lands in `mismatches`.
Pg32Report reproduce_pg32(const Plane& P);

/// Published t-value tables for PG(2,32): case order lambda0 = k+1, k, 1;
/// rows by sigma; entries in exponent notation with -1 for the zero element.
const std::vector<std::vector<std::vector<int>>>& pg32_published_t_tables();

bool is_prime(uint64_t n);

}  // namespace maxarc
