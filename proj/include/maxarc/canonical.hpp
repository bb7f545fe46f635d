#pragma once

#include <string>
#include <vector>

#include "maxarc/arc.hpp"

namespace maxarc {

/// Collineation mapping four points in general position onto four others.
Collineation frame_map(const Field& F, const std::array<Point, 4>& src, const std::array<Point, 4>& dst);

/// Solves u^2 + u = c; throws when Tr(c) = 1. Returns the root with the
/// smaller canonical key.
Elem solve_artin_schreier(const Field& F, Elem c);

/// A collineation of shape ((a,0,0),(b,c,0),(0,0,1)) mapping the given conic
/// onto C_1 = F_{1,1,1}; fixes (0,0,1), (0,1,0) and the line z = 0.
Collineation conic_to_c1_map(const Field& F, const Conic& c);

/// Normalizing map for one choice of (subarc, conic): sends the arc's
/// nucleus to (0,0,1), the concurrency point to (0,1,0), the subarc's line
/// at infinity to z = 0 and the chosen conic onto C_1.
Collineation normalize_map(const Plane& P, const Arc& K, const FanoStructure& fano,
                           const InfinityData& info, int subarc, int conic_slot);

/// Serialized canonical position: the lexicographic minimum over all
/// 7 * 3 * 2h normalizations of the sorted conic-triple list.
std::string canonical_form(const Plane& P, const Arc& K);

struct CanonicalResult {
    std::string form;
    Collineation witness;          // map achieving the minimum (composed with K.frame)
    uint64_t multiplicity = 0;     // triples achieving the minimum = |Aut(K)|
};
CanonicalResult canonical_form_with_witness(const Plane& P, const Arc& K);

std::string serialize_conics(const Field& F, std::vector<Conic> conics);

bool are_isomorphic(const Plane& P, const Arc& a, const Arc& b);

/// Collineation stabilizer order. Degree-4 (and degree-8 Denniston) arcs use
/// the pencil stabilizer structure (q+1)|G_A|; proper Mathon 8-arcs count the
/// normalization triples that fix the arc.
uint64_t automorphism_order(const Plane& P, const Arc& K);

/// The additive subgroup of a pencil arc, rescaled so the conic lambdas sit
/// in the standard (1,1)-pencil.
AdditiveSubgroup pencil_subgroup(const Plane& P, const Arc& K);

uint64_t subgroup_stabilizer_order(const Field& F, const AdditiveSubgroup& A);

}  // namespace maxarc
