#include "maxarc/canonical.hpp"

#include <algorithm>
#include <stdexcept>

namespace maxarc {

Collineation normalize_map(const Plane& P, const Arc& K, const FanoStructure& fano,
                           const InfinityData& info, int subarc, int conic_slot) {
    const Field& F = P.field();
    if (!info.center) throw std::invalid_argument("arc is of Denniston type; no concurrency point");
    if (!K.nucleus) throw std::invalid_argument("arc has no recorded nucleus");
    Point n = P.point_at(*K.nucleus);
    Point c = *info.center;
    Line linf = info.lines[subarc];

    // third frame point on the line at infinity, fourth in general position
    Point p3{};
    bool have3 = false;
    for (uint32_t pr : P.points_on(P.line_rank(linf))) {
        Point cand = P.point_at(pr);
        if (cand == c) continue;
        p3 = cand;
        have3 = true;
        break;
    }
    if (!have3) throw std::logic_error("line at infinity has no second point");
    Line nc = P.join(n, c);
    Line np3 = P.join(n, p3);
    Point p4{};
    bool have4 = false;
    for (uint32_t pr = 0; pr < P.point_count(); ++pr) {
        Point cand = P.point_at(pr);
        if (P.incident(cand, linf) || P.incident(cand, nc) || P.incident(cand, np3)) continue;
        p4 = cand;
        have4 = true;
        break;
    }
    if (!have4) throw std::logic_error("no fourth frame point found");

    std::array<Point, 4> src{n, c, p3, p4};
    std::array<Point, 4> dst{Point{F.zero(), F.zero(), F.one()}, Point{F.zero(), F.one(), F.zero()},
                             Point{F.one(), F.zero(), F.zero()}, Point{F.one(), F.one(), F.one()}};
    Collineation g1 = frame_map(F, src, dst);

    // the chosen conic, carried to the new frame and then onto C_1
    int conic_index = fano.subarcs[subarc][conic_slot];
    Collineation to_actual = K.frame;
    GeneralConic actual = apply(F, to_actual, K.conics[conic_index]);
    GeneralConic moved = apply(F, g1, actual);
    Collineation g2 = conic_to_c1_map(F, to_conic(F, moved));
    return compose(F, g2, g1);
}

std::string serialize_conics(const Field& F, std::vector<Conic> conics) {
    std::sort(conics.begin(), conics.end(),
              [&](const Conic& a, const Conic& b) { return conic_less(F, a, b); });
    auto exp_of = [&](Elem e) { return e.bits == 0 ? -1 : F.dlog(e); };
    std::string out;
    for (const Conic& c : conics) {
        out += std::to_string(exp_of(c.alpha)) + "," + std::to_string(exp_of(c.beta)) + "," +
               std::to_string(exp_of(c.lambda)) + ";";
    }
    return out;
}

CanonicalResult canonical_form_with_witness(const Plane& P, const Arc& K) {
    const Field& F = P.field();
    if (K.conics.size() != 7) throw std::invalid_argument("canonical form is defined for 8-arcs");
    FanoStructure fano = fano_decomposition(F, K);
    InfinityData info = infinity_data(P, K, fano);
    if (!info.center) throw std::invalid_argument("canonical form needs a proper Mathon 8-arc");

    auto stab = configuration_stabilizer(F);
    CanonicalResult best;
    for (int subarc = 0; subarc < 7; ++subarc)
        for (int slot = 0; slot < 3; ++slot) {
            Collineation g = normalize_map(P, K, fano, info, subarc, slot);
            Collineation to_norm = compose(F, g, K.frame);
            for (const Collineation& s : stab) {
                Collineation total = compose(F, s, to_norm);
                std::vector<Conic> imgs;
                imgs.reserve(7);
                for (const Conic& c : K.conics) imgs.push_back(to_conic(F, apply(F, total, c)));
                std::string form = serialize_conics(F, imgs);
                if (best.form.empty() || form < best.form) {
                    best.form = std::move(form);
                    best.witness = total;
                    best.multiplicity = 1;
                } else if (form == best.form) {
                    ++best.multiplicity;
                }
            }
        }
    return best;
}

std::string canonical_form(const Plane& P, const Arc& K) {
    return canonical_form_with_witness(P, K).form;
}

namespace {

bool shares_pencil_parameters(const std::vector<Conic>& conics) {
    for (const Conic& c : conics)
        if (!(c.alpha == conics[0].alpha) || !(c.beta == conics[0].beta)) return false;
    return true;
}

}  // namespace

AdditiveSubgroup pencil_subgroup(const Plane& P, const Arc& K) {
    const Field& F = P.field();
    if (K.conics.empty()) throw std::invalid_argument("point-set-only arc has no pencil data");
    std::vector<Conic> conics = K.conics;
    if (!shares_pencil_parameters(conics) && conics.size() >= 2) {
        // one-pencil arc in a rotated frame: send its line at infinity back
        // to z = 0 first
        Line inf = infinity_line(P, to_general(F, conics[0]), to_general(F, conics[1]));
        Collineation g = frame_to_adapted(P, conic_nucleus(F), inf);
        for (Conic& c : conics) c = to_conic(F, apply(F, g, c));
    }
    if (!shares_pencil_parameters(conics))
        throw std::invalid_argument("arc conics do not lie in one pencil");
    // F_{alpha,beta,lambda} maps into the standard (1,1)-pencil with
    // lambda -> lambda * beta, which is all the subgroup data needs.
    Elem beta = conics[0].beta;
    std::vector<Elem> elems;
    for (const Conic& c : conics) elems.push_back(F.mul(c.lambda, beta));
    return AdditiveSubgroup::from_elements(F, std::move(elems));
}

uint64_t subgroup_stabilizer_order(const Field& F, const AdditiveSubgroup& A) {
    std::vector<uint32_t> bits;
    for (Elem e : A.elements) bits.push_back(e.bits);
    std::sort(bits.begin(), bits.end());
    uint64_t fixed = 0;
    for (int l = 0; l < F.degree(); ++l) {
        for (uint32_t s = 1; s < F.order(); ++s) {
            bool ok = true;
            for (uint32_t eb : bits) {
                Elem img = F.mul(Elem{s}, F.frobenius(Elem{eb}, l));
                if (!std::binary_search(bits.begin(), bits.end(), img.bits)) {
                    ok = false;
                    break;
                }
            }
            if (ok) ++fixed;
        }
    }
    return 2 * fixed;  // sigma ranges over Aut GF(q^2); see subgroup_stabilizer_order(Elem)
}

namespace {

// Minimum of the sorted image bit strings over x -> s x^(2^l); equal vectors
// iff the subgroups are in one orbit.
std::vector<uint32_t> subspace_orbit_min(const Field& F, const AdditiveSubgroup& A) {
    std::vector<uint32_t> best;
    for (int l = 0; l < F.degree(); ++l)
        for (uint32_t s = 1; s < F.order(); ++s) {
            std::vector<uint32_t> img;
            img.reserve(A.elements.size());
            for (Elem e : A.elements) img.push_back(F.mul(Elem{s}, F.frobenius(e, l)).bits);
            std::sort(img.begin(), img.end());
            if (best.empty() || img < best) best = std::move(img);
        }
    return best;
}

}  // namespace

bool are_isomorphic(const Plane& P, const Arc& a, const Arc& b) {
    const Field& F = P.field();
    if (a.degree != b.degree) return false;
    if (a.degree == 4) {
        return subspace_orbit_min(F, pencil_subgroup(P, a)) ==
               subspace_orbit_min(F, pencil_subgroup(P, b));
    }
    if (a.degree == 8) {
        InfinityData ia = infinity_data(P, a), ib = infinity_data(P, b);
        if (ia.denniston != ib.denniston) return false;
        if (ia.denniston)
            return subspace_orbit_min(F, pencil_subgroup(P, a)) ==
                   subspace_orbit_min(F, pencil_subgroup(P, b));
        return canonical_form(P, a) == canonical_form(P, b);
    }
    throw std::invalid_argument("isomorphism testing supports degrees 4 and 8");
}

uint64_t automorphism_order(const Plane& P, const Arc& K) {
    const Field& F = P.field();
    const uint32_t q = P.q();
    if (K.conics.empty()) throw std::invalid_argument("automorphism order needs a conic-built arc");

    bool denniston_type = K.degree == 4;
    if (K.degree == 8) denniston_type = infinity_data(P, K).denniston;
    if (denniston_type) {
        // Denniston: stabilizer is C_{q+1} semidirect G_A (valid for 2 < d < q/2)
        if (!(K.degree > 2 && static_cast<uint32_t>(K.degree) * 2 < q))
            throw std::invalid_argument("pencil stabilizer formula needs 2 < d < q/2");
        return (static_cast<uint64_t>(q) + 1) * subgroup_stabilizer_order(F, pencil_subgroup(P, K));
    }
    if (K.degree != 8) throw std::invalid_argument("automorphism order supports Denniston and 8-arcs");

    // Proper Mathon 8-arc: the normalization triples reaching the canonical
    // position are in bijection with the stabilizer.
    return canonical_form_with_witness(P, K).multiplicity;
}

}  // namespace maxarc
