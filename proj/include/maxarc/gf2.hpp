#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace maxarc {

/// Element of GF(2^h) in polynomial basis: bit i holds the coefficient of x^i.
struct Elem {
    uint32_t bits = 0;

    friend constexpr bool operator==(Elem a, Elem b) { return a.bits == b.bits; }
    friend constexpr bool operator!=(Elem a, Elem b) { return a.bits != b.bits; }
    friend constexpr bool operator<(Elem a, Elem b) { return a.bits < b.bits; }
};

/// Arithmetic in GF(2^h) over a fixed irreducible polynomial, with trace,
/// Frobenius, square roots and discrete logs.
///
/// The distinguished generator makes exponent notation ("w^k") reproducible
/// across runs: for h = 5 it is the primitive w with w^18 + w = 1 (smallest
/// such in bit order), otherwise the smallest primitive element.
class Field {
public:
    /// Uses the built-in irreducible polynomial for this degree (1 <= h <= 24).
    explicit Field(int degree);

    /// Explicit representation; generator_bits, when given, must be primitive.
    Field(int degree, uint32_t irreducible, std::optional<uint32_t> generator_bits = std::nullopt);

    int degree() const { return degree_; }
    uint32_t order() const { return order_; }  // q = 2^h
    uint32_t irreducible() const { return irreducible_; }
    bool has_dlog_table() const { return !log_.empty(); }

    Elem zero() const { return Elem{0}; }
    Elem one() const { return Elem{1}; }
    Elem generator() const { return generator_; }

    /// Validates that the bit pattern fits in h bits (the only representation
    /// mismatch detectable from a raw value).
    Elem element(uint32_t bits) const;

    Elem add(Elem a, Elem b) const { return Elem{a.bits ^ b.bits}; }
    Elem mul(Elem a, Elem b) const;
    Elem square(Elem a) const { return mul(a, a); }
    Elem inv(Elem a) const;
    Elem pow(Elem a, long long e) const;
    Elem sqrt(Elem a) const;
    int trace(Elem a) const;
    Elem frobenius(Elem a, int l) const;  // a^(2^l), l reduced mod h

    /// Exponent of a with respect to the distinguished generator; throws on 0.
    int dlog(Elem a) const;
    Elem exp(long long k) const;  // generator^k

    bool is_primitive(Elem a) const;
    std::size_t multiplicative_order(Elem a) const;

    /// Smallest (in bit order) primitive element satisfying the relation;
    /// throws if none exists in this representation.
    Elem find_generator_with_relation(const std::function<bool(const Field&, Elem)>& relation) const;

    /// Sort key giving the canonical element order: 0 first, then by exponent.
    uint32_t order_key(Elem a) const { return a.bits == 0 ? 0 : 1 + static_cast<uint32_t>(dlog(a)); }

    std::string to_string(Elem a) const;  // "0", "1", "w", "w^k"

    /// Accepts sums of terms "0", "1", "w", "w^k" and hex "0x..".
    Elem parse(const std::string& text) const;

    std::string irreducible_hex() const;
    std::string generator_hex() const;

private:
    void init_tables();
    Elem default_generator() const;
    uint32_t mul_slow(uint32_t a, uint32_t b) const;

    int degree_ = 0;
    uint32_t order_ = 0;
    uint32_t irreducible_ = 0;
    Elem generator_{0};
    std::vector<uint32_t> exp_;   // exp_[k] = generator^k, k in [0, 2(q-1))
    std::vector<int32_t> log_;    // log_[bits]; -1 for 0
    std::vector<uint8_t> trace_;  // absolute trace per element
    std::vector<uint32_t> order_factors_;  // prime factors of q-1
};

/// Irreducibility over GF(2); poly bits as in Field (degree <= 24).
bool gf2_poly_irreducible(uint32_t poly, int degree);

}  // namespace maxarc

template <>
struct std::hash<maxarc::Elem> {
    std::size_t operator()(maxarc::Elem e) const noexcept { return std::hash<uint32_t>{}(e.bits); }
};
