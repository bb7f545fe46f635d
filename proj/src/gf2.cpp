#include "maxarc/gf2.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace maxarc {

namespace {

// Default irreducible polynomials, degree 1..24 (low-weight, verified at
// construction time).
constexpr uint32_t kDefaultIrreducible[25] = {
    0,
    0x3,        // x + 1
    0x7,        // x^2 + x + 1
    0xb,        // x^3 + x + 1
    0x13,       // x^4 + x + 1
    0x25,       // x^5 + x^2 + 1
    0x43,       // x^6 + x + 1
    0x83,       // x^7 + x + 1
    0x11d,      // x^8 + x^4 + x^3 + x^2 + 1
    0x211,      // x^9 + x^4 + 1
    0x409,      // x^10 + x^3 + 1
    0x805,      // x^11 + x^2 + 1
    0x1053,     // x^12 + x^6 + x^4 + x + 1
    0x201b,     // x^13 + x^4 + x^3 + x + 1
    0x4443,     // x^14 + x^10 + x^6 + x + 1
    0x8003,     // x^15 + x + 1
    0x1100b,    // x^16 + x^12 + x^3 + x + 1
    0x20009,    // x^17 + x^3 + 1
    0x40081,    // x^18 + x^7 + 1
    0x80027,    // x^19 + x^5 + x^2 + x + 1
    0x100009,   // x^20 + x^3 + 1
    0x200005,   // x^21 + x^2 + 1
    0x400003,   // x^22 + x + 1
    0x800021,   // x^23 + x^5 + 1
    0x1000087,  // x^24 + x^7 + x^2 + x + 1
};

int poly_degree(uint64_t p) {
    int d = -1;
    while (p) {
        ++d;
        p >>= 1;
    }
    return d;
}

uint64_t poly_mulmod(uint64_t a, uint64_t b, uint64_t mod) {
    uint64_t acc = 0;
    while (b) {
        if (b & 1) acc ^= a;
        b >>= 1;
        a <<= 1;
    }
    int md = poly_degree(mod);
    for (int d = poly_degree(acc); d >= md; d = poly_degree(acc)) {
        acc ^= mod << (d - md);
    }
    return acc;
}

uint64_t poly_gcd(uint64_t a, uint64_t b) {
    while (b) {
        int da = poly_degree(a), db = poly_degree(b);
        if (da < db) {
            std::swap(a, b);
            continue;
        }
        a ^= b << (da - db);
    }
    return a;
}

std::vector<uint32_t> prime_factors(uint32_t n) {
    std::vector<uint32_t> out;
    for (uint32_t p = 2; static_cast<uint64_t>(p) * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

bool gf2_poly_irreducible(uint32_t poly, int degree) {
    if (degree < 1 || poly_degree(poly) != degree) return false;
    if (degree == 1) return true;
    // x^(2^degree) == x mod poly, and gcd(x^(2^(degree/p)) - x, poly) == 1
    // for every prime p dividing the degree.
    uint64_t x = 2;
    uint64_t t = x;
    for (int i = 0; i < degree; ++i) t = poly_mulmod(t, t, poly);
    if (t != x) return false;
    for (uint32_t p : prime_factors(static_cast<uint32_t>(degree))) {
        uint64_t s = x;
        for (uint32_t i = 0; i < degree / p; ++i) s = poly_mulmod(s, s, poly);
        if (poly_degree(poly_gcd(s ^ x, poly)) > 0) return false;
    }
    return true;
}

Field::Field(int degree) : Field(degree, 0, std::nullopt) {}

Field::Field(int degree, uint32_t irreducible, std::optional<uint32_t> generator_bits) {
    if (degree < 1 || degree > 24) throw std::invalid_argument("field degree must be in [1, 24]");
    degree_ = degree;
    order_ = 1u << degree;
    irreducible_ = irreducible ? irreducible : kDefaultIrreducible[degree];
    if (!gf2_poly_irreducible(irreducible_, degree))
        throw std::invalid_argument("polynomial is not irreducible of the requested degree");
    order_factors_ = prime_factors(order_ - 1);

    if (generator_bits) {
        generator_ = element(*generator_bits);
        if (!is_primitive(generator_)) throw std::invalid_argument("supplied generator is not primitive");
    } else {
        generator_ = default_generator();
    }
    init_tables();
}

Elem Field::element(uint32_t bits) const {
    if (bits >= order_) throw std::invalid_argument("element does not fit in this field");
    return Elem{bits};
}

uint32_t Field::mul_slow(uint32_t a, uint32_t b) const {
    uint32_t acc = 0;
    while (b) {
        if (b & 1) acc ^= a;
        b >>= 1;
        a <<= 1;
        if (a & order_) a ^= irreducible_;
    }
    return acc;
}

Elem Field::mul(Elem a, Elem b) const {
    if (a.bits == 0 || b.bits == 0) return Elem{0};
    if (!log_.empty()) {
        return Elem{exp_[static_cast<uint32_t>(log_[a.bits]) + static_cast<uint32_t>(log_[b.bits])]};
    }
    return Elem{mul_slow(a.bits, b.bits)};
}

Elem Field::inv(Elem a) const {
    if (a.bits == 0) throw std::domain_error("inverse of zero");
    if (!log_.empty()) {
        uint32_t n = order_ - 1;
        return Elem{exp_[(n - static_cast<uint32_t>(log_[a.bits])) % n]};
    }
    return pow(a, static_cast<long long>(order_) - 2);
}

Elem Field::pow(Elem a, long long e) const {
    if (a.bits == 0) {
        if (e > 0) return Elem{0};
        if (e == 0) return Elem{1};
        throw std::domain_error("negative power of zero");
    }
    long long n = order_ - 1;
    long long r = ((e % n) + n) % n;
    if (!log_.empty()) {
        uint64_t k = (static_cast<uint64_t>(log_[a.bits]) * static_cast<uint64_t>(r)) % static_cast<uint64_t>(n);
        return Elem{exp_[k]};
    }
    Elem acc{1}, base = a;
    while (r) {
        if (r & 1) acc = Elem{mul_slow(acc.bits, base.bits)};
        base = Elem{mul_slow(base.bits, base.bits)};
        r >>= 1;
    }
    return acc;
}

Elem Field::sqrt(Elem a) const {
    // Squaring is a bijection in characteristic 2: sqrt = pow 2^(h-1).
    Elem r = a;
    for (int i = 0; i < degree_ - 1; ++i) r = square(r);
    return r;
}

int Field::trace(Elem a) const {
    if (!trace_.empty()) return trace_[a.bits];
    uint32_t acc = a.bits, s = a.bits;
    for (int i = 1; i < degree_; ++i) {
        s = mul_slow(s, s);
        acc ^= s;
    }
    return static_cast<int>(acc & 1u);
}

Elem Field::frobenius(Elem a, int l) const {
    int m = ((l % degree_) + degree_) % degree_;
    Elem r = a;
    for (int i = 0; i < m; ++i) r = square(r);
    return r;
}

int Field::dlog(Elem a) const {
    if (a.bits == 0) throw std::domain_error("discrete log of zero");
    if (log_.empty()) throw std::domain_error("discrete log table not available for this degree");
    return log_[a.bits];
}

Elem Field::exp(long long k) const {
    long long n = order_ - 1;
    long long r = ((k % n) + n) % n;
    if (!log_.empty()) return Elem{exp_[r]};
    return pow(generator_, r);
}

std::size_t Field::multiplicative_order(Elem a) const {
    if (a.bits == 0) throw std::domain_error("order of zero");
    std::size_t n = order_ - 1;
    for (uint32_t p : order_factors_) {
        while (n % p == 0 && pow(a, static_cast<long long>(n / p)).bits == 1) n /= p;
    }
    return n;
}

bool Field::is_primitive(Elem a) const {
    if (a.bits == 0) return false;
    return multiplicative_order(a) == order_ - 1;
}

Elem Field::find_generator_with_relation(const std::function<bool(const Field&, Elem)>& relation) const {
    for (uint32_t bits = 1; bits < order_; ++bits) {
        Elem c{bits};
        if (relation(*this, c) && is_primitive(c)) return c;
    }
    throw std::domain_error("no primitive element satisfies the relation in this representation");
}

Elem Field::default_generator() const {
    if (degree_ == 5) {
        // Distinguished w with w^18 + w = 1, so exponent tables match the
        // usual presentation of PG(2,32) data.
        for (uint32_t bits = 2; bits < order_; ++bits) {
            Elem c{bits};
            Elem p = c;
            for (int i = 0; i < 17; ++i) p = Elem{mul_slow(p.bits, c.bits)};
            if ((p.bits ^ c.bits) == 1 && is_primitive(c)) return c;
        }
        throw std::logic_error("no primitive w with w^18 + w = 1 found");
    }
    for (uint32_t bits = 2; bits < order_; ++bits) {
        if (is_primitive(Elem{bits})) return Elem{bits};
    }
    return Elem{1};  // GF(2)
}

void Field::init_tables() {
    if (degree_ > 20) return;  // beyond table scale; slow paths stay available
    uint32_t n = order_ - 1;
    exp_.assign(2 * n, 0);
    log_.assign(order_, -1);
    uint32_t v = 1;
    for (uint32_t k = 0; k < n; ++k) {
        exp_[k] = v;
        exp_[k + n] = v;
        if (log_[v] < 0) log_[v] = static_cast<int32_t>(k);
        v = mul_slow(v, generator_.bits);
    }
    if (v != 1) throw std::logic_error("generator does not have full order");

    trace_.assign(order_, 0);
    for (uint32_t x = 0; x < order_; ++x) {
        uint32_t acc = x, s = x;
        for (int i = 1; i < degree_; ++i) {
            s = mul_slow(s, s);
            acc ^= s;
        }
        if (acc > 1) throw std::logic_error("trace landed outside GF(2)");
        trace_[x] = static_cast<uint8_t>(acc);
    }
}

std::string Field::to_string(Elem a) const {
    if (a.bits == 0) return "0";
    if (log_.empty()) {
        char buf[16];
        std::snprintf(buf, sizeof buf, "0x%x", a.bits);
        return buf;
    }
    int k = dlog(a);
    if (k == 0) return "1";
    if (k == 1) return "w";
    return "w^" + std::to_string(k);
}

Elem Field::parse(const std::string& text) const {
    if (text.empty()) throw std::invalid_argument("empty field element");
    Elem acc{0};
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find('+', pos);
        std::string term = text.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        pos = next == std::string::npos ? text.size() : next + 1;
        if (term.empty()) throw std::invalid_argument("malformed field element: " + text);
        Elem value{0};
        if (term.rfind("0x", 0) == 0 || term.rfind("0X", 0) == 0) {
            value = element(static_cast<uint32_t>(std::stoul(term.substr(2), nullptr, 16)));
        } else if (term == "0") {
            value = zero();
        } else if (term == "1") {
            value = one();
        } else if (term == "w") {
            value = generator_;
        } else if (term.rfind("w^", 0) == 0) {
            value = exp(std::stoll(term.substr(2)));
        } else {
            throw std::invalid_argument("malformed field element term: " + term);
        }
        acc = add(acc, value);
    }
    return acc;
}

std::string Field::irreducible_hex() const {
    char buf[16];
    std::snprintf(buf, sizeof buf, "0x%x", irreducible_);
    return buf;
}

std::string Field::generator_hex() const {
    char buf[16];
    std::snprintf(buf, sizeof buf, "0x%x", generator_.bits);
    return buf;
}

}  // namespace maxarc
