#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace crm {

// Base field descriptor: characteristic 0 (rationals) or a prime p >= 5.
// Characteristics 2 and 3 are rejected: the built-in datasets contain
// denominators 2, 3 and 4.
struct FieldSpec {
    enum class Kind { Rationals, PrimeField };
    Kind kind = Kind::Rationals;
    std::uint64_t characteristic = 0;
};

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Arbitrary-precision rationals, always kept in canonical form by GMP.
struct QQ {
    using Element = mpq_class;

    static FieldSpec spec() { return {FieldSpec::Kind::Rationals, 0}; }

    Element zero() const { return Element(0); }
    Element one() const { return Element(1); }
    Element from_int(long v) const { return Element(v); }
    Element from_ratio(long num, long den) const {
        Element e(num, den);
        e.canonicalize();
        return e;
    }

    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element neg(const Element& a) const { return -a; }
    Element inv(const Element& a) const {
        if (a == 0) throw std::domain_error("QQ: division by zero");
        return Element(1) / a;
    }
    Element div(const Element& a, const Element& b) const { return mul(a, inv(b)); }

    bool is_zero(const Element& a) const { return a == 0; }
    bool eq(const Element& a, const Element& b) const { return a == b; }

    std::string to_string(const Element& a) const { return a.get_str(); }
    Element parse(const std::string& s) const {
        Element e(s);
        e.canonicalize();
        return e;
    }
};

// Prime field F_p with runtime modulus, p >= 5.
struct GFp {
    std::uint64_t p = 5;
    using Element = std::uint64_t;

    GFp() = default;
    explicit GFp(std::uint64_t prime) : p(prime) {
        if (prime < 5 || !is_prime_u64(prime))
            throw std::invalid_argument("GFp: modulus must be a prime >= 5");
    }

    FieldSpec spec() const { return {FieldSpec::Kind::PrimeField, p}; }

    Element zero() const { return 0; }
    Element one() const { return 1; }
    Element from_int(long v) const {
        long long m = static_cast<long long>(p);
        long long r = static_cast<long long>(v) % m;
        if (r < 0) r += m;
        return static_cast<Element>(r);
    }

    Element add(Element a, Element b) const { return (a + b) % p; }
    Element sub(Element a, Element b) const { return (a + p - b % p) % p; }
    Element mul(Element a, Element b) const {
        return static_cast<Element>((static_cast<unsigned __int128>(a) * b) % p);
    }
    Element neg(Element a) const { return (p - a % p) % p; }
    Element pow(Element a, std::uint64_t e) const {
        Element r = 1, base = a % p;
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }
    Element inv(Element a) const {
        if (a % p == 0) throw std::domain_error("GFp: division by zero");
        return pow(a, p - 2);
    }
    Element div(Element a, Element b) const { return mul(a, inv(b)); }

    bool is_zero(Element a) const { return a % p == 0; }
    bool eq(Element a, Element b) const { return a % p == b % p; }

    std::string to_string(Element a) const { return std::to_string(a % p); }
    Element parse(const std::string& s) const {
        auto slash = s.find('/');
        if (slash == std::string::npos) {
            mpz_class num(s);
            mpz_class r = num % static_cast<unsigned long>(p);
            if (r < 0) r += static_cast<unsigned long>(p);
            return r.get_ui();
        }
        Element num = parse(s.substr(0, slash));
        Element den = parse(s.substr(slash + 1));
        return div(num, den);
    }
};

// Reduction Q -> F_p; empty when the denominator vanishes mod p.
inline std::optional<std::uint64_t> reduce_mod(const mpq_class& a, const GFp& f) {
    mpz_class den = a.get_den();
    mpz_class dm = den % static_cast<unsigned long>(f.p);
    if (dm == 0) return std::nullopt;
    mpz_class num = a.get_num() % static_cast<unsigned long>(f.p);
    if (num < 0) num += static_cast<unsigned long>(f.p);
    return f.div(num.get_ui(), dm.get_ui());
}

}  // namespace crm
