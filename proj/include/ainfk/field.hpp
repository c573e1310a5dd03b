// Exact scalar arithmetic over Q or a prime field F_p.
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace ainfk {

using Scalar = mpq_class;

enum class FieldKind { rationals, prime };

struct FieldSpec {
    FieldKind kind = FieldKind::rationals;
    unsigned long characteristic = 0;  // 0 for Q, prime p otherwise
};

inline bool is_prime_ul(unsigned long p) {
    if (p < 2) return false;
    for (unsigned long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// All scalars flowing through a Field are kept canonical: lowest terms over Q,
// residues 0..p-1 with denominator 1 over F_p.
class Field {
public:
    Field() = default;
    explicit Field(FieldSpec spec) : spec_(spec) {
        if (spec_.kind == FieldKind::prime && !is_prime_ul(spec_.characteristic))
            throw std::invalid_argument("field characteristic must be prime");
        if (spec_.kind == FieldKind::rationals && spec_.characteristic != 0)
            throw std::invalid_argument("rational field has characteristic 0");
    }

    static Field rationals() { return Field(FieldSpec{FieldKind::rationals, 0}); }
    static Field prime(unsigned long p) { return Field(FieldSpec{FieldKind::prime, p}); }

    const FieldSpec& spec() const { return spec_; }
    bool is_prime_field() const { return spec_.kind == FieldKind::prime; }
    unsigned long characteristic() const { return spec_.characteristic; }

    Scalar norm(const Scalar& a) const {
        Scalar r = a;
        r.canonicalize();
        if (is_prime_field()) {
            mpz_class p(spec_.characteristic);
            mpz_class num = r.get_num() % p;
            if (num < 0) num += p;
            mpz_class den = r.get_den() % p;
            if (den < 0) den += p;
            if (den == 0) throw std::domain_error("division by p in F_p scalar");
            if (den != 1) num = (num * inv_mod(den, p)) % p;
            return Scalar(num);
        }
        return r;
    }

    Scalar from_long(long n) const { return norm(Scalar(n)); }
    Scalar zero() const { return Scalar(0); }
    Scalar one() const { return norm(Scalar(1)); }

    Scalar add(const Scalar& a, const Scalar& b) const { return norm(a + b); }
    Scalar sub(const Scalar& a, const Scalar& b) const { return norm(a - b); }
    Scalar mul(const Scalar& a, const Scalar& b) const { return norm(a * b); }
    Scalar neg(const Scalar& a) const { return norm(-a); }

    Scalar inv(const Scalar& a) const {
        if (a == 0) throw std::domain_error("inverse of zero");
        if (is_prime_field()) {
            mpz_class p(spec_.characteristic);
            return Scalar(inv_mod(norm(a).get_num(), p));
        }
        return Scalar(1) / a;
    }

    Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

    bool is_zero(const Scalar& a) const { return norm(a) == 0; }

    // "p/q" over Q (also plain integers), decimal residue over F_p
    std::string print(const Scalar& a) const {
        Scalar r = norm(a);
        if (is_prime_field()) return r.get_num().get_str();
        return r.get_str();
    }

    Scalar parse(const std::string& s) const {
        Scalar r;
        if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad scalar string: " + s);
        r.canonicalize();
        return norm(r);
    }

private:
    static mpz_class inv_mod(const mpz_class& a, const mpz_class& p) {
        mpz_class r;
        if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()) == 0)
            throw std::domain_error("not invertible mod p");
        return r;
    }

    FieldSpec spec_;
};

}  // namespace ainfk
