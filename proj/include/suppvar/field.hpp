#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace suppvar {

// Element of F_{p^m}, encoded as an integer < p^m: the coefficient vector
// (c_0,...,c_{m-1}) against the power basis of min_poly packed in base p.
using felem = std::uint16_t;

struct FieldSpec {
    long long p = 2;
    int m = 1;
    std::vector<long long> min_poly; // monic, degree m, low-to-high; empty when m == 1

    bool operator==(const FieldSpec& o) const;
};

// Exact arithmetic context for F_{p^m}. Small fields (q <= 1024) get full
// add/mul/inv lookup tables; larger fields fall back to polynomial arithmetic.
class Field {
public:
    explicit Field(FieldSpec spec);

    const FieldSpec& spec() const { return spec_; }
    long long p() const { return spec_.p; }
    int m() const { return spec_.m; }
    std::uint32_t q() const { return q_; }
    bool prime_field() const { return spec_.m == 1; }

    felem zero() const { return 0; }
    felem one() const { return 1; }

    felem add(felem a, felem b) const {
        if (tables_) return add_tab_[std::size_t(a) * q_ + b];
        return add_slow(a, b);
    }
    felem sub(felem a, felem b) const { return add(a, neg(b)); }
    felem neg(felem a) const {
        if (tables_) return neg_tab_[a];
        return neg_slow(a);
    }
    felem mul(felem a, felem b) const {
        if (tables_) return mul_tab_[std::size_t(a) * q_ + b];
        return mul_slow(a, b);
    }
    felem inv(felem a) const;
    felem div(felem a, felem b) const { return mul(a, inv(b)); }
    felem pow(felem a, long long e) const;

    // x -> x^(p^(m-1)), the inverse of the Frobenius a -> a^p.
    felem frobenius_inv(felem a) const;

    // Integers embed through the prime subfield.
    felem from_int(long long v) const;
    felem encode(const std::vector<long long>& coeffs) const;
    std::vector<long long> decode(felem a) const;

    std::string to_string(felem a) const;

private:
    felem add_slow(felem a, felem b) const;
    felem neg_slow(felem a) const;
    felem mul_slow(felem a, felem b) const;

    FieldSpec spec_;
    std::uint32_t q_ = 0;
    bool tables_ = false;
    std::vector<felem> add_tab_;
    std::vector<felem> mul_tab_;
    std::vector<felem> neg_tab_;
    std::vector<felem> inv_tab_;
};

bool is_prime(long long n);

// Irreducibility of a monic polynomial over F_p (coefficients low-to-high).
bool poly_irreducible_mod_p(const std::vector<long long>& poly, long long p);

} // namespace suppvar
