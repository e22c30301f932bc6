#include "suppvar/field.hpp"

#include "suppvar/error.hpp"

#include <algorithm>
#include <sstream>

namespace suppvar {

namespace {

long long mod(long long v, long long p) {
    long long r = v % p;
    return r < 0 ? r + p : r;
}

// dense polynomial arithmetic over F_p, low-to-high coefficients
using Poly = std::vector<long long>;

Poly poly_trim(Poly f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

Poly poly_mul(const Poly& f, const Poly& g, long long p) {
    if (f.empty() || g.empty()) return {};
    Poly h(f.size() + g.size() - 1, 0);
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j)
            h[i + j] = mod(h[i + j] + f[i] * g[j], p);
    return poly_trim(h);
}

long long inv_mod_p(long long a, long long p) {
    long long t = 0, nt = 1, r = p, nr = mod(a, p);
    while (nr != 0) {
        long long qt = r / nr;
        std::swap(t -= qt * nt, nt);
        std::swap(r -= qt * nr, nr);
    }
    return mod(t, p);
}

// f mod g, g monic-normalizable
Poly poly_rem(Poly f, const Poly& g, long long p) {
    f = poly_trim(std::move(f));
    Poly gg = poly_trim(g);
    if (gg.empty()) fail("Internal", "polynomial division by zero");
    long long lead_inv = inv_mod_p(gg.back(), p);
    while (f.size() >= gg.size()) {
        long long c = mod(f.back() * lead_inv, p);
        std::size_t shift = f.size() - gg.size();
        for (std::size_t i = 0; i < gg.size(); ++i)
            f[shift + i] = mod(f[shift + i] - c * gg[i], p);
        f = poly_trim(std::move(f));
    }
    return f;
}

Poly poly_gcd(Poly a, Poly b, long long p) {
    a = poly_trim(std::move(a));
    b = poly_trim(std::move(b));
    while (!b.empty()) {
        Poly r = poly_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// x^(p^k) mod f by repeated squaring of x^p
Poly poly_xq_pow(const Poly& f, long long p, int k) {
    Poly x = {0, 1};
    Poly acc = poly_rem(x, f, p);
    for (int i = 0; i < k; ++i) {
        // acc <- acc^p mod f
        Poly r = {1};
        Poly base = acc;
        long long e = p;
        while (e > 0) {
            if (e & 1) r = poly_rem(poly_mul(r, base, p), f, p);
            base = poly_rem(poly_mul(base, base, p), f, p);
            e >>= 1;
        }
        acc = std::move(r);
    }
    return acc;
}

} // namespace

bool FieldSpec::operator==(const FieldSpec& o) const {
    return p == o.p && m == o.m && min_poly == o.min_poly;
}

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool poly_irreducible_mod_p(const std::vector<long long>& poly, long long p) {
    Poly f = poly_trim(poly);
    if (f.size() < 2) return false;
    int m = int(f.size()) - 1;
    if (m == 1) return true;
    // x^(p^m) == x mod f, and gcd(x^(p^(m/t)) - x, f) = 1 for prime t | m
    Poly xm = poly_xq_pow(f, p, m);
    Poly x = poly_rem({0, 1}, f, p);
    if (poly_trim([&] { Poly d = xm; d.resize(std::max(d.size(), x.size()), 0);
                        for (std::size_t i = 0; i < x.size(); ++i) d[i] = mod(d[i] - x[i], p);
                        return d; }()) != Poly{})
        return false;
    for (int t = 2; t <= m; ++t) {
        if (m % t != 0 || !is_prime(t)) continue;
        Poly xt = poly_xq_pow(f, p, m / t);
        Poly d = xt;
        d.resize(std::max(d.size(), x.size()), 0);
        for (std::size_t i = 0; i < x.size(); ++i) d[i] = mod(d[i] - x[i], p);
        Poly g = poly_gcd(f, poly_trim(std::move(d)), p);
        if (g.size() > 1) return false;
    }
    return true;
}

Field::Field(FieldSpec spec) : spec_(std::move(spec)) {
    if (!is_prime(spec_.p)) fail("InvalidField", "p = " + std::to_string(spec_.p) + " is not prime");
    if (spec_.m < 1 || spec_.m > 16) fail("InvalidField", "extension degree m out of range");
    long long q = 1;
    for (int i = 0; i < spec_.m; ++i) {
        q *= spec_.p;
        if (q > 65535) fail("InvalidField", "p^m exceeds the supported element range (65535)");
    }
    q_ = std::uint32_t(q);
    if (spec_.m == 1) {
        if (!spec_.min_poly.empty()) fail("InvalidField", "min_poly must be absent when m = 1");
    } else {
        if (spec_.min_poly.size() != std::size_t(spec_.m) + 1)
            fail("InvalidField", "min_poly must have degree m");
        for (auto& c : spec_.min_poly) c = mod(c, spec_.p);
        if (spec_.min_poly.back() != 1) fail("InvalidField", "min_poly must be monic");
        if (!poly_irreducible_mod_p(spec_.min_poly, spec_.p))
            fail("InvalidField", "min_poly is reducible over F_p");
    }
    if (q_ <= 1024) {
        tables_ = true;
        add_tab_.resize(std::size_t(q_) * q_);
        mul_tab_.resize(std::size_t(q_) * q_);
        neg_tab_.resize(q_);
        inv_tab_.assign(q_, 0);
        for (std::uint32_t a = 0; a < q_; ++a) {
            neg_tab_[a] = neg_slow(felem(a));
            for (std::uint32_t b = 0; b < q_; ++b) {
                add_tab_[std::size_t(a) * q_ + b] = add_slow(felem(a), felem(b));
                mul_tab_[std::size_t(a) * q_ + b] = mul_slow(felem(a), felem(b));
            }
        }
        for (std::uint32_t a = 1; a < q_; ++a)
            for (std::uint32_t b = 1; b < q_; ++b)
                if (mul_tab_[std::size_t(a) * q_ + b] == 1) { inv_tab_[a] = felem(b); break; }
    }
}

felem Field::add_slow(felem a, felem b) const {
    if (spec_.m == 1) return felem((a + b) % q_);
    std::uint32_t r = 0, base = 1;
    std::uint32_t x = a, y = b;
    for (int i = 0; i < spec_.m; ++i) {
        std::uint32_t d = (x % spec_.p + y % spec_.p) % spec_.p;
        r += d * base;
        base *= std::uint32_t(spec_.p);
        x /= std::uint32_t(spec_.p);
        y /= std::uint32_t(spec_.p);
    }
    return felem(r);
}

felem Field::neg_slow(felem a) const {
    if (spec_.m == 1) return felem(a == 0 ? 0 : q_ - a);
    std::uint32_t r = 0, base = 1, x = a;
    for (int i = 0; i < spec_.m; ++i) {
        std::uint32_t d = x % spec_.p;
        r += (d == 0 ? 0 : std::uint32_t(spec_.p) - d) * base;
        base *= std::uint32_t(spec_.p);
        x /= std::uint32_t(spec_.p);
    }
    return felem(r);
}

felem Field::mul_slow(felem a, felem b) const {
    long long p = spec_.p;
    if (spec_.m == 1) return felem((std::uint64_t(a) * b) % q_);
    std::vector<long long> fa = decode(a), fb = decode(b);
    Poly prod = poly_mul(fa, fb, p);
    Poly r = poly_rem(prod, spec_.min_poly, p);
    r.resize(spec_.m, 0);
    std::uint32_t enc = 0, base = 1;
    for (int i = 0; i < spec_.m; ++i) {
        enc += std::uint32_t(r[i]) * base;
        base *= std::uint32_t(p);
    }
    return felem(enc);
}

felem Field::inv(felem a) const {
    if (a == 0) fail("InvalidParams", "division by zero in F_q");
    if (tables_) return inv_tab_[a];
    return pow(a, (long long)q_ - 2);
}

felem Field::pow(felem a, long long e) const {
    if (e < 0) return inv(pow(a, -e));
    felem r = one(), base = a;
    while (e > 0) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

felem Field::frobenius_inv(felem a) const {
    if (spec_.m == 1) return a;
    long long e = 1;
    for (int i = 0; i < spec_.m - 1; ++i) e *= spec_.p;
    return pow(a, e);
}

felem Field::from_int(long long v) const {
    return felem(mod(v, spec_.p)); // prime subfield embedding
}

felem Field::encode(const std::vector<long long>& coeffs) const {
    if (coeffs.size() > std::size_t(spec_.m))
        fail("InvalidParams", "coefficient vector longer than extension degree");
    std::uint32_t enc = 0, base = 1;
    for (int i = 0; i < spec_.m; ++i) {
        long long c = i < int(coeffs.size()) ? mod(coeffs[i], spec_.p) : 0;
        enc += std::uint32_t(c) * base;
        base *= std::uint32_t(spec_.p);
    }
    return felem(enc);
}

std::vector<long long> Field::decode(felem a) const {
    std::vector<long long> r(spec_.m);
    std::uint32_t x = a;
    for (int i = 0; i < spec_.m; ++i) {
        r[i] = x % spec_.p;
        x /= std::uint32_t(spec_.p);
    }
    return r;
}

std::string Field::to_string(felem a) const {
    if (spec_.m == 1) return std::to_string(a);
    std::ostringstream os;
    auto c = decode(a);
    os << "[";
    for (int i = 0; i < spec_.m; ++i) os << (i ? "," : "") << c[i];
    os << "]";
    return os.str();
}

} // namespace suppvar
