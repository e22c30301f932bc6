#include "suppvar/rational.hpp"

#include "suppvar/error.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace suppvar {

namespace {

long long checked_ll(__int128 v) {
    if (v > __int128(INT64_MAX) || v < __int128(INT64_MIN))
        fail("Internal", "rational arithmetic overflow");
    return (long long)v;
}

__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

} // namespace

Rational::Rational(long long n, long long d) {
    *this = normalized(n, d);
}

Rational Rational::normalized(__int128 n, __int128 d) {
    if (d == 0) fail("Internal", "rational with zero denominator");
    if (d < 0) { n = -n; d = -d; }
    __int128 g = gcd128(n, d);
    if (g == 0) g = 1;
    Rational r;
    r.num = checked_ll(n / g);
    r.den = checked_ll(d / g);
    return r;
}

Rational Rational::operator+(const Rational& o) const {
    return normalized(__int128(num) * o.den + __int128(o.num) * den, __int128(den) * o.den);
}
Rational Rational::operator-(const Rational& o) const {
    return normalized(__int128(num) * o.den - __int128(o.num) * den, __int128(den) * o.den);
}
Rational Rational::operator*(const Rational& o) const {
    return normalized(__int128(num) * o.num, __int128(den) * o.den);
}
Rational Rational::operator/(const Rational& o) const {
    if (o.num == 0) fail("Internal", "rational division by zero");
    return normalized(__int128(num) * o.den, __int128(den) * o.num);
}
bool Rational::operator<(const Rational& o) const {
    return __int128(num) * o.den < __int128(o.num) * den;
}

std::string Rational::to_string() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

Quad::Quad(Rational ra, Rational rb, long long rd) : a(ra), b(rb), d(rd) {
    if (b.is_zero()) d = 0;
    if (d == 0) b = Rational(0);
    if (d < 0) fail("InvalidParams", "negative radicand in surd");
    // pull square factors out of the radicand
    for (long long s = 2; d > 1 && s * s <= d; ++s)
        while (d % (s * s) == 0) {
            d /= s * s;
            b = b * Rational(s);
        }
    if (d == 1) { a = a + b; b = Rational(0); d = 0; }
}

Quad Quad::operator+(const Quad& o) const {
    if (d != 0 && o.d != 0 && d != o.d) fail("InvalidParams", "mixed radicands in surd addition");
    return Quad(a + o.a, b + o.b, d != 0 ? d : o.d);
}
Quad Quad::operator-(const Quad& o) const {
    if (d != 0 && o.d != 0 && d != o.d) fail("InvalidParams", "mixed radicands in surd subtraction");
    return Quad(a - o.a, b - o.b, d != 0 ? d : o.d);
}
Quad Quad::operator*(const Quad& o) const {
    if (d != 0 && o.d != 0 && d != o.d) fail("InvalidParams", "mixed radicands in surd product");
    long long rad = d != 0 ? d : o.d;
    return Quad(a * o.a + b * o.b * Rational(rad), a * o.b + b * o.a, rad);
}

double Quad::to_double() const {
    return a.to_double() + b.to_double() * std::sqrt(double(d));
}

std::string Quad::to_string() const {
    if (d == 0) return a.to_string();
    std::ostringstream os;
    os << a.to_string();
    if (b.sign() >= 0) os << "+";
    os << b.to_string() << "*sqrt(" << d << ")";
    return os.str();
}

QPoly QPoly::from(std::vector<Rational> coeffs) {
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
    return QPoly{std::move(coeffs)};
}

Rational QPoly::eval(const Rational& x) const {
    Rational r(0);
    for (int i = int(c.size()) - 1; i >= 0; --i) r = r * x + c[i];
    return r;
}

std::string QPoly::to_string() const {
    if (c.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i].is_zero()) continue;
        if (os.tellp() > 0) os << " + ";
        os << c[i].to_string();
        if (i >= 1) os << "*t";
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

QPoly qp_add(const QPoly& f, const QPoly& g) {
    std::vector<Rational> c(std::max(f.c.size(), g.c.size()), Rational(0));
    for (std::size_t i = 0; i < f.c.size(); ++i) c[i] = c[i] + f.c[i];
    for (std::size_t i = 0; i < g.c.size(); ++i) c[i] = c[i] + g.c[i];
    return QPoly::from(std::move(c));
}

QPoly qp_sub(const QPoly& f, const QPoly& g) {
    std::vector<Rational> c(std::max(f.c.size(), g.c.size()), Rational(0));
    for (std::size_t i = 0; i < f.c.size(); ++i) c[i] = c[i] + f.c[i];
    for (std::size_t i = 0; i < g.c.size(); ++i) c[i] = c[i] - g.c[i];
    return QPoly::from(std::move(c));
}

QPoly qp_mul(const QPoly& f, const QPoly& g) {
    if (f.is_zero() || g.is_zero()) return QPoly{};
    std::vector<Rational> c(f.c.size() + g.c.size() - 1, Rational(0));
    for (std::size_t i = 0; i < f.c.size(); ++i)
        for (std::size_t j = 0; j < g.c.size(); ++j) c[i + j] = c[i + j] + f.c[i] * g.c[j];
    return QPoly::from(std::move(c));
}

void qp_divmod(const QPoly& f, const QPoly& g, QPoly& quot, QPoly& rem) {
    if (g.is_zero()) fail("Internal", "polynomial division by zero");
    std::vector<Rational> r = f.c;
    std::vector<Rational> q(f.c.size() > g.c.size() ? f.c.size() - g.c.size() + 1 : 1, Rational(0));
    Rational lead = g.c.back();
    while (true) {
        while (!r.empty() && r.back().is_zero()) r.pop_back();
        if (r.size() < g.c.size() || r.empty()) break;
        Rational coef = r.back() / lead;
        std::size_t shift = r.size() - g.c.size();
        q[shift] = coef;
        for (std::size_t i = 0; i < g.c.size(); ++i)
            r[shift + i] = r[shift + i] - coef * g.c[i];
    }
    quot = QPoly::from(std::move(q));
    rem = QPoly::from(std::move(r));
}

QPoly qp_monic(QPoly f) {
    if (f.is_zero()) return f;
    Rational lead = f.c.back();
    for (auto& x : f.c) x = x / lead;
    return f;
}

QPoly qp_gcd(QPoly f, QPoly g) {
    f = qp_monic(std::move(f));
    g = qp_monic(std::move(g));
    while (!g.is_zero()) {
        QPoly q, r;
        qp_divmod(f, g, q, r);
        f = std::move(g);
        g = qp_monic(std::move(r));
    }
    return qp_monic(std::move(f));
}

QPoly qp_derivative(const QPoly& f) {
    if (f.c.size() <= 1) return QPoly{};
    std::vector<Rational> c(f.c.size() - 1);
    for (std::size_t i = 1; i < f.c.size(); ++i) c[i - 1] = f.c[i] * Rational((long long)i);
    return QPoly::from(std::move(c));
}

int multiplicity_at_one(QPoly f) {
    if (f.is_zero()) return 0;
    QPoly one_minus_t = QPoly::from({Rational(1), Rational(-1)});
    int mult = 0;
    while (!f.is_zero() && f.eval(Rational(1)).is_zero()) {
        QPoly q, r;
        qp_divmod(f, one_minus_t, q, r);
        if (!r.is_zero()) break;
        f = std::move(q);
        ++mult;
    }
    return mult;
}

namespace {

// Root isolation runs over big rationals: bisection to 1e-12 pushes the
// denominators far past 64 bits.
using BigQ = boost::multiprecision::cpp_rational;
using BigPoly = std::vector<BigQ>; // low-to-high, trimmed

BigPoly bp_trim(BigPoly f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

BigPoly bp_derivative(const BigPoly& f) {
    if (f.size() <= 1) return {};
    BigPoly d(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i) d[i - 1] = f[i] * BigQ(i);
    return d;
}

void bp_divmod(const BigPoly& f, const BigPoly& g, BigPoly& quot, BigPoly& rem) {
    BigPoly r = f;
    BigPoly q(f.size() > g.size() ? f.size() - g.size() + 1 : 1, BigQ(0));
    const BigQ lead = g.back();
    while (true) {
        r = bp_trim(std::move(r));
        if (r.size() < g.size() || r.empty()) break;
        BigQ coef = r.back() / lead;
        std::size_t shift = r.size() - g.size();
        q[shift] = coef;
        for (std::size_t i = 0; i < g.size(); ++i) r[shift + i] -= coef * g[i];
    }
    quot = bp_trim(std::move(q));
    rem = bp_trim(std::move(r));
}

BigPoly bp_monic(BigPoly f) {
    if (f.empty()) return f;
    BigQ lead = f.back();
    for (auto& x : f) x /= lead;
    return f;
}

BigPoly bp_gcd(BigPoly f, BigPoly g) {
    f = bp_monic(bp_trim(std::move(f)));
    g = bp_monic(bp_trim(std::move(g)));
    while (!g.empty()) {
        BigPoly q, r;
        bp_divmod(f, g, q, r);
        f = std::move(g);
        g = bp_monic(std::move(r));
    }
    return f;
}

int bp_sign_at(const BigPoly& f, const BigQ& x) {
    BigQ r = 0;
    for (std::size_t i = f.size(); i-- > 0;) r = r * x + f[i];
    return r > 0 ? 1 : r < 0 ? -1 : 0;
}

std::vector<BigPoly> sturm_chain(const BigPoly& f) {
    std::vector<BigPoly> chain;
    chain.push_back(f);
    chain.push_back(bp_derivative(f));
    while (!chain.back().empty() && chain.back().size() > 1) {
        BigPoly q, r;
        bp_divmod(chain[chain.size() - 2], chain.back(), q, r);
        if (r.empty()) break;
        for (auto& x : r) x = -x;
        chain.push_back(std::move(r));
    }
    if (chain.back().empty()) chain.pop_back();
    return chain;
}

int sign_changes(const std::vector<BigPoly>& chain, const BigQ& x) {
    int changes = 0, last = 0;
    for (const auto& f : chain) {
        int s = bp_sign_at(f, x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

} // namespace

std::optional<RootBracket> largest_real_root(const std::vector<long long>& poly, double width) {
    BigPoly f;
    f.reserve(poly.size());
    for (long long v : poly) f.push_back(BigQ(v));
    f = bp_trim(std::move(f));
    if (f.size() <= 1) return std::nullopt;
    BigPoly g = bp_gcd(f, bp_derivative(f));
    if (g.size() > 1) { // squarefree part so the Sturm count is clean
        BigPoly q, r;
        bp_divmod(f, g, q, r);
        f = std::move(q);
    }
    f = bp_monic(std::move(f));
    auto chain = sturm_chain(f);

    // Cauchy bound: 1 + max |c_i| for monic f
    BigQ bound = 1;
    for (std::size_t i = 0; i + 1 < f.size(); ++i) {
        BigQ mag = f[i] < 0 ? BigQ(-f[i]) : f[i];
        if (bound < mag) bound = mag;
    }
    bound += 1;

    auto roots_in = [&](const BigQ& lo, const BigQ& hi) {
        return sign_changes(chain, lo) - sign_changes(chain, hi);
    };
    BigQ lo = -bound, hi = bound;
    if (roots_in(lo, hi) == 0) return std::nullopt;
    for (int it = 0; it < 512; ++it) {
        if ((hi - lo).convert_to<double>() < width) break;
        BigQ mid = (lo + hi) / 2;
        if (bp_sign_at(f, mid) == 0) {
            BigQ eps = (hi - lo) / 1000000;
            if (roots_in(mid + eps, hi) > 0) { lo = mid + eps; continue; }
            lo = mid - eps;
            hi = mid + eps;
            continue;
        }
        // keep the upper half whenever it still holds a root
        if (roots_in(mid, hi) > 0)
            lo = mid;
        else
            hi = mid;
    }
    return RootBracket{lo.convert_to<double>(), hi.convert_to<double>()};
}

} // namespace suppvar
