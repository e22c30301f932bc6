#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace suppvar {

// Exact rational with 64-bit numerator/denominator; intermediate products go
// through 128 bits and overflow raises an error instead of wrapping.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n) : num(n), den(1) {}
    Rational(long long n, long long d);

    static Rational normalized(__int128 n, __int128 d);

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    Rational operator-() const { return Rational(-num, den); }
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const;

    bool is_zero() const { return num == 0; }
    bool is_integer() const { return den == 1; }
    int sign() const { return num > 0 ? 1 : num < 0 ? -1 : 0; }
    double to_double() const { return double(num) / double(den); }
    std::string to_string() const;
};

// Quadratic surd a + b*sqrt(d) with rational a, b and a squarefree-ish integer
// radicand; d = 0 is the rational case. Mixed radicands do not combine.
struct Quad {
    Rational a;
    Rational b;
    long long d = 0;

    Quad() = default;
    Quad(Rational ra) : a(ra), b(0), d(0) {}
    Quad(Rational ra, Rational rb, long long rd);

    Quad operator+(const Quad& o) const;
    Quad operator-(const Quad& o) const;
    Quad operator*(const Quad& o) const;
    bool operator==(const Quad& o) const { return a == o.a && b == o.b && d == o.d; }
    bool operator!=(const Quad& o) const { return !(*this == o); }

    bool is_zero() const { return a.is_zero() && b.is_zero(); }
    bool is_rational() const { return d == 0; }
    bool is_integer() const { return d == 0 && a.is_integer(); }
    double to_double() const;
    std::string to_string() const;
};

// Polynomial over the rationals, low-to-high coefficients, trimmed.
struct QPoly {
    std::vector<Rational> c;

    static QPoly from(std::vector<Rational> coeffs);
    int degree() const { return int(c.size()) - 1; } // -1 for the zero polynomial
    bool is_zero() const { return c.empty(); }
    Rational eval(const Rational& x) const;
    std::string to_string() const;
};

QPoly qp_add(const QPoly& f, const QPoly& g);
QPoly qp_sub(const QPoly& f, const QPoly& g);
QPoly qp_mul(const QPoly& f, const QPoly& g);
// division with remainder; divisor must be nonzero
void qp_divmod(const QPoly& f, const QPoly& g, QPoly& quot, QPoly& rem);
QPoly qp_gcd(QPoly f, QPoly g); // monic gcd
QPoly qp_derivative(const QPoly& f);
QPoly qp_monic(QPoly f);

// Multiplicity of root x = 1.
int multiplicity_at_one(QPoly f);

// Sturm isolation of the largest real root of an integer polynomial
// (low-to-high coefficients). Returns the root bracketed to the requested
// absolute width; nullopt when there is no real root.
struct RootBracket {
    double lo = 0;
    double hi = 0;
    double value() const { return 0.5 * (lo + hi); }
    double width() const { return hi - lo; }
};
std::optional<RootBracket> largest_real_root(const std::vector<long long>& poly, double width);

} // namespace suppvar
