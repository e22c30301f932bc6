#include "suppvar/growth.hpp"

#include "suppvar/error.hpp"

#include <algorithm>
#include <cmath>

namespace suppvar {

namespace {

// Berlekamp-Massey over Q: shortest LFSR c with
// a_n = c_1 a_{n-1} + ... + c_L a_{n-L} for all covered n.
std::vector<Rational> berlekamp_massey(const std::vector<Rational>& s) {
    std::vector<Rational> C = {Rational(1)}, B = {Rational(1)};
    int L = 0, m = 1;
    Rational b(1);
    for (std::size_t n = 0; n < s.size(); ++n) {
        Rational delta = s[n];
        for (int i = 1; i <= L; ++i) delta = delta + C[i] * s[n - i];
        if (delta.is_zero()) {
            ++m;
        } else if (2 * L <= int(n)) {
            std::vector<Rational> T = C;
            Rational coef = delta / b;
            if (C.size() < B.size() + m) C.resize(B.size() + m, Rational(0));
            for (std::size_t i = 0; i < B.size(); ++i)
                C[i + m] = C[i + m] - coef * B[i];
            L = int(n) + 1 - L;
            B = std::move(T);
            b = delta;
            m = 1;
        } else {
            Rational coef = delta / b;
            if (C.size() < B.size() + m) C.resize(B.size() + m, Rational(0));
            for (std::size_t i = 0; i < B.size(); ++i)
                C[i + m] = C[i + m] - coef * B[i];
            ++m;
        }
    }
    C.resize(std::size_t(L) + 1, Rational(0));
    return C; // connection polynomial: C[0]=1, a_n + sum_{i>=1} C[i] a_{n-i} = 0
}

bool recurrence_holds(const std::vector<Rational>& C, const std::vector<Rational>& s,
                      std::size_t from) {
    int L = int(C.size()) - 1;
    for (std::size_t n = std::max(from, std::size_t(L)); n < s.size(); ++n) {
        Rational acc = s[n];
        for (int i = 1; i <= L; ++i) acc = acc + C[i] * s[n - i];
        if (!acc.is_zero()) return false;
    }
    return true;
}

GammaVerdict slope_mode(const std::vector<Quad>& v) {
    GammaVerdict out;
    out.method = GammaMethod::SlopeEstimate;
    // least-squares slope of log a_n vs log n on the tail half
    std::size_t start = v.size() / 2;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int cnt = 0;
    for (std::size_t n = std::max<std::size_t>(start, 1); n < v.size(); ++n) {
        double val = v[n].to_double();
        if (val <= 0) continue;
        double x = std::log(double(n)), y = std::log(val);
        sx += x; sy += y; sxx += x * x; sxy += x * y;
        ++cnt;
    }
    out.window = cnt;
    if (cnt < 3) {
        out.flagged = true;
        return out;
    }
    double denom = cnt * sxx - sx * sx;
    if (std::abs(denom) < 1e-12) {
        out.flagged = true;
        return out;
    }
    double slope = (cnt * sxy - sx * sy) / denom;
    out.slope = slope;
    double rounded = std::round(slope);
    out.residual = std::abs(slope - rounded);
    if (out.residual > 0.25) {
        out.flagged = true; // estimate unreliable; gamma left unknown
        return out;
    }
    out.gamma = int(rounded) + 1;
    return out;
}

// exactly periodic tail: values[i] == values[i + period] for all i >= preperiod
bool find_period(const std::vector<Quad>& v, int& preperiod, int& period) {
    int L = int(v.size());
    for (int s = 0; s <= L / 3; ++s)
        for (int ell = 1; ell <= (L - s) / 2; ++ell) {
            bool ok = true;
            for (int i = s; i + ell < L && ok; ++i)
                if (v[i] != v[i + ell]) ok = false;
            if (ok) {
                preperiod = s;
                period = ell;
                return true;
            }
        }
    return false;
}

} // namespace

GammaVerdict gamma_estimate(const GrowthSequence& s) {
    const auto& v = s.values;
    if (v.size() < 8) fail("SequenceTooShort", "gamma estimation needs at least 8 terms, got " +
                                                   std::to_string(v.size()));
    GammaVerdict out;
    out.window = int(v.size());

    bool zero_tail = true;
    for (std::size_t n = 1; n < v.size(); ++n)
        if (!v[n].is_zero()) { zero_tail = false; break; }
    if (zero_tail) {
        out.gamma = 0;
        out.method = GammaMethod::RecurrenceExact;
        out.pole_order = 0;
        out.recurrence = QPoly::from({Rational(1)});
        return out;
    }

    bool all_rational = std::all_of(v.begin(), v.end(), [](const Quad& q) { return q.is_rational(); });
    if (all_rational) {
        std::vector<Rational> seq;
        seq.reserve(v.size());
        for (const auto& q : v) seq.push_back(q.a);
        // fit on a prefix, validate on the held-out tail
        std::size_t holdout = std::max<std::size_t>(2, v.size() / 4);
        std::vector<Rational> prefix(seq.begin(), seq.end() - holdout);
        auto C = berlekamp_massey(prefix);
        bool valid = int(C.size()) - 1 <= int(prefix.size()) / 2 &&
                     recurrence_holds(C, seq, prefix.size() - (C.size() - 1));
        if (valid) {
            // generating function A(t) = N(t) / Q(t), Q from the connection poly
            QPoly Q = QPoly::from(C);
            std::vector<Rational> ncoef(C.size() - 1 > 0 ? C.size() - 1 : 1, Rational(0));
            // N = (A * Q) truncated below deg Q
            for (std::size_t i = 0; i < ncoef.size(); ++i) {
                Rational acc(0);
                for (std::size_t j = 0; j <= i && j < C.size(); ++j)
                    acc = acc + C[j] * seq[i - j];
                ncoef[i] = acc;
            }
            QPoly N = QPoly::from(std::move(ncoef));
            if (!N.is_zero()) {
                QPoly g = qp_gcd(N, Q);
                if (g.degree() > 0) {
                    QPoly q1, r1, q2, r2;
                    qp_divmod(N, g, q1, r1);
                    qp_divmod(Q, g, q2, r2);
                    N = q1;
                    Q = q2;
                }
            }
            int pole = multiplicity_at_one(Q);
            out.gamma = pole;
            out.method = GammaMethod::RecurrenceExact;
            out.pole_order = pole;
            out.recurrence = Q;
            return out;
        }
        return slope_mode(v);
    }

    int preperiod = 0, period = 0;
    if (find_period(v, preperiod, period)) {
        // eventually periodic, entries not all zero: simple pole at t = 1
        out.gamma = 1;
        out.method = GammaMethod::RecurrenceExact;
        out.pole_order = 1;
        std::vector<Rational> den(std::size_t(period) + 1, Rational(0));
        den[0] = Rational(1);
        den[std::size_t(period)] = Rational(-1);
        out.recurrence = QPoly::from(std::move(den));
        return out;
    }
    return slope_mode(v);
}

namespace {

// Faddeev-LeVerrier characteristic polynomial, exact over Q.
std::vector<Rational> charpoly_rational(const std::vector<std::vector<long long>>& N) {
    int n = int(N.size());
    std::vector<std::vector<Rational>> M(n, std::vector<Rational>(n, Rational(0)));
    std::vector<Rational> c(std::size_t(n) + 1, Rational(0));
    c[n] = Rational(1);
    // M_1 = N, c_{n-1} = -tr(M_1); M_{k+1} = N (M_k + c_{n-k} I)
    std::vector<std::vector<Rational>> A(n, std::vector<Rational>(n, Rational(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) A[i][j] = Rational(N[i][j]);
    M = A;
    for (int k = 1; k <= n; ++k) {
        Rational tr(0);
        for (int i = 0; i < n; ++i) tr = tr + M[i][i];
        Rational ck = tr * Rational(-1, k);
        c[n - k] = ck;
        if (k == n) break;
        for (int i = 0; i < n; ++i) M[i][i] = M[i][i] + ck;
        std::vector<std::vector<Rational>> next(n, std::vector<Rational>(n, Rational(0)));
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l) {
                if (A[i][l].is_zero()) continue;
                for (int j = 0; j < n; ++j) next[i][j] = next[i][j] + A[i][l] * M[l][j];
            }
        M = std::move(next);
    }
    return c;
}

// deflate integer roots, then try to certify a monic quadratic factor around
// the numeric root; exact division of the charpoly is the certificate
std::optional<Quad> exact_root_if_small_degree(const std::vector<long long>& cp, double approx) {
    QPoly f = QPoly::from([&] {
        std::vector<Rational> c;
        for (long long v : cp) c.push_back(Rational(v));
        return c;
    }());
    // strip integer roots; remember the largest
    std::optional<long long> best_int;
    bool changed = true;
    while (changed && f.degree() > 0) {
        changed = false;
        long long c0 = f.c[0].num; // f stays integer-coefficient monic here
        std::vector<long long> cand;
        if (c0 == 0) cand.push_back(0);
        for (long long d = 1; d * d <= std::llabs(c0) || d == 1; ++d) {
            if (c0 != 0 && std::llabs(c0) % d != 0) continue;
            for (long long r : {d, -d, c0 != 0 ? std::llabs(c0) / d : 0, c0 != 0 ? -std::llabs(c0) / d : 0})
                if (r != 0 || c0 == 0) cand.push_back(r);
            if (c0 == 0) break;
        }
        for (long long r : cand) {
            if (!f.eval(Rational(r)).is_zero()) continue;
            QPoly q, rem;
            qp_divmod(f, QPoly::from({Rational(-r), Rational(1)}), q, rem);
            f = q;
            if (!best_int || r > *best_int) best_int = r;
            changed = true;
            break;
        }
    }
    auto near = [&](double x) { return std::abs(x - approx) < 1e-6; };
    if (f.degree() == 0) {
        if (best_int && near(double(*best_int))) return Quad(Rational(*best_int));
        return std::nullopt;
    }
    if (f.degree() == 2 || f.degree() > 2) {
        // probe a monic quadratic t^2 + b t + c with the numeric root, verify exactly
        for (long long b = -64; b <= 64; ++b) {
            double cd = -(approx * approx + double(b) * approx);
            long long cr = std::llround(cd);
            if (std::abs(cd - double(cr)) > 1e-6) continue;
            QPoly quad = QPoly::from({Rational(cr), Rational(b), Rational(1)});
            QPoly q, rem;
            qp_divmod(f, quad, q, rem);
            if (!rem.is_zero()) continue;
            // root = (-b + sqrt(b^2 - 4c)) / 2 , take the branch matching approx
            long long disc = b * b - 4 * cr;
            if (disc < 0) continue;
            for (int sgn : {1, -1}) {
                Quad root(Rational(-b, 2), Rational(sgn, 2), disc);
                if (near(root.to_double())) {
                    if (best_int && double(*best_int) > root.to_double() + 1e-9 && near(double(*best_int)))
                        return Quad(Rational(*best_int));
                    return root;
                }
            }
        }
        if (best_int && near(double(*best_int))) return Quad(Rational(*best_int));
        return std::nullopt;
    }
    // degree 1 residual
    Rational r = -f.c[0] / f.c[1];
    double rv = r.to_double();
    double bi = best_int ? double(*best_int) : rv - 1;
    if (near(std::max(rv, bi))) {
        if (bi > rv) return Quad(Rational(*best_int));
        return Quad(r);
    }
    return std::nullopt;
}

} // namespace

PerronResult perron_root(const std::vector<std::vector<long long>>& N) {
    int n = int(N.size());
    PerronResult res;
    if (n == 0) return res;
    double rmin = 1e300, rmax = 0;
    for (int i = 0; i < n; ++i) {
        if (int(N[i].size()) != n) fail("InvalidParams", "perron_root needs a square matrix");
        double s = 0;
        for (long long v : N[i]) {
            if (v < 0) fail("InvalidParams", "perron_root needs nonnegative entries");
            s += double(v);
        }
        rmin = std::min(rmin, s);
        rmax = std::max(rmax, s);
    }
    res.min_row_sum = rmin;
    res.max_row_sum = rmax;

    auto cq = charpoly_rational(N);
    res.charpoly.reserve(cq.size());
    for (const auto& r : cq) {
        if (!r.is_integer()) fail("Internal", "characteristic polynomial not integral");
        res.charpoly.push_back(r.num);
    }

    const double width = 1e-13;
    auto bracket = largest_real_root(res.charpoly, width);
    if (!bracket) {
        // nonnegative matrices always have a real Perron eigenvalue
        fail("Internal", "no real root found for a nonnegative matrix");
    }
    res.value = bracket->value();
    res.error_bound = bracket->width() / 2;
    res.exact = exact_root_if_small_degree(res.charpoly, res.value);
    if (res.exact) {
        res.value = res.exact->to_double();
        res.error_bound = 0.0;
    }
    return res;
}

} // namespace suppvar
