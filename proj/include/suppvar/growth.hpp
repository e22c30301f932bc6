#pragma once

#include "suppvar/rational.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace suppvar {

class Algebra;
struct AModule;
class CohomologyContext;

struct GrowthSequence {
    std::vector<Quad> values;
    std::string source; // provenance tag: resolution-fpdims | ext-dims | ring-hilbert | fixture
};

enum class GammaMethod { RecurrenceExact, SlopeEstimate };

struct GammaVerdict {
    std::optional<int> gamma;          // empty = unknown
    GammaMethod method = GammaMethod::RecurrenceExact;
    std::optional<QPoly> recurrence;   // denominator of the generating function
    std::optional<int> pole_order;     // order of the pole at t = 1
    // diagnostics
    int window = 0;
    double slope = 0.0;
    double residual = 0.0;
    bool flagged = false;
};

// Rate of growth gamma: the least c such that a_n <= b n^(c-1) for all n >= 1.
// Exact mode fits a minimal linear recurrence (Berlekamp-Massey over Q,
// validated on a held-out tail) and reads the pole order of the reduced
// generating function at t = 1; exactly periodic surd sequences short-circuit
// through their period; everything else falls back to a log-log slope fit.
GammaVerdict gamma_estimate(const GrowthSequence& s);

struct PerronResult {
    double value = 0.0;
    double error_bound = 0.0;
    std::optional<Quad> exact;           // set when the minimal polynomial has degree <= 2
    std::vector<long long> charpoly;     // low-to-high, monic
    double min_row_sum = 0.0;
    double max_row_sum = 0.0;
};

// Largest nonnegative real eigenvalue of a square nonnegative integer matrix.
PerronResult perron_root(const std::vector<std::vector<long long>>& N);

// Frobenius-Perron dimensions of the simple objects, via the left
// multiplication matrices N_{X_i} on the Grothendieck ring.
std::vector<Quad> fpdims_of_simples(const std::shared_ptr<const Algebra>& A);

// FPdim(X) = sum_i [X : X_i] FPdim(X_i).
Quad fpdim_module(const AModule& X);

// gamma(FPdim P_n) of a minimal resolution of X to depth D.
GammaVerdict complexity(CohomologyContext& ctx, const AModule& X, int D);

// gamma(dim Ext^n(X, X)); equals the support-variety dimension under Fg.
GammaVerdict variety_dim(CohomologyContext& ctx, const AModule& X, int D);

} // namespace suppvar
