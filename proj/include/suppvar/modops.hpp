#pragma once

#include "suppvar/algebra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace suppvar {

ValidationReport validate_module(const AModule& M);

// basis of Hom_A(M, N) as matrices N.dim x M.dim
std::vector<Matrix> hom_space(const AModule& M, const AModule& N);

// M (x) N with diagonal action through the comultiplication; the unit module
// (counit action) is a strict two-sided identity in coordinates.
AModule tensor_module(const AModule& M, const AModule& N);
AModule direct_sum_module(const AModule& M, const AModule& N);

// submodule spanned by the given rows (must be action-stable); also returns
// the embedding matrix M.dim x S.dim
struct SubmoduleResult {
    AModule mod;
    Matrix embed;
};
SubmoduleResult submodule_from_rows(const AModule& M, const Matrix& rows);

struct QuotientResult {
    AModule mod;
    Matrix proj;    // Q.dim x M.dim
    Matrix section; // M.dim x Q.dim, proj * section = id
};
QuotientResult quotient_module(const AModule& M, const Matrix& sub_rows);

// rad(A) . M as rows
Matrix radical_submodule_rows(const AModule& M);
// top(M) = M / rad M together with per-simple isotypic multiplicities
struct TopResult {
    QuotientResult quotient;
    std::vector<int> multiplicities;
};
TopResult top_of(const AModule& M);

// Jordan-Hoelder multiplicities [M : X_i] = dim Hom(P(X_i), M)   (eq. route)
std::vector<int> composition_multiplicities(const AModule& M);

struct DecompositionReport {
    struct Summand {
        AModule mod;
        Matrix embed; // M.dim x S.dim
        int iso_class = -1;
    };
    std::vector<Summand> summands;
    std::vector<int> class_multiplicity; // per iso class
    std::uint64_t seed = 0;
};
// complete decomposition into indecomposables via idempotents of End(M)
DecompositionReport decompose(const AModule& M, std::uint64_t seed);

struct IsoResult {
    bool isomorphic = false;
    std::optional<Matrix> certificate; // invertible intertwiner N.dim x M.dim
    std::string witness;               // set when not isomorphic
};
IsoResult module_isomorphic(const AModule& M, const AModule& N, std::uint64_t seed);

bool is_projective(const AModule& M);

// strip all projective direct summands; returns the projective-free part
AModule projective_free_part(const AModule& M, std::uint64_t seed);

bool stably_isomorphic(const AModule& M, const AModule& N, std::uint64_t seed);

// standard-form projective ⊕_i P(X_i)^{a_i} with block shape data
AModule standard_projective(const AlgebraPtr& A, const std::vector<int>& mults);

} // namespace suppvar
