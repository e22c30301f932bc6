#pragma once

#include "suppvar/field.hpp"
#include "suppvar/matrix.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace suppvar {

// Sparse structure-constant entry: term c * b_k in a product b_i b_j, or
// c * (b_j (x) b_k) in a comultiplication Delta(b_i).
struct TableEntry {
    int i = 0, j = 0, k = 0;
    felem c = 0;
};

struct AlgebraData {
    std::string name;
    FieldSpec field;
    int dim = 0;
    std::vector<TableEntry> mult;
    std::vector<felem> unit;
    bool has_hopf = false;
    std::vector<TableEntry> comul;
    std::vector<felem> counit;
    std::optional<Matrix> antipode;       // stored, unused by the computations
    std::optional<Matrix> radical_basis;  // rows; verified instead of computed
    bool braided = false;                 // flag only, no braiding data
};

struct ValidationIssue {
    std::string identity;
    std::vector<int> indices;
};

struct ValidationReport {
    bool valid = true;
    std::vector<ValidationIssue> issues;
};

class Algebra;

// Finite-dimensional module given by one action matrix per algebra basis
// element. Standard-form projectives additionally carry their block structure
// (one block per principal indecomposable) and block generators.
struct AModule {
    std::shared_ptr<const Algebra> alg;
    int dim = 0;
    std::vector<Matrix> action;

    struct StdShape {
        std::vector<int> block_simple;   // which P(X_i) each block is
        std::vector<Matrix> generators;  // idempotent generator of each block (dim x 1)
    };
    std::optional<StdShape> shape;

    Matrix act(int i, const Matrix& v) const { return matmul(field(), action[i], v); }
    // action of a general element given by its coefficient column
    Matrix act_elem(const Matrix& coeffs) const;
    const Field& field() const;
    bool is_zero_module() const { return dim == 0; }
    std::uint64_t content_hash() const;
};

// A finite-dimensional algebra over F_{p^m} with optional Hopf structure.
// Derived structure (radical, simples, principal idempotents) is computed on
// first use and cached; instances are immutable afterwards.
class Algebra : public std::enable_shared_from_this<Algebra> {
public:
    static std::shared_ptr<const Algebra> make(AlgebraData data);

    const AlgebraData& data() const { return data_; }
    const std::string& name() const { return data_.name; }
    const Field& field() const { return field_; }
    int dim() const { return data_.dim; }
    bool has_hopf() const { return data_.has_hopf; }

    const Matrix& left_mult(int i) const { return left_[i]; }
    const Matrix& right_mult(int i) const { return right_[i]; }
    Matrix unit_col() const;
    felem counit_of(int i) const { return data_.counit[i]; }

    // product of two elements given by coefficient columns
    Matrix multiply(const Matrix& a, const Matrix& b) const;
    Matrix elem_left_mult(const Matrix& a) const; // sum_i a_i L_i

    ValidationReport validate() const;

    // basis of the Jacobson radical, as rows
    const Matrix& radical() const;
    int num_simples() const;
    const std::vector<AModule>& simples() const;
    // orthogonal primitive idempotents, one per simple, as coefficient columns
    const std::vector<Matrix>& idempotents() const;
    // P(X_i) = A e_i with its basis rows inside A and generator coordinates
    struct Principal {
        AModule mod;
        Matrix basis_rows; // dim(P) x dim(A)
        Matrix generator;  // dim(P) x 1, coordinates of e_i
    };
    const std::vector<Principal>& principals() const;
    // characters of the 1-dimensional simples on the algebra basis
    const std::vector<std::vector<felem>>& characters() const;
    int unit_simple_index() const; // the simple matching the counit character

    // small generating set of basis indices (intertwiner systems only need these)
    const std::vector<int>& gen_indices() const;

    AModule regular_module() const;
    AModule unit_module() const;
    AModule zero_module() const;
    AModule simple_module(int i) const { return simples()[i]; }

    std::uint64_t content_hash() const;

private:
    explicit Algebra(AlgebraData data);
    void derive_structure() const; // radical/simples/idempotents/principals

    AlgebraData data_;
    Field field_;
    std::vector<Matrix> left_, right_;

    mutable bool derived_ = false;
    mutable Matrix radical_;
    mutable std::vector<AModule> simples_;
    mutable std::vector<Matrix> idempotents_;
    mutable std::vector<Principal> principals_;
    mutable std::vector<std::vector<felem>> characters_;
    mutable int unit_simple_ = -1;
    mutable std::vector<int> gens_;
    mutable std::uint64_t hash_ = 0;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

// Generic associative algebra by structure constants, used for the radical
// and idempotent machinery on both A itself and endomorphism algebras.
struct AbstractAlgebra {
    const Field* F = nullptr;
    int dim = 0;
    std::vector<Matrix> left_mult; // left regular representation of the basis
    Matrix unit;                   // dim x 1

    Matrix mult(const Matrix& a, const Matrix& b) const;
    Matrix elem_left_mult(const Matrix& a) const;
};

// Friedl-Ronyai radical (characteristic-p trace refinement) with certificates:
// the result is checked to be a nilpotent two-sided ideal. Rows of the result
// span rad(A). Throws RadicalFailure when certification fails.
Matrix abstract_radical(const AbstractAlgebra& A);

// Verify a supplied radical basis instead of computing one.
void verify_radical_rows(const AbstractAlgebra& A, const Matrix& rows);

// Orthogonal primitive idempotents of a split semisimple algebra; raises
// `err_kind` when splitting gets stuck (non-split semisimple part).
std::vector<Matrix> split_semisimple(const AbstractAlgebra& Q, const std::string& err_kind,
                                     std::uint64_t seed);

// Lift idempotents of A/rad back to A through e <- 3e^2 - 2e^3.
std::vector<Matrix> lift_idempotents(const AbstractAlgebra& A, const Matrix& rad_rows,
                                     const std::vector<Matrix>& idem_quotient_coords,
                                     const Matrix& proj, const Matrix& section);

// Characteristic polynomial over a finite field (Hessenberg), low-to-high, monic.
std::vector<felem> charpoly_field(const Field& F, Matrix M);

} // namespace suppvar
