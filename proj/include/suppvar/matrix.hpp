#pragma once

#include "suppvar/field.hpp"

#include <optional>
#include <vector>

namespace suppvar {

// Dense row-major matrix over a fixed field. Maps act on column vectors:
// a morphism V -> W is a (dim W) x (dim V) matrix, composition is matmul.
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<felem> a;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a(std::size_t(r) * c, 0) {}

    felem& at(int r, int c) { return a[std::size_t(r) * cols + c]; }
    felem at(int r, int c) const { return a[std::size_t(r) * cols + c]; }

    bool operator==(const Matrix& o) const {
        return rows == o.rows && cols == o.cols && a == o.a;
    }

    static Matrix zero(int r, int c) { return Matrix(r, c); }
    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
};

struct RrefResult {
    Matrix R;
    int rank = 0;
    std::vector<int> pivots;
};

// OpenMP-parallel kernels (they degrade to serial without OpenMP).
Matrix matmul(const Field& F, const Matrix& A, const Matrix& B);
RrefResult rref(const Field& F, Matrix M);
Matrix kron(const Field& F, const Matrix& A, const Matrix& B);

// Serial reference implementations, kept for tests and the kernel benchmark.
Matrix matmul_serial(const Field& F, const Matrix& A, const Matrix& B);
RrefResult rref_serial(const Field& F, Matrix M);
Matrix kron_serial(const Field& F, const Matrix& A, const Matrix& B);

// Rows of the result form a basis of the right null space { v : Mv = 0 }.
Matrix kernel_basis(const Field& F, const Matrix& M);

// Solve A X = B columnwise; empty optional when B is outside the column space.
std::optional<Matrix> solve(const Field& F, const Matrix& A, const Matrix& B);

Matrix add(const Field& F, const Matrix& A, const Matrix& B);
Matrix sub(const Field& F, const Matrix& A, const Matrix& B);
Matrix scale(const Field& F, felem c, const Matrix& A);
Matrix transpose(const Matrix& A);
Matrix hstack(const Matrix& A, const Matrix& B);
Matrix vstack(const Matrix& A, const Matrix& B);
Matrix direct_sum(const Matrix& A, const Matrix& B);
bool is_zero(const Matrix& A);
int rank(const Field& F, const Matrix& A);
std::optional<Matrix> inverse(const Field& F, const Matrix& A);

Matrix column(const Matrix& A, int c);
Matrix columns(const Matrix& A, const std::vector<int>& idx);
Matrix col_from(const std::vector<felem>& v);
Matrix row_from(const std::vector<felem>& v);

// Deterministic basis (as rows) of the column space / row space.
Matrix column_space_basis(const Field& F, const Matrix& A);
Matrix row_space_basis(const Field& F, const Matrix& A);

// Coordinates of vector v (n x 1) in the span of basis rows; empty if outside.
std::optional<Matrix> coords_in_rowspan(const Field& F, const Matrix& basis_rows, const Matrix& v);

} // namespace suppvar
