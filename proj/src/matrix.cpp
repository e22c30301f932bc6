#include "suppvar/matrix.hpp"

#include "suppvar/error.hpp"

#include <algorithm>

namespace suppvar {

namespace {

void check_mul_shapes(const Matrix& A, const Matrix& B) {
    if (A.cols != B.rows) fail("Internal", "matmul shape mismatch");
}

} // namespace

Matrix matmul_serial(const Field& F, const Matrix& A, const Matrix& B) {
    check_mul_shapes(A, B);
    Matrix C(A.rows, B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int k = 0; k < A.cols; ++k) {
            felem aik = A.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < B.cols; ++j)
                C.at(i, j) = F.add(C.at(i, j), F.mul(aik, B.at(k, j)));
        }
    return C;
}

Matrix matmul(const Field& F, const Matrix& A, const Matrix& B) {
    check_mul_shapes(A, B);
    Matrix C(A.rows, B.cols);
    if (F.prime_field()) {
        // accumulate integer dot products, reduce once per entry
        const std::uint64_t p = F.q();
        #pragma omp parallel for schedule(static) if (A.rows > 16)
        for (int i = 0; i < A.rows; ++i) {
            std::vector<std::uint64_t> acc(B.cols, 0);
            for (int k = 0; k < A.cols; ++k) {
                std::uint64_t aik = A.at(i, k);
                if (aik == 0) continue;
                const felem* brow = &B.a[std::size_t(k) * B.cols];
                for (int j = 0; j < B.cols; ++j) acc[j] += aik * brow[j];
            }
            for (int j = 0; j < B.cols; ++j) C.at(i, j) = felem(acc[j] % p);
        }
    } else {
        #pragma omp parallel for schedule(static) if (A.rows > 16)
        for (int i = 0; i < A.rows; ++i)
            for (int k = 0; k < A.cols; ++k) {
                felem aik = A.at(i, k);
                if (aik == 0) continue;
                for (int j = 0; j < B.cols; ++j)
                    C.at(i, j) = F.add(C.at(i, j), F.mul(aik, B.at(k, j)));
            }
    }
    return C;
}

namespace {

// Shared elimination driver; the parallel flag gates the OpenMP loop.
RrefResult rref_impl(const Field& F, Matrix M, bool parallel) {
    RrefResult res;
    int r = 0;
    for (int c = 0; c < M.cols && r < M.rows; ++c) {
        int pivot = -1;
        for (int i = r; i < M.rows; ++i)
            if (M.at(i, c) != 0) { pivot = i; break; } // first-nonzero pivoting
        if (pivot < 0) continue;
        if (pivot != r)
            for (int j = 0; j < M.cols; ++j) std::swap(M.at(pivot, j), M.at(r, j));
        felem pinv = F.inv(M.at(r, c));
        if (pinv != 1)
            for (int j = c; j < M.cols; ++j) M.at(r, j) = F.mul(pinv, M.at(r, j));
        #pragma omp parallel for schedule(static) if (parallel && M.rows > 32)
        for (int i = 0; i < M.rows; ++i) {
            if (i == r) continue;
            felem f = M.at(i, c);
            if (f == 0) continue;
            for (int j = c; j < M.cols; ++j)
                M.at(i, j) = F.sub(M.at(i, j), F.mul(f, M.at(r, j)));
        }
        res.pivots.push_back(c);
        ++r;
    }
    res.rank = r;
    res.R = std::move(M);
    return res;
}

} // namespace

RrefResult rref(const Field& F, Matrix M) { return rref_impl(F, std::move(M), true); }
RrefResult rref_serial(const Field& F, Matrix M) { return rref_impl(F, std::move(M), false); }

Matrix kron_serial(const Field& F, const Matrix& A, const Matrix& B) {
    Matrix K(A.rows * B.rows, A.cols * B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j) {
            felem aij = A.at(i, j);
            if (aij == 0) continue;
            for (int k = 0; k < B.rows; ++k)
                for (int l = 0; l < B.cols; ++l)
                    K.at(i * B.rows + k, j * B.cols + l) = F.mul(aij, B.at(k, l));
        }
    return K;
}

Matrix kron(const Field& F, const Matrix& A, const Matrix& B) {
    Matrix K(A.rows * B.rows, A.cols * B.cols);
    #pragma omp parallel for collapse(2) schedule(static) if (A.rows * B.rows > 64)
    for (int i = 0; i < A.rows; ++i)
        for (int k = 0; k < B.rows; ++k)
            for (int j = 0; j < A.cols; ++j) {
                felem aij = A.at(i, j);
                if (aij == 0) continue;
                for (int l = 0; l < B.cols; ++l)
                    K.at(i * B.rows + k, j * B.cols + l) = F.mul(aij, B.at(k, l));
            }
    return K;
}

Matrix kernel_basis(const Field& F, const Matrix& M) {
    RrefResult rr = rref(F, M);
    std::vector<char> is_pivot(M.cols, 0);
    for (int c : rr.pivots) is_pivot[c] = 1;
    std::vector<int> free_cols;
    for (int c = 0; c < M.cols; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Matrix K(int(free_cols.size()), M.cols);
    for (std::size_t t = 0; t < free_cols.size(); ++t) {
        int fc = free_cols[t];
        K.at(int(t), fc) = 1;
        for (int r = 0; r < rr.rank; ++r)
            K.at(int(t), rr.pivots[r]) = F.neg(rr.R.at(r, fc));
    }
    return K;
}

std::optional<Matrix> solve(const Field& F, const Matrix& A, const Matrix& B) {
    if (A.rows != B.rows) fail("Internal", "solve shape mismatch");
    RrefResult rr = rref(F, hstack(A, B));
    for (int c : rr.pivots)
        if (c >= A.cols) return std::nullopt;
    Matrix X(A.cols, B.cols);
    for (int r = 0; r < rr.rank; ++r) {
        int pc = rr.pivots[r];
        for (int j = 0; j < B.cols; ++j) X.at(pc, j) = rr.R.at(r, A.cols + j);
    }
    return X;
}

Matrix add(const Field& F, const Matrix& A, const Matrix& B) {
    if (A.rows != B.rows || A.cols != B.cols) fail("Internal", "add shape mismatch");
    Matrix C(A.rows, A.cols);
    for (std::size_t i = 0; i < A.a.size(); ++i) C.a[i] = F.add(A.a[i], B.a[i]);
    return C;
}

Matrix sub(const Field& F, const Matrix& A, const Matrix& B) {
    if (A.rows != B.rows || A.cols != B.cols) fail("Internal", "sub shape mismatch");
    Matrix C(A.rows, A.cols);
    for (std::size_t i = 0; i < A.a.size(); ++i) C.a[i] = F.sub(A.a[i], B.a[i]);
    return C;
}

Matrix scale(const Field& F, felem c, const Matrix& A) {
    Matrix C(A.rows, A.cols);
    for (std::size_t i = 0; i < A.a.size(); ++i) C.a[i] = F.mul(c, A.a[i]);
    return C;
}

Matrix transpose(const Matrix& A) {
    Matrix T(A.cols, A.rows);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j) T.at(j, i) = A.at(i, j);
    return T;
}

Matrix hstack(const Matrix& A, const Matrix& B) {
    if (A.rows != B.rows) fail("Internal", "hstack shape mismatch");
    Matrix C(A.rows, A.cols + B.cols);
    for (int i = 0; i < A.rows; ++i) {
        for (int j = 0; j < A.cols; ++j) C.at(i, j) = A.at(i, j);
        for (int j = 0; j < B.cols; ++j) C.at(i, A.cols + j) = B.at(i, j);
    }
    return C;
}

Matrix vstack(const Matrix& A, const Matrix& B) {
    if (A.cols != B.cols && A.rows != 0 && B.rows != 0) fail("Internal", "vstack shape mismatch");
    int cols = A.rows != 0 ? A.cols : B.cols;
    Matrix C(A.rows + B.rows, cols);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j) C.at(i, j) = A.at(i, j);
    for (int i = 0; i < B.rows; ++i)
        for (int j = 0; j < B.cols; ++j) C.at(A.rows + i, j) = B.at(i, j);
    return C;
}

Matrix direct_sum(const Matrix& A, const Matrix& B) {
    Matrix C(A.rows + B.rows, A.cols + B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j) C.at(i, j) = A.at(i, j);
    for (int i = 0; i < B.rows; ++i)
        for (int j = 0; j < B.cols; ++j) C.at(A.rows + i, A.cols + j) = B.at(i, j);
    return C;
}

bool is_zero(const Matrix& A) {
    return std::all_of(A.a.begin(), A.a.end(), [](felem x) { return x == 0; });
}

int rank(const Field& F, const Matrix& A) { return rref(F, A).rank; }

std::optional<Matrix> inverse(const Field& F, const Matrix& A) {
    if (A.rows != A.cols) return std::nullopt;
    auto X = solve(F, A, Matrix::identity(A.rows));
    if (!X) return std::nullopt;
    // solve() guarantees A X = I; for square A that certifies invertibility
    return X;
}

Matrix column(const Matrix& A, int c) {
    Matrix v(A.rows, 1);
    for (int i = 0; i < A.rows; ++i) v.at(i, 0) = A.at(i, c);
    return v;
}

Matrix columns(const Matrix& A, const std::vector<int>& idx) {
    Matrix C(A.rows, int(idx.size()));
    for (int i = 0; i < A.rows; ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) C.at(i, int(j)) = A.at(i, idx[j]);
    return C;
}

Matrix col_from(const std::vector<felem>& v) {
    Matrix m(int(v.size()), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m.at(int(i), 0) = v[i];
    return m;
}

Matrix row_from(const std::vector<felem>& v) {
    Matrix m(1, int(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i) m.at(0, int(i)) = v[i];
    return m;
}

Matrix column_space_basis(const Field& F, const Matrix& A) {
    return row_space_basis(F, transpose(A));
}

Matrix row_space_basis(const Field& F, const Matrix& A) {
    RrefResult rr = rref(F, A);
    Matrix B(rr.rank, A.cols);
    for (int i = 0; i < rr.rank; ++i)
        for (int j = 0; j < A.cols; ++j) B.at(i, j) = rr.R.at(i, j);
    return B;
}

std::optional<Matrix> coords_in_rowspan(const Field& F, const Matrix& basis_rows, const Matrix& v) {
    return solve(F, transpose(basis_rows), v);
}

} // namespace suppvar
