#include "froblab/matrix.hpp"

#include <algorithm>
#include <limits>

#include "froblab/parallel.hpp"

namespace froblab {

RingMatrix::RingMatrix(Ring R, int rows, int cols)
    : ring_(std::move(R)), rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 1) throw SpecError("matrix dimensions must be positive");
    e_.assign(static_cast<std::size_t>(rows) * cols, ring_->zero());
}

RingMatrix::RingMatrix(Ring R, int rows, int cols, std::vector<int> entries)
    : ring_(std::move(R)), rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (rows < 1 || cols < 1) throw SpecError("matrix dimensions must be positive");
    if (e_.size() != static_cast<std::size_t>(rows) * cols)
        throw SpecError("matrix entry count mismatch");
    for (int v : e_)
        if (v < 0 || v >= ring_->size()) throw SpecError("matrix entry out of range");
}

RingMatrix RingMatrix::identity(const Ring& R, int n) {
    RingMatrix m(R, n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, R->one());
    return m;
}

RingMatrix RingMatrix::operator*(const RingMatrix& o) const {
    const FiniteRing& R = *ring_;
    RingMatrix out(ring_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < o.cols_; ++j) {
            int acc = R.zero();
            for (int t = 0; t < cols_; ++t) acc = R.add(acc, R.mul(at(i, t), o.at(t, j)));
            out.set(i, j, acc);
        }
    return out;
}

RingMatrix RingMatrix::operator+(const RingMatrix& o) const {
    const FiniteRing& R = *ring_;
    RingMatrix out(ring_, rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = R.add(e_[i], o.e_[i]);
    return out;
}

RingMatrix RingMatrix::transpose() const {
    RingMatrix out(ring_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.set(j, i, at(i, j));
    return out;
}

Vec RingMatrix::row(int i) const {
    return Vec(e_.begin() + static_cast<std::ptrdiff_t>(i) * cols_,
               e_.begin() + static_cast<std::ptrdiff_t>(i + 1) * cols_);
}

Vec RingMatrix::col(int j) const {
    Vec out(rows_);
    for (int i = 0; i < rows_; ++i) out[i] = at(i, j);
    return out;
}

std::string RingMatrix::to_string() const {
    std::string s = "[";
    for (int i = 0; i < rows_; ++i) {
        s += "[";
        for (int j = 0; j < cols_; ++j) {
            s += ring_->element_name(at(i, j));
            if (j + 1 < cols_) s += ",";
        }
        s += "]";
        if (i + 1 < rows_) s += ",";
    }
    return s + "]";
}

Vec mul_row_matrix(const FiniteRing& R, std::span<const int> x, const RingMatrix& M) {
    Vec out(M.cols(), R.zero());
    for (int j = 0; j < M.cols(); ++j) {
        int acc = R.zero();
        for (int i = 0; i < M.rows(); ++i) acc = R.add(acc, R.mul(x[i], M.at(i, j)));
        out[j] = acc;
    }
    return out;
}

Vec mul_matrix_col(const FiniteRing& R, const RingMatrix& M, std::span<const int> x) {
    Vec out(M.rows(), R.zero());
    for (int i = 0; i < M.rows(); ++i) {
        int acc = R.zero();
        for (int j = 0; j < M.cols(); ++j) acc = R.add(acc, R.mul(M.at(i, j), x[j]));
        out[i] = acc;
    }
    return out;
}

int dot(const FiniteRing& R, std::span<const int> x, std::span<const int> y) {
    int acc = R.zero();
    for (std::size_t i = 0; i < x.size(); ++i) acc = R.add(acc, R.mul(x[i], y[i]));
    return acc;
}

Vec add_vec(const FiniteRing& R, std::span<const int> x, std::span<const int> y) {
    Vec out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = R.add(x[i], y[i]);
    return out;
}

Vec scale_vec(const FiniteRing& R, int r, std::span<const int> x) {
    Vec out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = R.mul(r, x[i]);
    return out;
}

Vec zero_vec(const FiniteRing& R, int n) { return Vec(n, R.zero()); }

Vec unit_vec(const FiniteRing& R, int n, int i) {
    Vec out(n, R.zero());
    out[i] = R.one();
    return out;
}

std::uint64_t vec_rank(const FiniteRing& R, std::span<const int> x) {
    std::uint64_t r = 0;
    for (int v : x) r = r * R.size() + static_cast<std::uint64_t>(v);
    return r;
}

Vec vec_unrank(const FiniteRing& R, int n, std::uint64_t r) {
    Vec out(n);
    for (int i = n - 1; i >= 0; --i) {
        out[i] = static_cast<int>(r % R.size());
        r /= R.size();
    }
    return out;
}

std::uint64_t power_u64(std::uint64_t base, int exp) {
    // Saturates instead of wrapping so budget checks stay sound.
    std::uint64_t out = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && out > std::numeric_limits<std::uint64_t>::max() / base)
            return std::numeric_limits<std::uint64_t>::max();
        out *= base;
    }
    return out;
}

std::optional<RingMatrix> right_inverse(const RingMatrix& A) {
    if (A.rows() != A.cols()) throw SpecError("right_inverse requires a square matrix");
    const FiniteRing& R = *A.ring();
    const int n = A.rows();
    const std::uint64_t cols = power_u64(static_cast<std::uint64_t>(R.size()), n);
    RingMatrix B(A.ring(), n, n);
    for (int j = 0; j < n; ++j) {
        bool found = false;
        for (std::uint64_t c = 0; c < cols && !found; ++c) {
            const Vec cand = vec_unrank(R, n, c);
            bool ok = true;
            for (int i = 0; i < n && ok; ++i) {
                int acc = R.zero();
                for (int t = 0; t < n; ++t) acc = R.add(acc, R.mul(A.at(i, t), cand[t]));
                ok = acc == (i == j ? R.one() : R.zero());
            }
            if (ok) {
                for (int i = 0; i < n; ++i) B.set(i, j, cand[i]);
                found = true;
            }
        }
        if (!found) return std::nullopt;
    }
    // One-sided inverses are two-sided over a finite ring.
    if (!(B * A == RingMatrix::identity(A.ring(), n)))
        throw InternalError("right inverse is not a left inverse");
    return B;
}

bool is_invertible(const RingMatrix& A) { return right_inverse(A).has_value(); }

std::vector<RingMatrix> enumerate_gl(const Ring& R, int n, std::uint64_t budget) {
    const std::uint64_t total = power_u64(static_cast<std::uint64_t>(R->size()), n * n);
    check_budget("enumerate_gl", total, budget);
    std::vector<char> good(total, 0);
    parallel_for(total, [&](std::size_t idx) {
        std::vector<int> entries(static_cast<std::size_t>(n) * n);
        std::uint64_t t = idx;
        for (int i = n * n - 1; i >= 0; --i) {
            entries[i] = static_cast<int>(t % R->size());
            t /= R->size();
        }
        RingMatrix A(R, n, n, std::move(entries));
        good[idx] = is_invertible(A) ? 1 : 0;
    });
    std::vector<RingMatrix> out;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        if (!good[idx]) continue;
        std::vector<int> entries(static_cast<std::size_t>(n) * n);
        std::uint64_t t = idx;
        for (int i = n * n - 1; i >= 0; --i) {
            entries[i] = static_cast<int>(t % R->size());
            t /= R->size();
        }
        out.emplace_back(R, n, n, std::move(entries));
    }
    return out;
}

int field_rank(const RingMatrix& A) {
    const FiniteRing& R = *A.ring();
    if (!R.is_field()) throw SpecError("field_rank requires a field");
    std::vector<std::vector<int>> m(A.rows());
    for (int i = 0; i < A.rows(); ++i) m[i] = A.row(i);
    int rank = 0;
    for (int col = 0; col < A.cols() && rank < A.rows(); ++col) {
        int pivot = -1;
        for (int i = rank; i < A.rows(); ++i)
            if (m[i][col] != R.zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        const int s = R.inv(m[rank][col]);
        for (int j = 0; j < A.cols(); ++j) m[rank][j] = R.mul(s, m[rank][j]);
        for (int i = 0; i < A.rows(); ++i) {
            if (i == rank || m[i][col] == R.zero()) continue;
            const int f = m[i][col];
            for (int j = 0; j < A.cols(); ++j)
                m[i][j] = R.sub(m[i][j], R.mul(f, m[rank][j]));
        }
        ++rank;
    }
    return rank;
}

}  // namespace froblab
