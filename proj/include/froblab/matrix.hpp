#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "froblab/ring.hpp"

namespace froblab {

/// Row vector over a ring, as element indices.
using Vec = std::vector<int>;

/// Row-major matrix over a table ring.
class RingMatrix {
  public:
    RingMatrix(Ring R, int rows, int cols);
    RingMatrix(Ring R, int rows, int cols, std::vector<int> entries);
    static RingMatrix identity(const Ring& R, int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Ring& ring() const { return ring_; }
    int at(int i, int j) const { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
    void set(int i, int j, int v) { e_[static_cast<std::size_t>(i) * cols_ + j] = v; }
    const std::vector<int>& entries() const { return e_; }

    RingMatrix operator*(const RingMatrix& o) const;
    RingMatrix operator+(const RingMatrix& o) const;
    RingMatrix transpose() const;
    bool operator==(const RingMatrix& o) const { return e_ == o.e_; }
    std::strong_ordering operator<=>(const RingMatrix& o) const { return e_ <=> o.e_; }

    Vec row(int i) const;
    Vec col(int j) const;
    std::string to_string() const;

  private:
    Ring ring_;
    int rows_, cols_;
    std::vector<int> e_;
};

/// x * M for a row vector x.
Vec mul_row_matrix(const FiniteRing& R, std::span<const int> x, const RingMatrix& M);
/// (M x^T)^T, i.e. the column action written back as a row vector.
Vec mul_matrix_col(const FiniteRing& R, const RingMatrix& M, std::span<const int> x);
/// Standard inner product sum_i x_i * y_i (order of factors preserved).
int dot(const FiniteRing& R, std::span<const int> x, std::span<const int> y);

Vec add_vec(const FiniteRing& R, std::span<const int> x, std::span<const int> y);
Vec scale_vec(const FiniteRing& R, int r, std::span<const int> x);
Vec zero_vec(const FiniteRing& R, int n);
Vec unit_vec(const FiniteRing& R, int n, int i);

/// Mixed-radix rank of a vector; agrees with lexicographic order on index
/// sequences. This is the element identity used by every partition of R^n.
std::uint64_t vec_rank(const FiniteRing& R, std::span<const int> x);
Vec vec_unrank(const FiniteRing& R, int n, std::uint64_t r);
std::uint64_t power_u64(std::uint64_t base, int exp);

/// Searches a right inverse column by column; over a finite ring a one-sided
/// inverse is automatically two-sided, which is re-checked before returning.
std::optional<RingMatrix> right_inverse(const RingMatrix& A);
bool is_invertible(const RingMatrix& A);

/// All invertible n x n matrices, sorted by entry sequence.
std::vector<RingMatrix> enumerate_gl(const Ring& R, int n, std::uint64_t budget = 0);

/// Gaussian-elimination rank; requires a ring where every nonzero element is
/// invertible.
int field_rank(const RingMatrix& A);

}  // namespace froblab
