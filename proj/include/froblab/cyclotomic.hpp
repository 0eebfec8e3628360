#pragma once

#include <span>
#include <vector>

#include "froblab/budget.hpp"

namespace froblab {

/// m-th cyclotomic polynomial, monic, ascending integer coefficients.
std::vector<long long> cyclotomic_polynomial(int m);

/// Exact element of Z[zeta_m] stored as the canonical residue modulo the m-th
/// cyclotomic polynomial. Two sums are equal as complex numbers exactly when
/// their coefficient vectors are identical.
class CyclotomicSum {
  public:
    /// Zero of order m.
    explicit CyclotomicSum(int m = 1);
    /// zeta_m^e (e taken mod m).
    static CyclotomicSum root_power(int m, long long e);
    /// sum of zeta_m^e over the exponent multiset.
    static CyclotomicSum from_exponents(int m, std::span<const int> exponents);

    CyclotomicSum& operator+=(const CyclotomicSum& o);
    CyclotomicSum operator+(const CyclotomicSum& o) const;
    bool operator==(const CyclotomicSum& o) const { return m_ == o.m_ && c_ == o.c_; }
    bool operator<(const CyclotomicSum& o) const;

    int order() const { return m_; }
    const std::vector<long long>& coeffs() const { return c_; }
    bool is_zero() const;
    /// True when the value is a rational integer (all non-constant
    /// coefficients vanish).
    bool is_integer() const;
    long long integer_value() const;  // throws InternalError when not integral

  private:
    int m_;
    std::vector<long long> c_;  // length deg(Phi_m)
};

}  // namespace froblab
