#include "froblab/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace froblab {

namespace {

// Exact division of integer polynomials (ascending coefficients); remainder
// must vanish.
std::vector<long long> poly_divide_exact(std::vector<long long> num,
                                         const std::vector<long long>& den) {
    const int dn = static_cast<int>(num.size()) - 1;
    const int dd = static_cast<int>(den.size()) - 1;
    std::vector<long long> q(dn - dd + 1, 0);
    for (int i = dn; i >= dd; --i) {
        if (num[i] == 0) continue;
        if (num[i] % den[dd] != 0) throw InternalError("non-exact cyclotomic division");
        const long long f = num[i] / den[dd];
        q[i - dd] = f;
        for (int j = 0; j <= dd; ++j) num[i - dd + j] -= f * den[j];
    }
    for (long long c : num)
        if (c != 0) throw InternalError("nonzero remainder in cyclotomic division");
    return q;
}

// Residues of x^0..x^{m-1} modulo Phi_m, plus Phi_m itself.
struct CycloContext {
    int m;
    std::vector<long long> phi;
    std::vector<std::vector<long long>> power;  // m rows, each of length deg(phi)
};

std::shared_ptr<const CycloContext> context_for(int m) {
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const CycloContext>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;

    auto ctx = std::make_shared<CycloContext>();
    ctx->m = m;
    ctx->phi = cyclotomic_polynomial(m);
    const int deg = static_cast<int>(ctx->phi.size()) - 1;
    ctx->power.assign(m, std::vector<long long>(deg, 0));
    std::vector<long long> cur(deg, 0);
    cur[0] = 1;
    for (int e = 0; e < m; ++e) {
        ctx->power[e] = cur;
        // cur <- x * cur mod Phi_m
        long long top = cur[deg - 1];
        for (int i = deg - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = 0;
        if (top != 0)
            for (int i = 0; i < deg; ++i) cur[i] -= top * ctx->phi[i];
    }
    cache.emplace(m, ctx);
    return ctx;
}

}  // namespace

std::vector<long long> cyclotomic_polynomial(int m) {
    if (m < 1) throw SpecError("cyclotomic order must be positive");
    // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d.
    std::vector<long long> num(m + 1, 0);
    num[0] = -1;
    num[m] = 1;
    for (int d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        num = poly_divide_exact(std::move(num), cyclotomic_polynomial(d));
    }
    return num;
}

CyclotomicSum::CyclotomicSum(int m) : m_(m) {
    if (m < 1) throw SpecError("cyclotomic order must be positive");
    c_.assign(context_for(m)->power[0].size(), 0);
}

CyclotomicSum CyclotomicSum::root_power(int m, long long e) {
    CyclotomicSum s(m);
    long long r = e % m;
    if (r < 0) r += m;
    s.c_ = context_for(m)->power[static_cast<std::size_t>(r)];
    return s;
}

CyclotomicSum CyclotomicSum::from_exponents(int m, std::span<const int> exponents) {
    CyclotomicSum s(m);
    const auto ctx = context_for(m);
    for (int e : exponents) {
        int r = e % m;
        if (r < 0) r += m;
        const auto& p = ctx->power[static_cast<std::size_t>(r)];
        for (std::size_t i = 0; i < s.c_.size(); ++i) s.c_[i] += p[i];
    }
    return s;
}

CyclotomicSum& CyclotomicSum::operator+=(const CyclotomicSum& o) {
    if (m_ != o.m_) throw InternalError("cyclotomic order mismatch");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

CyclotomicSum CyclotomicSum::operator+(const CyclotomicSum& o) const {
    CyclotomicSum s = *this;
    s += o;
    return s;
}

bool CyclotomicSum::operator<(const CyclotomicSum& o) const {
    if (m_ != o.m_) return m_ < o.m_;
    return c_ < o.c_;
}

bool CyclotomicSum::is_zero() const {
    for (long long v : c_)
        if (v != 0) return false;
    return true;
}

bool CyclotomicSum::is_integer() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

long long CyclotomicSum::integer_value() const {
    if (!is_integer()) throw InternalError("cyclotomic sum is not a rational integer");
    return c_[0];
}

}  // namespace froblab
