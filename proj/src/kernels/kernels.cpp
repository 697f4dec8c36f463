#include "sigcurve/kernels.hpp"

#include "sigcurve/modp.hpp"

#include <algorithm>

namespace sigcurve::kernels {

namespace {

template <bool Parallel>
void convolve_impl(const std::vector<Int>& a, const std::vector<Int>& b, std::vector<Int>& out, size_t n) {
    out.assign(n, Int(0));
    if (a.empty() || b.empty()) return;
    const long na = long(a.size()), nb = long(b.size());
    const long nn = long(std::min<size_t>(n, a.size() + b.size() - 1));
    const size_t work = size_t(nn) * size_t(std::min(na, nb));
    (void)work;
#pragma omp parallel for schedule(dynamic, 8) if (Parallel && work > kParallelGrain)
    for (long k = 0; k < nn; ++k) {
        long lo = std::max(0L, k - nb + 1), hi = std::min(k, na - 1);
        mpz_ptr acc = out[size_t(k)].get_mpz_t();
        for (long i = lo; i <= hi; ++i) mpz_addmul(acc, a[size_t(i)].get_mpz_t(), b[size_t(k - i)].get_mpz_t());
    }
}

Int common_den(const std::vector<Rat>& v) {
    Int l = 1;
    for (const auto& x : v)
        if (x.get_den() != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    return l;
}

std::vector<Int> scaled(const std::vector<Rat>& v, const Int& l) {
    std::vector<Int> out(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        if (l == 1) {
            out[i] = v[i].get_num();
        } else {
            mpz_divexact(out[i].get_mpz_t(), l.get_mpz_t(), v[i].get_den_mpz_t());
            out[i] *= v[i].get_num();
        }
    }
    return out;
}

template <bool Parallel>
std::vector<Rat> convolve_rat(const std::vector<Rat>& a, const std::vector<Rat>& b, size_t n) {
    std::vector<Rat> out(n);
    if (a.empty() || b.empty()) return out;
    Int la = common_den(a), lb = common_den(b);
    std::vector<Int> ia = scaled(a, la), ib = scaled(b, lb), c;
    convolve_impl<Parallel>(ia, ib, c, n);
    Int den = la * lb;
    const long nn = long(n);
#pragma omp parallel for schedule(static) if (Parallel && n * a.size() > kParallelGrain)
    for (long k = 0; k < nn; ++k) {
        if (c[size_t(k)] == 0) continue;
        Rat& r = out[size_t(k)];
        mpz_swap(mpq_numref(r.get_mpq_t()), c[size_t(k)].get_mpz_t());
        mpz_set(mpq_denref(r.get_mpq_t()), den.get_mpz_t());
        r.canonicalize();
    }
    return out;
}

template <bool Parallel>
std::vector<size_t> row_reduce_impl(std::vector<uint64_t>& m, size_t rows, size_t cols, uint64_t p) {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && m[piv * cols + c] == 0) ++piv;
        if (piv == rows) continue;
        if (piv != r)
            for (size_t j = 0; j < cols; ++j) std::swap(m[piv * cols + j], m[r * cols + j]);
        uint64_t iv = modp::inv(m[r * cols + c], p);
        for (size_t j = c; j < cols; ++j) m[r * cols + j] = modp::mul(m[r * cols + j], iv, p);
        const long lrows = long(rows);
        const size_t work = (rows - r) * (cols - c);
        (void)work;
#pragma omp parallel for schedule(static) if (Parallel && work > kParallelGrain)
        for (long i = 0; i < lrows; ++i) {
            size_t ii = size_t(i);
            if (ii == r) continue;
            uint64_t f = m[ii * cols + c];
            if (f == 0) continue;
            for (size_t j = c; j < cols; ++j)
                m[ii * cols + j] = modp::sub(m[ii * cols + j], modp::mul(f, m[r * cols + j], p), p);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

void convolve_int(const std::vector<Int>& a, const std::vector<Int>& b, std::vector<Int>& out, size_t n) {
    convolve_impl<true>(a, b, out, n);
}
void convolve_int_serial(const std::vector<Int>& a, const std::vector<Int>& b, std::vector<Int>& out, size_t n) {
    convolve_impl<false>(a, b, out, n);
}
std::vector<Rat> convolve(const std::vector<Rat>& a, const std::vector<Rat>& b, size_t n) {
    return convolve_rat<true>(a, b, n);
}
std::vector<Rat> convolve_serial(const std::vector<Rat>& a, const std::vector<Rat>& b, size_t n) {
    return convolve_rat<false>(a, b, n);
}
std::vector<size_t> row_reduce_mod(std::vector<uint64_t>& m, size_t rows, size_t cols, uint64_t p) {
    return row_reduce_impl<true>(m, rows, cols, p);
}
std::vector<size_t> row_reduce_mod_serial(std::vector<uint64_t>& m, size_t rows, size_t cols, uint64_t p) {
    return row_reduce_impl<false>(m, rows, cols, p);
}

void RrefMod::load(std::vector<uint64_t> m, size_t rows) {
    rows_.clear();
    pivots_ = row_reduce_mod(m, rows, cols_, p_);
    for (size_t r = 0; r < pivots_.size(); ++r)
        rows_.emplace_back(m.begin() + long(r * cols_), m.begin() + long((r + 1) * cols_));
}

bool RrefMod::add_row(std::vector<uint64_t> row) {
    for (size_t r = 0; r < pivots_.size(); ++r) {
        uint64_t f = row[pivots_[r]];
        if (!f) continue;
        const auto& pr = rows_[r];
        for (size_t j = pivots_[r]; j < cols_; ++j)
            if (pr[j]) row[j] = modp::sub(row[j], modp::mul(f, pr[j], p_), p_);
    }
    size_t c = 0;
    while (c < cols_ && row[c] == 0) ++c;
    if (c == cols_) return false;
    uint64_t iv = modp::inv(row[c], p_);
    for (size_t j = c; j < cols_; ++j) row[j] = modp::mul(row[j], iv, p_);
    const long n = long(rows_.size());
#pragma omp parallel for schedule(static) if (size_t(n) * cols_ > kParallelGrain)
    for (long i = 0; i < n; ++i) {
        auto& r = rows_[size_t(i)];
        uint64_t f = r[c];
        if (!f) continue;
        for (size_t j = c; j < cols_; ++j)
            if (row[j]) r[j] = modp::sub(r[j], modp::mul(f, row[j], p_), p_);
    }
    size_t at = size_t(std::lower_bound(pivots_.begin(), pivots_.end(), c) - pivots_.begin());
    pivots_.insert(pivots_.begin() + long(at), c);
    rows_.insert(rows_.begin() + long(at), std::move(row));
    return true;
}

std::vector<std::vector<uint64_t>> RrefMod::kernel() const {
    std::vector<bool> is_piv(cols_, false);
    for (auto c : pivots_) is_piv[c] = true;
    std::vector<std::vector<uint64_t>> ker;
    for (size_t f = 0; f < cols_; ++f) {
        if (is_piv[f]) continue;
        std::vector<uint64_t> v(cols_, 0);
        v[f] = 1;
        for (size_t r = 0; r < pivots_.size(); ++r) v[pivots_[r]] = rows_[r][f] ? p_ - rows_[r][f] : 0;
        ker.push_back(std::move(v));
    }
    return ker;
}

}  // namespace sigcurve::kernels
