#pragma once

#include "sigcurve/rat.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

// Hot loops, each with an OpenMP variant and a serial reference.
namespace sigcurve::kernels {

// out[k] = sum_{i+j=k} a[i] b[j] for k < n.
void convolve_int(const std::vector<Int>& a, const std::vector<Int>& b, std::vector<Int>& out, size_t n);
void convolve_int_serial(const std::vector<Int>& a, const std::vector<Int>& b, std::vector<Int>& out, size_t n);

// Rational truncated product through a common-denominator integer convolution.
std::vector<Rat> convolve(const std::vector<Rat>& a, const std::vector<Rat>& b, size_t n);
std::vector<Rat> convolve_serial(const std::vector<Rat>& a, const std::vector<Rat>& b, size_t n);

// Row echelon form modulo a prime p < 2^62 on a row-major rows x cols matrix.
// Returns the pivot columns.
std::vector<size_t> row_reduce_mod(std::vector<uint64_t>& m, size_t rows, size_t cols, uint64_t p);
std::vector<size_t> row_reduce_mod_serial(std::vector<uint64_t>& m, size_t rows, size_t cols, uint64_t p);

// Reduced row echelon form mod p grown one row at a time.
class RrefMod {
public:
    RrefMod(size_t cols, uint64_t p) : cols_(cols), p_(p) {}
    // Bulk start from a row-major block through row_reduce_mod.
    void load(std::vector<uint64_t> m, size_t rows);
    // True when the rank grows.
    bool add_row(std::vector<uint64_t> row);
    size_t rank() const { return pivots_.size(); }
    size_t cols() const { return cols_; }
    const std::vector<size_t>& pivots() const { return pivots_; }
    // One basis vector per free column.
    std::vector<std::vector<uint64_t>> kernel() const;

private:
    size_t cols_;
    uint64_t p_;
    std::vector<std::vector<uint64_t>> rows_;
    std::vector<size_t> pivots_;
};

// Work below this many inner products stays serial.
inline constexpr size_t kParallelGrain = 4096;

}  // namespace sigcurve::kernels
