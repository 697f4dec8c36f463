#pragma once

#include "sigcurve/groebner.hpp"
#include "sigcurve/jets.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sigcurve {

RingPtr kappa_ring();  // k1, k2

struct SignaturePolynomial {
    SparsePoly S;  // normalized, in kappa_ring()
    GroupId group;
    CurveInput source;
    std::string method;       // "groebner" or "fitting"
    std::string certificate;  // how vanishing and minimality were established
};

struct SignatureResult {
    bool is_point = false;
    Rat k1, k2;  // constant values for a point signature
    SignaturePolynomial poly;
};

struct SignatureOptions {
    Budget budget;
    bool try_groebner = true;
    bool allow_fitting = true;
    uint64_t seed = 0;
    int max_fit_degree = 120;
};

// Both polynomial equations K1 = A/B, K2 = C/D eliminated against F with the saturation
// generator 1 - t*B*D.  Throws BudgetExceeded.
SparsePoly signature_by_groebner(const CurveInput& c, GroupId g, const Budget& budget);

SignatureResult signature_polynomial(const CurveInput& c, GroupId g, const SignatureOptions& opt = {});

// Constant value of K1 on the curve (and K2 via k2_out) when the signature is a point.
std::optional<Rat> is_constant_signature(const CurveInput& c, GroupId g, Rat* k2_out = nullptr);

struct SignatureSample {
    double x, y, k1, k2;
};
struct SampleResult {
    std::vector<SignatureSample> samples;
    std::string warning;
};

// Floating-point samples on real points of the curve.
SampleResult signature_samples(const CurveInput& c, GroupId g, int count, uint64_t seed);

struct FitResult {
    SparsePoly S;
    int degree = 0;
    int primes = 0;
    std::string certificate;
};

// Dimension of the degree-D relation space sum c_ab s1^a s2^b s0^(D-a-b) = 0 over F_p.
size_t relation_kernel_dim(const CurveInput& c, GroupId g, int D, uint64_t p, uint64_t seed);

// Minimal relation between K1, K2 by linear algebra on fibers mod p, lifted through CRT
// and rational reconstruction.  Throws BudgetExceeded past max_degree.
FitResult signature_by_fitting(const CurveInput& c, GroupId g, int max_degree, uint64_t seed, int degree_hint = -1);

// S(K1, K2) = 0 on the curve, checked at Bezout-many fibers modulo each of `primes` primes.
bool vanishes_on_signature_mod(const CurveInput& c, GroupId g, const SparsePoly& S, int primes, uint64_t seed);

// |S(k1,k2)| / (1 + sum |term values|).
double relative_residual(const SparsePoly& S, double k1, double k2);

}  // namespace sigcurve
