#pragma once

#include "sigcurve/jets.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sigcurve {

// Laurent series sum c_e t^e known for exponents below trunc_order.
class TruncatedSeries {
public:
    TruncatedSeries() = default;
    TruncatedSeries(int min_exp, std::vector<Rat> coeffs, int trunc_order);
    static TruncatedSeries constant(const Rat& c, int trunc_order);
    static TruncatedSeries monomial(const Rat& c, int e, int trunc_order);

    int min_exp() const { return lo_; }
    int trunc_order() const { return trunc_; }
    Rat coeff(int e) const;
    // Lowest exponent with a nonzero coefficient; nullopt when zero below trunc_order.
    std::optional<int> valuation() const;

    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const Rat& c) const;
    TruncatedSeries derivative() const;
    TruncatedSeries shift(int k) const;  // t^k * this
    // 1/this when the valuation is known.
    TruncatedSeries inverse() const;

private:
    int lo_ = 0;
    int trunc_ = 0;
    std::vector<Rat> c_;  // exponents lo_ .. lo_ + c_.size() - 1, all < trunc_
    void clip();
};

struct SeriesValuations {
    std::vector<Rat> branch;          // w = sum a_j v^j at [0:1:root]
    std::array<int, 8> val{};         // val Theta_i(beta)
    std::array<int, 8> v{};           // tau_i + val - d_i (d - 1)
    std::array<Rat, 8> lead{};        // leading coefficient of Theta_i(beta)
    int trunc = 0;
};

struct SeriesTruncationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Valuations along beta = (1/t, w(t)/t) for the branch through [0:1:root_w].  Doubles the
// truncation up to 320 before giving up.
SeriesValuations series_valuations(const CurveInput& c, const Rat& root_w, int trunc = 80);
// m_p(F, sigma) of the uncancelled extension at [0:1:root_w]: min over components of x0_power + sum power*v_i.
int series_multiplicity(const SeriesValuations& s, GroupId g);

int generic_degree(GroupId g, int d);

struct BaseLocusReport {
    int at_infinity = 0;  // distinct base points on the curve
    int affine = 0;
    int mult_infinity = 0;  // lower-bound multiplicity sums
    int mult_affine = 0;
};

struct MultTrial {
    std::array<Rat, 3> a;
    int sum = 0;
};

struct MultiplicityReport {
    std::vector<MultTrial> trials;
    int min_sum = 0;
    int lower_bound = -1;
    bool sandwich_closed = false;
    std::string route;
};

struct DegreeOptions {
    int trials = 3;
    uint64_t seed = 0;
    // Divide out the common factor of the components first; default only for d <= 3.
    std::optional<bool> cancel_common;
    int runs = 2;  // independent (projective change, prime) pairs that must agree
};

struct DegreeReport {
    GroupId group = GroupId::SE2;
    int d = 0;
    int deg_sigma = 0;
    bool cancelled = false;
    int mult_sum = 0;
    std::optional<int> n;
    int product = 0;  // n * deg S
    std::optional<int> deg_S_predicted;
    bool affine_base_points_excluded = false;
    BaseLocusReport base_locus;
    MultiplicityReport mult;
};

BaseLocusReport base_locus_on_curve(const CurveInput& c, GroupId g, const DegreeOptions& opt = {});
int mult_sum_line(const CurveInput& c, GroupId g, const std::array<Rat, 3>& a, const DegreeOptions& opt = {});
MultiplicityReport mult_min(const CurveInput& c, GroupId g, const DegreeOptions& opt = {});
// Throws std::domain_error("inconsistent n ...") when n does not divide the product.
DegreeReport predict_degree(const CurveInput& c, GroupId g, std::optional<int> n = std::nullopt,
                            const DegreeOptions& opt = {});

}  // namespace sigcurve
