#pragma once

#include "sigcurve/rat.hpp"

#include <array>
#include <climits>
#include <cstdint>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sigcurve {

constexpr int kMaxVars = 16;
constexpr int kDegNegInf = INT_MIN;

struct Mono {
    std::array<uint16_t, kMaxVars> e{};

    int deg() const {
        int s = 0;
        for (auto x : e) s += x;
        return s;
    }
    bool operator==(const Mono& o) const { return e == o.e; }
    bool operator!=(const Mono& o) const { return e != o.e; }
    Mono operator*(const Mono& o) const {
        Mono r;
        for (int i = 0; i < kMaxVars; ++i) r.e[i] = uint16_t(e[i] + o.e[i]);
        return r;
    }
    bool divides(const Mono& o) const {
        for (int i = 0; i < kMaxVars; ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }
    Mono operator/(const Mono& o) const {
        Mono r;
        for (int i = 0; i < kMaxVars; ++i) r.e[i] = uint16_t(e[i] - o.e[i]);
        return r;
    }
};

struct MonoHash {
    size_t operator()(const Mono& m) const noexcept {
        uint64_t h = 1469598103934665603ull;
        for (auto x : m.e) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return size_t(h ^ (h >> 29));
    }
};

// Graded lex, variable 0 largest. Returns <0, 0, >0.
int grlex_cmp(const Mono& a, const Mono& b);

class Ring {
public:
    explicit Ring(std::vector<std::string> names);
    int size() const { return int(names_.size()); }
    const std::string& name(int i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }
    int index(std::string_view n) const;  // -1 if absent
    bool operator==(const Ring& o) const { return names_ == o.names_; }

private:
    std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const Ring>;
RingPtr make_ring(std::vector<std::string> names);
bool same_ring(const RingPtr& a, const RingPtr& b);

struct ContractError : std::logic_error {
    using std::logic_error::logic_error;
};
struct PoleError : std::domain_error {
    using std::domain_error::domain_error;
};

class SparsePoly {
public:
    using Term = std::pair<Mono, Rat>;

    SparsePoly() = default;
    explicit SparsePoly(RingPtr r) : ring_(std::move(r)) {}

    static SparsePoly constant(RingPtr r, const Rat& c);
    static SparsePoly variable(RingPtr r, int i);
    static SparsePoly variable(RingPtr r, std::string_view name);
    static SparsePoly monomial(RingPtr r, const Mono& m, const Rat& c);
    // Combines like terms, drops zeros, sorts.
    static SparsePoly from_terms(RingPtr r, std::vector<Term> t);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rat constant_term() const;
    int total_degree() const;
    int degree_in(int var) const;
    Rat coeff(const Mono& m) const;
    // Leading term under grlex.
    const Term& lead() const { return terms_.front(); }
    bool uses_var(int var) const { return degree_in(var) > 0; }

    SparsePoly operator-() const;
    SparsePoly& operator+=(const SparsePoly& o);
    SparsePoly& operator-=(const SparsePoly& o);
    SparsePoly& operator*=(const SparsePoly& o);
    SparsePoly& operator*=(const Rat& c);

    bool operator==(const SparsePoly& o) const;
    bool operator!=(const SparsePoly& o) const { return !(*this == o); }

    // Internal: terms already sorted and combined.
    static SparsePoly from_sorted(RingPtr r, std::vector<Term> t);

private:
    RingPtr ring_;
    std::vector<Term> terms_;
};

SparsePoly operator+(SparsePoly a, const SparsePoly& b);
SparsePoly operator-(SparsePoly a, const SparsePoly& b);
SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
SparsePoly operator*(SparsePoly a, const Rat& c);
SparsePoly operator*(const Rat& c, SparsePoly a);
SparsePoly pow(const SparsePoly& p, unsigned e);

SparsePoly derivative(const SparsePoly& p, int var);
SparsePoly derivative(const SparsePoly& p, std::string_view var);

Rat evaluate(const SparsePoly& p, const std::vector<Rat>& point);
// Approximate path.
double evaluate_double(const SparsePoly& p, const std::vector<double>& point);
long double evaluate_ld(const SparsePoly& p, const std::vector<long double>& point);

// Replaces variable var by q (same ring).
SparsePoly substitute(const SparsePoly& p, int var, const SparsePoly& q);
// Replaces every variable i by images[i]; images live in ring target.
SparsePoly compose(const SparsePoly& p, const std::vector<SparsePoly>& images, const RingPtr& target);
// Moves p into ring target by variable name.
SparsePoly change_ring(const SparsePoly& p, const RingPtr& target);

// target has p's variables shifted by one with the new variable first.
SparsePoly homogenize(const SparsePoly& p, const RingPtr& target, int degree);
// Drops variable var of target-ring polynomial by setting it to value, result in ring out.
SparsePoly dehomogenize(const SparsePoly& p, int var, const RingPtr& out, const Rat& value = 1);
bool is_homogeneous(const SparsePoly& p);

// content has the sign of the leading coefficient; primitive part has positive lead
// and integer coefficients with gcd 1.
std::pair<Rat, SparsePoly> content_primitive(const SparsePoly& p);
Rat content(const SparsePoly& p);
SparsePoly primitive_part(const SparsePoly& p);

// Throws ContractError when b does not divide a.
SparsePoly divide_exact(const SparsePoly& a, const SparsePoly& b);
bool divides(const SparsePoly& b, const SparsePoly& a);

// Coefficients of p as polynomial in var (index = power).
std::vector<SparsePoly> coefficients_in(const SparsePoly& p, int var);
SparsePoly from_coefficients(const std::vector<SparsePoly>& c, int var, const RingPtr& r);

SparsePoly pseudo_remainder(const SparsePoly& a, const SparsePoly& b, int var);
// Remainder by b monic in var (lead coefficient of b in var a nonzero constant).
SparsePoly reduce_monic(const SparsePoly& a, const SparsePoly& b, int var);

SparsePoly gcd(const SparsePoly& a, const SparsePoly& b);
SparsePoly square_free_part(const SparsePoly& p);
SparsePoly resultant(const SparsePoly& p, const SparsePoly& q, int var);

// Canonical text form: c * x^i * y^j + ..., descending grlex.
std::string to_string(const SparsePoly& p);

class RatFunc {
public:
    RatFunc() = default;
    explicit RatFunc(SparsePoly num);
    RatFunc(SparsePoly num, SparsePoly den);  // normalizes
    // Caller guarantees gcd(num, den) = 1; only the content is normalized.
    static RatFunc coprime(SparsePoly num, SparsePoly den);

    const SparsePoly& num() const { return num_; }
    const SparsePoly& den() const { return den_; }
    const RingPtr& ring() const { return num_.ring(); }

    Rat evaluate(const std::vector<Rat>& point) const;  // throws PoleError
    double evaluate_double(const std::vector<double>& point) const;

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

private:
    SparsePoly num_, den_;
};

RatFunc substitute(const SparsePoly& p, int var, const RatFunc& expr);
std::string to_string(const RatFunc& f);

}  // namespace sigcurve
