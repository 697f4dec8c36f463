#include "sigcurve/rat.hpp"

#include <stdexcept>

namespace sigcurve {

Rat parse_rat(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    r.canonicalize();
    return r;
}

std::string to_string(const Rat& r) { return r.get_str(10); }
std::string to_string(const Int& z) { return z.get_str(10); }

Int lcm_den(const std::vector<Rat>& v) {
    Int l = 1;
    for (const auto& x : v)
        if (x.get_den() != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    return l;
}

Int gcd_num(const std::vector<Rat>& v) {
    Int g = 0;
    for (const auto& x : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
        if (g == 1) break;
    }
    return g;
}

Rat pow(const Rat& a, unsigned e) {
    Rat r;
    mpz_pow_ui(r.get_num_mpz_t(), a.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), a.get_den_mpz_t(), e);
    return r;
}

Int binom(unsigned n, unsigned k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace sigcurve
