#include "sigcurve/theta.hpp"

#include "sigcurve/parse.hpp"

#include <array>
#include <mutex>
#include <stdexcept>

namespace sigcurve {

namespace {

const char* const kTable[kThetaCount] = {
    "u1^2+1",
    "u2",
    "u3*Th1-3*u1*Th2^2",
    "3*u4*u2-5*u3^2",
    "9*u5*u2^2-45*u4*u3*u2+40*u3^3",
    "9*u6*u2^3-63*u5*u3*u2^2-45*u4^2*u2^2+255*u4*u3^2*u2-160*u3^4",
    "9/2*(18*u7*u2^4*Th5-189*u6^2*u2^6+126*u6*u2^4*(9*u5*u3*u2+15*u4^2*u2-25*u4*u3^2)"
    "-189*u5^2*u2^4*(4*u3^2+15*u2*u4)+210*u5*u3*u2^2*(63*u4^2*u2^2-60*u4*u3^2*u2+32*u3^4)"
    "-525*u4*u2*(9*u4^3*u2^3+15*u4^2*u3^2*u2^2-60*u4*u3^4*u2+64*u3^6)+11200*u3^8)",
    "243/2*u2^4*(2*u8*u2*Th5^2-8*u7*Th5*(9*u6*u2^3-36*u5*u3*u2^2-45*u4^2*u2^2+120*u4*u3^2*u2-40*u3^4)"
    "+504*u6^3*u2^5-504*u6^2*u2^3*(9*u5*u3*u2+15*u4^2*u2-25*u4*u3^2)"
    "+28*u6*(432*u5^2*u3^2*u2^3+243*u5^2*u4*u2^4-1800*u5*u4*u3^3*u2^2-240*u5*u3^5*u2"
    "+540*u5*u4^2*u3*u2^3+6600*u4^2*u3^4*u2-2000*u4*u3^6-5175*u4^3*u3^2*u2^2+1350*u4^4*u2^3)"
    "-2835*u5^4*u2^4+252*u5^3*u3*u2^2*(9*u4*u2-136*u3^2)-35840*u5^2*u3^6"
    "-630*u5^2*u4*u2*(69*u4^2*u2^2-160*u3^4-153*u4*u3^2*u2)"
    "+2100*u5*u4^2*u3*(72*u3^4+63*u4^2*u2^2-193*u4*u3^2*u2)"
    "-7875*u4^4*(8*u4^2*u2^2-22*u4*u3^2*u2+9*u3^4))",
};

constexpr std::array<int, kThetaCount> kD{2, 3, 6, 8, 12, 16, 32, 48};
constexpr std::array<int, kThetaCount> kW{0, 1, 2, 4, 6, 8, 16, 24};

struct Table {
    std::vector<SparsePoly> polys;
    std::vector<int> e;
};

const Table& table() {
    static Table t = [] {
        Table r;
        std::map<std::string, SparsePoly> bind;
        for (int i = 0; i < kThetaCount; ++i) {
            auto p = parse_poly(kTable[i], jet_ring(), bind);
            bind["Th" + std::to_string(i + 1)] = p;
            int e = 0;
            for (const auto& [m, c] : p.terms()) {
                int w = 0;
                for (int k = 0; k < kThetaCount; ++k) w += (2 * k + 1) * m.e[k];
                e = std::max(e, w);
            }
            r.polys.push_back(std::move(p));
            r.e.push_back(e);
        }
        return r;
    }();
    return t;
}

void check_index(int i) {
    if (i < 1 || i > kThetaCount) throw std::out_of_range("theta index must be 1..8");
}

}  // namespace

RingPtr jet_ring() {
    static RingPtr r = make_ring({"u1", "u2", "u3", "u4", "u5", "u6", "u7", "u8"});
    return r;
}

const SparsePoly& theta_poly(int i) {
    check_index(i);
    return table().polys[i - 1];
}

int theta_d(int i) {
    check_index(i);
    return kD[i - 1];
}

int theta_e(int i) {
    check_index(i);
    return table().e[i - 1];
}

int theta_w(int i) {
    check_index(i);
    return kW[i - 1];
}

}  // namespace sigcurve
