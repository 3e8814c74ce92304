#include "permprod/profile.hpp"

#include <algorithm>

namespace permprod {

std::optional<std::string> Profile::violated_constraint() const {
    if (A + C != m) return "A + C = m";
    if (B + C != m_prime) return "B + C = m'";
    if (Abar + D != m) return "Abar + D = m";
    if (Bbar + D != m_prime) return "Bbar + D = m'";
    if (Q + Z + W + X + E != C) return "Q + Z + W + X + E = C";
    if (Q > D) return "Q <= D";
    if (Q + Z > D) return "D - Q - Z >= 0";
    if (Q + Z + W > D) return "D - Q - Z - W >= 0";
    if (Q + Z + X > D) return "D - Q - Z - X >= 0";
    if (W + E > Bbar) return "Bbar - W - E >= 0";
    if (X + E > Abar) return "Abar - X - E >= 0";
    if (A + B + C > n) return "A + B + C <= n";
    if (Abar + D + Bbar > n) return "Abar + D + Bbar <= n";
    // forced by the equalities above; a failure here means the caller
    // built the profile inconsistently
    if (A != (D - Q - Z - W) + (Abar - X - E)) return "A = (D-Q-Z-W) + (Abar-X-E)";
    return std::nullopt;
}

std::vector<Profile> enumerate_profiles(unsigned n, unsigned m, unsigned m_prime) {
    if (m > n || m_prime > n)
        throw std::invalid_argument("enumerate_profiles: need m, m' <= n");
    std::vector<Profile> out;
    const unsigned lo = (m + m_prime > n) ? m + m_prime - n : 0;
    const unsigned hi = std::min(m, m_prime);
    for (unsigned C = lo; C <= hi; ++C) {
        for (unsigned D = lo; D <= hi; ++D) {
            const unsigned Abar = m - D, Bbar = m_prime - D;
            for (unsigned Q = 0; Q <= std::min(C, D); ++Q) {
                for (unsigned Z = 0; Q + Z <= C && Q + Z <= D; ++Z) {
                    for (unsigned W = 0; Q + Z + W <= C && Q + Z + W <= D; ++W) {
                        for (unsigned X = 0; Q + Z + W + X <= C && Q + Z + X <= D; ++X) {
                            const unsigned E = C - Q - Z - W - X;
                            if (W + E > Bbar || X + E > Abar) continue;
                            Profile p;
                            p.n = n;
                            p.m = m;
                            p.m_prime = m_prime;
                            p.C = C;
                            p.D = D;
                            p.A = m - C;
                            p.B = m_prime - C;
                            p.Abar = Abar;
                            p.Bbar = Bbar;
                            p.Q = Q;
                            p.Z = Z;
                            p.W = W;
                            p.X = X;
                            p.E = E;
                            out.push_back(p);
                        }
                    }
                }
            }
        }
    }
    return out;
}

}  // namespace permprod
