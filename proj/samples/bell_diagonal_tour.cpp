// Walks through the rho_c / rho_g pair: discord, C3, G and the best
// quadratic payoff for a target in the x-z plane.

#include <cstdio>

#include "rspcorr/rspcorr.hpp"

using namespace rspcorr;

int main() {
  const GreatCircle circle(unit_y());
  const auto target = TargetState::from_bloch(Vec3(1, 0, 1).normalized());

  std::printf("%-6s %-8s %10s %10s %10s %10s %10s\n", "p", "state", "D_formula", "D_entropic", "C3", "G", "pq_max");
  for (double p : {0.1, 0.2, 0.3}) {
    for (const auto& [name, s] : {std::pair{"rho_c", rho_c(p)}, std::pair{"rho_g", rho_g(p)}}) {
      const FanoState f = s.fano();
      std::printf("%-6.2f %-8s %10.6f %10.6f %10.6f %10.6f %10.6f\n", p, name, discord_bell_formula(s),
                  discord_entropic(f).value, c3(f).value, g_closed(s), pq_max(f, target, circle).pq);
    }
  }
  return 0;
}
