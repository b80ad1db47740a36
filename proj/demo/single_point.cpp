// Discord of the channel output at one (lambda, gamma, p), both routes.

#include <cstdio>

#include "qdiscord/qdiscord.hpp"

int main() {
  using namespace qdiscord;
  const ScenarioPoint pt(0.5, 0.5, 1.0);
  const XFamilyState s = output_coefficients(pt);
  const EntropicDiscord d = entropic_discord_xfamily(s);

  std::printf("coefficients  x3=%.6f T13=%.6f T33=%.6f\n", s.x3(), s.t13(), s.t33());
  std::printf("geometric     %.10f\n", geometric_discord_xfamily(s));
  std::printf("entropic      %.10f (theta* = %.6f)\n", d.value, d.theta_star);
  std::printf("brute force   %.10f\n",
              entropic_discord_bruteforce(output_state_simulated(pt), 128, 128));
}
