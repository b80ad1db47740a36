// Generalized amplitude damping contracts the Bloch ball towards
// (0, 0, (2p - 1)); print the image of a few pure states.

#include <cmath>
#include <cstdio>

#include "qdiscord/qdiscord.hpp"

int main() {
  using namespace qdiscord;
  const KrausChannel ch = gad_channel(0.8, 0.4);
  for (int k = 0; k <= 4; ++k) {
    const double theta = k * 0.25 * 3.141592653589793;
    const DensityMatrix2 in = pure_state({std::cos(theta / 2), std::sin(theta / 2)});
    const DensityMatrix2 out = apply_single(ch, in);
    double v[3];
    for (int i = 0; i < 3; ++i) v[i] = (out.matrix() * pauli::sigma(i)).trace().real();
    std::printf("theta=%.3f -> (%.4f, %.4f, %.4f)\n", theta, v[0], v[1], v[2]);
  }
}
