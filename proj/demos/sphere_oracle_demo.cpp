// Cross-checks the quadratic form against a finite-difference second
// derivative of the functional along conformal directions on the 3-sphere.
#include <cstdio>

#include "confstab/conformal.hpp"
#include "confstab/zonal.hpp"

using namespace confstab;

int main() {
  const double p = 1.5;
  const ConformalPath base{zonal_eigenfunction(3, 1)};
  std::printf("F(0) = %.10f on the round 3-sphere at p = %.2f\n",
              functional_value(base, 0.0, p), p);

  for (int k : {1, 2, 3}) {
    const ZonalFunction f = zonal_eigenfunction(3, k);
    const double nf = zonal_norm_sq(f);
    const double predicted = predicted_second_derivative(3, p, f.lambda, nf);
    const FdResult fd = fd_second_derivative(ConformalPath{f}, p);
    std::printf("mode k=%d  lambda=%.0f  predicted %.6f  measured %.6f (+/- %.2e)\n", k,
                f.lambda, predicted, fd.estimate, fd.error_bar);
  }
  return 0;
}
