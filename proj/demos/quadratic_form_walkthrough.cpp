// Walks one space through the full pipeline: build the curvature from the
// Lie bracket, sample the Laplace spectrum, and read off the verdict from
// the sign of Q at the bottom eigenvalue.
#include <cstdio>

#include "confstab/catalog.hpp"
#include "confstab/report.hpp"
#include "confstab/space_builder.hpp"
#include "confstab/stability.hpp"

using namespace confstab;

int main() {
  const auto entries = default_catalog();

  for (const char* id : {"Sp(3)", "SU(3)", "S3", "H3"}) {
    const CatalogEntry& e = require_entry(entries, id);
    const SymmetricSpaceModel m = build_model(e, 10);
    const double p = 0.5 * m.n;
    const StabilityReport r = classify(m, p);

    std::printf("%s  (n=%d, p=%.2f)\n", id, m.n, p);
    std::printf("  s = %.6f, |R|^2 = %.6f, s^2/|R|^2 = %.6f\n", m.s, m.norm_sq_r,
                m.s * m.s / m.norm_sq_r);
    std::printf("  Q(lambda) = a lambda^2 - b lambda + c with a=%.6f b=%.6f c=%.6f\n",
                r.coeffs.a, r.coeffs.b, r.coeffs.c);
    if (r.lambda1)
      std::printf("  lambda1 = %.6f, Q(lambda1) = %.6f\n", *r.lambda1, *r.q_lambda1);
    if (r.saddle.lambda_minus)
      std::printf("  negative direction at lambda = %.6f, positive at %.6f\n",
                  *r.saddle.lambda_minus, *r.saddle.lambda_plus);
    std::printf("  verdict: %s\n\n", verdict_name(r.verdict).c_str());
  }
  return 0;
}
