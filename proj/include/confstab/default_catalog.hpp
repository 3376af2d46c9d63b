#pragma once

namespace confstab {

// Shipped catalog, byte-identical to data/catalog.json (kept in sync by test).
inline const char* default_catalog_text() {
  return R"cstbcat([
  {
    "id": "SU(3)",
    "family": "su_group",
    "params": [3],
    "dim": 8,
    "expected_verdict": "StableConformal",
    "published_verdict": "UnstableConformal",
    "note": "exact arithmetic at p = n/2 = 4: a = 8, b = 3, lambda_1 = 4/9, Q(lambda_1) = 20/81 > 0; the recorded verdict follows the computed sign, which contradicts the published instability claim for this space",
    "spectrum": {"root_system": "A2", "generators": [[1, 0], [0, 1]]}
  },
  {
    "id": "SU(4)",
    "family": "su_group",
    "params": [4],
    "dim": 15,
    "expected_verdict": "StableConformal",
    "published_verdict": "UnstableConformal",
    "note": "exact arithmetic at p = n/2 = 15/2: a = 232/15, b = 13/2, lambda_1 = 15/32, Q(lambda_1) = 45/128 > 0; contradicts the published instability claim",
    "spectrum": {"root_system": "A3", "generators": [[1, 0, 0], [0, 1, 0], [0, 0, 1]]}
  },
  {
    "id": "Sp(2)",
    "family": "sp_group",
    "params": [2],
    "dim": 10,
    "expected_verdict": "StableConformal",
    "published_verdict": "UnstableConformal",
    "note": "exact arithmetic at p = n/2 = 5: a = 51/5, b = 4, lambda_1 = 5/12, Q(lambda_1) = 5/48 > 0; contradicts the published instability claim",
    "spectrum": {"root_system": "C2", "generators": [[1, 0], [0, 1]]}
  },
  {
    "id": "Sp(3)",
    "family": "sp_group",
    "params": [3],
    "dim": 21,
    "expected_verdict": "UnstableConformal",
    "spectrum": {"root_system": "C3", "generators": [[1, 0, 0], [0, 1, 0], [0, 0, 1]]}
  },
  {
    "id": "Spin(5)",
    "family": "so_group",
    "params": [5],
    "dim": 10,
    "expected_verdict": "StableConformal",
    "published_verdict": "UnstableConformal",
    "note": "so(5) = sp(2), so the -B metric is isometric to the Sp(2) entry: Q(lambda_1) = 5/48 > 0; contradicts the published instability claim",
    "spectrum": {"root_system": "B2", "generators": [[1, 0], [0, 1]]}
  },
  {
    "id": "Spin(6)",
    "family": "so_group",
    "params": [6],
    "dim": 15,
    "expected_verdict": "StableConformal",
    "published_verdict": "UnstableConformal",
    "note": "so(6) = su(4), so the -B metric is isometric to the SU(4) entry: Q(lambda_1) = 45/128 > 0; contradicts the published instability claim",
    "spectrum": {"root_system": "D3", "generators": [[1, 0, 0], [0, 1, 0], [0, 0, 1]]}
  },
  {
    "id": "SU(4)/Sp(2)",
    "family": "su_over_sp",
    "params": [2],
    "dim": 5,
    "expected_verdict": "StableConformalDegenerate",
    "published_verdict": "UnstableConformal",
    "note": "isometric to the round 5-sphere (constant curvature 1/8): lambda_1 = 2s/n exactly, so Q(lambda_1) = 0 and the first eigenfunctions are degenerate directions rather than unstable ones",
    "spectrum": {"root_system": "A3", "generators": [[0, 1, 0]]}
  },
  {
    "id": "SU(6)/Sp(3)",
    "family": "su_over_sp",
    "params": [3],
    "dim": 14,
    "expected_verdict": "UnstableConformal",
    "spectrum": {"root_system": "A5", "generators": [[0, 1, 0, 0, 0], [0, 0, 0, 1, 0]]}
  },
  {
    "id": "Sp(2)/Sp(1)xSp(1)",
    "family": "sp_over_sp_sp",
    "params": [1, 1],
    "dim": 4,
    "expected_verdict": "StableConformalDegenerate",
    "published_verdict": "UnstableConformal",
    "note": "isometric to the round 4-sphere (constant curvature 1/6): Q(lambda_1) = 0 exactly; degenerate rather than unstable",
    "spectrum": {"root_system": "C2", "generators": [[0, 1]]}
  },
  {
    "id": "Sp(3)/Sp(2)xSp(1)",
    "family": "sp_over_sp_sp",
    "params": [2, 1],
    "dim": 8,
    "expected_verdict": "StableConformal",
    "published_verdict": "UnstableConformal",
    "note": "exact arithmetic at p = n/2 = 4: a = 93/11, b = 6, lambda_1 = 3/4, Q(lambda_1) = 45/176 > 0; contradicts the published instability claim",
    "spectrum": {"root_system": "C3", "generators": [[0, 1, 0]]}
  },
  {
    "id": "E6/F4",
    "family": "exceptional",
    "params": [],
    "dim": 26,
    "lambda1_over_s": 0.05555555555555555,
    "s_sq_over_normSqR": 52,
    "provenance": "restricted-root Casimir computation: spherical weights generated by the two 27-dimensional fundamental representations of E6, min Casimir 13/18 under -B with s = n/2 = 13, so lambda_1/s = 1/18; isotropy computation |R|^2 = dim(f4) (1 - c)^2 with c = 3/4 the Casimir constant of f4 in e6, giving s^2/|R|^2 = 52",
    "expected_verdict": "UnstableConformal",
    "spectrum": {"root_system": "E6", "generators": [[1, 0, 0, 0, 0, 0], [0, 0, 0, 0, 0, 1]]}
  },
  {
    "id": "F4/Spin(9)",
    "family": "exceptional",
    "params": [],
    "dim": 16,
    "lambda1_over_s": 0.08333333333333333,
    "s_sq_over_normSqR": 36,
    "provenance": "restricted-root Casimir computation: spherical weights generated by the 26-dimensional fundamental representation of F4, min Casimir 2/3 under -B with s = n/2 = 8, so lambda_1/s = 1/12; isotropy computation |R|^2 = dim(so(9)) (1 - c)^2 with c = 7/9 the Casimir constant of so(9) in f4, giving s^2/|R|^2 = 36",
    "expected_verdict": "UnstableConformal",
    "spectrum": {"root_system": "F4", "generators": [[0, 0, 0, 1]]}
  },
  {
    "id": "S3",
    "family": "sphere",
    "params": [3],
    "dim": 3,
    "expected_verdict": "StableConformalDegenerate"
  },
  {
    "id": "S4",
    "family": "sphere",
    "params": [4],
    "dim": 4,
    "expected_verdict": "StableConformalDegenerate"
  },
  {
    "id": "S5",
    "family": "sphere",
    "params": [5],
    "dim": 5,
    "expected_verdict": "StableConformalDegenerate"
  },
  {
    "id": "S6",
    "family": "sphere",
    "params": [6],
    "dim": 6,
    "expected_verdict": "StableConformalDegenerate"
  },
  {
    "id": "S7",
    "family": "sphere",
    "params": [7],
    "dim": 7,
    "expected_verdict": "StableConformalDegenerate"
  },
  {
    "id": "S8",
    "family": "sphere",
    "params": [8],
    "dim": 8,
    "expected_verdict": "StableConformalDegenerate"
  },
  {
    "id": "H3",
    "family": "hyperbolic",
    "params": [3],
    "dim": 3,
    "s_sq_over_normSqR": 3,
    "provenance": "closed form for constant sectional curvature -1: s = -n(n-1), |R|^2 = 2n(n-1), so s^2/|R|^2 = n(n-1)/2 = 3",
    "expected_verdict": "StableConformal"
  },
  {
    "id": "H4",
    "family": "hyperbolic",
    "params": [4],
    "dim": 4,
    "s_sq_over_normSqR": 6,
    "provenance": "closed form for constant sectional curvature -1: s = -n(n-1), |R|^2 = 2n(n-1), so s^2/|R|^2 = n(n-1)/2 = 6",
    "expected_verdict": "StableConformal"
  },
  {
    "id": "H5",
    "family": "hyperbolic",
    "params": [5],
    "dim": 5,
    "s_sq_over_normSqR": 10,
    "provenance": "closed form for constant sectional curvature -1: s = -n(n-1), |R|^2 = 2n(n-1), so s^2/|R|^2 = n(n-1)/2 = 10",
    "expected_verdict": "StableConformal"
  }
]
)cstbcat";
}

}  // namespace confstab
