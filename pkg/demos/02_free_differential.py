"""Build the free differential modality on the points modality and verify
its axioms, then exhibit the initial morphism into the bag modality.

Run:  python demos/02_free_differential.py
"""

import time

from diffmod import (AtomsObject, bag_modality, compose, free_differential,
                     get_rig, morphisms_equal_up_to, points_modality, rho,
                     rho_sharp, run_suite)


def main():
    rig = get_rig("bool")
    x = AtomsObject(["a"])
    y = AtomsObject(["b"])
    P = points_modality(rig)
    FP = free_differential(P)

    print("free differential modality on the points modality, over bool")
    for suite, objs in [("comonad", (x,)), ("coalgebra", (x,)),
                        ("differential", (x,)), ("codereliction", (x, y)),
                        ("bialgebra", (x,)), ("monoidal", (x, y)),
                        ("seely", (x, y))]:
        t0 = time.time()
        reports = run_suite(suite, FP, objs, 3)
        status = "ok" if all(r.passed for r in reports) else "FAILED"
        print("  %-13s %2d equations  %-6s (%.2fs)"
              % (suite, len(reports), status, time.time() - t0))

    B = bag_modality(rig)
    rs = rho_sharp(FP, B, x)
    ok, _ = morphisms_equal_up_to(compose(rs, FP.zeta(x)), rho(P, B, x), 3)
    print("\ninitial morphism into the bag modality restricts to rho along "
          "the unit:", ok)


if __name__ == "__main__":
    main()
