"""Negative and cross-model evidence: exhaustively refute a deriving
transformation on the points modality, exhibit the z2 witness, and compare
every bag structure map against an independent relational oracle.

Run:  python demos/03_refute_and_compare.py
"""

from diffmod import (AtomsObject, lemma27_witness, refute_deriving,
                     rel_oracle_compare)


def main():
    out = refute_deriving(x_size=1, max_weight=3)
    print("deriving-transformation search on the points modality:")
    print("  candidates tested:", out["candidatesTested"])
    print("  survivors:        ", out["survivors"])

    print("\ntwo distinct coalgebra morphisms onto one coalgebra over z2:")
    for r in lemma27_witness(max_weight=4):
        print("  %-28s %s" % (r.equation, r.status))

    print("\nrelational oracle vs the bag construction, X = Y = <a, b>:")
    x = AtomsObject(["a", "b"])
    for r in rel_oracle_compare(x, x, max_weight=3, m_weight=2):
        print("  %-28s %s" % (r.equation, r.status))


if __name__ == "__main__":
    main()
