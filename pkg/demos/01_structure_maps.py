"""Tour of the two concrete modalities and their structure maps.

Run:  python demos/01_structure_maps.py
"""

from diffmod import (AtomsObject, atom, bag, bag_modality, get_rig,
                     pair_chain, points_modality)
from diffmod.labels import show_label


def show(column):
    return " + ".join("%s%s" % ("" if c == 1 else "%d." % c, show_label(l))
                      for l, c in sorted(column.items())) or "0"


def main():
    rig = get_rig("nat")
    x = AtomsObject(["a", "b"])
    a, b = atom("a"), atom("b")

    B = bag_modality(rig)
    print("bag modality over the naturals, X = <a, b>")
    print("  counit   eps([a])      =", show(B.eps(x).column(bag([a]), None)))
    print("  split    comul([a,a])  =",
          show(B.comul(x).column(bag([a, a]), None)))
    print("  deriving d([a] (x) b)  =",
          show(B.deriving(x).column(pair_chain((bag([a]), b)), None)))
    print("  coder    eta(a)        =",
          show(B.codereliction(x).column(a, None)))
    print("  delta([a]) inside window 4 =",
          show(B.delta(x).column(bag([a]), 4)))

    P = points_modality(get_rig("bool"))
    print("\npoints modality over bool (no deriving transformation exists)")
    from diffmod.labels import point
    p = point([(a, 1)])
    print("  eps(<a:1>)   =", show(P.eps(x).column(p, None)))
    print("  comul(<a:1>) =", show(P.comul(x).column(p, None)))
    print("  deriving is", P.deriving(x))


if __name__ == "__main__":
    main()
