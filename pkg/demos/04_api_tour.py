"""Library API tour: the same objects the script language builds, used
directly from Python.

Walks the classical linked pair, a relative G-dimension computation,
and one theorem check, printing every intermediate invariant.
Run with:  python3 demos/04_api_tour.py
"""

from linkage_lab import (
    QQ,
    canonical_module,
    check,
    cyclic_module,
    depth,
    free_module,
    gc_dim,
    in_auslander_class,
    is_horizontally_linked,
    is_isomorphic,
    krull_dim,
    lambda_module,
    make_ring,
    reduced_grade,
    serre_tilde,
)


def main():
    H = make_ring(QQ, ["x", "y"], ["x*y"])
    Rx = cyclic_module(H, ["x"])
    Ry = cyclic_module(H, ["y"])

    print("== hypersurface pair ==")
    print("HS(R/(x)) =", Rx.hilbert_series())
    print("depth, dim:", depth(Rx), krull_dim(Rx))
    rep = is_horizontally_linked(Rx)
    print("linkage report:", rep.describe())
    print("lambda(R/(x)) ~ R/(y):", is_isomorphic(lambda_module(Rx), Ry).kind)

    print()
    print("== relative G-dimension over the three-lines ring ==")
    T = make_ring(QQ, ["x", "y", "z"], ["y*z", "x*z", "x*y"])
    w = canonical_module(T)
    M = cyclic_module(T, ["x"])
    print("omega generators:", w.gen_twists)
    print("gc_dim(M, R):", gc_dim(M, free_module(T, [0])))
    print("gc_dim(M, omega):", gc_dim(M, w))
    print("M in A_omega:", in_auslander_class(M, w).describe())
    print("reduced grade rgr(M, omega):", reduced_grade(M, w))
    print("Serre-type condition S~_1(M):", serre_tilde(M, 1).describe())

    print()
    print("== one mechanical theorem check ==")
    report = check("THM_MS", {"M": Rx, "label": "R/(x)"})
    print(report.summary_line())
    for h in report.hypothesis_status:
        print(f"  hypothesis {h.name}: {h.label}")


if __name__ == "__main__":
    main()
