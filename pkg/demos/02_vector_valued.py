"""Vector-valued weights.

For a dominant weight k = (k_1 >= ... >= k_n) the rank-r contribution is
obtained by restricting the GL(n) representation to GL(r), rewriting each
Schur polynomial in spherical functions, and evaluating gamma ratios at the
spherical labels.  Scalar weights recover the scalar formula.
"""

from siegeldim import branching_support, c_vector, dim_scalar, dim_vector


def main() -> None:
    k = (6, 5, 5)
    print(f"weight {k}: restriction to GL(2)")
    for b, mult in branching_support(k, 2):
        print(f"    {b}  x{mult}")
    print()
    for r in range(4):
        print(f"    c_{r}({k}) = {c_vector(k, r)}")
    for N in (3, 4, 5):
        print(f"dim at level {N}: {dim_vector(k, N).total}")
    print()
    print("scalar check, weight (7,7,7) level 3:",
          dim_vector((7, 7, 7), 3).total == dim_scalar(3, 7, 3).total)


if __name__ == "__main__":
    main()
