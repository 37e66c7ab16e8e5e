"""The symmetric-function kernel.

Zonal spherical polynomials are Jack polynomials at alpha = 2 normalised to
take the value 1 at (1, ..., 1).  The Schur-to-spherical transition matrix is
unitriangular in dominance order, and its row sums are Weyl dimensions.
"""

from siegeldim import c_factor, schur, schur_to_spherical, spherical, weyl_dim


def main() -> None:
    lam, r = (2, 1), 3
    for name, poly in (("Schur", schur(lam, r)), ("spherical", spherical(lam, r))):
        terms = " + ".join(f"({c}) m{mu}" for mu, c in poly.coeffs.items())
        print(f"{name} {lam} in {r} variables = {terms}")
    print(f"c-factor {lam}:", c_factor(lam, r))
    row = schur_to_spherical(lam, r)
    for m, coeff in row.items():
        print(f"    n[{m}] = {coeff}")
    print("row sum", row.total(), "== Weyl dimension", weyl_dim(lam + (0,)))


if __name__ == "__main__":
    main()
