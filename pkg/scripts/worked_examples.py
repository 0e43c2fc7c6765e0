#!/usr/bin/env python3
"""End-to-end walkthrough on the smallest interesting code.

Builds the [2x2, 2, 2] code over F_2 with g = (alpha, 1), prints its
codeword table with liftings and Pluecker coordinates, derives the
block-code parity structure, and list-decodes two received spaces.
"""

from plueckerdec import (
    Subspace,
    ball_equations,
    construction4,
    decode_list,
    embed,
    enumerate_code,
    ext_field,
    lift,
    make_code,
    system_report,
)
from plueckerdec.gf import format_element
from plueckerdec.listdec import build_block_code
from plueckerdec.matgf import MatGF, mat_to_text


def show_matrix(m, indent="  "):
    for line in mat_to_text(m).splitlines():
        print(indent + line)


def main():
    ext = ext_field(2, 2)
    code = make_code(2, 4, 2, 2, g=[ext.alpha(), ext.one()])
    print(f"code: q={code.q} n={code.n} k={code.k} delta={code.delta} rho={code.rho}")

    print("\ncodeword table:")
    for cw in enumerate_code(code):
        sub = lift(cw)
        vec = ",".join(format_element(v) for v in cw.vec)
        print(f"  vector=({vec})  lifting rows={sub.basis.to_lists()}  "
              f"pluecker={embed(sub)}")

    bc = build_block_code(code)
    print("\nblock code positions:", bc.positions)
    print("parity-check matrix:")
    show_matrix(bc.Hp)

    for name, rows in (
        ("R1", [[1, 0, 1, 0], [0, 0, 0, 1]]),
        ("R2", [[1, 0, 0, 1], [0, 1, 1, 1]]),
    ):
        received = Subspace(MatGF.from_rows(code.ext.base, rows))
        print(f"\nreceived {name}: {rows}")
        _, a_inv = construction4(received)
        print("change-of-basis inverse:")
        show_matrix(a_inv)
        print("ball equations (coefficient vectors over the 6 coordinates):")
        for form in ball_equations(received, 1):
            print(f"  {form.coeffs} = {form.rhs}")
        _, stats = system_report(code, received, 1)
        print(f"system size: {stats}")
        result = decode_list(code, received, 1)
        print(f"list ({len(result.entries)} codewords):")
        for entry in result.entries:
            print(f"  message={','.join(format_element(m) for m in entry.message)}  "
                  f"lifting={entry.subspace.basis.to_lists()}  "
                  f"pluecker={entry.pluecker}")


if __name__ == "__main__":
    main()
