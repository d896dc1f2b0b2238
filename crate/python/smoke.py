"""Smoke test for the bettikit extension module.

Build and install first:
    cd crates/python && maturin build --release -o dist && pip install dist/*.whl
"""
import json
from fractions import Fraction

import bettikit

EXAMPLE1 = """\
       0  1  2  3  4 5
total: 1 11 28 28 11 1
    0: 1  .  .  .  . .
    1: .  3  .  .  . .
    2: .  8 20  8  . .
    3: .  .  8 20  8 .
    4: .  .  .  .  3 .
    5: .  .  .  .  . 1
"""

EXAMPLE3 = """\
       0  1  2  3  4 5
total: 1 12 29 29 12 1
    0: 1  .  .  .  . .
    1: .  8 14  9  2 .
    2: .  2  4  2  . .
    3: .  .  2  4  2 .
    4: .  2  9 14  8 .
    5: .  .  .  .  . 1
"""


def main():
    t1 = bettikit.BettiTable.from_diagram(EXAMPLE1)
    assert t1.length == 5
    assert t1.is_self_dual() == (5, 10)
    assert bettikit.BettiTable.from_json(t1.to_json()) == t1

    b = bettikit.bound_e1(t1)
    assert b["e_value"] == 90 and b["bound"] == Fraction(875, 8)
    assert b["decimal"] == "109.375" and b["holds"]

    t3 = bettikit.BettiTable.from_diagram(EXAMPLE3)
    coeffs = bettikit.hilbert_coefficients(t3, 2)
    assert coeffs == [26, 65, 68] and all(isinstance(c, Fraction) for c in coeffs)
    assert [bettikit.coefficient_nu(t3, l) for l in range(3)] == coeffs
    assert bettikit.multiplicity_ps(t3) == 26
    assert bettikit.bound_e1(t3)["bound"] == Fraction(3125, 24)

    k3 = bettikit.koszul_table(3)
    assert bettikit.symmetric_decompose(k3) == (3, [(Fraction(3), [0, 1, 2, 3])])
    assert bettikit.decompose(bettikit.BettiTable({(0, 0): 2, (1, 1): 3, (2, 3): 1})) == [(Fraction(6), [0, 1, 3])]
    assert bettikit.bound_e0(k3)["bound"] == 1

    pure = bettikit.pure_betti([0, 2, 5])
    assert pure.get(0, 0) == Fraction(1, 10)
    assert bettikit.symmetrized_pure([0, 1, 3], 4).is_self_dual() == (2, 4)

    assert bettikit.nu(2, 2, 2) == 11
    assert bettikit.complete_homogeneous(2, [1, 2]) == 7
    assert bettikit.vandermonde(0, [1, 2, 4]) == 6
    assert bettikit.f_l([5, 5, 5, 5, 10], 2) == 95

    lhs, rhs, holds = bettikit.check_sym_pure_bound([0, 1, 4, 6])
    assert lhs == 12 and holds
    assert bettikit.check_lemma_monotonicity([0, 1, 4, 6], [0, 2, 4, 6])

    report = json.loads(bettikit.fuzz(1, 3, 8, ["lemma"]))
    assert report["theorem_violations"] == 0

    try:
        bettikit.BettiTable.from_diagram("0: 1 x")
    except ValueError as e:
        assert "line 1" in str(e)
    else:
        raise AssertionError("parse error not raised")

    print("bettikit smoke test passed")


if __name__ == "__main__":
    main()
