"""Regenerate tests/golden/ from sympy alone.

    python3 tests/make_golden.py
"""

import json
from pathlib import Path

from oracle import canonical, dg_F, s, weighted_degrees, x, y

GOLDEN = Path(__file__).parent / "golden"


def dg_family():
    rows = []
    for n in range(2, 9):
        for d in range(1, n):
            F = dg_F(n, d)
            weights = [1, d, d, 1]
            (degree,) = weighted_degrees(F, weights)
            row = {"n": n, "d": d, "F": canonical(F), "weights": weights, "degree": degree}
            if d == 1:
                row["dehomogenized"] = canonical(x ** (n - 1) * y - (s - 1) * s ** (n - 1), (x, y, s))
            rows.append(row)
    return rows


if __name__ == "__main__":
    GOLDEN.mkdir(exist_ok=True)
    path = GOLDEN / "dg_family.json"
    path.write_text(json.dumps(dg_family(), indent=1) + "\n")
    print(f"wrote {path}")
