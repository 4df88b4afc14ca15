"""Solves exported LP models with scipy's MILP solver and compares the
objective with the exact solver of the kdjm tool."""

import re
import subprocess
import sys
from pathlib import Path

import numpy as np
from scipy.optimize import Bounds, LinearConstraint, milp

TERM = re.compile(r"([+-]?)\s*(\d+)?\s*(x_e\d+_c\d+)")


def parse_lp(text):
    lines = text.splitlines()
    section = None
    objective = {}
    rows = []
    binaries = []
    current = ""

    def flush():
        nonlocal current
        if current.strip():
            name, body = current.split(":", 1)
            lhs, rhs = body.split("<=")
            rows.append((name.strip(), dict(terms(lhs)), float(rhs)))
        current = ""

    def terms(expr):
        for sign, coef, var in TERM.findall(expr):
            value = float(coef) if coef else 1.0
            yield var, -value if sign == "-" else value

    for line in lines:
        if line.startswith("\\"):
            continue
        head = line.strip()
        if head in ("Maximize", "Subject To", "Binary", "End"):
            if section == "st":
                flush()
            section = {"Maximize": "obj", "Subject To": "st", "Binary": "bin", "End": None}[head]
            continue
        if section == "obj":
            for var, value in terms(line.split(":", 1)[-1]):
                objective[var] = value
        elif section == "st":
            if re.match(r"^ \w+:", line) and current:
                flush()
            current += line
        elif section == "bin" and head:
            binaries.append(head)
    return objective, rows, binaries


def solve(text):
    objective, rows, binaries = parse_lp(text)
    names = sorted(set(binaries) | set(objective))
    if not names:
        return 0
    index = {v: i for i, v in enumerate(names)}
    c = np.zeros(len(names))
    for var, value in objective.items():
        c[index[var]] = -value
    a = np.zeros((len(rows), len(names)))
    ub = np.zeros(len(rows))
    for r, (_, coeffs, rhs) in enumerate(rows):
        for var, value in coeffs.items():
            a[r, index[var]] = value
        ub[r] = rhs
    res = milp(c, constraints=LinearConstraint(a, -np.inf, ub),
               integrality=np.ones(len(names)), bounds=Bounds(0, 1))
    if not res.success:
        raise RuntimeError(res.message)
    return round(-res.fun)


def main():
    tool, workdir = sys.argv[1], Path(sys.argv[2])
    cases = [("triangle", 3), ("triangle", 2), ("kind=hypercube,k=2", 2)]
    cases += [(f"kind=rmat,x=3,ef=2,maxd=20,seed={s}", k) for s in range(1, 9) for k in (1, 2, 3)]
    failures = 0
    for spec, k in cases:
        model = workdir / "cross_check.lp"
        subprocess.run([tool, "exact", spec, "--k", str(k), "--ilp", str(model), "--ilp-only"],
                       check=True)
        lp_value = solve(model.read_text())
        out = subprocess.run([tool, "exact", spec, "--k", str(k)], check=True,
                             capture_output=True, text=True).stdout
        exact = int(re.search(r"^weight (\d+)", out, re.M).group(1))
        status = "ok" if lp_value == exact else "MISMATCH"
        failures += lp_value != exact
        print(f"{spec} k={k}: milp {lp_value}, exact {exact} {status}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
