#!/usr/bin/env python3
"""DIMACS front end for the CaDiCaL binding in python-sat.

Usage: pysat_solve.py <formula.cnf> [model-file]

Prints competition-style `s` / `v` lines and exits 10 (SAT) or 20 (UNSAT). With a model
file argument the verdict and literals are also written there in minisat style.
"""

import sys

from pysat.formula import CNF
from pysat.solvers import Solver


def main(argv):
    if len(argv) not in (2, 3):
        print("usage: pysat_solve.py <formula.cnf> [model-file]", file=sys.stderr)
        return 1
    formula = CNF(from_file=argv[1])
    with Solver(name="cadical153", bootstrap_with=formula.clauses) as solver:
        sat = solver.solve()
        model = solver.get_model() if sat else None
    if sat:
        lits = list(model)
        seen = {abs(l) for l in lits}
        lits += [-v for v in range(1, formula.nv + 1) if v not in seen]
        sys.stdout.write("s SATISFIABLE\n")
        for i in range(0, len(lits), 20):
            sys.stdout.write("v " + " ".join(map(str, lits[i:i + 20])) + "\n")
        sys.stdout.write("v 0\n")
    else:
        sys.stdout.write("s UNSATISFIABLE\n")
    if len(argv) == 3:
        with open(argv[2], "w") as out:
            if sat:
                out.write("SAT\n" + " ".join(map(str, lits)) + " 0\n")
            else:
                out.write("UNSAT\n")
    sys.stdout.flush()
    return 10 if sat else 20


if __name__ == "__main__":
    sys.exit(main(sys.argv))
