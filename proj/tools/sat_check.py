#!/usr/bin/env python3
"""Run an external SAT solver (python-sat) on exported instances.

    ramsey3 sat-export --colors 2 --order 8 -o r28.cnf
    python3 tools/sat_check.py r28.cnf [--model-out m.txt]

Prints SAT or UNSAT. With --model-out a satisfying model is written as a
`v` line that `ramsey3 sat-decode` accepts.
"""

import argparse
import sys

from pysat.formula import CNF
from pysat.solvers import Solver


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("cnf")
    parser.add_argument("--solver", default="cadical153")
    parser.add_argument("--model-out")
    args = parser.parse_args()

    formula = CNF(from_file=args.cnf)
    with Solver(name=args.solver, bootstrap_with=formula.clauses) as solver:
        sat = solver.solve()
        print("SAT" if sat else "UNSAT")
        if sat and args.model_out:
            with open(args.model_out, "w") as out:
                out.write("v " + " ".join(map(str, solver.get_model())) + " 0\n")
    return 0 if sat else 1


if __name__ == "__main__":
    sys.exit(main())
