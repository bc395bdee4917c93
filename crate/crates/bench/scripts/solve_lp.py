#!/usr/bin/env python3
"""Solve a CPLEX-LP file with HiGHS and print the optimal objective value."""
import sys

import highspy


def main() -> int:
    if len(sys.argv) != 2:
        print("usage: solve_lp.py MODEL.lp", file=sys.stderr)
        return 2
    h = highspy.Highs()
    h.setOptionValue("output_flag", False)
    h.setOptionValue("mip_rel_gap", 0.0)
    h.setOptionValue("mip_abs_gap", 0.0)
    if h.readModel(sys.argv[1]) != highspy.HighsStatus.kOk:
        print(f"cannot read {sys.argv[1]}", file=sys.stderr)
        return 1
    h.run()
    status = h.getModelStatus()
    if status != highspy.HighsModelStatus.kOptimal:
        print(f"not optimal: {h.modelStatusToString(status)}", file=sys.stderr)
        return 1
    print(f"{h.getInfo().objective_function_value:.6f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
