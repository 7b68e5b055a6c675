#!/usr/bin/env python3
"""Solve exported LP files with HiGHS and compare against `scg solve --solver milp`."""
import json
import subprocess
import sys
import tempfile
from pathlib import Path

try:
    import highspy
except ImportError:
    print("highspy not installed; skipping")
    sys.exit(77)

GRIDS = [
    ["tclass", "--r", "5", "--T", "1", "--nt", "3"],
    ["tclass", "--r", "6", "--T", "2", "--nt", "2", "2"],
    ["tclass", "--r", "6", "--T", "1", "--nt", "4", "--monotone"],
    ["scg", "--r", "5", "--n", "3", "--action-size", "2"],
    ["scg", "--r", "6", "--n", "4", "--action-size", "1"],
    ["3sat-hard", "--vars", "3", "--ratio", "1"],
]


def run(scg, *args):
    out = subprocess.run([scg, *args], check=True, capture_output=True, text=True).stdout
    return out


def highs_objective(lp_file):
    h = highspy.Highs()
    h.setOptionValue("output_flag", False)
    h.setOptionValue("mip_rel_gap", 0.0)
    h.readModel(str(lp_file))
    h.run()
    status = h.getModelStatus()
    if status != highspy.HighsModelStatus.kOptimal:
        return None, h.modelStatusToString(status)
    return h.getInfo().objective_function_value, "Optimal"


def main():
    scg = sys.argv[1]
    failures = 0
    checked = 0
    with tempfile.TemporaryDirectory() as tmp:
        tmp = Path(tmp)
        for g, grid in enumerate(GRIDS):
            out = tmp / f"grid{g}"
            out.mkdir()
            run(scg, "gen", *grid, "--count", "4", "--seed", str(500 + 10 * g), "--out", str(out))
            for inst in sorted(out.glob("*.json")):
                lp = inst.with_suffix(".lp")
                run(scg, "solve", str(inst), "--solver", "export-lp", "--lp", str(lp))
                ours = json.loads(run(scg, "solve", str(inst), "--solver", "milp", "--time-limit", "10"))
                theirs, status = highs_objective(lp)
                checked += 1
                if theirs is None or ours["status"] not in ("Optimal", "Timeout"):
                    print(f"FAIL {inst.name}: scg {ours['status']}, highs {status}")
                    failures += 1
                    continue
                if ours["status"] == "Timeout":
                    # Only the bracket is known: lower bound <= optimum <= incumbent.
                    tol = 1e-6 * max(1.0, abs(theirs))
                    ub = ours["objective_float"]
                    lb = ours["lower_bound"]
                    ok = (lb is None or lb <= theirs + tol) and (ub is None or theirs <= ub + tol)
                    print(f"{'PASS' if ok else 'FAIL'} {inst.name}: scg timeout [{lb}, {ub}], "
                          f"highs {theirs:.9g}")
                    failures += not ok
                    continue
                diff = abs(ours["objective_float"] - theirs)
                ok = diff <= 1e-6 * max(1.0, abs(theirs))
                print(f"{'PASS' if ok else 'FAIL'} {inst.name}: scg {ours['objective_float']:.9g}, highs {theirs:.9g}")
                failures += not ok
    print(f"{checked - failures}/{checked} agree")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
