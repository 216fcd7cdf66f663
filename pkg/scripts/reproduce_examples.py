"""Run the command-line tool on the bundled fixtures and print each result.

Exit status is nonzero if any command returns an unexpected code.
"""
import argparse
import io
import sys
from pathlib import Path

from pseudoeq.cli import run_command

FIX = Path(__file__).resolve().parent.parent / "fixtures"

# (arguments, expected exit code)
COMMANDS = [
    (["validate", "B.eqa"], 0),
    (["props", "B.eqa"], 0),
    (["roundtrip", "B.eqa"], 0),
    (["ds", "B.eqa"], 0),
    (["congruences", "B.eqa"], 0),
    (["states", "B.eqa", "--kind", "I"], 0),
    (["states", "B.eqa", "--kind", "II"], 0),
    (["morphisms", "B.eqa"], 0),
    (["pointed", "B.eqa", "--point", "0"], 0),
    (["bosbach", "B.eqa", "--point", "0"], 0),
    (["bosbach", "B.eqa", "--point", "a"], 0),
    (["bosbach", "B.eqa", "--point", "b", "--compare-bck"], 0),
    (["props", "A.eqa"], 0),
    (["roundtrip", "A.eqa", "--compare", "B.eqa"], 0),
    (["congruences", "A.eqa"], 0),
    (["check-state", "C.eqa", "--identity", "--kind", "I"], 0),
    (["check-state", "C.eqa", "--identity", "--kind", "II", "--all"], 1),
    (["search", "--size", "4", "--claim", "IS_I ≠ IS_II"], 0),
]


def resolve(arg):
    return str(FIX / arg) if arg.endswith(".eqa") else arg


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--quiet", action="store_true", help="only print the command lines and exit codes")
    args = ap.parse_args(argv)
    bad = 0
    for cmd, expected in COMMANDS:
        out, err = io.StringIO(), io.StringIO()
        code = run_command([resolve(a) for a in cmd], out, err)
        mark = "ok" if code == expected else f"UNEXPECTED (wanted {expected})"
        print(f"$ pseudoeq {' '.join(cmd)}    [exit {code}, {mark}]")
        if not args.quiet:
            print(out.getvalue() + err.getvalue())
        bad += code != expected
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
