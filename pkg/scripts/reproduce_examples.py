#!/usr/bin/env python3
"""Replay the worked examples through the command line and show the results.

Exits nonzero if any command's exit code differs from the expected one.
"""

import shlex
import sys

from diffalg.cli import run_command

EXAMPLES = [
    ("riccati 'D^2 + a1*D + a0'", 0),
    ("riccati 'D^3 + a2*D^2 + a1*D + a0'", 0),
    ("sympow 'D^2 - 1' 2", 0),
    ("opmul 'D - t' 'D + t'", 0),
    ("series 'D^2 - 1' --truncation 8", 0),
    ("antiderivative 1/t^2 3*t^2 1/t", 0),
    ("logderiv 3/t '(2*t + 1)/(t^2 + t)' 1/t^2", 0),
    ("scaledlogderiv '1/(2*t)' '1/(t^3 - 1)' '1/(t^2 + 1)' '1/(t^3 - 2)'", 2),
    ("rosenlicht 'x^3 - x^2' 'x^2' '2*x'", 0),
    ("constants x2 -x1 --deg-max 2", 0),
    ("constants 'x^2'", 0),
    ("constants 'x^3 - x^2'", 2),
    ("constants 'x1 + 2*x1*x2' 'x2 + 3*x1*x2' --deg-max 1", 0),
    ("poizat --h 1/t", 0),
    ("poizat --h 2*t --c 1", 0),
    ("poizat --h 3*t^2 --c 0", 0),
    ("poizat --h 3*t^2 --c 1", 0),
    ("lv 1 1 2 1", 0),
    ("lv 1 2 1 3", 2),
    ("rosfamily 1/t 1/t 1", 0),
    ("rosfamily -1 1 --constant-base", 0),
    ("atlas", 0),
    ("atlas --g2", 0),
]


def main() -> int:
    bad = 0
    for line, expected in EXAMPLES:
        code, results, err = run_command(shlex.split(line))
        print(f"$ diffalg {line}")
        for r in results:
            print(r.as_text())
        if err:
            print(err)
        mark = "ok" if code == expected else f"MISMATCH (expected {expected})"
        print(f"[exit {code}: {mark}]\n")
        bad += code != expected
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
