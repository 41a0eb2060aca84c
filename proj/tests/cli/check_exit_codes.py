"""Checks the CLI exit codes: 0 ok, 2 bad input or data, 3 contradiction,
4 verification or table mismatch."""

import subprocess
import sys
import tempfile


def run(exe, *args):
    return subprocess.run([exe, *args], capture_output=True, text=True)


def main() -> int:
    exe = sys.argv[1]
    with tempfile.NamedTemporaryFile("w", suffix=".jsonl", delete=False) as bad:
        bad.write('{"name": "3_1", "pd": [[1,4,2,5]], "components": 1}\n')
    with tempfile.NamedTemporaryFile("w", suffix=".jsonl", delete=False) as wrong:
        wrong.write('{"name": "3_1", "pd": [[1,4,2,5],[3,6,4,1],[5,2,6,3]], '
                    '"components": 1, "u": [1,1], "bu": 3, "u2": 3}\n')
    cases = [
        (["invariants", "3_1"], 0),
        (["invariants", "3_99"], 2),
        (["invariants", "PD[X(1,4,2,5),X(1,4,2,5)]"], 2),
        (["bounds", "hopf"], 0),
        (["bounds", "3_1 #"], 2),
        (["bounds", "K[x]"], 2),
        (["--data", bad.name, "invariants", "3_1"], 2),
        (["--data", "/nonexistent.jsonl", "invariants", "3_1"], 2),
        (["bounds", "3_1", "--vs", "5_1", "--assert-d2", "0"], 3),
        (["table", "--max-crossings", "7", "--check"], 0),
        (["--data", wrong.name, "table", "--check"], 4),
        (["verify-paper", "--suite", "skein"], 0),
        (["verify-paper", "--suite", "omega-table"], 4),
        (["verify-paper", "--suite", "nope"], 2),
    ]
    failures = 0
    for args, code in cases:
        proc = run(exe, *args)
        ok = proc.returncode == code
        failures += not ok
        print(f"{'PASS' if ok else 'FAIL'} {' '.join(args)}: exit {proc.returncode}, expected {code}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
