"""Runs the CLI with --json on a set of inputs and validates every document
against schema/knotband.schema.json."""

import json
import pathlib
import subprocess
import sys

import jsonschema

CASES = [
    (["invariants", "3_1"], 0, "stdout"),
    (["invariants", "hopf"], 0, "stdout"),
    (["invariants", "9_44"], 0, "stdout"),
    (["invariants", "U"], 0, "stdout"),
    (["invariants", "K[2] # 3_1!", "--no-q"], 0, "stdout"),
    (["invariants", "PD[X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)]"], 0, "stdout"),
    (["bounds", "9_49"], 0, "stdout"),
    (["bounds", "8_18", "--mode", "derived"], 0, "stdout"),
    (["bounds", "U"], 0, "stdout"),
    (["bounds", "hopf", "--vs", "U"], 0, "stdout"),
    (["bounds", "5_1!", "--vs", "3_1#3_1", "--assert-d2", "3"], 0, "stdout"),
    (["bounds", "3_1", "--vs", "5_1", "--assert-d2", "0"], 3, "stderr"),
    (["table", "--max-crossings", "6", "--check"], 0, "stdout"),
    (["verify-paper", "--suite", "slice"], 0, "stdout"),
    (["verify-paper", "--suite", "km-recurrence", "--range", "-2..2"], 0, "stdout"),
]


def main() -> int:
    exe, schema_path = sys.argv[1], sys.argv[2]
    schema = json.loads(pathlib.Path(schema_path).read_text())
    jsonschema.Draft7Validator.check_schema(schema)
    validator = jsonschema.Draft7Validator(schema)
    failures = 0
    for args, code, stream in CASES:
        proc = subprocess.run([exe, "--json", *args], capture_output=True, text=True)
        label = " ".join(args)
        if proc.returncode != code:
            print(f"FAIL {label}: exit {proc.returncode}, expected {code}\n{proc.stderr}")
            failures += 1
            continue
        doc = json.loads(getattr(proc, stream))
        errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.path))
        if errors:
            failures += 1
            print(f"FAIL {label}: {errors[0].message} at {list(errors[0].path)}")
        else:
            print(f"ok   {label}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
