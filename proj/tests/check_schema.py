#!/usr/bin/env python3
"""Validates the CLI's JSON reports against docs/report.schema.json.

Usage: check_schema.py <path-to-orex-binary> <path-to-schema>
Runs a battery of subcommand invocations, requires the documented exit codes,
and validates every emitted report against the schema.
"""

import json
import subprocess
import sys

import jsonschema

CASES = [
    (["classify", "--q", "2", "--b", "0", "--dx", "0"], 1),
    (["classify", "--q", "zeta(3)", "--b", "0", "--dx", "0"], 0),
    (["classify", "--q", "1", "--b", "0", "--dx", "5"], 0),
    (["classify", "--q", "1", "--b", "0", "--dx", "x^2", "--k", "3"], 1),
    (["classify", "--q", "1", "--b", "1", "--dx", "x"], 1),
    (["analyze-derivation", "--dx", "x^2 - 1", "--g", "x - 1"], 0),
    (["analyze-derivation", "--dx", "0"], 0),
    (["witness-chain", "--dx", "x", "--alpha", "1", "--k", "3"], 0),
    (["witness-chain", "--dx", "x^2 - 1", "--k", "2"], 0),
    (["essentialize", "x - 1", "--dx", "x^2", "--alpha", "1"], 0),
    (["essentialize", "t + x", "--dx", "x^2"], 0),
    (["maximality", "t", "--dx", "x^2", "--alpha", "1"], 0),
    (["maximality", "x^2*t + 1", "--dx", "x^2", "--alpha", "1"], 0),
    (["lie-datum", "x2", "1"], 0),
    (["lie-datum", "5"], 0),
    (["lie-datum", "x2^2", "0", "--iter-bound", "16"], 0),
    (["verify", "--seed", "3"], 0),
]


def main() -> int:
    if len(sys.argv) != 3:
        print("usage: check_schema.py <orex-binary> <schema.json>")
        return 2
    binary, schema_path = sys.argv[1], sys.argv[2]

    with open(schema_path, encoding="utf-8") as fh:
        schema = json.load(fh)
    validator = jsonschema.Draft202012Validator(schema)

    failures = 0
    for args, expected_exit in CASES:
        proc = subprocess.run(
            [binary, *args, "--format", "json"],
            capture_output=True,
            text=True,
            timeout=120,
        )
        label = " ".join(args)
        if proc.returncode != expected_exit:
            print(f"FAIL {label}: exit {proc.returncode}, expected {expected_exit}")
            failures += 1
            continue
        try:
            report = json.loads(proc.stdout)
        except json.JSONDecodeError as e:
            print(f"FAIL {label}: stdout is not JSON ({e})")
            failures += 1
            continue
        errors = sorted(validator.iter_errors(report), key=lambda e: e.json_path)
        if errors:
            print(f"FAIL {label}: {errors[0].json_path}: {errors[0].message}")
            failures += 1
            continue
        print(f"PASS {label}")

    if failures:
        print(f"{failures} of {len(CASES)} schema cases failed")
        return 1
    print(f"all {len(CASES)} reports are schema-valid")
    return 0


if __name__ == "__main__":
    sys.exit(main())
