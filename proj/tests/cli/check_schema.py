# SPDX-License-Identifier: Apache-2.0
"""Runs the heiscf binary on small configurations and validates every JSON report."""
import json
import subprocess
import sys

import jsonschema

RUNS = [
    ["constants"],
    ["expand", "--point", "(1+i; 1+4/5i)"],
    ["expand", "--point", "(0;0)"],
    ["expand", "--heis", "0.31+0.12i, 0.27", "--bits", "128", "--depth", "6"],
    ["verify", "--samples", "5", "--depth", "5", "--seed", "3"],
    ["measure", "--samples", "10", "--depth", "6", "--seed", "3"],
    ["bestapprox", "--samples", "3", "--depth", "10", "--bound", "30", "--seed", "3"],
    ["bestapprox", "--point", "(1+i; 1+4/5i)", "--bound", "5"],
    ["count", "--m-max", "12"],
    ["khinchin", "--m-max", "500", "--samples", "2000", "--seed", "3"],
]


def main() -> int:
    binary, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path) as f:
        schema = json.load(f)
    validator = jsonschema.Draft202012Validator(schema)
    failed = 0
    for args in RUNS:
        proc = subprocess.run([binary, *args, "--format", "json", "--threads", "1"], capture_output=True, text=True)
        label = " ".join(args)
        if proc.returncode != 0:
            print(f"FAIL {label}: exit {proc.returncode}\n{proc.stderr}")
            failed += 1
            continue
        errors = list(validator.iter_errors(json.loads(proc.stdout)))
        for e in errors:
            print(f"FAIL {label}: {'/'.join(map(str, e.path))}: {e.message}")
        failed += bool(errors)
        if not errors:
            print(f"ok   {label}")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
