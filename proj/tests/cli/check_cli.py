# SPDX-License-Identifier: Apache-2.0
"""Exit codes, example outputs and reproducibility of the heiscf command line."""
import json
import subprocess
import sys
import tempfile
import os

BINARY = sys.argv[1]
failures = []


def run(*args):
    return subprocess.run([BINARY, *args], capture_output=True, text=True)


def check(cond, label):
    print(("ok   " if cond else "FAIL ") + label)
    if not cond:
        failures.append(label)


def report(*args):
    proc = run(*args, "--format", "json")
    check(proc.returncode == 0, " ".join(args) + " exits 0")
    return json.loads(proc.stdout) if proc.returncode == 0 else {}


def main() -> int:
    check(run("constants").returncode == 0, "constants exits 0")
    check(run("--help").returncode == 0, "--help exits 0")
    check(run().returncode == 2, "missing subcommand exits 2")
    check(run("frobnicate").returncode == 2, "unknown subcommand exits 2")
    check(run("expand").returncode == 2, "expand without a point exits 2")
    check(run("expand", "--point", "(0;0)", "--heis", "0, 0").returncode == 2, "conflicting points exit 2")
    check(run("expand", "--point", "(1; 0)").returncode == 2, "point off the surface exits 2")
    check(run("constants", "--format", "xml").returncode == 2, "unknown format exits 2")
    check(run("expand", "--heis", "0, 0.5", "--bits", "128").returncode == 3, "boundary tie exits 3")

    c = report("constants")
    check(abs(c.get("rk", 0) - 6726.7) < 0.5, "rk near 6726.7")
    check(abs(c.get("rad_rk", 0) - 5656.5) < 0.5, "rad rk near 5656.5")

    e = report("expand", "--point", "(1+i; 1+4/5i)")
    check(e.get("gamma0") == "(1+i; 1+i)", "expand gamma0")
    check(e.get("digits") == ["(0; 5i)"], "expand digits")
    check(e.get("terminated") is True, "expand terminates")
    e = report("expand", "--point", "(0;0)")
    check(e.get("digits") == [], "origin has no digits")

    text = run("expand", "--point", "(1+i; 1+4/5i)").stdout
    check("(0; 5i)" in text, "text output lists the digit")
    csv = run("expand", "--point", "(1+i; 1+4/5i)", "--format", "csv").stdout.splitlines()
    check(len(csv) == 3 and csv[0].startswith("n,"), "csv output has a header and one row per index")

    args = ["measure", "--samples", "20", "--depth", "8", "--seed", "11", "--format", "json"]
    a = run(*args, "--threads", "1").stdout
    b = run(*args, "--threads", "3").stdout
    check(a == b and a != "", "measure output is independent of the thread count")
    args = ["khinchin", "--m-max", "300", "--samples", "3000", "--seed", "4", "--format", "json"]
    check(run(*args, "--threads", "1").stdout == run(*args, "--threads", "2").stdout, "khinchin reproducible")
    check(run(*args).stdout != run(*args[:-4], "--seed", "5", "--format", "json").stdout, "seed changes samples")

    with tempfile.TemporaryDirectory() as d:
        path = os.path.join(d, "out.json")
        proc = run("constants", "--format", "json", "--out", path)
        check(proc.returncode == 0 and proc.stdout == "", "--out writes nothing to stdout")
        with open(path) as f:
            check(json.load(f).get("command") == "constants", "--out file holds the report")

    print(f"{len(failures)} failure(s)")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
