"""Runs the command line tool on a spread of commands and validates every
record against the shipped schema. Also checks byte-identical reruns."""

import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema

tool, schema_path = sys.argv[1], sys.argv[2]
schema = json.loads(pathlib.Path(schema_path).read_text())
validator = jsonschema.Draft202012Validator(schema)

tmp = pathlib.Path(tempfile.mkdtemp())
(tmp / "rows.cmat.json").write_text('{"matrix": [[[1, 0], [0.5, 0.5]], [1, [0, -1]]]}')

runs = [
    (["discrepancy", "--dft", "3"], 0),
    (["discrepancy", "--in", str(tmp / "rows.cmat.json")], 0),
    (["discrepancy", "--dft", "5", "--restarts", "4"], 0),
    (["norm", "--a3", "--kind", "inf1"], 0),
    (["norm", "--dft", "3", "--kind", "1inf"], 0),
    (["norm", "--dft", "4", "--kind", "22"], 0),
    (["norm", "--dft", "3", "--kind", "qp", "--q", "1.5", "--p", "3"], 0),
    (["cover", "--subset", "0b000011011"], 0),
    (["cover", "--subset", "(0,0),(1,-1),(-1,1),(0,1)"], 0),
    (["orbits"], 0),
    (["witness", "--dft", "3"], 0),
    (["witness", "--strips"], 0),
    (["witness", "--random", "20"], 0),
    (["verify-lemmas", "--resolution", "60", "--samples", "2000", "--b-values", "50", "--centers", "200"], 0),
    (["bm", "upper", "--n", "3"], 0),
    (["bm", "upper", "--n", "4", "--q", "1.5", "--p", "4"], 0),
    (["bm", "search", "--n", "2", "--restarts", "5"], 0),
    (["bm", "counterexample", "--n", "5"], 0),
    (["counterexample", "--start", "a3", "--iterations", "300"], 0),
    (["render", "--preset", "band", "--t", "0.05", "--svg", str(tmp / "band.svg"), "--resolution", "120"], 0),
    (["--timing", "orbits"], 0),
]

failures = 0
for args, code in runs:
    first = subprocess.run([tool, *args], capture_output=True, text=True)
    if first.returncode != code:
        print(f"FAIL exit {first.returncode} != {code}: {args}\n{first.stderr}")
        failures += 1
        continue
    record = json.loads(first.stdout)
    errors = sorted(validator.iter_errors(record), key=lambda e: list(e.path))
    for e in errors:
        print(f"FAIL schema {args}: {list(e.path)}: {e.message}")
    failures += bool(errors)
    if "--timing" not in args:
        second = subprocess.run([tool, *args], capture_output=True, text=True)
        if second.stdout != first.stdout:
            print(f"FAIL rerun differs: {args}")
            failures += 1
    print(f"ok {' '.join(args)}")

bad = tmp / "bad.cmat.json"
bad.write_text('{"matrix": [[1, 2],\n')
r = subprocess.run([tool, "discrepancy", "--in", str(bad)], capture_output=True, text=True)
if r.returncode != 1 or "line 2" not in r.stderr:
    print(f"FAIL malformed input: exit {r.returncode}, {r.stderr!r}")
    failures += 1

sys.exit(1 if failures else 0)
