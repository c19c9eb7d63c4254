"""Run each finsep subcommand with --format json and validate against schemas/."""
import json
import pathlib
import subprocess
import sys

from jsonschema import Draft202012Validator
from referencing import Registry, Resource

CASES = [
    ("irr", ["irr", "--q", "3", "--degree", "2"]),
    ("irr", ["irr", "--q", "4", "--degree", "3", "--count-only"]),
    ("lrs-eval", ["lrs-eval", "--q", "3", "--max-degree", "3", "--spec", "{spec}"]),
    ("legendre", ["legendre", "--q", "9", "--max-degree", "2", "--a", "1,1"]),
    ("legendre", ["legendre", "--q", "3", "--max-degree", "2", "--a", "[1]/[0,1]"]),
    ("example", ["example", "--name", "parity", "--q", "2", "--max-degree", "6"]),
    ("example", ["example", "--name", "symbol", "--q", "3", "--max-degree", "5"]),
    ("example", ["example", "--name", "staircase", "--q", "3", "--max-degree", "6"]),
    ("frobenian", ["frobenian", "--q", "9", "--max-degree", "2", "--family", "kummer:0,1", "--class-set=-1", "--roundtrip"]),
    ("frobenian", ["frobenian", "--q", "2", "--max-degree", "5", "--family", "constant:3", "--class-set", "0,1"]),
    ("density", ["density", "--q", "3", "--max-degree", "4", "--family", "kummer:0,1", "--class-set=-1"]),
    ("density", ["density", "--q", "2", "--max-degree", "6", "--family", "constant:2", "--class-set", "1"]),
    ("root-density", ["root-density", "--q", "3", "--max-degree", "3", "--f", "0,-1;0;1", "--show-roots"]),
    ("root-density", ["root-density", "--q", "2", "--max-degree", "4", "--f", "1;1;1"]),
    ("grouplab", ["grouplab", "--group", "cyclic:2", "--r", "2", "--stabilizers", "all"]),
    ("grouplab", ["grouplab", "--group", "symmetric:3", "--r", "1", "--stabilizers", "trivial"]),
]


def main() -> int:
    binary, schema_dir, work = sys.argv[1], pathlib.Path(sys.argv[2]), pathlib.Path(sys.argv[3])
    work.mkdir(parents=True, exist_ok=True)
    spec = work / "spec.json"
    spec.write_text(json.dumps({"coeffs": [0, [0, 1]], "initial": [1, 0], "start": 1}))

    registry = Registry()
    for path in schema_dir.glob("*.schema.json"):
        doc = json.loads(path.read_text())
        registry = registry.with_resource(doc["$id"], Resource.from_contents(doc))
    base = "https://finsep.local/schemas/"

    failures = 0
    for name, args in CASES:
        argv = [binary, "--format", "json"] + [a.replace("{spec}", str(spec)) for a in args]
        proc = subprocess.run(argv, capture_output=True, text=True)
        label = " ".join(args)
        if proc.returncode != 0:
            print(f"FAIL {label}: exit {proc.returncode}: {proc.stderr.strip()}")
            failures += 1
            continue
        schema = registry.contents(base + f"{name}.schema.json")
        validator = Draft202012Validator(schema, registry=registry)
        errors = sorted(validator.iter_errors(json.loads(proc.stdout)), key=lambda e: list(e.path))
        if errors:
            failures += 1
            print(f"FAIL {label}")
            for e in errors[:5]:
                print(f"  at {list(e.path)}: {e.message[:200]}")
        else:
            print(f"ok   {label}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
