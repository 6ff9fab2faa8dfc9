"""Validates the JSON output of every golden CLI invocation against schemas/."""
import json
import pathlib
import subprocess
import sys

import jsonschema

SCHEMA_FOR = {
    "pt": "row",
    "gv": "row",
    "deg2-verify": "deg2-verify",
    "crosscheck": "crosscheck",
    "refined": "refined",
    "sym": "sym",
    "macdonald": "macdonald",
}


def main() -> int:
    exe, root = sys.argv[1], pathlib.Path(sys.argv[2])
    tests = root / "tests"
    failures = 0
    seen = set()
    for line in (tests / "golden" / "MANIFEST").read_text().splitlines():
        if not line or line.startswith("#"):
            continue
        _, *args = line.split()
        args = [a.replace("@DATA@", str(tests / "data")) for a in args]
        seen.add(args[0])
        schema = json.loads((root / "schemas" / f"{SCHEMA_FOR[args[0]]}.schema.json").read_text())
        proc = subprocess.run([exe, *args], capture_output=True, text=True)
        if proc.returncode != 0:
            print(f"FAIL {' '.join(args)}: exit {proc.returncode}: {proc.stderr.strip()}")
            failures += 1
            continue
        try:
            jsonschema.validate(json.loads(proc.stdout), schema)
            print(f"ok   {' '.join(args)}")
        except jsonschema.ValidationError as ex:
            print(f"FAIL {' '.join(args)}: {ex.message}")
            failures += 1
    missing = set(SCHEMA_FOR) - seen
    if missing:
        print(f"FAIL no golden invocation for {sorted(missing)}")
        failures += 1
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
