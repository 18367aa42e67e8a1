"""Runs the command-line tool and validates its JSON output against docs/schemas."""
import json
import pathlib
import subprocess
import sys

import jsonschema
from referencing import Registry, Resource

cli, schema_dir, fixtures = sys.argv[1], pathlib.Path(sys.argv[2]), pathlib.Path(sys.argv[3])

resources = []
for path in schema_dir.glob("*.schema.json"):
    doc = json.loads(path.read_text())
    resources.append((doc["$id"], Resource.from_contents(doc)))
registry = Registry().with_resources(resources)

runs = [
    ("validate", ["validate", str(fixtures / "trefoil_rh.txt")]),
    ("invariants", ["invariants", str(fixtures / "e33.txt")]),
    ("homology", ["homology", str(fixtures / "trefoil_rh.txt")]),
    ("report", ["report", str(fixtures / "unknot2.txt")]),
    ("report", ["theta", str(fixtures / "e33.txt")]),
    ("transport", ["transport", str(fixtures / "trefoil_lh_stab.txt")]),
    ("transport", ["transport", "--which", "minus", str(fixtures / "trefoil_lh_stab.txt")]),
    ("en_scenario", ["en-scenario", "3"]),
]

failed = 0
for schema, args in runs:
    out = subprocess.run([cli, "--json", *args], capture_output=True, text=True)
    if out.returncode != 0:
        print(f"{args}: exit {out.returncode}\n{out.stderr}")
        failed += 1
        continue
    validator = jsonschema.Draft7Validator(registry.contents(f"{schema}.schema.json"), registry=registry)
    errors = list(validator.iter_errors(json.loads(out.stdout)))
    for e in errors:
        print(f"{args}: {e.json_path}: {e.message}")
    failed += bool(errors)
    print(f"{' '.join(args)}: {'ok' if not errors else 'INVALID'}")
sys.exit(1 if failed else 0)
