"""Validates CLI JSON reports and the plan fixtures against docs/*.schema.json."""

import json
import subprocess
import sys
from pathlib import Path

import jsonschema

cli, root = sys.argv[1], Path(sys.argv[2])
data = root / "tests" / "data"
report_schema = json.loads((root / "docs" / "report.schema.json").read_text())
plan_schema = json.loads((root / "docs" / "plan.schema.json").read_text())

jsonschema.validate(json.loads((data / "plan.json").read_text()), plan_schema)
for doc in (
    {"sizes": [2, 3], "orientation": "row", "fill": {"kind": "uniform"}},
    {"sizes": [2, 2], "orientations": ["column", "row"], "fill": {"kind": "seeded-random", "seed": 3}},
    {"steps": [{"op": "mixed_expand", "s1": 2, "s2": 2}, {"op": "permute", "map": [1, 0, 3, 2]}]},
):
    jsonschema.validate(doc, plan_schema)

commands = [
    ["rho", data / "m6.csv"],
    ["bounds", data / "m5.txt", "--depth", "2"],
    ["bounds", data / "m3.txt", "--two-by-two"],
    ["contract", data / "m6.csv", "--partition", "0,1,1,1,2,2", "--direction", "down", "--adjust"],
    ["expand", data / "m3.txt", "--plan", data / "plan.json"],
    ["compare", data / "a.txt", data / "b.json", "--orientations", "row", "--max-blocks", "2"],
]
for args in commands:
    for extra in ([], ["--deterministic"]):
        out = subprocess.run([cli, *map(str, args), "--output", "json", *extra],
                             check=True, capture_output=True, text=True).stdout
        jsonschema.validate(json.loads(out), report_schema)

cert = subprocess.run([cli, "bounds", str(data / "m5.txt"), "--output", "json"],
                      check=True, capture_output=True, text=True).stdout
cert_path = Path(subprocess.run(["mktemp"], check=True, capture_output=True, text=True).stdout.strip())
cert_path.write_text(cert)
out = subprocess.run([cli, "verify", str(data / "m5.txt"), "--certificate", str(cert_path), "--output", "json"],
                     check=True, capture_output=True, text=True).stdout
cert_path.unlink()
jsonschema.validate(json.loads(out), report_schema)
print("schemas ok")
