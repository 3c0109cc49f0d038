"""Runs the tool on every suite and validates each JSON report against the schema."""
import json
import subprocess
import sys

import jsonschema

tool, schema_path = sys.argv[1], sys.argv[2]
with open(schema_path) as f:
    schema = json.load(f)

for suite in ["chacon", "zset", "returnset", "thick", "torus", "moebius"]:
    args = [tool, suite, "--samples", "200", "--budget", "2000"]
    proc = subprocess.run(args, capture_output=True, text=True)
    if proc.returncode not in (0, 1):
        sys.exit(f"{suite}: exit {proc.returncode}: {proc.stderr}")
    report = json.loads(proc.stdout)
    jsonschema.validate(report, schema)
    records = [(r["module"], r["name"]) for r in report["records"]]
    if records != sorted(records):
        sys.exit(f"{suite}: records not in (module, name) order")
    print(f"{suite}: {len(records)} records valid")
