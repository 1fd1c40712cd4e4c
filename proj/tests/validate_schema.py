#!/usr/bin/env python3
"""Validates census reports emitted by the CLI against the shipped schema.

usage: validate_schema.py <drinfeld executable> <schema.json>
"""
import json
import subprocess
import sys

import jsonschema

CONFIGS = [
    ["--p", "3", "--d", "1", "--m", "1"],
    ["--p", "3", "--d", "1", "--m", "2"],
    ["--p", "3", "--d", "2", "--m", "1"],
    ["--p", "2", "--s", "2", "--d", "1", "--m", "1"],
    ["--p", "2", "--d", "1", "--m", "3", "--jobs", "2"],
]


def main() -> int:
    exe, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path, encoding="utf-8") as f:
        schema = json.load(f)
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)
    failures = 0
    for cfg in CONFIGS:
        out = subprocess.run([exe, "census", *cfg], check=True, capture_output=True, text=True).stdout
        errors = sorted(validator.iter_errors(json.loads(out)), key=lambda e: list(e.path))
        status = "ok" if not errors else f"{len(errors)} error(s)"
        print(f"census {' '.join(cfg)}: {status}")
        for e in errors[:5]:
            print(f"  {list(e.path)}: {e.message}")
        failures += bool(errors)
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
