"""Validates alcove CLI output against the shipped schemas and checks that
repeated runs print byte-identical documents."""

import json
import pathlib
import subprocess
import sys
import tempfile

try:
    import jsonschema
    import referencing
except ImportError:
    print("jsonschema not available")
    sys.exit(77)

COMMANDS = [
    ["datum", "--type", "E6"],
    ["datum", "--type", "3D4"],
    ["omega", "--type", "D5", "--full"],
    ["omega", "--type", "2A5", "--method", "both", "--full"],
    ["restrict", "--type", "2A2"],
    ["restrict", "--type", "2E6"],
    ["rgroup", "--type", "D6", "--point", "face:0,1"],
    ["rgroup", "--type", "2D5", "--point", "c0"],
    ["classify", "--type", "A5"],
    ["table1"],
    ["verify", "all", "--type", "2A3", "--samples", "20"],
]


def main(cli: str, schema_dir: pathlib.Path) -> int:
    resources = []
    for path in schema_dir.glob("*.schema.json"):
        doc = json.loads(path.read_text())
        resources.append((doc["$id"], referencing.Resource.from_contents(doc)))
    registry = referencing.Registry().with_resources(resources)
    top = json.loads((schema_dir / "cli_output.schema.json").read_text())
    validator = jsonschema.Draft202012Validator(top, registry=registry)

    failures = 0
    for args in COMMANDS:
        first = subprocess.run([cli, *args], capture_output=True, check=False)
        second = subprocess.run([cli, *args], capture_output=True, check=False)
        label = " ".join(args)
        if first.returncode not in (0, 1):
            print(f"FAIL {label}: exit {first.returncode}: {first.stderr.decode()}")
            failures += 1
            continue
        if first.stdout != second.stdout:
            print(f"FAIL {label}: output differs between runs")
            failures += 1
        doc = json.loads(first.stdout)
        errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.path))
        for e in errors[:3]:
            print(f"FAIL {label}: {list(e.path)}: {e.message}")
        failures += bool(errors)

    # The datum emitted by one command is accepted as input by another.
    doc = json.loads(subprocess.run([cli, "datum", "--type", "C4"], capture_output=True, check=True).stdout)
    with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as f:
        json.dump(doc["datum"], f)
    back = subprocess.run([cli, "datum", "--input", f.name], capture_output=True, check=False)
    pathlib.Path(f.name).unlink()
    if back.returncode != 0 or json.loads(back.stdout)["datum"] != doc["datum"]:
        print("FAIL datum round trip")
        failures += 1

    print(f"{len(COMMANDS)} commands checked, {failures} failures")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1], pathlib.Path(sys.argv[2])))
