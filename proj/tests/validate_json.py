"""Validates the CLI's --json documents against docs/magnus.schema.json."""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema

CORPUS = [
    "<a,b | a b a^-1 b^-1>",
    "<a,b | a b a b^-1>",
    "<a,b | a b a^-1 b^-2>",
    "<t,b | t^2 b^-3>",
    "<a,b,c | a b a^-1 b^-1>",
    "<a,b,c_* | c_1 a c_2^-1>",
    "<a | a^4>",
    "<a,b | >",
    "<a,b,c | a^2 b^3 c^5>",
]

PURITY = [
    ["<a,b | a b a^-1 b^-1>", "--subgroup", "a", "--prime", "5", "--maxlen", "4"],
    ["<a,b | a b a^-1 b^-2>", "--subgroup", "b", "--prime", "2", "--maxlen", "3", "--below-bound"],
    ["<a,b | a b a^-1 b^-1>", "--subgroup", "a", "--prime", "5", "--height", "2", "--maxlen", "3"],
    ["<a,b | a b a b^-1>", "--subgroup", "a", "--prime", "5", "--maxlen", "3", "--serial"],
    ["<a,b | a b a^-1 b^-2>", "--max-steps", "3", "--subgroup", "b", "--prime", "7", "--maxlen", "2"],
]


def run(tool, args):
    out = subprocess.run([tool, *args], capture_output=True, text=True)
    if out.returncode not in (0, 1):
        raise SystemExit(f"{args}: exit {out.returncode}: {out.stderr}")
    return json.loads(out.stdout)


def main():
    tool, schema_path = sys.argv[1], sys.argv[2]
    schema = json.loads(Path(schema_path).read_text())
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)
    documents = []
    for p in CORPUS:
        documents.append((f"decompose {p}", run(tool, ["decompose", p, "--json"])))
    for args in PURITY:
        documents.append((f"purity {args}", run(tool, ["purity", *args, "--json"])))
    with tempfile.TemporaryDirectory() as d:
        path = Path(d) / "report.json"
        run(tool, ["purity", *PURITY[0], "--json", "--output", str(path)])
        documents.append(("purity --output", json.loads(path.read_text())))
    failures = 0
    for name, doc in documents:
        errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.path))
        for e in errors:
            print(f"{name}: {list(e.path)}: {e.message}")
        failures += bool(errors)
    # A wrong document must be rejected.
    bad = documents[0][1] | {"kind": "mystery"}
    if validator.is_valid(bad):
        print("schema accepted a document with an unknown kind")
        failures += 1
    print(f"{len(documents)} documents, {failures} invalid")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
