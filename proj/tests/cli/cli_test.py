"""End-to-end checks of the frobrig executable: exit codes, error
messages and JSON output validated against schema/frobrig.schema.json."""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema

BIN = Path(sys.argv[1])
ROOT = Path(sys.argv[2])
RINGS = ROOT / "rings"
SCHEMA = json.loads((ROOT / "schema" / "frobrig.schema.json").read_text())

failures = []


def run(*args):
    return subprocess.run([str(BIN), *map(str, args)], capture_output=True, text=True, timeout=120)


def check(name, cond, detail=""):
    print(("ok   " if cond else "FAIL ") + name + (f": {detail}" if detail and not cond else ""))
    if not cond:
        failures.append(name)


def validate(name, text, definition):
    schema = dict(SCHEMA)
    schema["$ref"] = f"#/$defs/{definition}"
    try:
        doc = json.loads(text)
        items = doc if isinstance(doc, list) else [doc]
        for item in items:
            jsonschema.validate(item, schema)
        check(name, True)
        return items
    except (json.JSONDecodeError, jsonschema.ValidationError) as err:
        check(name, False, str(err).splitlines()[0])
        return []


for ring in sorted(RINGS.glob("*.ring")):
    res = run("check", ring, "--format", "json")
    check(f"check {ring.name} exit", res.returncode == 0, res.stderr)
    validate(f"check {ring.name} schema", res.stdout, "invariants")

res = run("tor", RINGS / "ex31.ring", "--module", "Mx", "--r", "1,2", "--N", "4", "--format", "json")
check("tor exit", res.returncode == 0, res.stderr)
tables = validate("tor schema", res.stdout, "tor_table")
check("tor ex31 r=1 lengths", [r["length"] for r in tables[0]["rows"]] == ["INF", 3, 4, 7, 11] if tables else False)

res = run("rigidity", RINGS / "ex33.ring", "--r", "1,2", "--N", "4", "--format", "json")
check("rigidity exit", res.returncode == 0, res.stderr)
validate("rigidity schema", res.stdout, "rigidity")

res = run("ratio", RINGS / "r1.ring", "--module", "k", "--r", "1,2", "--N", "4", "--format", "json")
check("ratio exit", res.returncode == 0, res.stderr)
for rep in validate("ratio schema", res.stdout, "ratio_report"):
    check("ratio verdict", rep["verdict"] == "ratio constant = 3", rep["verdict"])

res = run("balance", RINGS / "f3m3.ring", "--r", "1,2", "--N", "3", "--format", "json")
check("balance exit", res.returncode == 0, res.stderr)
validate("balance schema", res.stdout, "balance")

res = run("resolve", RINGS / "ex33.ring", "--module", "k", "--N", "3", "--format", "json")
check("resolve exit", res.returncode == 0, res.stderr)
validate("resolve schema", res.stdout, "resolution")

res = run("search", "--trials", "20", "--seed", "11", "--format", "json")
check("search exit", res.returncode == 0, res.stderr)
validate("search schema", res.stdout, "search")
again = run("search", "--trials", "20", "--seed", "11", "--format", "json")
check("search deterministic", again.stdout == res.stdout)

res = run("tor", RINGS / "r1.ring", "--module", "coker [[x]]", "--N", "2")
check("inline module", res.returncode == 0 and "Tor_j(coker [[x]]" in res.stdout, res.stdout + res.stderr)

# Input errors exit with 1 and a message on stderr.
res = run("tor", RINGS / "r1.ring", "--N", "13")
check("N ceiling", res.returncode == 1)
res = run("tor", RINGS / "r1.ring", "--module", "nosuch")
check("unknown module", res.returncode == 1 and "ParseError" in res.stderr, res.stderr)
res = run("tor", RINGS / "missing.ring")
check("missing file", res.returncode == 1)
res = run("check", RINGS / "r1.ring", "--format", "yaml")
check("bad format", res.returncode == 1)
with tempfile.NamedTemporaryFile("w", suffix=".ring", delete=False) as fh:
    fh.write("ring F 2 [x,y] / (x*y, x^2) cap 3\n")
res = run("tor", fh.name, "--module", "coker [[x]]", "--r", "2", "--N", "2")
check("cap too small", res.returncode == 1 and "CapTooSmall" in res.stderr, res.stderr)
with tempfile.NamedTemporaryFile("w", suffix=".ring", delete=False) as fh:
    fh.write("ring F 2 [x,y] / (x*y,\n x^^2)\n")
res = run("check", fh.name)
check("parse error position", res.returncode == 1 and "line 2" in res.stderr, res.stderr)
res = run("balance", RINGS / "ex31.ring", "--module", "k", "--N", "2")
check("balance needs Artinian", res.returncode == 1 and "NotArtinian" in res.stderr, res.stderr)

print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
