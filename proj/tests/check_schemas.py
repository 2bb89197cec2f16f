"""Runs every CLI subcommand and validates its JSON against the shipped schemas."""

import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema

cli, root = sys.argv[1], pathlib.Path(sys.argv[2])
schemas = {p.name.split(".")[0]: json.loads(p.read_text()) for p in (root / "schemas").glob("*.schema.json")}
fix = root / "fixtures"
failures = 0


def check(name, doc, label):
    global failures
    try:
        jsonschema.validate(doc, schemas[name], cls=jsonschema.Draft202012Validator)
    except jsonschema.ValidationError as e:
        failures += 1
        print(f"FAIL {label}: {e.message}")
    else:
        print(f"ok   {label}")


def run(args, code=0):
    r = subprocess.run([cli, *args], capture_output=True, text=True)
    if r.returncode != code:
        raise SystemExit(f"{args}: exit {r.returncode}, expected {code}\n{r.stderr}")
    return r


for f in sorted(fix.glob("*_[OE].json")):
    check("partition", json.loads(f.read_text()), f.name)

cases = [
    ("enumerate", ["enumerate", "--colors", "3", "--size", "5"]),
    ("enumerate", ["enumerate", "--colors", "4", "--size", "6", "--set", "E2", "--count-only"]),
    ("phi", ["phi", "--input", str(fix / "fourteen_O.json")]),
    ("psi", ["psi", "--input", str(fix / "six_color_E.json")]),
    ("bridge", ["bridge", "--input", str(fix / "eight_E.json")]),
    ("forest", ["forest", "--input", str(fix / "eight_E.json")]),
    ("forest", ["forest", "--input", str(fix / "small_E.json")]),
    ("mine", ["mine", "--colors", "4", "--max-parts", "4", "--max-size", "8"]),
    ("mine", ["mine", "--colors", "5", "--max-parts", "4", "--max-size", "8", "--no-cd-moves"]),
    ("verify", ["verify", "--colors", "3", "--max-q", "8"]),
    ("verify", ["verify", "--colors", "4", "--max-q", "8", "--inequality"]),
    ("corollary12", ["corollary12", "--size", "49"]),
]
for name, args in cases:
    check(name, json.loads(run(args).stdout), " ".join(args[:1] + args[-2:]))

with tempfile.TemporaryDirectory() as tmp:
    trace = pathlib.Path(tmp) / "trace.json"
    run(["phi", "--input", str(fix / "small_O.json"), "--trace", str(trace)])
    check("trace", json.loads(trace.read_text()), "phi --trace")
    report = pathlib.Path(tmp) / "report.json"
    run(["verify", "--colors", "2", "--max-q", "6", "--json", str(report)])
    check("verify", json.loads(report.read_text()), "verify --json")

for args in (["phi", "--input", "/nonexistent.json"], ["nope"]):
    r = run(args, code=2)
    check("diagnostic", json.loads(r.stderr.strip().splitlines()[-1]), "diagnostic " + args[0])

sys.exit(1 if failures else 0)
