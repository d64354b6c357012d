# Copyright 2026 The ctc-lab Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""End-to-end checks for the ctc-lab executable: exit codes, schema
conformance of every sample config's report, CSV output and determinism."""

import json
import os
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema

TOOL, CONFIGS = sys.argv[1], Path(sys.argv[2])
failures = []


def ctc(*args, env=None):
    return subprocess.run([TOOL, *args], capture_output=True, text=True, env=env)


def expect(cond, what):
    print(("ok   " if cond else "FAIL ") + what)
    if not cond:
        failures.append(what)


def strip(report):
    report = json.loads(json.dumps(report))
    report["summary"].pop("wall_time_ms")
    return report


schema_run = ctc("schema")
expect(schema_run.returncode == 0, "schema exits 0")
schema = json.loads(schema_run.stdout)
jsonschema.Draft202012Validator.check_schema(schema)
validator = jsonschema.Draft202012Validator(schema)

with tempfile.TemporaryDirectory() as tmp:
    tmp = Path(tmp)
    for cfg in sorted(CONFIGS.glob("*.json")):
        out, csv = tmp / f"{cfg.stem}.out.json", tmp / f"{cfg.stem}.csv"
        r = ctc("run", "--config", str(cfg), "--set", f"output_path={out}", "--csv", str(csv), "--quiet")
        expect(r.returncode == 0, f"{cfg.name}: run exits 0 ({r.stderr.strip()})")
        report = json.loads(out.read_text())
        errors = sorted(validator.iter_errors(report), key=str)
        expect(not errors, f"{cfg.name}: report validates against schema" + (f" ({errors[0].message})" if errors else ""))
        expect(validator.evolve(schema={**schema, "$ref": "#/$defs/config"}).is_valid(json.loads(cfg.read_text())),
               f"{cfg.name}: config validates against schema")
        expect(csv.read_text().startswith("trial,series"), f"{cfg.name}: CSV header")
        expect(ctc("validate", "--config", str(cfg)).returncode == 0, f"{cfg.name}: validate exits 0")

    # determinism through the executable, stdout path, with and without workers
    base = CONFIGS / "theorem1_haar.json"
    a = ctc("run", "--config", str(base), "--quiet")
    b = ctc("run", "--config", str(base), "--quiet", "--jobs", "3")
    ra, rb = json.loads(a.stdout), json.loads(b.stdout)
    expect(strip(ra) == strip(rb), "theorem1 re-run is identical")
    expect(ra["summary"]["witness_fraction"] >= 0.9, "theorem1 Haar witness_fraction >= 0.9")

    ident = ctc("run", "--config", str(base), "--set", "unitary=identity", "--set", "trials=5", "--quiet")
    expect(json.loads(ident.stdout)["summary"]["witness_fraction"] == 0, "identity theorem1 gives no witness")

    # exit codes
    bad = tmp / "bad.json"
    bad.write_text(json.dumps({"scenario": "theorem1", "trials": 0}))
    v = ctc("validate", "--config", str(bad))
    expect(v.returncode == 2 and "trials" in v.stderr, "validate reports trials=0 with exit 2")
    expect(ctc("run", "--config", str(bad)).returncode == 2, "run with invalid config exits 2")
    big = tmp / "big.json"
    big.write_text(json.dumps({"scenario": "fixed-point", "d_cr": 8, "d_ctc": 16}))
    v = ctc("validate", "--config", str(big))
    expect(v.returncode == 2 and "sizing" in v.stderr, "d_cr*d_ctc=128 gives a sizing finding")
    env = dict(os.environ, CTC_LAB_MAX_DIM="128")
    expect(ctc("validate", "--config", str(big), env=env).returncode == 0, "CTC_LAB_MAX_DIM raises the cap")
    notjson = tmp / "notjson.json"
    notjson.write_text("{ nope")
    expect(ctc("run", "--config", str(notjson)).returncode == 2, "malformed JSON exits 2")
    expect(ctc("run", "--config", str(tmp / "missing.json")).returncode == 3, "missing config exits 3")
    missing_u = ctc("run", "--config", str(base), "--set", "unitary=file:" + str(tmp / "nope.json"))
    expect(missing_u.returncode == 3, "missing unitary file exits 3")
    unwritable = ctc("run", "--config", str(base), "--set", f"output_path={tmp}/no/such/dir/out.json")
    expect(unwritable.returncode == 3, "unwritable output exits 3")
    expect(ctc("run").returncode == 2, "missing --config exits 2")
    expect(ctc("frobnicate").returncode == 2, "unknown subcommand exits 2")

if failures:
    print(f"{len(failures)} check(s) failed")
    sys.exit(1)
print("all CLI checks passed")
