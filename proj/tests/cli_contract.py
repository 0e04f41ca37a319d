# Copyright 2026 The Majorant Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Exit codes, JSON schemas and CSV format of the majorant binary.

usage: cli_contract.py BINARY SCHEMA_DIR DATA_DIR
"""

import csv
import io
import json
import math
import os
import subprocess
import sys
import tempfile

import jsonschema

BINARY, SCHEMAS, DATA = sys.argv[1], sys.argv[2], sys.argv[3]
R2 = 1 / math.sqrt(2)
failures = []


def check(cond, what):
    if not cond:
        failures.append(what)
        print("FAIL", what)


def run(*args, env=None):
    full_env = dict(os.environ)
    full_env.pop("MAJORANT_DIM_LIMIT", None)
    full_env.update(env or {})
    p = subprocess.run([BINARY, *args], capture_output=True, text=True, env=full_env)
    return p.returncode, p.stdout, p.stderr


def schema(name):
    with open(os.path.join(SCHEMAS, name + ".schema.json")) as f:
        return json.load(f)


def valid(doc, name):
    try:
        jsonschema.validate(doc, schema(name))
        return True
    except jsonschema.ValidationError as e:
        print(e)
        return False


def close(a, b, tol):
    return len(a) == len(b) and all(abs(x - y) <= tol for x, y in zip(a, b))


def data(name):
    return os.path.join(DATA, name)


for name in ("bound", "report", "state", "observable", "oracle"):
    jsonschema.Draft202012Validator.check_schema(schema(name))

# bound
code, out, _ = run("bound", "--preset", "pauli", "--json")
doc = json.loads(out)
check(code == 0 and valid(doc, "bound"), "bound pauli json")
check(close(doc["omega"], [1, R2, 1 - R2, 0], 1e-9), "bound pauli omega")
code, out, _ = run("bound", "--preset", "fourier", "--dim", "3", "--json")
check(close(json.loads(out)["omega"], [1, 0.57735, 0.23914, 0.18350, 0, 0], 1e-5), "bound fourier omega")
code, out, _ = run("bound", data("sigma_x.json"), data("sigma_y.json"), data("sigma_z.json"), "--json")
doc = json.loads(out)
check(code == 0 and valid(doc, "bound") and doc["mode"] == "many-observable", "bound mub json")
check(close(doc["omega"], [1, 0.70711, 0.65892, 0.34108, 0.29289, 0], 1e-5), "bound mub omega")
code, out, _ = run("bound", "--preset", "pauli")
check(code == 0 and "omega" in out and "prefix" in out, "bound text")

# bound: errors
with tempfile.TemporaryDirectory() as tmp:
    bad = os.path.join(tmp, "bad.json")
    with open(bad, "w") as f:
        json.dump({"matrix": [[1, [0, 1]], [[0, 1], 1]]}, f)
    code, _, err = run("bound", bad, data("sigma_z.json"))
    check(code == 2 and "matrix" in err, "non-Hermitian observable names the field")
    with open(bad, "w") as f:
        f.write("{not json")
    code, _, err = run("bound", bad, data("sigma_z.json"))
    check(code == 2 and "bad.json" in err, "invalid JSON names the file")
    with open(bad, "w") as f:
        json.dump({"preset": "fourier", "dim": "three"}, f)
    code, _, err = run("bound", bad, data("sigma_z.json"))
    check(code == 2 and "dim" in err, "bad dim names the field")
code, _, _ = run("bound", data("sigma_x.json"), data("fourier3.json"))
check(code == 2, "dimension mismatch exits 2")
code, _, _ = run("bound", "--preset", "nope")
check(code == 2, "unknown preset exits 2")
code, _, _ = run("bound", "--preset", "fourier", "--dim", "9")
check(code == 2, "dimension guard exits 2")
code, _, err = run("bound", "--preset", "fourier", "--dim", "9", env={"MAJORANT_DIM_LIMIT": "9"})
check(code == 0 and "warning" in err, "MAJORANT_DIM_LIMIT lifts the guard")
code, _, _ = run("bound", "--preset", "fourier", "--dim", "9", "--dim-limit", "9")
check(code == 0, "--dim-limit lifts the guard")
code, _, _ = run("bound", "--preset", "pauli", env={"MAJORANT_DIM_LIMIT": "many"})
check(code == 2, "malformed MAJORANT_DIM_LIMIT exits 2")

# detect
code, out, _ = run("detect", "--state", "bell", "--pairs", "pauli", "--json")
doc = json.loads(out)
check(code == 1 and valid(doc, "report"), "detect bell json")
check(doc["verdict"] == "Entangled" and doc["side"] == "both", "detect bell verdict")
worst = max(doc["violations"], key=lambda v: v["margin"])
check(worst["k"] == 2 and abs(worst["margin"] - (1 - R2)) <= 1e-9, "detect bell margin")
code, out, _ = run("detect", "--state", "bell", "--pairs", "pauli")
check(code == 1 and "Entangled" in out and "VIOLATED" in out, "detect bell text")
code, out, _ = run("detect", "--state", "werner:0.5", "--pairs", "pauli", "--json")
check(code == 0 and valid(json.loads(out), "report"), "detect werner 0.5")
code, out, _ = run("detect", "--state", "product00", "--pairs", "pauli", "--json")
check(code == 0 and json.loads(out)["verdict"] == "Inconclusive", "detect product00")
code, out, _ = run("detect", "--state", data("bell.json"),
                   "--a", data("sigma_x.json"), "--a", data("sigma_y.json"), "--a", data("sigma_z.json"),
                   "--b", data("sigma_x.json"), "--b", data("minus_sigma_y.json"), "--b", data("sigma_z.json"),
                   "--json")
check(code == 1 and valid(json.loads(out), "report"), "detect many-observable from files")
code, out, _ = run("detect", "--state", "isotropic:3:0.9", "--pairs", "fourier", "--json")
check(code == 1 and valid(json.loads(out), "report"), "detect isotropic d=3")
code, _, err = run("detect", "--state", "werner:1.5", "--pairs", "pauli")
check(code == 2 and err, "werner out of range exits 2")
code, _, _ = run("detect", "--state", "isotropic:3:0.9", "--pairs", "pauli")
check(code == 2, "state/observable mismatch exits 2")
code, _, _ = run("detect", "--pairs", "pauli")
check(code == 2, "missing --state exits 2")
code, _, _ = run("detect", "--state", "bell", "--tol", "-1")
check(code == 2, "negative tol exits 2")
# --tol threads to the comparison: a huge tolerance masks the Bell violation.
code, out, _ = run("detect", "--state", "bell", "--pairs", "pauli", "--tol", "0.5", "--json")
check(code == 0 and json.loads(out)["tol"] == 0.5, "--tol threads through")
a = run("detect", "--state", "werner:0.9", "--shots", "200", "--seed", "5", "--json")
b = run("detect", "--state", "werner:0.9", "--shots", "200", "--seed", "5", "--json")
check(a == b and valid(json.loads(a[1]), "report"), "sampled detection reproducible")

# state
code, out, _ = run("state", "isotropic:3:0.25")
doc = json.loads(out)
check(code == 0 and valid(doc, "state") and doc["dims"] == [3, 3], "state json")
with tempfile.TemporaryDirectory() as tmp:
    path = os.path.join(tmp, "w.json")
    with open(path, "w") as f:
        f.write(run("state", "werner:0.75")[1])
    code, out, _ = run("state", path)
    check(code == 0 and json.loads(out) == json.load(open(path)), "state round trip")

# scan
code, out, _ = run("scan", "--family", "werner", "--grid", "0:1:0.01", "--pairs", "pauli")
rows = [r for r in csv.reader(io.StringIO(out)) if r and not r[0].startswith("#")]
check(code == 0 and rows[0] == ["parameter", "verdict", "worst_k", "margin"] and len(rows) == 102, "scan csv")
thr = [l for l in out.splitlines() if l.startswith("# threshold:")]
check(thr and abs(float(thr[0].split(":")[1]) - R2) <= 1e-6, "scan werner threshold")
for r in rows[1:]:
    w = float(r[0])
    if abs(w - R2) > 1e-6:
        check(r[1] == ("Entangled" if w > R2 else "Inconclusive"), "scan verdict at %s" % r[0])
    check(float(r[0]) == float(repr(float(r[0]))), "17-digit parameter")
code, out, _ = run("scan", "--family", "isotropic", "--dim", "2", "--grid", "0:1:0.01")
thr = [l for l in out.splitlines() if l.startswith("# werner_equivalent:")]
check(code == 0 and thr and abs(float(thr[0].split(":")[1]) - R2) <= 1e-6, "scan isotropic threshold")
code, out, _ = run("scan", "--family", "separable-mix", "--dim", "2", "--grid", "0:1:0.05")
check(code == 0 and "# detections: 0" in out, "scan separable-mix")
with tempfile.TemporaryDirectory() as tmp:
    out_csv, lorenz = os.path.join(tmp, "s.csv"), os.path.join(tmp, "l.csv")
    code, out, _ = run("scan", "--family", "werner", "--grid", "0:1:0.25", "--out", out_csv, "--lorenz", lorenz)
    check(code == 0 and out.startswith("points: 5"), "scan summary with --out")
    check(open(out_csv).readline().strip() == "parameter,verdict,worst_k,margin", "scan --out header")
    lrows = list(csv.reader(open(lorenz)))
    check(lrows[0] == ["parameter", "side", "k", "lhs", "rhs"] and len(lrows) == 1 + 5 * 2 * 4, "lorenz csv")
code, _, _ = run("scan", "--family", "werner", "--grid", "0:2:0.1")
check(code == 2, "grid outside family exits 2")
code, _, _ = run("scan", "--family", "werner", "--grid", "0:1")
check(code == 2, "malformed grid exits 2")

# oracle
code, out, _ = run("oracle", "--pairs", "pauli", "--I", "0", "--J", "0", "--seed", "7", "--json")
doc = json.loads(out)
check(code == 0 and valid(doc, "oracle"), "oracle json")
check(abs(doc["estimate"] - 1.5) <= 1e-6, "oracle estimate 1.5")
check(abs(doc["bound_prefix"]["A"] - (1 + R2)) <= 1e-9, "oracle bound prefix")
check(abs(doc["ceiling"] - 2.0) <= 1e-9 and not doc["falsified"], "oracle ceiling")
code, out, _ = run("oracle", "--I", "0", "--seed", "7", "--json")
check(code == 0 and abs(json.loads(out)["estimate"] - 1.0) <= 1e-9, "oracle single group")
check(run("oracle", "--I", "0,1", "--J", "1", "--seed", "3") == run("oracle", "--I", "0,1", "--J", "1", "--seed", "3"),
      "oracle reproducible")
code, _, _ = run("oracle", "--I", "7")
check(code == 2, "oracle invalid index exits 2")
code, _, _ = run("oracle")
check(code == 2, "oracle empty selection exits 2")

# usage
check(run("--help")[0] == 0, "--help exits 0")
check(run()[0] == 2, "no subcommand exits 2")
check(run("frobnicate")[0] == 2, "unknown subcommand exits 2")

print("%d failure(s)" % len(failures))
sys.exit(1 if failures else 0)
