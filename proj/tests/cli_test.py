"""End-to-end checks of the command-line tool against the sample jobs."""

import json
import pathlib
import subprocess
import sys
import tempfile

CLI = sys.argv[1]
ROOT = pathlib.Path(sys.argv[2])
JOBS = ROOT / "jobs"
failures = []


def run(*args, stdin=None):
    p = subprocess.run([CLI, *map(str, args)], capture_output=True, text=True, input=stdin)
    return p.returncode, p.stdout, p.stderr


def expect(cond, what):
    if not cond:
        failures.append(what)


def report(*args):
    code, out, err = run(*args)
    expect(code == 0, f"{args}: exit {code}: {err}")
    return json.loads(out) if code == 0 else {}


def frac(r):
    return r["num"], r["den"]


# Schema covers every sample job.
try:
    import jsonschema

    schema = json.loads((ROOT / "docs" / "jobspec.schema.json").read_text())
    for job in sorted(JOBS.glob("*.json")):
        try:
            jsonschema.validate(json.loads(job.read_text()), schema)
        except jsonschema.ValidationError as e:
            failures.append(f"{job.name} fails the schema: {e.message}")
except ImportError:
    print("jsonschema not installed; schema check skipped")

# ball
r = report("ball", JOBS / "free2.json", "--radius", 2)
expect(r["rows"][2]["vertices"] == 17, "free 2 ball of radius 2 has 17 vertices")
expect(r["sphere_sizes"] == [1, 4, 12], "free 2 sphere sizes")
r = report("ball", JOBS / "cyclic4.json", "--radius", 3)
expect(r["rows"][3]["vertices"] == 4 and r["rows"][3]["edges"] == 4, "cyclic 4 ball")

code, out, err = run("ball", JOBS / "bad_cyclic0.json")
expect(code == 2, "cyclic 0 exits with 2")
expect("/group/order" in err, "diagnostic points at /group/order")

code, _, err = run("ball", "-", stdin='{"group": {"kind": "free_product", "factors": [{"kind": "cyclic", "order": 2}, {"kind": "cyclc"}]}}')
expect(code == 2 and "/group/factors/1/kind" in err, "unknown kind is positioned")
code, _, err = run("ball", "-", stdin="{not json")
expect(code == 2, "malformed JSON exits with 2")
code, _, err = run("ball", "-", stdin='{"group": {"kind": "free", "rank": 2}, "marking": [{"symbol": "x", "word": [["q", 1]]}]}')
expect(code == 2 and "/marking" in err, "unknown symbol in a marking")

# estimate
r = report("estimate", JOBS / "c2_free_c3.json", "--radius", 10)
last = r["rows"][-1]["xi_hat_lower"]
value = last["num"] / last["den"]
expect(-0.35 <= value <= -0.25, f"C2*C3 lower bound at r=10 is {value}")
expect(all(row["xi_hat_lower"]["num"] * 4 <= -row["xi_hat_lower"]["den"] for row in r["rows"]),
       "C2*C3 rows never exceed -1/4")
r = report("estimate", JOBS / "free2.json", "--radius", 5)
expect(all(frac(row["xi_hat_lower"]) == (-1, 1) for row in r["rows"]), "free 2 rows are all -1")
r = report("estimate", JOBS / "cyclic6.json", "--radius", 4)
expect(frac(r["rows"][-1]["xi_hat_lower"]) == (1, 6), "cyclic 6 final row is 1/6")
expect(all(row.get("brute_agrees", True) for row in r["rows"]), "brute force agrees on cyclic 6")

# balanced
r = report("balanced", JOBS / "free2.json", "--radius", 6)
expect(frac(r["estimate"]) == (-1, 1), "free 2 balanced estimate is -1")
r = report("balanced", JOBS / "z2.json", "--radius", 30)
expect(r["estimate"]["num"] / r["estimate"]["den"] >= -0.1, "Z^2 balanced estimate >= -0.1")

# predict
r = report("predict", JOBS / "c2_free_c4.json")
expect(frac(r["xi_hat"]["unnormalized"]) == (2, 3), "C2*C4 unnormalized prediction 2/3")
r = report("predict", JOBS / "free2_tietze.json")
expect(r["xi_hat"]["status"] == "unsupported", "re-marked free group is unsupported")

# verify
for job, radius in [("klein", 2), ("c2_free_c3", 10), ("z2", 6), ("s3", 4), ("schreier_free2_c2", 4)]:
    code, out, err = run("verify", JOBS / f"{job}.json", "--radius", radius)
    expect(code == 0, f"verify {job}: exit {code} {err}")
    if code == 0:
        expect(json.loads(out)["passed"], f"verify {job} passes")
r = report("verify", JOBS / "klein.json", "--radius", 2)
expect(any(c["name"] == "finite-exact" and c["passed"] for c in r["checks"]), "klein exact at r=2")
code, out, _ = run("verify", "-", "--radius", 10, stdin=json.dumps({
    "group": {"kind": "free_product", "factors": [{"kind": "cyclic", "order": 2}, {"kind": "cyclic", "order": 3}]},
    "verify": {"convergence_tolerance": 0.001}}))
expect(code == 1, "a tolerance tighter than the gap fails verification")

# schreier
r = report("schreier", JOBS / "schreier_free2_c2.json")
s = r["schreier"]
expect(s["basis_size"] == 3 and s["index"] == 2, "free 2 onto C2 basis size")
expect(frac(s["kernel_xi_hat"]) == (-2, 1) and frac(s["index_times_xi_hat"]) == (-2, 1),
       "Schreier equality -2 = 2(-1)")
expect(s["basis"] == ["g1 g0^-1", "g0^2", "g0 g1"], f"frozen basis {s['basis']}")

# determinism and --output
outputs = {run("verify", JOBS / "c2_free_c3.json", "--radius", 8)[1] for _ in range(3)}
expect(len(outputs) == 1, "repeated runs are byte-identical")
with tempfile.TemporaryDirectory() as d:
    path = pathlib.Path(d) / "out.csv"
    code, out, _ = run("estimate", JOBS / "free2.json", "--radius", 3, "--format", "csv", "--output", path)
    expect(code == 0 and out == "" and path.read_text().startswith("radius,ball_size"), "csv to a file")

for f in failures:
    print("FAIL:", f)
print(f"{'FAILED' if failures else 'ok'}")
sys.exit(1 if failures else 0)
