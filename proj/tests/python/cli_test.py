"""End-to-end checks of the CLI: exit-code contract, config handling, and
deterministic reports (timing fields stripped)."""

import json
import os
import subprocess
import sys
import tempfile


def run(cli, *args, config=None, cwd=None):
    cmd = [cli, *args]
    return subprocess.run(cmd, capture_output=True, text=True, cwd=cwd)


def main():
    cli = sys.argv[1]
    failures = 0

    def expect(name, cond, detail=""):
        nonlocal failures
        print(f"{'ok' if cond else 'FAIL'} {name} {detail}")
        if not cond:
            failures += 1

    with tempfile.TemporaryDirectory() as tmp:
        # exit 0 on a passing run
        r = run(cli, "run", "--suite", "orders-furuta", "--trials", "5", "--seed", "1")
        expect("pass-run-exit-0", r.returncode == 0, f"rc={r.returncode}")

        # usage/config errors exit 2
        expect("unknown-suite-exit-2",
               run(cli, "run", "--suite", "bogus", "--trials", "5").returncode == 2)
        expect("empty-suites-exit-2", run(cli, "run", "--trials", "5").returncode == 2)
        expect("bad-flag-exit-2", run(cli, "run", "--nonsense").returncode == 2)
        expect("missing-config-exit-2",
               run(cli, "run", "--config", os.path.join(tmp, "nope.json")).returncode == 2)

        bad_key = os.path.join(tmp, "bad_key.json")
        with open(bad_key, "w") as f:
            json.dump({"suites": ["orders-furuta"], "unknown_key": 1}, f)
        expect("unknown-config-key-exit-2",
               run(cli, "run", "--config", bad_key).returncode == 2)

        # a tolerance override nobody can meet forces a failing check: exit 1
        force_fail = os.path.join(tmp, "force_fail.json")
        with open(force_fail, "w") as f:
            json.dump({"suites": ["levi-oracle"], "trials": 5, "seed": 1,
                       "tolerance.levi.oracle_rel": 1e-18}, f)
        r = run(cli, "run", "--config", force_fail)
        expect("forced-fail-exit-1", r.returncode == 1, f"rc={r.returncode}")

        # determinism: identical config and seed give identical reports
        # modulo wall-time fields
        out1, out2 = os.path.join(tmp, "r1.json"), os.path.join(tmp, "r2.json")
        args = ["run", "--suite", "orders-kti", "--suite", "counterexample-search",
                "--trials", "10", "--seed", "2024", "--format", "json"]
        run(cli, *args, "--out", out1)
        run(cli, *args, "--out", out2)

        def stripped(path):
            with open(path) as f:
                doc = json.load(f)
            for rec in doc["checks"]:
                rec.pop("wall_ms", None)
            return json.dumps(doc, sort_keys=True)

        expect("deterministic-reports", stripped(out1) == stripped(out2))

        reseeded = os.path.join(tmp, "r3.json")
        run(cli, "run", "--suite", "orders-kti", "--suite", "counterexample-search",
            "--trials", "10", "--seed", "99", "--format", "json", "--out", reseeded)
        expect("seed-changes-report", stripped(out1) != stripped(reseeded))

        # config file + flag overrides agree with pure flags
        cfg_path = os.path.join(tmp, "cfg.json")
        with open(cfg_path, "w") as f:
            json.dump({"suites": ["orders-furuta"], "trials": 10, "seed": 2024}, f)
        out3, out4 = os.path.join(tmp, "r4.json"), os.path.join(tmp, "r5.json")
        run(cli, "run", "--config", cfg_path, "--out", out3)
        run(cli, "run", "--suite", "orders-furuta", "--trials", "10", "--seed", "2024",
            "--out", out4)
        expect("config-equals-flags", stripped(out3) == stripped(out4))

        # text format emits a summary line
        r = run(cli, "run", "--suite", "orders-furuta", "--trials", "5", "--seed", "1",
                "--format", "text")
        expect("text-format", "pass" in r.stdout and "fail 0" in r.stdout)

        # fsd subcommand fixtures
        r = run(cli, "fsd", "quartic", "-n", "3", "--point", "1,i,0")
        expect("fsd-quartic", r.returncode == 0 and "FSD: 0" in r.stdout, r.stdout.strip())
        r = run(cli, "fsd", "harmonic-quadratic", "-n", "5")
        expect("fsd-harmonic", r.returncode == 0 and "FSD: 0.2" in r.stdout and
               "truncation" in r.stdout)
        r = run(cli, "fsd", "weighted", "--weights", "0.3,0.7")
        expect("fsd-weighted", r.returncode == 0 and "FSD: 0.3" in r.stdout)
        expect("fsd-unknown-kind-exit-2", run(cli, "fsd", "no-such-kind").returncode == 2)
        expect("fsd-bad-point-exit-2",
               run(cli, "fsd", "quartic", "-n", "3", "--point", "1,2").returncode == 2)

        # search subcommand: fixture always present and reverified
        r = run(cli, "search", "--dim", "2", "--trials", "50", "--seed", "7")
        expect("search-fixture", r.returncode == 0 and "(fixture)" in r.stdout)
        expect("search-dim1-exit-2", run(cli, "search", "--dim", "1").returncode == 2)
        r2 = run(cli, "search", "--dim", "2", "--trials", "50", "--seed", "7")
        expect("search-reproducible", r.stdout == r2.stdout)

        # listing subcommands
        r = run(cli, "list-suites")
        expect("list-suites", r.returncode == 0 and "fsdet-properties" in r.stdout)
        r = run(cli, "list-catalog")
        expect("list-catalog", r.returncode == 0 and "moving-rank" in r.stdout)

        # config-defined scenarios: hypothesis violations and undetermined
        # classifications are listed but do not fail the run
        def scenario_config(path, extra):
            doc = {"suites": ["comparison-principles"], "trials": 5, "seed": 3}
            doc.update({f"catalog.scenario.{k}": v for k, v in extra.items()})
            with open(path, "w") as f:
                json.dump(doc, f)
            return path

        violated = scenario_config(os.path.join(tmp, "violated.json"), {
            "kind": "cp3", "u": "weighted", "u.weights": [2.0, 2.0, 2.0]})
        r = run(cli, "run", "--config", violated, "--format", "json",
                "--out", os.path.join(tmp, "v.json"))
        with open(os.path.join(tmp, "v.json")) as f:
            doc = json.load(f)
        scen = [c for c in doc["checks"] if c["id"].endswith("/scenario")]
        expect("violated-scenario-listed", len(scen) == 1 and
               scen[0]["status"] == "hypothesis-violated", str(scen))
        expect("violated-scenario-exit-0", r.returncode == 0, f"rc={r.returncode}")

        passing = scenario_config(os.path.join(tmp, "passing.json"), {
            "kind": "cp3", "u": "weighted", "u.weights": [1.0, 1.0, 1.0]})
        r = run(cli, "run", "--config", passing, "--format", "json",
                "--out", os.path.join(tmp, "p.json"))
        with open(os.path.join(tmp, "p.json")) as f:
            doc = json.load(f)
        scen = [c for c in doc["checks"] if c["id"].endswith("/scenario")]
        expect("passing-scenario", len(scen) == 1 and scen[0]["status"] == "pass"
               and r.returncode == 0, str(scen))

        undet = scenario_config(os.path.join(tmp, "undet.json"), {
            "kind": "classify", "u": "weighted",
            "u.weights": [0.1, 0.6, 0.8, 1.0]})
        r = run(cli, "run", "--config", undet, "--format", "json",
                "--out", os.path.join(tmp, "u.json"))
        with open(os.path.join(tmp, "u.json")) as f:
            doc = json.load(f)
        scen = [c for c in doc["checks"] if c["id"].endswith("/scenario")]
        expect("undetermined-scenario-listed", len(scen) == 1 and
               scen[0]["status"] == "undetermined", str(scen))
        expect("undetermined-exit-0", r.returncode == 0, f"rc={r.returncode}")

        bad_scenario = scenario_config(os.path.join(tmp, "bad_scenario.json"), {
            "kind": "cp9", "u": "weighted", "u.weights": [1.0]})
        expect("bad-scenario-exit-2",
               run(cli, "run", "--config", bad_scenario).returncode == 2)

    print(f"cli test failures: {failures}")
    return failures


if __name__ == "__main__":
    sys.exit(main())
