#!/usr/bin/env python3
"""End-to-end checks of the ssg command-line tool.

Usage: cli_test.py /path/to/ssg
"""

import json
import os
import subprocess
import sys
import tempfile

FAILURES = []


def run(binary, *args, env_color=None):
    env = dict(os.environ)
    env.pop("SSG_COLOR", None)
    if env_color is not None:
        env["SSG_COLOR"] = env_color
    proc = subprocess.run(
        [binary, *args], capture_output=True, text=True, env=env, timeout=300
    )
    return proc


def check(name, cond, info=""):
    if cond:
        print(f"[PASS] {name}")
    else:
        FAILURES.append(name)
        print(f"[FAIL] {name}  {info}")


def main():
    ssg = sys.argv[1]
    tmp = tempfile.mkdtemp(prefix="ssg-cli-")

    p = run(ssg, "nucleus", "grigorchuk")
    check("nucleus grigorchuk", p.returncode == 0 and "5 elements" in p.stdout, p.stdout)

    p = run(ssg, "nucleus", "odometer", "--format", "json")
    doc = json.loads(p.stdout)
    check("nucleus odometer json", p.returncode == 0 and doc["size"] == 3
          and doc["elements"] == ["id", "a", "a'"], p.stdout)

    p = run(ssg, "nucleus", "trivial")
    check("nucleus trivial", p.returncode == 0 and "1 elements" in p.stdout, p.stdout)

    p = run(ssg, "nucleus", "grigorchuk", "--max-size", "2")
    check("nucleus bounds exit 2", p.returncode == 2 and "NotContracting" in p.stderr,
          f"rc={p.returncode} {p.stderr}")

    for word, expect in [("a.a", "trivial"), ("b.c.d", "trivial")]:
        p = run(ssg, "wp", "grigorchuk", word)
        check(f"wp grigorchuk {word}", p.returncode == 0 and p.stdout.strip() == expect,
              p.stdout)
    p = run(ssg, "wp", "odometer", "a.a")
    check("wp odometer a.a", p.returncode == 0 and p.stdout.strip() == "nontrivial", p.stdout)

    p = run(ssg, "eval", "odometer", "(1)", "--word", "a")
    check("eval odometer a (1)", p.stdout.strip() == "(0)", p.stdout)
    p = run(ssg, "eval", "odometer", "0(01)", "--word", "id")
    check("eval identity", p.stdout.strip() == "0(01)", p.stdout)
    p = run(ssg, "eval", "reflection", "(01)", "--word", "a")
    check("eval reflection a (01)", p.stdout.strip() == "(10)", p.stdout)

    # A group file and an element file from scratch.
    grp = os.path.join(tmp, "refl.grp")
    with open(grp, "w") as f:
        f.write("group refl\nalphabet 2\nstate a perm 1 0 -> a a\n")
    rn = os.path.join(tmp, "h.rn")
    with open(rn, "w") as f:
        f.write("rn h over refl\nrow 0 -> 01 act a\nrow 10 -> 00 act id\nrow 11 -> 1 act id\n")

    p = run(ssg, "eval", grp, "(01)", "--rn", rn)
    check("eval from files", p.stdout.strip() == "(01)", p.stdout)

    p = run(ssg, "germ", grp, "(01)", "--rn", rn)
    check("germ signature", p.stdout.strip() == "germ(point=01(01), n=a, delta=1, depth=2)",
          p.stdout)

    p = run(ssg, "germ", grp, "(01)", "--rn", rn, "--json")
    doc = json.loads(p.stdout)
    check("germ json", doc == {"point": "01(01)", "n": "a", "delta": 1, "depth": 2}, p.stdout)

    p = run(ssg, "transport", "reflection", "--pair", "(0):(1)")
    check("transport search", p.returncode == 0 and "rn transporter over reflection" in p.stdout,
          p.stdout + p.stderr)

    p = run(ssg, "phi", "grigorchuk", "--point", "(1)", "--rn", rn)
    check("phi group mismatch exit 3", p.returncode == 3, f"rc={p.returncode}")

    grig_rn = os.path.join(tmp, "g.rn")
    with open(grig_rn, "w") as f:
        f.write("rn g over grigorchuk\nrow 0 -> 1 act b\nrow 1 -> 0 act a\n")
    p = run(ssg, "phi", "grigorchuk", "--point", "(1)", "--rn", grig_rn)
    check("phi output parses", p.returncode == 0 and p.stdout.startswith("rn phi over grigorchuk"),
          p.stdout)

    # Parse errors: line and column, exit 3.
    bad = os.path.join(tmp, "bad.grp")
    with open(bad, "w") as f:
        f.write("group g\nalphabet 2\nstate a perm 1 1 -> id id\n")
    p = run(ssg, "nucleus", bad)
    check("parse error exit 3", p.returncode == 3 and "line 3" in p.stderr, p.stderr)

    p = run(ssg, "verify", "bogus")
    check("unknown suite exit 3", p.returncode == 3, f"rc={p.returncode}")

    p = run(ssg, "verify", "germ", "--cases", "10")
    check("verify germ", p.returncode == 0 and "result: PASS" in p.stdout, p.stdout)

    # Determinism: byte-identical reports under a fixed seed.
    a = run(ssg, "verify", "make", "--seed", "5", "--cases", "20").stdout
    b = run(ssg, "verify", "make", "--seed", "5", "--cases", "20").stdout
    check("verify determinism", a == b and a != "")

    p = run(ssg, "verify", "oligo", "--cases", "10", "--format", "json")
    doc = json.loads(p.stdout)
    check("verify json", doc["suite"] == "oligo" and doc["passed"] is True, p.stdout)
    q = run(ssg, "verify", "oligo", "--cases", "10", "--json")
    check("--json alias", q.stdout == p.stdout)

    colored = run(ssg, "verify", "nucleus", env_color="1").stdout
    plain = run(ssg, "verify", "nucleus", env_color="0").stdout
    check("SSG_COLOR toggles ANSI codes", "\033[" in colored and "\033[" not in plain)

    if FAILURES:
        print(f"{len(FAILURES)} CLI checks failed")
        return 1
    print("all CLI checks passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
