#!/usr/bin/env python3
"""End-to-end checks of the laukit CLI: exit codes (0 = checks passed,
1 = mathematical check failed with witness, 2 = input/usage error), file
round-trips, and witness replay."""

import json
import os
import shlex
import subprocess
import sys
import tempfile

CLI = os.environ.get("LAUKIT_CLI") or (sys.argv[1] if len(sys.argv) > 1 else None)
if not CLI:
    sys.exit("usage: cli_test.py <path-to-laukit-binary> (or set LAUKIT_CLI)")

failures = []


def run(args, stdin=None):
    proc = subprocess.run([CLI] + args, capture_output=True, text=True, input=stdin, timeout=120)
    return proc


def check(name, cond, extra=""):
    tag = "ok" if cond else "FAIL"
    print(f"[{tag}] {name}" + (f" — {extra}" if extra and not cond else ""))
    if not cond:
        failures.append(name)


def jout(proc):
    try:
        return json.loads(proc.stdout)
    except json.JSONDecodeError:
        return None


DATA = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "data")

with tempfile.TemporaryDirectory() as tmp:
    # --- shipped example files ----------------------------------------------
    p = run(["describe", os.path.join(DATA, "pointwise2.json")])
    j = jout(p)
    check("shipped pointwise2 file is C^2", p.returncode == 0 and j and j["dim"] == 2
          and j["unital"] and j["commutative"])
    p = run(["embed", os.path.join(DATA, "zero1.json"), "poly:3",
             "--char", os.path.join(DATA, "char_eval0_poly3.json")])
    check("shipped character file drives embed", p.returncode == 0, p.stderr)

    # --- describe -----------------------------------------------------------
    p = run(["describe", "zero:1"])
    j = jout(p)
    check("describe catalog exits 0", p.returncode == 0, p.stderr)
    check("describe reports the zero:1 fingerprint",
          j and j["unital"] is False and j["radical_dim"] == 1 and j["dim"] == 1)

    p = run(["describe", "lau(zero:1,pointwise:1,coord:1)"])
    j = jout(p)
    check("describe accepts construction expressions",
          p.returncode == 0 and j and j["unital"] is True and j["dim"] == 2)

    p = run(["describe", os.path.join(tmp, "missing.json")])
    check("describe on a missing file exits 2", p.returncode == 2, p.stderr)

    p = run(["describe", "warp:3"])
    check("describe on an unknown family exits 2", p.returncode == 2, p.stderr)

    # --- construct + round-trip --------------------------------------------
    dsum_path = os.path.join(tmp, "dsum.json")
    p = run(["construct", "dsum", "zero:1", "pointwise:1", "-o", dsum_path])
    check("construct dsum exits 0", p.returncode == 0, p.stderr)
    p = run(["describe", dsum_path])
    j = jout(p)
    check("dsum(zero:1, C) is not unital", p.returncode == 0 and j and j["unital"] is False)

    first = open(dsum_path, "rb").read()
    p = run(["construct", "dsum", "zero:1", "pointwise:1", "-o", dsum_path])
    check("construct output is byte-stable", open(dsum_path, "rb").read() == first)

    # parse -> serialize -> parse: feed the file back through describe and
    # construct again via the file argument
    dsum2_path = os.path.join(tmp, "dsum2.json")
    p = run(["construct", "unitize", dsum_path, "-o", dsum2_path])
    check("construct accepts file inputs", p.returncode == 0, p.stderr)
    j = jout(run(["describe", dsum2_path]))
    check("unitize(file) has the right shape", j and j["dim"] == 3 and j["unital"] is True)

    incl_path = os.path.join(tmp, "incl.json")
    p = run(["construct", "unitize", "zero:1", "-o", os.path.join(tmp, "z1u.json"),
             "--inclusion-out", incl_path])
    check("unitize writes the inclusion map", p.returncode == 0 and os.path.exists(incl_path))

    # --- a non-associative file --------------------------------------------
    bad_path = os.path.join(tmp, "bad.json")
    with open(bad_path, "w") as f:
        json.dump({"name": "bad", "dim": 2, "basis": ["e1", "e2"],
                   "table": [[["0", "1"], ["0", "0"]], [["1", "0"], ["0", "0"]]]}, f)
    p = run(["describe", bad_path])
    check("non-associative file exits 1", p.returncode == 1)
    check("the error carries a witness", "not associative" in p.stderr)

    p = run(["describe", bad_path, "--unchecked"])
    j = jout(p)
    check("unchecked describe reports the witness in JSON",
          p.returncode == 1 and j and j["associative"] is False and "witness" in j)

    # --- bad scalars --------------------------------------------------------
    zeroden_path = os.path.join(tmp, "zeroden.json")
    with open(zeroden_path, "w") as f:
        json.dump({"name": "z", "dim": 1, "basis": ["e"], "table": [[["1/0"]]]}, f)
    p = run(["describe", zeroden_path])
    check("zero denominator exits 2", p.returncode == 2)
    check("zero denominator is named", "zero denominator" in p.stderr)

    # --- collapse -----------------------------------------------------------
    p = run(["collapse", "pointwise:2", "cyclic:2", "--hom", "scalar:aug"])
    j = jout(p)
    check("collapse passes on a verified triple",
          p.returncode == 0 and j and j["pass"] and j["isomorphism"]["determinant"] == "1")

    p = run(["collapse", "zero:2", "zero:3", "--hom", "zero", "--pairs", "25", "--seed", "9"])
    check("collapse with the zero map passes", p.returncode == 0, p.stderr)

    p = run(["collapse", "pointwise:3", "pointwise:2", "--hom", "incl"])
    check("collapse with an inclusion passes", p.returncode == 0, p.stderr)

    p = run(["collapse", "poly:2", "poly:3", "--hom", "proj"])
    check("collapse with a projection passes", p.returncode == 0, p.stderr)

    p = run(["collapse", "zero:1", "pointwise:1", "--hom", "scalar:coord:1"])
    check("scalar strategy against non-unital A exits 1",
          p.returncode == 1 and "requires unital A" in p.stderr)

    # --- verify-iso ---------------------------------------------------------
    lau_path = os.path.join(tmp, "lau.json")
    run(["construct", "lau", "zero:1", "pointwise:1", "--char", "coord:1", "-o", lau_path])
    sharp_path = os.path.join(tmp, "sharp.json")
    run(["construct", "unitize", "zero:1", "-o", sharp_path])
    lau_obj = json.load(open(lau_path))
    sharp_obj = json.load(open(sharp_path))

    map_path = os.path.join(tmp, "map.json")
    with open(map_path, "w") as f:
        json.dump({"domain": lau_obj, "codomain": sharp_obj,
                   "matrix": [["1", "0"], ["0", "1"]]}, f)
    p = run(["verify-iso", lau_path, sharp_path, "--map", map_path])
    j = jout(p)
    check("verify-iso passes the identity witness",
          p.returncode == 0 and j and j["pass"], p.stderr)

    with open(map_path, "w") as f:
        json.dump({"domain": lau_obj, "codomain": sharp_obj,
                   "matrix": [["0", "1"], ["1", "0"]]}, f)
    p = run(["verify-iso", lau_path, sharp_path, "--map", map_path])
    j = jout(p)
    check("verify-iso rejects the swapped witness with a witness pair",
          p.returncode == 1 and j and not j["pass"] and "witness" in j)

    p = run(["verify-iso", "pointwise:2", sharp_path, "--map", map_path])
    check("verify-iso rejects mismatched endpoints", p.returncode == 2)

    # --- embed ---------------------------------------------------------------
    p = run(["embed", "pointwise:1", "pointwise:1", "--char", "coord:1"])
    j = jout(p)
    check("embed reports codimension one and no ideal",
          p.returncode == 0 and j and j["pass"] and j["subspace"]["codimension"] == 1
          and j["subspace"]["is_ideal"] is False)

    # character via map file
    char_path = os.path.join(tmp, "char.json")
    c1_obj = json.load(open(sharp_path))  # reuse any parsed algebra shape
    with open(char_path, "w") as f:
        json.dump({"domain": {"name": "pointwise:1", "dim": 1, "basis": ["e1"],
                              "table": [[["1"]]]},
                   "codomain": {"name": "C", "dim": 1, "basis": ["1"], "table": [[["1"]]]},
                   "matrix": [["1"]]}, f)
    p = run(["embed", "zero:1", "pointwise:1", "--char", char_path])
    check("embed accepts a character from a map file", p.returncode == 0, p.stderr)

    zero_char_path = os.path.join(tmp, "zero_char.json")
    with open(zero_char_path, "w") as f:
        json.dump({"domain": {"name": "pointwise:1", "dim": 1, "basis": ["e1"],
                              "table": [[["1"]]]},
                   "codomain": {"name": "C", "dim": 1, "basis": ["1"], "table": [[["1"]]]},
                   "matrix": [["0"]]}, f)
    p = run(["embed", "zero:1", "pointwise:1", "--char", zero_char_path])
    check("the zero functional is rejected as a character",
          p.returncode == 1 and "not a character" in p.stderr)

    # --- norm-check -----------------------------------------------------------
    p = run(["norm-check", "dsum(matrix:2,cyclic:2)", "--samples", "300", "--seed", "7"])
    j = jout(p)
    check("norm-check passes with the scaled norm",
          p.returncode == 0 and j and j["pass"] and j["samples_checked"] == 300)

    # --- lab + replay ----------------------------------------------------------
    p = run(["lab", "--predicate", "commutative"])
    j = jout(p)
    check("lab commutative exits 0 with no failures",
          p.returncode == 0 and j and j["all_passed"])

    for predicate, expected_sub in [("semisimple", "upper2"), ("unital", "xpoly2")]:
        p = run(["lab", "--predicate", predicate])
        j = jout(p)
        okay = p.returncode == 1 and j and not j["all_passed"]
        check(f"lab {predicate} exits 1 with failures", okay)
        if not okay:
            continue
        fails = j["h3_finite_codim"]["failures"]
        check(f"lab {predicate} names {expected_sub}",
              len(fails) == 1 and expected_sub in fails[0]["description"])
        replay = fails[0]["replay"]
        argv = shlex.split(replay)
        check(f"lab {predicate} replay is a laukit command", argv and argv[0] == "laukit")
        rp = run(argv[1:])
        rj = jout(rp)
        check(f"lab {predicate} failure replays to the same verdict",
              rp.returncode == 0 and rj and rj[predicate] is False)

    p = run(["lab", "--predicate", "amenable"])
    check("unknown predicate exits 2", p.returncode == 2)

    # --- usage errors -----------------------------------------------------------
    check("no subcommand exits 2", run([]).returncode == 2)
    check("unknown subcommand exits 2", run(["transmogrify"]).returncode == 2)
    check("construct lau without --char exits 2",
          run(["construct", "lau", "zero:1", "pointwise:1"]).returncode == 2)
    check("--help exits 0", run(["--help"]).returncode == 0)

print()
if failures:
    print(f"cli_test: {len(failures)} check(s) failed: {failures}")
    sys.exit(1)
print("cli_test: all checks passed")
