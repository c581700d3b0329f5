#!/usr/bin/env python3
"""End-to-end checks of the pmc executable.

usage: cli_test.py PMC SCHEMA_DIR GOLDEN_DIR [--regen]

Runs the binary as a user would: exit codes, golden text reports, JSON
reports against the schemas in SCHEMA_DIR, file round trips and a census
run into a temporary directory.
"""

import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema

PMC, SCHEMAS, GOLDEN = sys.argv[1], pathlib.Path(sys.argv[2]), pathlib.Path(sys.argv[3])
REGEN = "--regen" in sys.argv[4:]

failures = []


def run(*args, cwd=None):
    p = subprocess.run([PMC, *map(str, args)], capture_output=True, text=True, cwd=cwd, timeout=300)
    return p.returncode, p.stdout, p.stderr


def check(cond, what):
    print(("ok   " if cond else "FAIL ") + what)
    if not cond:
        failures.append(what)


def schema(name):
    return json.loads((SCHEMAS / f"{name}.schema.json").read_text())


def valid(doc, name):
    try:
        jsonschema.validate(doc, schema(name))
        return True
    except jsonschema.ValidationError as e:
        print(f"     {name}: {e.message}")
        return False


# 2-fold covering of the 6-vertex projective plane by the icosahedron
def icosahedron():
    up = lambda k: 1 + k % 5
    low = lambda j: 6 + (j - 2) % 5 + 1  # low(k + 2) is the antipode of up(k)
    tri = []
    for k in range(5):
        tri += [(0, up(k), up(k + 1)), (6, low(k), low(k + 1)),
                (up(k), up(k + 1), low(k)), (low(k), low(k + 1), up(k + 1))]
    return [sorted(t) for t in tri]


def write_facets(path, facets):
    path.write_text("".join(" ".join(map(str, f)) + "\n" for f in facets))


with tempfile.TemporaryDirectory() as tmp:
    tmp = pathlib.Path(tmp)
    for name in ["N_1", "N_5", "N_6", "N_7", "N_16", "N_24", "P_1", "R_1", "A_3_10", "B_3_9", "S3_8_35"]:
        code, _, err = run("catalog", "get", name, "-o", tmp / f"{name}.txt")
        check(code == 0, f"catalog get {name}")

    # golden text reports: (golden file, expected exit, args)
    goldens = [
        ("verify_N_5.txt", 0, ["verify", tmp / "N_5.txt"]),
        ("verify_P_1.txt", 1, ["verify", tmp / "P_1.txt"]),
        ("links_N_16.txt", 0, ["links", tmp / "N_16.txt"]),
        ("moves_A_3_10.txt", 0, ["moves", tmp / "A_3_10.txt"]),
        ("moves_B_3_9.txt", 0, ["moves", tmp / "B_3_9.txt"]),
        ("homology_N_1.txt", 0, ["homology", tmp / "N_1.txt"]),
        ("iso_N_5_N_6.txt", 1, ["iso", tmp / "N_5.txt", tmp / "N_6.txt"]),
        ("surfaces_6.txt", 0, ["enumerate-surfaces", "--vertices", 6]),
        ("surfaces_7.txt", 0, ["enumerate-surfaces", "--vertices", 7]),
    ]
    for golden, want, args in goldens:
        code, out, err = run(*args)
        path = GOLDEN / golden
        if REGEN:
            path.write_text(out)
        check(code == want, f"{golden}: exit {code}, expected {want}")
        check(path.exists() and out == path.read_text(), f"{golden}: output matches")

    # JSON reports
    reports = [
        ("verify", 0, ["verify", tmp / "N_24.txt"]),
        ("verify", 1, ["verify", tmp / "P_1.txt"]),
        ("links", 0, ["links", tmp / "N_16.txt"]),
        ("moves", 0, ["moves", tmp / "S3_8_35.txt"]),
        ("homology", 0, ["homology", tmp / "A_3_10.txt"]),
        ("iso", 1, ["iso", tmp / "N_5.txt", tmp / "N_6.txt"]),
        ("catalog_list", 0, ["catalog", "list"]),
        ("surfaces", 0, ["enumerate-surfaces", "--vertices", 7]),
    ]
    for name, want, args in reports:
        code, out, _ = run(*args, "--json")
        check(code == want, f"{' '.join(map(str, args[:1]))} --json exit {code}")
        check(valid(json.loads(out), name), f"{args[0]} --json matches {name} schema")

    code, out, _ = run("verify", tmp / "N_16.txt", "--json")
    doc = json.loads(out)
    check(doc["is_normal"] is True and doc["is_neighbourly"] is False, "N_16 is normal, not neighbourly")
    check(sorted(s["name"] for s in doc["singular_vertices"]) == ["R_3", "R_4"], "N_16 singular links")

    code, out, _ = run("enumerate-surfaces", "--vertices", 7, "--json")
    check(json.loads(out)["count"] == 13, "13 surface classes on 7 vertices")

    code, out, _ = run("catalog", "verify", "--json")
    check(code == 0, "catalog verify exits 0")
    doc = json.loads(out)
    check(valid(doc, "catalog_verify"), "catalog verify matches schema")

    # isomorphism between different vertex labels
    ico, rp2, cmap = tmp / "ico.txt", tmp / "rp2.txt", tmp / "map.txt"
    write_facets(ico, icosahedron())
    write_facets(rp2, sorted({tuple(sorted(v % 6 for v in t)) for t in icosahedron()}))
    cmap.write_text("".join(f"{v} {v % 6}\n" for v in range(12)))
    code, out, _ = run("iso", rp2, tmp / "R_1.txt")
    check(code == 0 and out.startswith("isomorphic "), "quotient of the icosahedron is R_1")

    # coverings
    code, out, _ = run("cover", "check", cmap, ico, rp2, "--json")
    doc = json.loads(out)
    check(code == 0 and valid(doc, "cover"), "cover check exit 0, schema")
    check(doc["k"] == 2 and doc["branch_locus"] == [], "icosahedron double covers RP^2 unbranched")
    bad = tmp / "bad_map.txt"
    bad.write_text("".join(f"{v} {0 if v < 2 else v % 6}\n" for v in range(12)))
    code, _, err = run("cover", "check", bad, ico, rp2)
    check(code == 2 and err.startswith("pmc: "), "non-simplicial map exits 2")

    # moves and scripts round-trip through files
    n16 = tmp / "from_n7.json"
    code, _, _ = run("apply", tmp / "N_7.txt", "--face", "6 7", "-o", n16)
    check(code == 0, "apply writes a file")
    check(valid(json.loads(n16.read_text()), "complex"), "JSON complex output matches schema")
    code, out, _ = run("iso", n16, tmp / "N_16.txt")
    check(code == 0, "kappa_67(N_7) is N_16")
    code, out, _ = run("script", tmp / "N_7.txt", "--steps", "67")
    back = tmp / "back.txt"
    back.write_text(out)
    code, out, _ = run("iso", back, n16)
    check(code == 0 and out.strip() == "isomorphic ()", "script and apply agree")
    facet = (tmp / "N_5.txt").read_text().split("\n")[0]
    code, out, _ = run("apply", tmp / "N_5.txt", "--face", facet, "--fresh", 9)
    check(code == 0 and sum(l.endswith(" 9") for l in out.splitlines()) == 4, "facet subdivision uses the fresh label")

    # errors
    malformed = tmp / "malformed.txt"
    malformed.write_text("1 2 3\n1 2 x\n")
    code, _, err = run("verify", malformed)
    check(code == 2 and "line 2, column 5" in err, "parse error exits 2 with position")
    code, _, err = run("verify", tmp / "missing.txt")
    check(code == 2 and err.startswith("pmc: "), "missing file exits 2")
    code, _, _ = run("verify", "--bogus", tmp / "N_5.txt")
    check(code == 2, "unknown flag exits 2")
    code, _, _ = run("catalog", "get", "N_99")
    check(code == 2, "unknown catalog entry exits 2")
    code, _, err = run("apply", tmp / "B_3_9.txt", "--face", "4 6")
    check(code == 2 and err.startswith("pmc: "), "non-removable face exits 2")
    code, _, _ = run("classify", "--vertices", 7, "--out", tmp)
    check(code == 2, "classify rejects 7 vertices")

    # census
    out_dir = tmp / "census"
    out_dir.mkdir()
    code, out, _ = run("classify", "--vertices", 8, "--out", out_dir)
    check(code == 0 and "classes 74" in out, "classify exits 0 with 74 classes")
    census = json.loads((out_dir / "census.json").read_text())
    check(valid(census, "census"), "census.json matches schema")
    check(len(census["classes"]) == 74, "census.json lists 74 classes")
    for f in ["table1.txt", "hasse_spheres.dot", "hasse_normals.dot"]:
        check((out_dir / f).stat().st_size > 0, f"{f} written")
    check("digraph" in (out_dir / "hasse_normals.dot").read_text(), "hasse_normals.dot is a digraph")

print(f"{len(failures)} failed")
sys.exit(1 if failures else 0)
