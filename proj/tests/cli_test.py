#!/usr/bin/env python3
"""End-to-end checks for the command line tool: formats, exit codes, piping,
and byte-for-byte determinism. Usage: cli_test.py /path/to/binary"""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

BIN = Path(sys.argv[1]).resolve()
FAILURES = []


def run(args, stdin=None, expect=None):
    proc = subprocess.run([str(BIN)] + args, input=stdin, capture_output=True, text=True)
    if expect is not None and proc.returncode != expect:
        FAILURES.append(f"{' '.join(args)}: exit {proc.returncode}, wanted {expect}\n"
                        f"stderr: {proc.stderr.strip()}")
    return proc


def check(cond, label):
    if not cond:
        FAILURES.append(label)


def main():
    tmp = Path(tempfile.mkdtemp(prefix="riset-cli-"))

    p3 = run(["gen", "--kind", "path", "-n", "3"], expect=0).stdout
    check(p3.splitlines()[0] == "p 3 2", "path generator header")

    squared = run(["power", "-r", "2"], stdin=p3, expect=0).stdout
    depth = json.loads(run(["treedepth"], stdin=squared, expect=0).stdout)
    check(depth["depth"] == 3, "piped gen|power|treedepth depth")
    check(len(depth["parent"]) == 3, "treedepth parent array length")

    out = run(["m-bound", "-d", "5", "-n", "1", "-p", "3", "-r", "2"], expect=0).stdout
    check(out.strip() == "1", "m-bound singleton value")
    out = run(["m-bound", "-d", "3", "-n", "2", "-p", "0", "-r", "1"], expect=0).stdout
    check(out.strip() == "4", "m-bound flat value")

    c4 = run(["gen", "--kind", "cycle", "-n", "4"], expect=0).stdout
    c4_path = tmp / "c4.gr"
    c4_path.write_text(c4)
    parts_path = tmp / "parts.json"
    parts_path.write_text(json.dumps({"n": 2, "sets": [[0, 2], [1, 3]]}))

    oracle = run(["rainbow-oracle", "-g", str(c4_path), "-f", str(parts_path)], expect=1)
    check(oracle.stdout.strip() == "null", "rainbow-oracle reports absence as null")

    fx = json.loads(run(["f-exact", "-g", str(c4_path), "-n", "2"], expect=0).stdout)
    check(fx["value"] == 3, "f-exact on the four-cycle")
    check(len(fx["witness"]["sets"]) == 2, "f-exact witness size")

    cl = json.loads(
        run(["closure", "-g", str(c4_path), "--set", "0,2", "-r", "2"], expect=0).stdout)
    check(cl["closure"] == [0, 1, 2], "closure adds one connector")

    p4 = run(["gen", "--kind", "path", "-n", "4"], expect=0).stdout
    p4_path = tmp / "p4.gr"
    p4_path.write_text(p4)
    fam_path = tmp / "p4fam.json"
    fam_path.write_text(json.dumps({"n": 2, "sets": [[0, 3]] * 6}))

    ex = run(["extract", "-g", str(p4_path), "-f", str(fam_path), "-r", "2"], expect=0)
    picks = json.loads(ex.stdout)["picks"]
    check(sorted(p["vertex"] for p in picks) == [0, 3], "extract picks both endpoints")
    check(len({p["set_index"] for p in picks}) == 2, "extract picks distinct members")

    miss = run(["extract", "-g", str(c4_path), "-f", str(parts_path), "-r", "1"], expect=1)
    report = json.loads(miss.stdout)
    check("stage" in report and "detail" in report, "extract failure report shape")

    be = run(["extract-be", "-g", str(p4_path), "-f", str(fam_path), "-r", "2", "-n", "2"],
             expect=0)
    picks = json.loads(be.stdout)["picks"]
    check(sorted(p["vertex"] for p in picks) == [0, 3], "extract-be picks both endpoints")

    cc = json.loads(
        run(["check-chromatic", "-g", str(c4_path), "-n", "2", "--trials", "25",
             "--seed", "11"], expect=0).stdout)
    check(cc["passes"] == 25 and cc["trials"] == 25, "chromatic check passes all trials")
    check(cc["counterexample"] is None, "chromatic check has no counterexample")

    three_path = tmp / "three.gr"
    three_path.write_text("p 6 3\ne 1 2\ne 3 4\ne 5 6\n")
    m_path = tmp / "m.json"
    m_path.write_text(json.dumps(
        {"n": 2, "matchings": [[[0, 1], [2, 3]], [[0, 1], [4, 5]], [[2, 3], [4, 5]]]}))
    mr = run(["matching-rainbow", "-g", str(three_path), "-f", str(m_path)], expect=0)
    picks = json.loads(mr.stdout)["picks"]
    check(len(picks) == 2, "matching-rainbow picks two edges")
    check(len({p["set_index"] for p in picks}) == 2, "matching-rainbow distinct sources")

    single_path = tmp / "single.json"
    single_path.write_text(json.dumps({"n": 1, "matchings": [[[2, 3]], [[0, 1]]]}))
    mr1 = run(["matching-rainbow", "-g", str(three_path), "-f", str(single_path)], expect=0)
    picks = json.loads(mr1.stdout)["picks"]
    check(picks[0]["edge"] == [2, 3] and picks[0]["set_index"] == 0,
          "matching-rainbow n=1 takes the first edge of the first matching")

    wc = json.loads(
        run(["wcol", "-g", str(c4_path), "-r", "2", "--mode", "exact"], expect=0).stdout)
    check(wc["value"] == 3, "exact weak coloring number of the four-cycle")
    check(sorted(wc["order"]) == [0, 1, 2, 3], "wcol witness is a vertex order")

    e8 = run(["gen", "--kind", "empty", "-n", "8"], expect=0).stdout
    e8_path = tmp / "e8.gr"
    e8_path.write_text(e8)
    capped = run(["f-exact", "-g", str(e8_path), "-n", "3", "--cap", "20"], expect=3)
    capped_json = json.loads(capped.stdout)
    check(capped_json["value"] is None, "capped f-exact leaves value null")
    check(capped_json["lower_bound"] >= 1, "capped f-exact keeps a lower bound")

    run(["no-such-verb"], expect=2)
    run(["m-bound", "-d", "5"], expect=2)
    run(["treedepth", "-g", str(tmp / "missing.gr")], expect=2)
    run(["power", "-r", "0"], stdin=p3, expect=2)

    first = run(["extract-be", "-g", str(p4_path), "-f", str(fam_path), "-r", "2",
                 "-n", "2"], expect=0).stdout
    second = run(["extract-be", "-g", str(p4_path), "-f", str(fam_path), "-r", "2",
                  "-n", "2"], expect=0).stdout
    check(first == second, "repeated runs are byte-identical")

    if FAILURES:
        print(f"{len(FAILURES)} CLI check(s) failed:")
        for f in FAILURES:
            print(f"  - {f}")
        sys.exit(1)
    print("all CLI checks passed")


if __name__ == "__main__":
    main()
