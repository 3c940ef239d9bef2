#!/usr/bin/env python3
"""Regenerate tests/golden from the case list below using a built efbtool."""

import argparse
import json
import pathlib
import subprocess


def identity(m):
    terms = []
    for a in range(1 << m):
        sig = [-1 if (a >> i) & 1 else 1 for i in range(m)]
        terms.append({"a": sig, "b": sig, "c": "1"})
    return {"m": m, "field": "Q", "terms": terms}


def mono(m, a, b, c="1"):
    return {"a": a, "b": b, "c": c}


X2 = {"m": 2, "field": "Q", "terms": [mono(2, [1, -1], [-1, -1], "3/4"), mono(2, [-1, 1], [1, 1], "-2"),
                                      mono(2, [-1, -1], [-1, 1], "5")]}
Q1Q2 = {"m": 2, "terms": [mono(2, [1, 1], [-1, -1])]}
GAMMA1 = {"m": 2, "terms": [mono(2, [-1, 1], [1, 1]), mono(2, [-1, -1], [1, -1]),
                            mono(2, [1, 1], [-1, 1]), mono(2, [1, -1], [-1, -1])]}

CASES = [
    (["constraints", "--dim", "10"], ""),
    (["constraints", "--dim", "12"], ""),
    (["constraints", "--dim", "16"], ""),
    (["constraints", "--dim", "11"], ""),
    (["constraints", "--dim", "62"], ""),
    (["constraints", "--dim", "8", "--evaluate"], json.dumps({"m": 4, "xi": {"0": "1", "3": "2", "5": "-1", "15": "1"}})),
    (["annihilator"], json.dumps({"m": 3, "xi": {"1": "1"}})),
    (["annihilator"], json.dumps({"m": 2, "xi": {"1": "2", "3": "-3"}})),
    (["annihilator"], json.dumps({"m": 3, "xi": {}})),
    (["annihilator", "--m", "2"], json.dumps({"m": 3, "xi": {"1": "1"}})),
    (["annihilator"], '{"m": 3, "xi": {"1": "1"'),
    (["annihilator", "--field", "Qi"], json.dumps({"m": 2, "xi": {"0": "1", "3": "1+2i"}})),
    (["product"], json.dumps([identity(2), X2])),
    (["product"], json.dumps([X2, identity(2)])),
    (["product"], json.dumps([X2, X2])),
    (["product"], json.dumps([Q1Q2, GAMMA1])),
    (["product"], json.dumps([identity(2), {"m": 3, "terms": []}])),
    (["subspace"], json.dumps({"m": 2, "vectors": [{"alpha": ["1", "0"], "beta": ["0", "1"]}]})),
    (["subspace"], json.dumps({"m": 2, "vectors": [{"alpha": ["1", "0"], "beta": ["0", "0"]},
                                                   {"alpha": ["0", "0"], "beta": ["0", "1"]}]})),
    (["subspace"], json.dumps({"m": 2, "vectors": [{"alpha": ["1", "0"], "beta": ["1", "0"]}]})),
    (["expand", "--basis", "gamma"], json.dumps(GAMMA1)),
    (["expand", "--basis", "witt"], json.dumps(GAMMA1)),
    (["expand", "--basis", "witt"], json.dumps(Q1Q2)),
    (["expand", "--basis", "gamma"], json.dumps(identity(2))),
    (["simplicity"], json.dumps({"m": 3, "xi": {"0": "1", "7": "1"}})),
    (["simplicity", "--format", "table"], json.dumps({"m": 2, "xi": {"0": "1", "3": "2"}})),
    (["simplicity"], json.dumps({"m": 2, "xi": {"1": "1", "3": "1"}})),
    (["verify", "--m", "1", "--seed", "1", "--trials", "3"], ""),
    (["verify", "--m", "7"], ""),
]


def fnv1a(data: bytes) -> str:
    h = 0x811C9DC5
    for b in data:
        h ^= b
        h = (h * 0x01000193) & 0xFFFFFFFF
    return f"{h:08x}"


def case_m(args, stdin):
    if "--m" in args:
        return int(args[args.index("--m") + 1])
    if args[0] == "constraints":
        return int(args[args.index("--dim") + 1]) // 2
    try:
        j = json.loads(stdin)
    except json.JSONDecodeError:
        return 0
    if isinstance(j, list):
        j = j[0]
    return j.get("m", 0)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--tool", default="build/tools/efbtool")
    ap.add_argument("--out", default="tests/golden")
    opts = ap.parse_args()
    out = pathlib.Path(opts.out)
    out.mkdir(parents=True, exist_ok=True)
    for old in out.glob("*.json"):
        old.unlink()
    for args, stdin in CASES:
        p = subprocess.run([opts.tool, *args], input=stdin, capture_output=True, text=True)
        key = fnv1a(("\0".join(args) + "\0" + stdin).encode())
        name = f"{args[0]}_m{case_m(args, stdin)}_{key}.json"
        case = {"args": args, "stdin": stdin, "stdout": p.stdout, "exit": p.returncode}
        (out / name).write_text(json.dumps(case, indent=2, sort_keys=True) + "\n")
        print(name, p.returncode)


if __name__ == "__main__":
    main()
