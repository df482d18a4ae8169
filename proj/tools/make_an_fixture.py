#!/usr/bin/env python3
"""Write PARI's a_1..a_K for every curve in a curve table, one JSON line each.

Used as an external reference for the Hecke-eigenvalue tests.
"""
import argparse
import json

from cypari import pari


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--db", required=True)
    ap.add_argument("--out", required=True)
    ap.add_argument("--count", type=int, default=100)
    args = ap.parse_args()
    with open(args.db) as f, open(args.out, "w") as out:
        out.write("# source: PARI/GP ellan on the models of the curve table\n")
        for line in f:
            if line.startswith("#") or not line.strip():
                continue
            r = json.loads(line)
            e = pari.ellinit(r["ainvs"])
            coeffs = [int(c) for c in pari.ellan(e, args.count)]
            out.write(json.dumps({"label": r["label"], "an": coeffs}) + "\n")


if __name__ == "__main__":
    main()
