"""Print second Betti numbers for every non-regular nilpotent orbit of a
chosen family and rank, flagging the exceptional rows.

The starred rows are exactly those whose b2 equals the rank; everything
else is an exception with a named subregular singularity where one is
attached.
"""

import argparse

from exactlie.classify import enumerate_orbits, exceptional_partitions


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--family", default="C", choices=tuple("ABCDEFG"))
    ap.add_argument("--rank", type=int, default=4)
    args = ap.parse_args()

    rows = enumerate_orbits(args.family, args.rank)
    label_key = "partition" if args.family in "ABCD" else "descriptor"
    width = max(len(str(r[label_key])) for r in rows)
    print(f"{args.family}{args.rank}: {len(rows)} non-regular orbits")
    for row in rows:
        star = "*" if row["star"] else " "
        extra = ""
        if row.get("subregular_singularity"):
            extra = f"  subregular singularity {row['subregular_singularity']}"
        print(f" {star} {str(row[label_key]):<{width}}  b2 = {row['b2']}{extra}")

    if args.family in ("B", "C"):
        exc = exceptional_partitions(args.family, args.rank)
        print(f"exceptional set: {sorted(exc, reverse=True)}")


if __name__ == "__main__":
    main()
