#!/usr/bin/env python3
"""Write OEIS-style b-files for the six named families into fixtures/.

Values come from plain Python integers, independently of the C++ code.
"""

import argparse
import pathlib

FAMILIES = {
    "A000045": ("Fibonacci numbers", 1, 1, 0, 1),
    "A000032": ("Lucas numbers", 1, 1, 2, 1),
    "A000129": ("Pell numbers", 2, 1, 0, 1),
    "A001333": ("Pell-Lucas numbers (half companion Pell)", 2, 1, 1, 1),
    "A006190": ("a(n) = 3a(n-1) + a(n-2), a(0) = 0, a(1) = 1", 3, 1, 0, 1),
    "A015530": ("a(n) = 4a(n-1) + 3a(n-2), a(0) = 0, a(1) = 1", 4, 3, 0, 1),
}


def terms(c1, c2, x0, x1, count):
    out = [x0, x1]
    while len(out) < count:
        out.append(c1 * out[-1] + c2 * out[-2])
    return out[:count]


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default=str(pathlib.Path(__file__).resolve().parent.parent / "fixtures"))
    parser.add_argument("--count", type=int, default=100)
    args = parser.parse_args()
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for a_number, (title, c1, c2, x0, x1) in FAMILIES.items():
        lines = [f"# {a_number} {title}", f"# offline fixture, {args.count} terms from offset 0"]
        lines += [f"{n} {v}" for n, v in enumerate(terms(c1, c2, x0, x1, args.count))]
        (out / f"{a_number}.txt").write_text("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
