#!/usr/bin/env python3
"""Regenerate the b-file fixtures from the OEIS entry definitions.

The sandbox has no network access, so the files are rebuilt offline from
each entry's defining formula instead of being downloaded:

  A033485  a(1) = 1, a(n) = a(n-1) + a(floor(n/2))                 offset 1
  A040039  first differences of A033485: A033485(n+2) - A033485(n+1)  offset 0
  A075535  a(1) = a(2) = 1, a(n) = a(n-1) + a(floor(n/2))          offset 1
"""

import sys
from pathlib import Path

TERMS = 200


def a033485(count):
    a = [0, 1]
    for n in range(2, count + 1):
        a.append(a[n - 1] + a[n // 2])
    return a  # a[1..count]


def a075535(count):
    a = [0, 1, 1]
    for n in range(3, count + 1):
        a.append(a[n - 1] + a[n // 2])
    return a


def write(path, name, rule, offset, values):
    with open(path, "w") as f:
        f.write(f"# {name}: {rule}\n")
        f.write("# regenerated offline from the defining formula\n")
        for i, v in enumerate(values):
            f.write(f"{i + offset} {v}\n")


def main():
    out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).parent
    a = a033485(TERMS + 2)
    write(out / "b033485.txt", "A033485", "a(n) = a(n-1) + a(floor(n/2)), a(1) = 1", 1, a[1 : TERMS + 1])
    write(out / "b040039.txt", "A040039", "first differences of A033485", 0,
          [a[n + 2] - a[n + 1] for n in range(TERMS)])
    w = a075535(TERMS)
    write(out / "b075535.txt", "A075535", "a(n) = a(n-1) + a(floor(n/2)), a(1) = a(2) = 1", 1, w[1 : TERMS + 1])


if __name__ == "__main__":
    main()
