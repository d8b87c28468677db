#!/usr/bin/env python3
"""One-shot reproduction of the headline results.

Re-verifies the whole catalog (float + exact), prints the 3x3 realized /
forbidden / open report, the 2x3 -> 3x3 relationship table, and the 3xN
family counts for n = 3, 4.
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from ptinertia import inertia_table, lemma3n_family, table1_report, verify_all


def main() -> int:
    failures = 0
    print("== catalog ==")
    for result in verify_all():
        exact_s = str(result.exact_inertia) if result.exact_inertia else "-"
        status = "PASS" if result.passed else "FAIL"
        failures += not result.passed
        print(f"{result.entry_id:12s} expected={result.expected} "
              f"float={result.float_inertia} exact={exact_s} {status}")

    print("\n== 3x3 inertia sets ==")
    report = inertia_table(3, 3)
    print(f"realized {len(report.realized)}: {sorted(report.realized)}")
    print(f"forbidden {len(report.forbidden)}: {sorted(report.forbidden)}")
    print(f"open {len(report.open)}: {sorted(report.open)}")

    print("\n== 2x3 -> 3x3 table ==")
    for source, edges in table1_report().items():
        targets = ", ".join(str(e.target) for e in edges)
        print(f"{source} -> {targets}")

    print("\n== 3xN families ==")
    for n in (3, 4):
        family = lemma3n_family(n)
        print(f"n={n}: {len(family)} verified inertias")

    print("\nall good" if not failures else f"\n{failures} failures")
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
