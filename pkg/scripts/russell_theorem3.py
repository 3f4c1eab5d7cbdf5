"""Print the Prime Minister report together with the three lemma checks."""
from __future__ import annotations

import argparse
import time

from jemkit.russell import theorem3_report, verify_lemma1, verify_lemma2, verify_lemma3


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--depth", type=int, default=3)
    args = p.parse_args()

    start = time.perf_counter()
    print(theorem3_report())
    for check in (verify_lemma1, verify_lemma2, verify_lemma3):
        report = check(args.depth)
        print(report)
        for note in report.notes:
            print(f"  {note}")
        for failure in report.failures[:5]:
            print(f"  {failure}")
    print(f"done in {time.perf_counter() - start:.2f}s")


if __name__ == "__main__":
    main()
