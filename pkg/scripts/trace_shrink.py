#!/usr/bin/env python3
"""How cyclic covers thin out a trace language.

Builds the one-letter 2-cycle (both languages (a^2)*) and the two-letter
two-state machine with interval language (ab*a)*ab*, then prints which
words stay in the trace language of the n-fold cyclic cover as n grows.
The interval language never moves; the trace language keeps only words
whose total winding is divisible by n.
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from autcob import Nfa, cyclic_cover  # noqa: E402


def survey_one_letter(max_n=6, max_exp=18):
    base = Nfa.make(
        ["s0", "s1"], ["a"],
        [("s0", "a", "s1"), ("s1", "a", "s0")], ["s0"], ["s0"],
    )
    print("one-letter 2-cycle, trace exponents up to", max_exp)
    header = "  n | " + " ".join(f"{k:2d}" for k in range(max_exp + 1))
    print(header)
    print("  " + "-" * (len(header) - 2))
    for n in range(1, max_n + 1):
        cover = cyclic_cover(base, ["s0", "s1"], n)
        row = " ".join(
            " *" if cover.trace_eval("a" * k) else " ." for k in range(max_exp + 1)
        )
        print(f"  {n} | {row}")
        assert all(
            cover.interval_eval("a" * k) == base.interval_eval("a" * k)
            for k in range(max_exp + 1)
        )
    print("  (interval language checked unchanged for every n)\n")


def survey_two_letter(max_n=4, max_len=8):
    base = Nfa.make(
        ["q1", "q2"], ["a", "b"],
        [("q1", "a", "q2"), ("q2", "a", "q1"), ("q2", "b", "q2")],
        ["q1"], ["q2"],
    )
    print("two-state ab machine, trace words that survive covering")
    words = sorted(base.trace_language(max_len), key=lambda w: (len(w), w))
    covers = {n: cyclic_cover(base, ["q1", "q2"], n) for n in range(1, max_n + 1)}
    print("  word      " + "  ".join(f"n={n}" for n in covers))
    for w in words:
        marks = "    ".join("*" if covers[n].trace_eval(w) else "." for n in covers)
        print(f"  {''.join(w) or 'eps':8s}  {marks}")


if __name__ == "__main__":
    survey_one_letter()
    survey_two_letter()
