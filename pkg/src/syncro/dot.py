"""Graphviz DOT rendering of automata and their power automata."""

from __future__ import annotations

from .core import SemiAutomaton, format_set, from_mask
from .powerset import REACHABLE, build_power


def _quote(s: str) -> str:
    return '"{}"'.format(s.replace("\\", "\\\\").replace('"', r"\""))


def automaton_dot(A: SemiAutomaton, name: str = "automaton") -> str:
    """One node per state and one labelled edge per transition."""
    lines = [f"digraph {_quote(name)} {{", "  rankdir=LR;", "  node [shape=circle];"]
    for q in range(A.n):
        lines.append(f"  {_quote(str(q))};")
    for q in range(A.n):
        for a in range(A.k):
            lines.append(f"  {_quote(str(q))} -> {_quote(str(A.delta[q][a]))} [label={_quote(A.names[a])}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def power_dot(A: SemiAutomaton, name: str = "power", cap: int | None = None) -> str:
    """Reachable power automaton; singleton subsets are double-circled."""
    pa = build_power(A, REACHABLE, cap)
    lines = [
        f"digraph {_quote(name)} {{",
        "  rankdir=LR;",
        "  node [shape=box];",
        '  start [shape=point];',
        f"  start -> {_quote(format_set(pa.start))};",
    ]
    # nodes in breadth-first order from Q, which is the order a reader follows
    for s in pa.order:
        s = int(s)
        label = _quote(format_set(s))
        if len(from_mask(s)) == 1:
            lines.append(f"  {label} [shape=doublecircle];")
        else:
            lines.append(f"  {label};")
    for s in pa.order:
        s = int(s)
        for a in range(A.k):
            t = int(pa.succ[a, s])
            lines.append(f"  {_quote(format_set(s))} -> {_quote(format_set(t))} [label={_quote(A.names[a])}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
