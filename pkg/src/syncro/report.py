"""Analysis reports: every claim paired with the kind of certificate behind it."""

from __future__ import annotations

import time
from contextlib import contextmanager

from .core import SemiAutomaton, compact_word, format_word, is_strongly_connected
from .criteria import (
    PROVED,
    UNKNOWN,
    Budget,
    corollary_word_check,
    half_cycle_check,
    theorem1_check,
    verdict,
)
from .powerset import (
    CapExceededError,
    build_power,
    is_completely_reachable,
    shortest_reset,
    syn_state_complexity,
)
from .structure import cyclic_letters, don_precondition, find_cyclic_word, rank_profile

TIMINGS = "timings"


class _Clock:
    def __init__(self):
        self.phases: dict[str, float] = {}

    @contextmanager
    def phase(self, name: str):
        start = time.perf_counter()
        try:
            yield
        finally:
            self.phases[name] = round(time.perf_counter() - start, 6)


def _rank_section(A: SemiAutomaton) -> dict:
    profile = rank_profile(A)
    return {
        "ranks": {A.names[a]: r for a, r in enumerate(profile.ranks)},
        "permutational": [A.names[a] for a in profile.permutational],
        "rank_n_minus_1": [
            {"letter": A.names[d.letter], "excluded": d.excluded, "collapsed": list(d.collapsed)}
            for d in profile.defects
        ],
        "m": profile.m,
    }


def _circularity(A: SemiAutomaton) -> dict:
    letters = cyclic_letters(A)
    if letters:
        return {"kind": "letter", "witness": A.names[letters[0]]}
    budget = A.n * A.n
    w = find_cyclic_word(A, budget) if A.n > 0 else None
    if w is not None:
        return {"kind": "word", "witness": format_word(A, w), "compact": compact_word(A, w)}
    return {"kind": "none-within-budget", "budget": budget}


def _criteria_traces(A: SemiAutomaton) -> list[dict]:
    """All three criteria on every (rank n-1 letter, cyclic letter) pair."""
    n = A.n
    if n < 2:
        return []
    traces = []
    defects = [x for x, f in enumerate(A.letters) if f.rank == n - 1]
    for a in defects:
        for b in cyclic_letters(A):
            for check in (theorem1_check, corollary_word_check, half_cycle_check):
                traces.append(check(A, (a,), (b,)).to_dict(A))
    return traces


def verdict_label(v) -> str:
    if v.max_sc == PROVED and v.oracle_used:
        return "proved-via-oracle"
    return v.max_sc


def analyze(A: SemiAutomaton, budget: Budget | None = None, name: str | None = None) -> dict:
    """Build the full report for ``A``."""
    budget = budget or Budget()
    clock = _Clock()
    n = A.n
    target = 2 ** n - n
    report: dict = {"automaton": {"name": name, "n": n, "alphabet": list(A.names)}}

    with clock.phase("structure"):
        report["rank_profile"] = _rank_section(A)
        report["circularity"] = _circularity(A)
        report["strongly_connected"] = is_strongly_connected(A)

    power = None
    power_error = None
    with clock.phase("power_set"):
        try:
            power = build_power(A, cap=budget.cap)
        except CapExceededError as exc:
            power_error = str(exc)
    if power_error:
        report["power_set"] = {"built": False, "reason": power_error}
    else:
        report["power_set"] = {"built": True, "reachable_subsets": len(power)}

    with clock.phase("reachability"):
        don = don_precondition(A)
        if don is not None:
            report["complete_reachability"] = {
                "value": True, "certificate": "don",
                "witness": {"a": A.names[don.a], "b": A.names[don.b], "s": don.s, "t": don.t, "d": don.d},
            }
        elif power is not None:
            reach = is_completely_reachable(A, power=power)
            entry = {"value": reach.ok, "certificate": "exact"}
            if not reach.ok:
                entry["missing"] = sorted(reach.missing)
            report["complete_reachability"] = entry
        else:
            report["complete_reachability"] = {"value": None, "certificate": "none"}

    with clock.phase("criteria"):
        report["criteria"] = _criteria_traces(A)

    with clock.phase("verdict"):
        v = verdict(A, budget)
    report["verdict"] = {"label": verdict_label(v), **v.to_dict()}

    with clock.phase("sc"):
        if power is not None:
            sc = syn_state_complexity(A, power=power)
            report["sc"] = {"value": sc, "kind": "exact", "maximum": target, "maximal": sc == target}
            reset = shortest_reset(A, power=power)
            report["shortest_reset"] = (
                None if reset is None
                else {"word": format_word(A, reset), "compact": compact_word(A, reset), "length": len(reset)}
            )
        elif v.max_sc == PROVED:
            report["sc"] = {"value": target, "kind": "proved", "maximum": target, "maximal": True}
            report["shortest_reset"] = None
        else:
            report["sc"] = {"value": None, "kind": "bound-only", "upper_bound": target}
            report["shortest_reset"] = None

    report[TIMINGS] = clock.phases
    return report


def exit_code(report: dict) -> int:
    return 2 if report["verdict"]["max_sc"] == UNKNOWN else 0


def _yes(flag) -> str:
    return {True: "yes", False: "no", None: "unknown"}[flag]


def render_text(report: dict) -> str:
    """Human-readable rendering of an analysis report."""
    lines = []
    auto = report["automaton"]
    title = auto["name"] or "automaton"
    lines.append(f"{title}: n = {auto['n']}, alphabet = {' '.join(auto['alphabet'])}")
    rp = report["rank_profile"]
    lines.append("ranks: " + ", ".join(f"{a}={r}" for a, r in rp["ranks"].items()))
    for d in rp["rank_n_minus_1"]:
        lines.append(f"  {d['letter']}: excludes {d['excluded']}, collapses {d['collapsed']}")
    circ = report["circularity"]
    if circ["kind"] == "none-within-budget":
        lines.append(f"circular: no cyclic word up to length {circ['budget']}")
    else:
        lines.append(f"circular: {circ['kind']} {circ['witness']}")
    lines.append(f"strongly connected: {_yes(report['strongly_connected'])}")
    cr = report["complete_reachability"]
    line = f"completely reachable: {_yes(cr['value'])} ({cr['certificate']})"
    if "witness" in cr:
        w = cr["witness"]
        line += f" a={w['a']} b={w['b']} s={w['s']} t={w['t']} d={w['d']}"
    lines.append(line)
    sc = report["sc"]
    if sc["value"] is None:
        lines.append(f"sc(Syn): unknown, at most {sc['upper_bound']} ({sc['kind']})")
    else:
        lines.append(f"sc(Syn): {sc['value']} of maximum {sc['maximum']} ({sc['kind']})")
    reset = report["shortest_reset"]
    if reset is not None:
        lines.append(f"shortest reset: {reset['compact']} (length {reset['length']})")
    elif report["power_set"]["built"]:
        lines.append("shortest reset: none (not synchronizing)")
    for t in report["criteria"]:
        status = "satisfied" if t["satisfied"] else f"failed ({t.get('reason', '')})"
        line = f"criterion {t['criterion']} a={t['a']} b={t['b']}: {status}"
        if "witness" in t:
            line += f" q={t['witness']['q']} d={t['witness']['d']}"
        elif t.get("detail"):
            line += f" {t['detail']}"
        lines.append(line)
    lines.append(f"verdict: {report['verdict']['label']}")
    return "\n".join(lines) + "\n"
