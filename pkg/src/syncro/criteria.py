"""Sufficient criteria for Syn(A) to have maximal state complexity 2^n - n.

Each check takes a pair of words in the roles of ``a`` (rank n - 1) and ``b``
(a single n-cycle) and searches for a witness state ``q`` (and distance ``d``)
that makes all 2-sets of states distinguishable. Combined with complete
reachability, any such witness proves maximality. Failing a check proves
nothing: the criteria are sufficient, not necessary.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from math import gcd
from typing import Iterator, Sequence

from .core import (
    SemiAutomaton,
    Transformation,
    Word,
    compose,
    format_word,
    is_strongly_connected,
    transformation_of,
)
from .powerset import (
    CapExceededError,
    all_2sets_distinguishable,
    all_nonsingletons_distinguishable,
    build_power,
    is_completely_reachable,
    syn_state_complexity,
)
from .structure import cyclic_words, don_precondition

EQ1 = "Eq1"
EQ2A = "Eq2a"
EQ2B = "Eq2b"

HYPOTHESES_VIOLATED = "hypotheses-violated"
NON_COPRIME_DISTANCE = "non-coprime-distance"
NO_WITNESS = "no-witness"
RANK_MISMATCH = "rank-mismatch"


@dataclass(frozen=True)
class MStep:
    m: int
    case: str
    r: int | None = None


@dataclass(frozen=True)
class Witness:
    q: int
    d: int
    s_offset: int
    per_m: tuple[MStep, ...]
    boundary_holds: bool | None = None


@dataclass(frozen=True)
class CriterionResult:
    criterion: str
    satisfied: bool
    witness: Witness | None = None
    reason: str | None = None
    detail: str = ""
    a: Word = ()
    b: Word = ()

    def to_dict(self, A: SemiAutomaton | None = None) -> dict:
        fmt = (lambda w: format_word(A, w)) if A is not None else list
        out = {"criterion": self.criterion, "satisfied": self.satisfied, "a": fmt(self.a), "b": fmt(self.b)}
        if self.witness is not None:
            w = self.witness
            out["witness"] = {
                "q": w.q,
                "d": w.d,
                "s_offset": w.s_offset,
                "per_m": [{"m": s.m, "case": s.case, "r": s.r} for s in w.per_m],
            }
            if w.boundary_holds is not None:
                out["witness"]["boundary_holds"] = w.boundary_holds
        if self.reason:
            out["reason"] = self.reason
        if self.detail:
            out["detail"] = self.detail
        return out


class _Cycle:
    """Powers of a cyclic transformation, with the b-distance between states."""

    def __init__(self, fb: Transformation):
        n = fb.n
        self.n = n
        self.position = [0] * n
        self.state = [0] * n
        q = 0
        for i in range(n):
            self.state[i] = q
            self.position[q] = i
            q = fb.image[q]

    def shift(self, q: int, e: int) -> int:
        """The state reached from q by e steps of b."""
        return self.state[(self.position[q] + e) % self.n]

    def distance(self, p: int, q: int) -> int:
        """The unique 0 <= e < n with p b^e = q."""
        return (self.position[q] - self.position[p]) % self.n


def _hypotheses(fa: Transformation, fb: Transformation) -> str | None:
    n = fa.n
    problems = []
    if not fb.is_cyclic:
        problems.append("b is not a single n-cycle")
    if fa.rank != n - 1:
        problems.append(f"a has rank {fa.rank}, expected {n - 1}")
    return "; ".join(problems) or None


def _check_q(fa: Transformation, cyc: _Cycle, q: int, d: int) -> tuple[MStep, ...] | None:
    """Per-m trace for the pair (q, d), or None if some 0 < m < n fails."""
    n = cyc.n
    a = fa.image
    qa = a[q]
    steps = []
    for m in range(1, n):
        lhs = a[cyc.shift(q, m)]  # q b^m a
        if lhs == cyc.shift(qa, n + m - d):
            steps.append(MStep(m, EQ1))
            continue
        if m % d == 0:
            return None
        for r in range(0, n, d):
            if cyc.shift(qa, r) == lhs:
                steps.append(MStep(m, EQ2A, r))
                break
            if cyc.shift(lhs, r) == qa:
                steps.append(MStep(m, EQ2B, r))
                break
        else:
            return None
    return tuple(steps)


def _collapsed_distances(fa: Transformation, cyc: _Cycle) -> list[int]:
    p, q = fa.collapsed_pair
    return sorted({cyc.distance(p, q), cyc.distance(q, p)})


def _search(A: SemiAutomaton, fa: Transformation, fb: Transformation, distances) -> Witness | None:
    cyc = _Cycle(fb)
    for q in range(A.n):
        for d in distances:
            steps = _check_q(fa, cyc, q, d)
            if steps is not None:
                return Witness(q, d, cyc.distance(q, fa.image[q]), steps)
    return None


def theorem1_check(A: SemiAutomaton, a: Sequence[int], b: Sequence[int]) -> CriterionResult:
    """Search q and d coprime to n such that every 0 < m < n satisfies

    either  q b^m a = q a b^(n+m-d)                                (Eq1)
    or, only when d does not divide m, for some 0 <= r < n with d | r,
            q a b^r = q b^m a                                       (Eq2a)
         or q b^m a b^r = q a                                       (Eq2b)

    The witness is the smallest q, then smallest d, then per-m smallest r.
    """
    a, b = tuple(a), tuple(b)
    fa, fb = transformation_of(A, a), transformation_of(A, b)
    name = "theorem1"
    problem = _hypotheses(fa, fb)
    if problem:
        return CriterionResult(name, False, reason=HYPOTHESES_VIOLATED, detail=problem, a=a, b=b)
    n = A.n
    coprime = [d for d in range(1, n) if gcd(d, n) == 1]
    witness = _search(A, fa, fb, coprime)
    if witness is not None:
        return CriterionResult(name, True, witness, a=a, b=b)
    # Eq1 at m = d forces {q, q b^d} to be the pair a collapses
    candidates = _collapsed_distances(fa, _Cycle(fb))
    if not any(gcd(d, n) == 1 for d in candidates):
        detail = ", ".join(f"gcd({d},{n}) != 1" for d in candidates)
        return CriterionResult(name, False, reason=NON_COPRIME_DISTANCE, detail=detail, a=a, b=b)
    return CriterionResult(name, False, reason=NO_WITNESS, a=a, b=b)


def corollary_word_check(A: SemiAutomaton, w: Sequence[int], b: Sequence[int]) -> CriterionResult:
    """Search q with q b^(m+1) w = q w b^m for all 0 <= m <= n - 2.

    This is the d = 1 instance of :func:`theorem1_check`. Whether the m = n - 1
    instance also holds is recorded as ``boundary_holds`` but not required.
    """
    w, b = tuple(w), tuple(b)
    fw, fb = transformation_of(A, w), transformation_of(A, b)
    name = "corollary"
    if not fb.is_cyclic:
        return CriterionResult(name, False, reason=HYPOTHESES_VIOLATED,
                               detail="b is not a single n-cycle", a=w, b=b)
    n = A.n
    if n == 1:
        return CriterionResult(name, True, Witness(0, 1, 0, (), True), a=w, b=b)
    if fw.rank != n - 1:
        return CriterionResult(name, False, reason=RANK_MISMATCH,
                               detail=f"w has rank {fw.rank}, the equations force {n - 1}", a=w, b=b)
    witness = _search(A, fw, fb, [1])
    if witness is None:
        return CriterionResult(name, False, reason=NO_WITNESS, a=w, b=b)
    cyc = _Cycle(fb)
    q = witness.q
    boundary = fw.image[q] == cyc.shift(fw.image[q], n - 1)
    witness = Witness(q, 1, witness.s_offset, witness.per_m, boundary)
    return CriterionResult(name, True, witness, a=w, b=b)


def half_cycle_check(A: SemiAutomaton, a: Sequence[int], b: Sequence[int]) -> CriterionResult:
    """Search q with q b^(m+1) a = q a b^m for all 0 <= m <= floor(n/2) - 1.

    Certifies 2-set distinguishability only together with complete
    reachability.
    """
    a, b = tuple(a), tuple(b)
    fa, fb = transformation_of(A, a), transformation_of(A, b)
    name = "half_cycle"
    problem = _hypotheses(fa, fb)
    if problem:
        return CriterionResult(name, False, reason=HYPOTHESES_VIOLATED, detail=problem, a=a, b=b)
    n = A.n
    cyc = _Cycle(fb)
    image = fa.image
    for q in range(n):
        steps = []
        for m in range(n // 2):
            if image[cyc.shift(q, m + 1)] != cyc.shift(image[q], m):
                break
            steps.append(MStep(m, "Eq4"))
        else:
            return CriterionResult(name, True, Witness(q, 1, cyc.distance(q, image[q]), tuple(steps)),
                                   a=a, b=b)
    return CriterionResult(name, False, reason=NO_WITNESS, a=a, b=b)


def iter_rank_words(A: SemiAutomaton, target_rank: int, max_len: int | None = None,
                    limit: int = 200_000) -> Iterator[tuple[Word, Transformation]]:
    """Lazy form of :func:`enumerate_rank_words`, yielding in the same order."""
    if max_len is None:
        max_len = 2 * A.n + 2
    identity = Transformation.identity(A.n)
    seen = {identity}
    if identity.rank == target_rank:
        yield (), identity
    queue = deque([((), identity)])
    while queue and len(seen) < limit:
        word, f = queue.popleft()
        if len(word) >= max_len:
            continue
        for x, g in enumerate(A.letters):
            h = compose(f, g)
            if h in seen:
                continue
            seen.add(h)
            w = word + (x,)
            queue.append((w, h))
            if h.rank == target_rank:
                yield w, h


def enumerate_rank_words(A: SemiAutomaton, target_rank: int, max_len: int | None = None,
                         limit: int = 200_000) -> list[tuple[Word, Transformation]]:
    """One shortest word per distinct transformation of the given rank.

    Breadth-first over the transformation monoid, extending words on the
    right with letters in index order, so each representative is the
    lexicographically least shortest word. Results are ordered by length, then
    lexicographically. ``limit`` bounds the number of monoid elements visited.
    """
    return list(iter_rank_words(A, target_rank, max_len, limit))


# -- verdict ------------------------------------------------------------------

PROVED = "proved"
MAX_RECORDED_ATTEMPTS = 64
REFUTED = "refuted"
UNKNOWN = "unknown"


@dataclass
class Budget:
    word_len: int | None = None
    use_oracle: bool = False
    cap: int | None = None


@dataclass
class Verdict:
    max_sc: str
    sc_claimed: int | None
    justification: list[dict] = field(default_factory=list)
    attempts: list[dict] = field(default_factory=list)
    oracle_used: bool = False
    reachability: str | None = None
    distinguishability: str | None = None
    attempts_omitted: int = 0

    def record_attempt(self, record: dict) -> None:
        if len(self.attempts) < MAX_RECORDED_ATTEMPTS:
            self.attempts.append(record)
        else:
            self.attempts_omitted += 1

    def to_dict(self) -> dict:
        return {
            "max_sc": self.max_sc,
            "sc_claimed": self.sc_claimed,
            "reachability_certificate": self.reachability,
            "distinguishability_certificate": self.distinguishability,
            "oracle_used": self.oracle_used,
            "justification": self.justification,
            "attempts": self.attempts,
            "attempts_omitted": self.attempts_omitted,
        }


def _criterion_pairs(A: SemiAutomaton, word_len: int):
    """Candidate (a, b) word pairs: letters first, then longer words."""
    n = A.n
    defect_letters = [(x,) for x, f in enumerate(A.letters) if f.rank == n - 1]
    cyclic = [(x,) for x, f in enumerate(A.letters) if f.is_cyclic]
    for a in defect_letters:
        for b in cyclic:
            yield a, b
    cyc_words = [w for w, _ in cyclic_words(A, max(word_len, 1))]
    if not cyc_words:
        return
    for a, _ in iter_rank_words(A, n - 1, word_len):
        for b in cyc_words:
            if len(a) == 1 and len(b) == 1:
                continue
            yield a, b


def verdict(A: SemiAutomaton, budget: Budget | None = None) -> Verdict:
    """Decide maximality of sc(Syn(A)) by certificates, recording each step.

    1. complete reachability via Don's precondition, else exact search;
    2. 2-set distinguishability via the criteria over letter and word pairs;
    3. optionally, an exact fallback: 2-sets first, then all subsets of
       size >= 2 (2-sets alone do not suffice once there are three letters);
    4. maximal iff both certificates hold.

    Criterion failure alone never refutes maximality.
    """
    budget = budget or Budget()
    n = A.n
    word_len = budget.word_len if budget.word_len is not None else 2 * n + 2
    target = 2 ** n - n
    v = Verdict(UNKNOWN, None)

    if n == 1:
        v.max_sc, v.sc_claimed, v.reachability, v.distinguishability = PROVED, 1, "exact", "vacuous"
        v.justification.append({"step": "trivial", "detail": "one state: Syn(A) is everything, sc = 1 = 2^1 - 1"})
        return v

    # step 1: complete reachability
    don = don_precondition(A)
    power = None
    if don is not None:
        v.reachability = "don"
        v.justification.append({"step": "Don", "a": A.names[don.a], "b": A.names[don.b],
                                "s": don.s, "t": don.t, "d": don.d})
    else:
        try:
            power = build_power(A, cap=budget.cap)
        except CapExceededError as exc:
            v.attempts.append({"step": "reachability", "detail": str(exc)})
            return v
        reach = is_completely_reachable(A, power=power)
        if reach.ok:
            v.reachability = "exact"
            v.justification.append({"step": "complete-reachability", "method": "exact"})
        else:
            missing = sorted(reach.missing)
            v.attempts.append({"step": "complete-reachability", "method": "exact", "ok": False,
                               "missing": missing})
            return _without_complete_reachability(A, v, power)

    # step 2: criteria
    for a, b in _criterion_pairs(A, word_len):
        for check in (theorem1_check, half_cycle_check):
            result = check(A, a, b)
            record = result.to_dict(A)
            if result.satisfied:
                v.justification.append(record)
                v.distinguishability = result.criterion
                break
            v.record_attempt(record)
        if v.distinguishability:
            break

    # step 3: exact fallback. 2-set distinguishability alone is not enough
    # with three or more letters, so a positive 2-set answer is confirmed on
    # all subsets of size >= 2 before anything is claimed.
    if v.distinguishability is None and budget.use_oracle:
        v.oracle_used = True
        two = all_2sets_distinguishable(A)
        if not two.ok:
            pair = [sorted(s) for s in two.witness]
            v.justification.append({"step": "2-set-distinguishability", "method": "exact",
                                    "ok": False, "indistinguishable": pair})
            v.max_sc = REFUTED
            v.sc_claimed = _exact_sc(A, budget, power)
            return v
        v.justification.append({"step": "2-set-distinguishability", "method": "exact", "ok": True})
        try:
            full = all_nonsingletons_distinguishable(A, cap=budget.cap)
        except CapExceededError as exc:
            v.attempts.append({"step": "subset-distinguishability", "detail": str(exc)})
            return v
        if not full.ok:
            pair = [sorted(s) for s in full.witness]
            v.justification.append({"step": "subset-distinguishability", "method": "exact",
                                    "ok": False, "indistinguishable": pair})
            v.max_sc = REFUTED
            v.sc_claimed = _exact_sc(A, budget, power)
            return v
        v.distinguishability = "exact"
        v.justification.append({"step": "subset-distinguishability", "method": "exact", "ok": True})

    # step 4: combine
    if v.distinguishability == "exact":
        v.justification.append({"step": "minimality", "detail": "completely reachable and all subsets "
                                "of size >= 2 distinguishable, so sc = 2^n - n"})
    elif v.distinguishability is not None:
        v.justification.append({"step": "Lemma 1", "detail": "completely reachable and all 2-sets "
                                "distinguishable, so sc = 2^n - n"})
    if v.distinguishability is not None:
        v.max_sc = PROVED
        v.sc_claimed = target
    return v


def _exact_sc(A: SemiAutomaton, budget: Budget, power=None) -> int | None:
    try:
        return syn_state_complexity(A, cap=budget.cap, power=power)
    except CapExceededError:
        return None


def _without_complete_reachability(A: SemiAutomaton, v: Verdict, power) -> Verdict:
    """Settle maximality exactly when A is not completely reachable.

    Maximality needs every subset of size >= 2 and at least one singleton to be
    reachable; if that fails the verdict is a refutation from exact facts.
    Otherwise the exact state complexity decides.
    """
    n = A.n
    reached = power.depth >= 0
    sizes = power.sizes
    all_big = bool(reached[sizes >= 2].all())
    some_single = bool(reached[sizes == 1].any())
    sc = syn_state_complexity(A, power=power)
    v.sc_claimed = sc
    if not (all_big and some_single):
        v.max_sc = REFUTED
        v.justification.append({"step": "reachability-obstruction",
                                "all_size_ge2_reachable": all_big,
                                "some_singleton_reachable": some_single,
                                "sc_exact": sc})
        if is_strongly_connected(A):
            v.justification.append({"step": "Lemma 2", "detail": "strongly connected and not completely "
                                    "reachable, so sc < 2^n - n"})
        return v
    v.oracle_used = True
    v.max_sc = PROVED if sc == 2 ** n - n else REFUTED
    v.justification.append({"step": "exact-sc", "sc_exact": sc})
    return v
