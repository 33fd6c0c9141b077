"""Greedy index minimization and exhaustive verification of the closed forms.

The minimizer replays the index-decreasing rewrites in a fixed phase order
and reports an honest trace; the verifier enumerates every isomorphism class
in the target family, measures the true minima, and records agreement (or
disagreement) with the reference closed forms as data rather than errors.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import canon
from .canon import _cert_to_g6, _full_cert, _noncut, _rows, _seeds, _walk
from .errors import InvalidInput, InvalidParameters, SizeLimitExceeded
from .graphs import Graph, parse_g6
from .indices import claimed_minima
from .rewrites import RewriteKind, RewriteSite, apply_site, find_sites
from .structure import construct_cnk, cut_vertices, is_cnk

REACHED_CNK = "ReachedCnk"
NO_K_PRESERVING_SITE = "NoKPreservingSite"
NO_SITE = "NoSite"

VERIFY_SIZE_LIMIT = 9

# phase order of the greedy minimizer: clean up non-cycle blocks, straighten
# pendant trees into paths, merge paths down to at most one, then collapse
# extra cycles.
_PHASES: tuple[tuple[RewriteKind, ...], ...] = (
    (RewriteKind.BLOCK_EDGE_DELETE,),
    (RewriteKind.OP_I, RewriteKind.OP_IB, RewriteKind.OP_II),
    (RewriteKind.PATH_MERGE, RewriteKind.MERGE_IDENTIFIED),
    (RewriteKind.OP_III, RewriteKind.OP_IV),
)


@dataclass(frozen=True)
class TraceStep:
    kind: RewriteKind
    delta_m1: int
    delta_m2: int
    k_after: int


@dataclass(frozen=True)
class MinimizeTrace:
    initial: Graph
    final: Graph
    steps: tuple[TraceStep, ...]
    terminated_reason: str


@dataclass(frozen=True)
class ExtremalReport:
    n: int
    k: int
    min_m1: int | None
    min_m2: int | None
    argmin_m1: tuple[str, ...]
    argmin_m2: tuple[str, ...]
    class_size: int
    m1_matches_paper: bool
    m2_matches_paper: bool
    unique_extremal_is_cnk: bool


def minimize(g: Graph, preserve_k: bool = True) -> MinimizeTrace:
    """Apply index-decreasing rewrites greedily until the tadpole form is
    reached or no admissible site remains.

    Sites are taken in phase order, first-by-vertex-tuple within a phase.  A
    site is admissible when it does not increase either index and, under the
    k-preserving policy, keeps the cut-vertex count; the policy is enforced
    by post-checking the outcome, never baked into the operations.
    """
    if not g.is_connected() or g.m < g.n:
        raise InvalidInput("minimize needs a connected graph with a cycle")
    k0 = len(cut_vertices(g))
    if k0 < 1:
        raise InvalidInput("minimize needs at least one cut vertex")
    steps: list[TraceStep] = []
    current = g
    while True:
        if is_cnk(current):
            reason = REACHED_CNK
            break
        chosen: tuple[RewriteSite, "object"] | None = None
        saw_site = False
        for phase in _PHASES:
            for kind in phase:
                for site in find_sites(current, kinds=[kind]):
                    saw_site = True
                    outcome = apply_site(current, site)
                    if preserve_k and outcome.k_after != k0:
                        continue
                    if outcome.delta_m1 < 0 or outcome.delta_m2 < 0:
                        continue
                    chosen = (site, outcome)
                    break
                if chosen:
                    break
            if chosen:
                break
        if chosen is None:
            reason = NO_K_PRESERVING_SITE if saw_site else NO_SITE
            break
        site, outcome = chosen
        steps.append(
            TraceStep(site.kind, outcome.delta_m1, outcome.delta_m2, outcome.k_after)
        )
        current = outcome.result
    return MinimizeTrace(g, current, tuple(steps), reason)


# ----------------------------------------------------------------------
# exhaustive verification
# ----------------------------------------------------------------------
#
# A survey maps k -> [min_m1, argmin_m1 rows/keys, min_m2, argmin_m2, count]
# over every enumerated class with a cycle.  Workers reduce their subtree
# into the same shape; merging is min/concat/sum, so the combined result is
# identical for any partition of the seeds.


def _accumulate(rows: tuple[int, ...], acc: dict) -> None:
    n = len(rows)
    degs = [r.bit_count() for r in rows]
    if sum(degs) // 2 < n:
        return
    k = n - len(_noncut(n, rows))
    m1 = sum(d * d for d in degs)
    m2 = 0
    for v in range(n):
        mask = rows[v] & ((1 << v) - 1)
        while mask:
            bit = mask & -mask
            mask ^= bit
            m2 += degs[v] * degs[bit.bit_length() - 1]
    slot = acc.setdefault(k, [None, [], None, [], 0])
    slot[4] += 1
    if slot[0] is None or m1 < slot[0]:
        slot[0], slot[1] = m1, [rows]
    elif m1 == slot[0]:
        slot[1].append(rows)
    if slot[2] is None or m2 < slot[2]:
        slot[2], slot[3] = m2, [rows]
    elif m2 == slot[2]:
        slot[3].append(rows)


def _canonical_key(rows: tuple[int, ...]) -> str:
    cert, _ = _full_cert(rows)
    return _cert_to_g6(len(rows), cert).decode("ascii")


def _finish(acc: dict) -> dict[int, tuple[int, list[str], int, list[str], int]]:
    return {
        k: (
            slot[0],
            sorted(_canonical_key(r) for r in slot[1]),
            slot[2],
            sorted(_canonical_key(r) for r in slot[3]),
            slot[4],
        )
        for k, slot in acc.items()
    }


def _survey_seed(args: tuple[bytes, int]):
    encoded, n = args
    acc: dict = {}
    _walk(_rows(parse_g6(encoded)), n, lambda r: _accumulate(r, acc))
    return _finish(acc)


def _merge(into: dict, part: dict) -> None:
    for k, (m1, a1, m2, a2, size) in part.items():
        if k not in into:
            into[k] = [m1, list(a1), m2, list(a2), size]
            continue
        slot = into[k]
        slot[4] += size
        if m1 < slot[0]:
            slot[0], slot[1] = m1, list(a1)
        elif m1 == slot[0]:
            slot[1].extend(a1)
        if m2 < slot[2]:
            slot[2], slot[3] = m2, list(a2)
        elif m2 == slot[2]:
            slot[3].extend(a2)


def _survey(n: int, workers: int) -> dict[int, tuple[int, list[str], int, list[str], int]]:
    if workers > 1 and n >= 4:
        merged: dict = {}
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(
                _survey_seed, [(s, n) for s in _seeds(n)], chunksize=1
            ):
                _merge(merged, part)
        return {
            k: (s[0], sorted(s[1]), s[2], sorted(s[3]), s[4])
            for k, s in merged.items()
        }
    acc: dict = {}
    _walk((0,), n, lambda r: _accumulate(r, acc))
    return _finish(acc)


def _build_report(n: int, k: int, entry) -> ExtremalReport:
    if entry is None:
        return ExtremalReport(n, k, None, None, (), (), 0, False, False, False)
    min_m1, argmin_m1, min_m2, argmin_m2, size = entry
    ref_m1, ref_m2 = claimed_minima(n)
    cnk_key = canon.canonical_form(
        construct_cnk(n, k), size_limit=max(n, canon.CANON_SIZE_LIMIT)
    ).decode("ascii")
    return ExtremalReport(
        n=n,
        k=k,
        min_m1=min_m1,
        min_m2=min_m2,
        argmin_m1=tuple(argmin_m1),
        argmin_m2=tuple(argmin_m2),
        class_size=size,
        m1_matches_paper=min_m1 == ref_m1,
        m2_matches_paper=min_m2 == ref_m2,
        unique_extremal_is_cnk=list(argmin_m1) == [cnk_key]
        and list(argmin_m2) == [cnk_key],
    )


def _check_bounds(n: int, size_limit: int) -> None:
    if n > size_limit:
        raise SizeLimitExceeded(
            f"verification limited to n <= {size_limit}, got {n}"
        )


def verify_theorem(
    n: int, k: int, *, workers: int = 1, size_limit: int = VERIFY_SIZE_LIMIT
) -> ExtremalReport:
    """Exact minima of both indices over every connected n-vertex graph with
    k cut vertices and a cycle, with agreement flags against the closed forms.

    Exhaustive: every isomorphism class is enumerated and measured, so the
    reported minima are ground truth, not samples.  An empty class is
    reported with class_size 0 rather than raised.
    """
    if n < 4 or k < 1 or k > n - 3:
        raise InvalidParameters(
            f"verification grid needs n >= 4 and 1 <= k <= n-3, got ({n},{k})"
        )
    _check_bounds(n, size_limit)
    survey = _survey(n, workers)
    return _build_report(n, k, survey.get(k))


def verify_range(
    n_max: int, *, workers: int = 1, size_limit: int = VERIFY_SIZE_LIMIT
) -> list[ExtremalReport]:
    """Reports for every 4 <= n <= n_max and 1 <= k <= n-3, ordered by (n, k).

    Each vertex count is enumerated once and binned by cut count, so the full
    grid costs one sweep per n.
    """
    if n_max < 4:
        raise InvalidParameters(f"verification starts at n=4, got n_max={n_max}")
    _check_bounds(n_max, size_limit)
    reports = []
    for n in range(4, n_max + 1):
        survey = _survey(n, workers)
        for k in range(1, n - 2):
            reports.append(_build_report(n, k, survey.get(k)))
    return reports


# ----------------------------------------------------------------------
# serialization
# ----------------------------------------------------------------------


def report_to_dict(report: ExtremalReport) -> dict:
    return {
        "n": report.n,
        "k": report.k,
        "min_m1": report.min_m1,
        "min_m2": report.min_m2,
        "argmin_m1": list(report.argmin_m1),
        "argmin_m2": list(report.argmin_m2),
        "class_size": report.class_size,
        "m1_matches_paper": report.m1_matches_paper,
        "m2_matches_paper": report.m2_matches_paper,
        "unique_extremal_is_cnk": report.unique_extremal_is_cnk,
    }


def reports_to_json(reports: list[ExtremalReport]) -> str:
    return json.dumps([report_to_dict(r) for r in reports], indent=2) + "\n"


CSV_HEADER = "n,k,class_size,min_m1,min_m2,m1_ok,m2_ok,unique_cnk"


def reports_to_csv(reports: list[ExtremalReport]) -> str:
    def cell(value) -> str:
        if value is None:
            return ""
        if isinstance(value, bool):
            return "true" if value else "false"
        return str(value)

    lines = [CSV_HEADER]
    for r in reports:
        lines.append(
            ",".join(
                cell(v)
                for v in (
                    r.n,
                    r.k,
                    r.class_size,
                    r.min_m1,
                    r.min_m2,
                    r.m1_matches_paper,
                    r.m2_matches_paper,
                    r.unique_extremal_is_cnk,
                )
            )
        )
    return "\n".join(lines) + "\n"


def has_mismatch(report: ExtremalReport) -> bool:
    return not (
        report.m1_matches_paper
        and report.m2_matches_paper
        and report.unique_extremal_is_cnk
    )
