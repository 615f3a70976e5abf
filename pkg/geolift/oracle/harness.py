"""Validation of the affine Schuetzenberger formula against the tableau crystal"""

import logging
from typing import Any, Dict, List, Sequence, Tuple

import numpy as np

from ..cartan import (
    WordLike,
    build_cartan,
    require_longest,
    root_to_weight,
    roots_along_word,
    simple_root,
    star,
    star_word,
    w0_action,
    weyl_dimension,
)
from ..models import VerificationReport
from ..parametrize import schutz_affine, transition_string
from .crystal import (
    DEFAULT_BOUND,
    apply_f,
    generate_crystal,
    lowest_element,
    string_extract,
)
from .tableau import evacuation, evacuation_by_insertion, weight

logger = logging.getLogger(__name__)

Vector = Tuple[int, ...]


def _combine(base: Sequence[int], coeffs: Sequence[int], vectors: Sequence[Vector], sign: int = 1) -> Vector:
    """base + sign * sum_k coeffs[k] * vectors[k]"""
    combo = np.array(coeffs, dtype=np.int64) @ np.array(vectors, dtype=np.int64)
    return tuple(int(x) for x in np.array(base, dtype=np.int64) + sign * combo)


def verify_corollary(rank: int, lam: Sequence[int], word: WordLike, bound: int = DEFAULT_BOUND) -> VerificationReport:
    """
    Run the affine formula over every b in B(lambda) and check:
    non-negativity, injectivity, the weight identity
    lambda - sum t'_k beta_k(i*) = w0(lambda) + sum t_k alpha_{i_k*},
    the endpoint pins and equivariance of evacuation with the crystal edges.
    """
    datum = build_cartan("A", rank)
    letters = require_longest(datum, word)
    lam = tuple(int(c) for c in lam)
    graph = generate_crystal(rank, lam, bound=bound)
    affine = schutz_affine(datum, letters, lam, bound=bound)
    starred = star_word(datum, letters)

    betas = [root_to_weight(datum, b) for b in roots_along_word(datum, starred)]
    alphas = [root_to_weight(datum, simple_root(datum, i)) for i in letters]
    alphas_star = [root_to_weight(datum, simple_root(datum, i)) for i in starred]
    w0_lam = w0_action(datum, lam).coords
    zero = (0,) * len(letters)

    report = VerificationReport(name=f"corollary A{rank} lambda={list(lam)} word={list(letters)}")
    report.record(len(graph) == weyl_dimension(datum, lam), check="dimension", size=len(graph))

    images: Dict[Vector, List[Any]] = {}
    table = []
    for b in graph.vertices:
        t = string_extract(b, letters).t
        t_prime = affine.apply(t)
        wt = weight(b)
        evidence = {"tableau": b.to_json(), "t": list(t), "t_prime": list(t_prime)}
        report.record(all(x >= 0 for x in t_prime), check="nonnegative", **evidence)
        report.record(wt == _combine(lam, t, alphas, sign=-1), check="string-weight", **evidence)
        lhs = _combine(lam, t_prime, betas, sign=-1)
        rhs = _combine(w0_lam, t, alphas_star)
        report.record(lhs == rhs, check="weight-identity", lhs=list(lhs), rhs=list(rhs), **evidence)

        ev = evacuation(b)
        report.record(
            ev == evacuation_by_insertion(b) and evacuation(ev) == b
            and weight(ev) == w0_action(datum, wt).coords,
            check="evacuation", image=ev.to_json(), **evidence,
        )
        images.setdefault(t_prime, []).append(b.to_json())
        table.append({**evidence, "weight": list(wt)})

    collisions = [v for v in images.values() if len(v) > 1]
    report.record(not collisions, check="injective", collisions=collisions)

    low = lowest_element(graph)
    report.record(affine.apply(zero) == affine.constant, check="highest-pin")
    report.record(
        affine.apply(string_extract(low, letters).t) == zero,
        check="lowest-pin", lowest=low.to_json(),
    )
    report.record(evacuation(graph.highest) == low, check="highest-to-lowest")

    for source, j, target in graph.edges:
        report.record(
            apply_f(evacuation(target), star(datum, j)) == evacuation(source),
            check="equivariance", source=source.to_json(), i=j, target=target.to_json(),
        )

    report.details = {
        "word": list(letters),
        "star_word": list(starred),
        "lambda": list(lam),
        "anchor": list(affine.constant),
        "table": table,
    }
    if not report.passed:
        logger.warning(f"{report.name}: {len(report.failures)} failures")
    return report


def verify_string_transitions(rank: int, lam: Sequence[int], word: WordLike, other: WordLike,
                              bound: int = DEFAULT_BOUND) -> VerificationReport:
    """c_{i'}(b) == R_{-i}^{-i'}(c_i(b)) for every b in B(lambda)"""
    datum = build_cartan("A", rank)
    i, i2 = require_longest(datum, word), require_longest(datum, other)
    graph = generate_crystal(rank, lam, bound=bound)
    report = VerificationReport(name=f"string transitions A{rank} lambda={list(lam)} {list(i)}->{list(i2)}")
    for b in graph.vertices:
        source = string_extract(b, i).t
        expected = string_extract(b, i2).t
        got = transition_string(datum, i, i2, source)
        report.record(got == expected, tableau=b.to_json(), t=list(source), expected=list(expected), got=list(got))
    if not report.passed:
        logger.warning(f"{report.name}: {len(report.failures)} failures")
    return report


def sl2_table(m: int, bound: int = DEFAULT_BOUND) -> List[Tuple[int, int]]:
    """(t, t') over B(m varpi_1) in A1, sorted by t"""
    datum = build_cartan("A", 1)
    affine = schutz_affine(datum, (1,), (m,), bound=bound)
    graph = generate_crystal(1, (m,), bound=bound)
    rows = []
    for b in graph.vertices:
        t = string_extract(b, (1,)).t
        rows.append((t[0], affine.apply(t)[0]))
    return sorted(rows)
