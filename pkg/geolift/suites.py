"""
Desk-scale acceptance suites behind ``geolift verify``.

Each suite returns one merged VerificationReport; all randomness comes from
``random.Random(config.seed)`` so a fixed seed reproduces the same JSON.
"""

import logging
import random
from fractions import Fraction
from itertools import product
from typing import Callable, Dict, Iterable, List, Sequence, Tuple

from .cartan import build_cartan, longest_word, reduced_words, weyl_dimension
from .lifting import solve_rank2_move, verify_rank2_move, verify_zeta_formula
from .models import CartanDatum, RunConfig, VerificationReport
from .oracle import sl2_table, verify_corollary, verify_string_transitions
from .parametrize import (
    anchor_constants,
    corollary_linear_part,
    phi_pl_map,
    transition_lusztig,
    transition_string,
    verify_phi_conditions,
)
from .tropical import (
    as_affine_map,
    normal_form_tropical,
    parse_sf,
    pl_compose,
    pl_eval,
    sf_compose,
    sf_normalize,
    tropicalize,
    tropicalize_map,
)

logger = logging.getLogger(__name__)

Vector = Tuple[int, ...]

# A2 / varpi_1 / (1,2,1): string data -> Lusztig data w.r.t. (2,1,2)
A2_FIXTURE = {(0, 0, 0): (1, 0, 1), (1, 0, 0): (0, 0, 1), (0, 1, 1): (0, 0, 0)}


def _rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(1, 9), rng.randint(1, 9))


def _merge(name: str, parts: Iterable[VerificationReport]) -> VerificationReport:
    report = VerificationReport(name=name)
    runs = []
    for part in parts:
        report.merge(part)
        runs.append({"name": part.name, "checks": part.checks, "passed": part.passed})
    report.details["runs"] = runs
    return report


def _words(datum: CartanDatum) -> List[Vector]:
    return reduced_words(datum, longest_word(datum))


def suite_zeta(config: RunConfig) -> VerificationReport:
    """Closed form of zeta: every word of w0 in A1-A3, seeded (word, point) pairs in A4"""
    rng = random.Random(config.seed)
    parts = []
    for rank in (1, 2, 3):
        datum = build_cartan("A", rank)
        for word in _words(datum):
            point = [_rational(rng) for _ in word]
            parts.append(verify_zeta_formula(datum, word, point))
    datum = build_cartan("A", 4)
    words = _words(datum)
    for _ in range(config.samples):
        word = rng.choice(words)
        parts.append(verify_zeta_formula(datum, word, [_rational(rng) for _ in word]))
    return _merge("zeta", parts)


def suite_rank2(config: RunConfig) -> VerificationReport:
    """Solved rank-2 moves satisfy their matrix identities at seeded rational points"""
    rng = random.Random(config.seed)
    parts = []
    for kind, arity in (("commuting", 2), ("A2", 3)):
        for side in ("lusztig", "string"):
            points = [[_rational(rng) for _ in range(arity)] for _ in range(config.samples)]
            parts.append(verify_rank2_move(kind, side, points))
    return _merge("rank2", parts)


def _box(n: int, size: int) -> Iterable[Vector]:
    return product(range(size + 1), repeat=n)


def _transition_laws(datum: CartanDatum, words: Sequence[Vector], triples: Sequence[Tuple[Vector, Vector, Vector]],
                     points: Sequence[Vector], name: str) -> VerificationReport:
    report = VerificationReport(name=name)
    for side, move in (("lusztig", transition_lusztig), ("string", transition_string)):
        for w in words:
            for t in points:
                report.record(move(datum, w, w, t) == t, law="identity", side=side, word=list(w), t=list(t))
        for i, i2, i3 in triples:
            for t in points:
                direct = move(datum, i, i3, t)
                via = move(datum, i2, i3, move(datum, i, i2, t))
                back = move(datum, i3, i, direct)
                report.record(
                    direct == via and back == t,
                    law="cocycle", side=side, words=[list(i), list(i2), list(i3)], t=list(t),
                )
    return report


def suite_tropical(config: RunConfig) -> VerificationReport:
    """Identity, cocycle and inverse laws of the transition maps"""
    rng = random.Random(config.seed)
    parts = []

    a2 = build_cartan("A", 2)
    words = _words(a2)
    points = list(_box(3, config.box)) + [tuple(rng.randint(0, config.box) for _ in range(3)) for _ in range(500)]
    parts.append(_transition_laws(a2, words, list(product(words, repeat=3)), points, "transitions A2"))

    a3 = build_cartan("A", 3)
    words = _words(a3)
    triples = [tuple(rng.sample(words, 3)) for _ in range(5)]
    sampled = sorted({w for triple in triples for w in triple})
    # sampled points only: the full [0, box]^6 grid is out of reach at desk scale
    points = [tuple(rng.randint(0, config.box) for _ in range(6)) for _ in range(500)]
    parts.append(_transition_laws(a3, sampled, triples, points, "transitions A3"))

    # Trop(f) o Trop(g) == Trop(f o g) for the A2 pieces
    hom = VerificationReport(name="tropicalization of composites")
    grid = [tuple(rng.randint(-config.box, config.box) for _ in range(3)) for _ in range(1000)]
    for side in ("lusztig", "string"):
        exprs = solve_rank2_move("A2", side).to_sf()
        composite = tropicalize_map([sf_compose(e, exprs) for e in exprs], 3)
        composed = pl_compose(tropicalize_map(exprs, 3), tropicalize_map(exprs, 3))
        for t in grid:
            hom.record(pl_eval(composite, t) == pl_eval(composed, t) == t, side=side, t=list(t))
    parts.append(hom)
    return _merge("tropical", parts)


def suite_normal_form(config: RunConfig) -> VerificationReport:
    """Original and normalized expressions tropicalize to the same function"""
    report = VerificationReport(name="normal-form")
    exprs = [parse_sf(text) for text in ("(t1+t2)/t3", "t1/t2 + t3", "(t1/t2)/t3", "t2/(t1*t3^2)")]
    for side in ("lusztig", "string"):
        pieces = solve_rank2_move("A2", side).to_sf()
        exprs += pieces
        exprs += [sf_compose(e, pieces) for e in pieces]
    step = max(1, config.box // 5)
    grid = list(product(range(-config.box, config.box + 1, step), repeat=3))
    for expr in exprs:
        original = tropicalize(expr, 3)
        normalized = normal_form_tropical(*sf_normalize(expr, 3))
        for t in grid:
            report.record(original(t) == normalized(t), expr=str(expr), t=list(t))
    return report


def suite_formula(config: RunConfig) -> VerificationReport:
    """For i = i', Phi is affine with the corollary's linear part and the anchor as constant"""
    report = VerificationReport(name="formula")
    cases = [("A", 1, (2,)), ("A", 2, (1, 0)), ("A", 3, (0, 1, 0)), ("B", 2, (0, 0)), ("G", 2, (0, 0))]
    for series, rank, lam in cases:
        datum = build_cartan(series, rank)
        for word in _words(datum):
            pl = phi_pl_map(datum, word, word, lam, bound=config.crystal_bound)
            affine = as_affine_map(pl)
            ok = (
                affine is not None
                and affine.linear == corollary_linear_part(datum, word)
                and affine.constant == anchor_constants(datum, lam, word, bound=config.crystal_bound)
            )
            report.record(ok, type=datum.name, word=list(word), weight=list(lam))
    return report


def suite_conditions(config: RunConfig) -> VerificationReport:
    """Characterizing conditions (1)-(3) in A2 and A3"""
    rng = random.Random(config.seed)
    parts = []
    a2 = build_cartan("A", 2)
    for lam in ((1, 0), (0, 1), (1, 1)):
        parts.append(verify_phi_conditions(a2, lam, _words(a2), samples=config.samples,
                                           seed=config.seed, bound=config.crystal_bound))
    a3 = build_cartan("A", 3)
    words = rng.sample(_words(a3), 5)
    parts.append(verify_phi_conditions(a3, (0, 1, 0), words, samples=config.samples,
                                       seed=config.seed, bound=config.crystal_bound))
    return _merge("conditions", parts)


def _oracle_cases(config: RunConfig) -> List[Tuple[int, Vector, List[Vector]]]:
    rng = random.Random(config.seed)
    cases: List[Tuple[int, Vector, List[Vector]]] = [(1, (m,), [(1,)]) for m in range(11)]
    a2 = build_cartan("A", 2)
    a2_words = _words(a2)
    size = 0
    while weyl_dimension(a2, (size, 0)) <= config.max_dim:
        size += 1
    for a, b in product(range(size), repeat=2):
        if weyl_dimension(a2, (a, b)) <= config.max_dim:
            cases.append((2, (a, b), a2_words))
    a3 = build_cartan("A", 3)
    a3_words = _words(a3)
    for lam in ((1, 0, 0), (0, 1, 0), (1, 0, 1)):
        cases.append((3, lam, [longest_word(a3).letters] + rng.sample(a3_words, 2)))
    return cases


def suite_oracle(config: RunConfig) -> VerificationReport:
    """Affine formula against the tableau crystal, plus the A2 fixture"""
    parts = []
    for rank, lam, words in _oracle_cases(config):
        for word in words:
            parts.append(verify_corollary(rank, lam, word, bound=config.crystal_bound))
    fixture = VerificationReport(name="A2 varpi_1 fixture")
    table = verify_corollary(2, (1, 0), (1, 2, 1), bound=config.crystal_bound).details["table"]
    got = {tuple(row["t"]): tuple(row["t_prime"]) for row in table}
    fixture.record(got == A2_FIXTURE, got={str(k): list(v) for k, v in got.items()})
    parts.append(fixture)
    return _merge("oracle", parts)


def suite_strings(config: RunConfig) -> VerificationReport:
    """transition_string agrees with re-extraction on every crystal of the oracle suite"""
    parts = []
    for rank, lam, words in _oracle_cases(config):
        for w, w2 in product(words, repeat=2):
            if w != w2:
                parts.append(verify_string_transitions(rank, lam, w, w2, bound=config.crystal_bound))
    return _merge("strings", parts)


def suite_sl2(config: RunConfig) -> VerificationReport:
    """t' = m - t over B(m varpi_1)"""
    report = VerificationReport(name="sl2")
    for m in range(11):
        table = sl2_table(m, bound=config.crystal_bound)
        report.record(table == [(t, m - t) for t in range(m + 1)], m=m, table=[list(r) for r in table])
    return report


SUITES: Dict[str, Callable[[RunConfig], VerificationReport]] = {
    "zeta": suite_zeta,
    "rank2": suite_rank2,
    "tropical": suite_tropical,
    "normal-form": suite_normal_form,
    "formula": suite_formula,
    "conditions": suite_conditions,
    "oracle": suite_oracle,
    "strings": suite_strings,
    "sl2": suite_sl2,
}


def run_suites(names: Sequence[str], config: RunConfig) -> List[VerificationReport]:
    if "all" in names:
        names = list(SUITES)
    reports = []
    for name in names:
        if name not in SUITES:
            raise ValueError(f"unknown suite {name!r}; choose from {', '.join(['all', *SUITES])}")
        logger.info(f"running suite {name}")
        report = SUITES[name](config)
        logger.info(f"suite {name}: {report.checks} checks, passed={report.passed}")
        reports.append(report)
    return reports
