"""Range verification of the divisibility / quadratic-form equivalence.

For every prime p the scanner computes three independent facts: whether p
divides T_{p-1}, whether p = x^2 + 11y^2, and how x^3 - x^2 - x - 1
factors mod p.  Outside the two known exceptional primes 11 and 19 the
first two must agree (and both must match the completely-split shape);
any other disagreement flags the whole report as FAILED.

Scans are deterministic regardless of worker count: the range is cut
into fixed chunks, each chunk is processed by pure functions, and the
results are merged back in ascending order.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .gfext import FrobeniusClass, Shape, splitting_type
from .modmath import ModPrime, PrimeLike, primes_in_range, require_prime
from .quadform import represent
from .tribonacci import trib_mod

logger = logging.getLogger(__name__)

#: the primes where divisibility and representability legitimately disagree
KNOWN_EXCEPTIONS = frozenset({11, 19})

#: chunk width for scans; fixed so results never depend on worker count
_CHUNK = 1 << 15


@dataclass(frozen=True, slots=True)
class VerdictRecord:
    """Per-prime row joining the three facts and their agreement flags."""

    p: int
    trib_residue: int
    divisible: bool
    representable: bool
    rep_x: int | None
    rep_y: int | None
    splitting: Shape
    frobenius: FrobeniusClass
    consistent: bool
    exceptional: bool


@dataclass
class ScanReport:
    lo: int
    hi: int
    records: list[VerdictRecord]
    class_counts: dict[FrobeniusClass, int]
    violations: list[int]
    identity_density: float
    status: str  # "OK" when violations stay inside the known exceptions

    @property
    def n_primes(self) -> int:
        return len(self.records)


@dataclass
class ObstructionReport:
    """Outcome of the per-class divisibility obstructions over a range."""

    lo: int
    hi: int
    checked: dict[FrobeniusClass, int]
    failures: list[tuple[int, str]]
    status: str


def verdict(p: PrimeLike) -> VerdictRecord:
    """Compute the full per-prime record for one prime."""
    return _verdict(require_prime(p))


def _verdict(pv: int) -> VerdictRecord:
    residue = trib_mod(pv - 1, pv)
    divisible = residue == 0
    mp = ModPrime(pv)
    rep = represent(mp)
    st = splitting_type(mp)
    consistent = divisible == rep.exists
    return VerdictRecord(
        p=pv,
        trib_residue=residue,
        divisible=divisible,
        representable=rep.exists,
        rep_x=rep.x,
        rep_y=rep.y,
        splitting=st.shape,
        frobenius=st.frobenius_class,
        consistent=consistent,
        exceptional=not consistent,
    )


def _chunk_verdicts(bounds: tuple[int, int]) -> list[VerdictRecord]:
    lo, hi = bounds
    return [_verdict(p) for p in primes_in_range(lo, hi)]


def _chunked(lo: int, hi: int) -> list[tuple[int, int]]:
    return [(c, min(c + _CHUNK, hi)) for c in range(lo, hi, _CHUNK)]


def _gather(lo: int, hi: int, workers: int) -> list[VerdictRecord]:
    chunks = _chunked(lo, hi)
    records: list[VerdictRecord] = []

    def collect(parts) -> None:
        for i, part in enumerate(parts, 1):
            records.extend(part)
            logger.debug("chunk %d/%d done (%d primes so far)", i, len(chunks), len(records))

    if workers <= 1 or len(chunks) <= 1:
        collect(map(_chunk_verdicts, chunks))
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            collect(pool.map(_chunk_verdicts, chunks))
    return records


def scan(lo: int, hi: int, workers: int = 1) -> ScanReport:
    """Verdicts for every prime in [lo, hi), merged ascending.

    The report is FAILED if any prime outside {11, 19} has divisible and
    representable disagreeing; 11 and 19 themselves are expected findings
    and are reported, not suppressed.
    """
    if lo < 2 or hi < lo:
        raise ValueError(f"need 2 <= lo <= hi, got [{lo}, {hi})")
    records = _gather(lo, hi, workers)
    counts = {cls: 0 for cls in FrobeniusClass}
    violations = []
    for rec in records:
        counts[rec.frobenius] += 1
        if rec.exceptional:
            violations.append(rec.p)
    n = len(records)
    density = counts[FrobeniusClass.IDENTITY] / n if n else 0.0
    unexpected = [p for p in violations if p not in KNOWN_EXCEPTIONS]
    status = "FAILED" if unexpected else "OK"
    logger.info(
        "scan [%d, %d): %d primes, violations %s, status %s", lo, hi, n, violations, status
    )
    return ScanReport(lo, hi, records, counts, violations, density, status)


def obstruction_check(lo: int, hi: int, workers: int = 1) -> ObstructionReport:
    """Check the per-class divisibility obstructions over [lo, hi).

    Identity-class primes must divide T_{p-1}; a transposition-class
    prime may do so only if it divides 38; a 3-cycle-class prime p > 2
    never does.  Ramified primes carry no class and are only counted.
    """
    if lo < 2 or hi < lo:
        raise ValueError(f"need 2 <= lo <= hi, got [{lo}, {hi})")
    checked = {cls: 0 for cls in FrobeniusClass}
    failures: list[tuple[int, str]] = []
    for rec in _gather(lo, hi, workers):
        cls = rec.frobenius
        checked[cls] += 1
        if cls is FrobeniusClass.IDENTITY:
            if not rec.divisible:
                failures.append((rec.p, "split prime does not divide T_{p-1}"))
        elif cls is FrobeniusClass.TRANSPOSITION:
            if rec.divisible and 38 % rec.p != 0:
                failures.append((rec.p, "transposition prime divides T_{p-1} but not 38"))
        elif cls is FrobeniusClass.THREE_CYCLE:
            if rec.p > 2 and rec.divisible:
                failures.append((rec.p, "3-cycle prime divides T_{p-1}"))
    status = "FAILED" if failures else "OK"
    return ObstructionReport(lo, hi, checked, failures, status)
