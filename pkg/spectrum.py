"""
Odd members of S(D(r/2s)) that Theorems 1-3 guarantee, each backed by a
constructed and verified witness.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum

from constructions import DartParams, build_partition, lemma1_refine
from errors import BadHypotheses, ParamOutOfRange
from exactnum import encode_rational
from verify import verify_equidissection

log = logging.getLogger(__name__)

EVEN_MEMBERS = "all even >= 2"

EXCLUDED = [
    {"value": 1, "reason": "a nonconvex quadrilateral is not a triangle"},
]


class Source(Enum):
    THM1 = 1
    THM2 = 2
    THM3 = 3


@dataclass(frozen=True)
class SpectrumEntry:
    value: int
    source: Source
    witness_params: dict

    def witness(self):
        """The refined equidissection proving membership"""
        return lemma1_refine(build_partition(self.source.value, **self.witness_params))

    def to_json(self):
        return {"value": self.value, "source": self.source.name, "params": dict(self.witness_params)}


def odd_divisors(n):
    return [d for d in range(1, n + 1, 2) if n % d == 0]


def _candidates(params, limit):
    r, s = params.r, params.s
    for t in range(r, limit + 1, 2):
        yield t, Source.THM1, {"r": r, "s": s, "t": t}
    if s % 2 == 0:
        yield r - s, Source.THM2, {"r": r, "s": s}
    else:
        for t in odd_divisors(r - s):
            if r - 2 * s < t < 2 * (r - s):
                yield 2 * (r - s) - t, Source.THM3, {"r": r, "s": s, "t": t}


def witness_verifies(entry):
    try:
        dissection = entry.witness()
    except BadHypotheses as e:
        log.warning("no witness for %d from %s: %s", entry.value, entry.source.name, e)
        return False
    report = verify_equidissection(dissection.polygon, dissection.faces)
    return report.is_equidissection and report.face_count == entry.value


def guaranteed_odd_members(params, limit, verify=True):
    """Sorted witness-backed odd values <= limit; duplicates keep the lowest theorem"""
    if limit < 1:
        raise ParamOutOfRange(f"limit={limit} must be at least 1")

    best = {}
    for value, source, witness_params in _candidates(params, limit):
        if value <= limit and value not in best:
            best[value] = SpectrumEntry(value, source, witness_params)

    entries = []
    for value in sorted(best):
        entry = best[value]
        if verify and not witness_verifies(entry):
            log.warning("dropping %d (%s): witness did not verify", value, entry.source.name)
            continue
        entries.append(entry)
    log.debug("D(%d/%d): %d odd members up to %d", params.r, 2 * params.s, len(entries), limit)
    return entries


def corollary_witness(r, s):
    """
    Odd divisor t of r - s above r - 2s, if any. When 2s < r < 3s and r, s
    differ mod 4, t = (r - s)/2 always qualifies.
    """
    DartParams(r, s)
    if s % 2 == 0:
        raise BadHypotheses(f"s={s} must be odd")
    for t in odd_divisors(r - s):
        if t > r - 2 * s:
            return t
    return None


def spectrum_document(params, limit, verify=True):
    entries = guaranteed_odd_members(params, limit, verify)
    return {
        "a": encode_rational(params.a),
        "odd_members": [e.to_json() for e in entries],
        "even_members": EVEN_MEMBERS,
        "excluded": EXCLUDED,
        "limit": limit,
    }
