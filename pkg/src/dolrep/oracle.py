"""Brute-force reference oracle used by the tests and by `analyze --verify`.

Iterates of the axiom are materialized (as Python strings, one char per
letter id, so scanning runs at C speed) up to a depth and length budget.
Factors, maximal powers and "observed" repetition classes are measured
directly on those iterates.  The oracle only gathers desk-scale evidence:
a class is observed when some primitive word reaches the power threshold
and its maximal power still grows between half depth and full depth, which
separates unbounded repetition from static high powers.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .morphism import D0LSystem
from .words import Word, canonical_rotation, is_primitive, primitive_root


class OracleResourceError(RuntimeError):
    """An iterate exceeded the configured length budget."""


@dataclass(frozen=True)
class OracleParams:
    depth: int = 12  # max iterate index N
    max_len: int = 8  # max factor length tracked L
    power_threshold: int = 4  # power counted as repeating K
    max_word_len: int = 1_000_000  # guard on materialized iterate length

    def __post_init__(self) -> None:
        if self.depth < 1 or self.max_len < 1 or self.power_threshold < 2:
            raise ValueError("need depth >= 1, max_len >= 1, power_threshold >= 2")
        if self.max_word_len < 1:
            raise ValueError("max_word_len must be positive")


def _iterate_strings(system: D0LSystem, depth: int, cap: int) -> list[str]:
    """phi^0(w) .. phi^depth(w) encoded with chr(letter id)."""
    table = {a: "".join(map(chr, system.morphism.image(a))) for a in range(len(system.alphabet))}
    text = "".join(map(chr, system.axiom))
    out = [text]
    for _ in range(depth):
        text = text.translate(table)
        if len(text) > cap:
            raise OracleResourceError(
                f"iterate length {len(text)} exceeds the {cap}-letter budget"
            )
        out.append(text)
    return out


def _word_str(w: Word) -> str:
    return "".join(map(chr, w))


def _str_word(s: str) -> Word:
    return tuple(map(ord, s))


def factors_up_to(system: D0LSystem, params: OracleParams = OracleParams()) -> set[Word]:
    """All factors of length 1..max_len of phi^n(axiom) for n <= depth."""
    found: set[str] = set()
    for text in _iterate_strings(system, params.depth, params.max_word_len):
        for l in range(1, min(params.max_len, len(text)) + 1):
            for i in range(len(text) - l + 1):
                found.add(text[i : i + l])
    return {_str_word(f) for f in found}


def _max_power_in(text: str, pattern: str) -> int:
    """Largest m with pattern^m a substring of text (0 when absent)."""
    if pattern not in text:
        return 0
    lo, hi = 1, len(text) // len(pattern)
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if pattern * mid in text:
            lo = mid
        else:
            hi = mid - 1
    return lo


def max_power(system: D0LSystem, v: Word, params: OracleParams = OracleParams()) -> int:
    """Largest m such that v^m is a factor of some phi^n(axiom), n <= depth."""
    v = tuple(v)
    if not is_primitive(v):
        raise ValueError("max_power expects a primitive word")
    if len(v) > params.max_len:
        raise ValueError("word longer than the tracked factor length")
    pattern = _word_str(v)
    best = 0
    for text in _iterate_strings(system, params.depth, params.max_word_len):
        best = max(best, _max_power_in(text, pattern))
    return best


def _accumulate_run_powers(text: str, max_len: int, powers: dict[str, int]) -> None:
    """Record, for every factor v with |v| <= max_len, the largest m >= 2 with
    v^m a substring of text.  Works by locating maximal l-periodic stretches
    (runs of text[i] == text[i+l]) and reading off the repeating units."""
    n = len(text)
    if n < 2:
        return
    arr = np.frombuffer(text.encode("utf-32-le"), dtype=np.uint32)
    for l in range(1, min(max_len, n - 1) + 1):
        eq = arr[:-l] == arr[l:]
        if not eq.any():
            continue
        flags = np.concatenate(([False], eq, [False]))
        boundaries = np.flatnonzero(np.diff(flags.astype(np.int8)))
        for r, e in zip(boundaries[0::2], boundaries[1::2]):
            run = int(e - r)
            if run < l:
                continue  # stretch shorter than 2 full periods
            for d in range(l):
                m = (run + l - d) // l
                if m < 2:
                    break
                unit = text[r + d : r + d + l]
                if powers.get(unit, 0) < m:
                    powers[unit] = m


def observed_classes(system: D0LSystem, params: OracleParams = OracleParams()) -> set[Word]:
    """Canonical primitive words whose powers keep growing at desk scale.

    A word qualifies when its maximal power over iterates up to `depth`
    reaches `power_threshold` and strictly exceeds the maximal power seen up
    to depth ceil(depth/2); the growth condition filters bounded high powers.
    """
    texts = _iterate_strings(system, params.depth, params.max_word_len)
    half = -(-params.depth // 2)
    powers: dict[str, int] = {}
    half_powers: dict[str, int] = {}
    for n, text in enumerate(texts):
        _accumulate_run_powers(text, params.max_len, powers)
        if n == half:
            half_powers = dict(powers)

    out: set[Word] = set()
    for unit, power in powers.items():
        if power < params.power_threshold:
            continue
        word = _str_word(unit)
        if not is_primitive(word):
            continue
        earlier = half_powers.get(unit)
        if earlier is None:
            # Power below 2 at half depth: 1 if the word occurred at all.
            earlier = 1 if any(unit in t for t in texts[: half + 1]) else 0
        if power > earlier:
            out.add(canonical_rotation(primitive_root(word)))
    return out
