"""Infinite periodic factors containing an unbounded letter.

Such factors are exactly the purely periodic periodic points of the
morphism: unbounded letters a with first(phi^l(a)) = a for some l bounded by
the alphabet size, filtered through the three-step pure-periodicity check
(find a repeated unbounded letter in an iterate, require the candidate letter
itself to repeat, and test that the prefix up to its second occurrence is a
proper-power root of its own image).
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass

from .morphism import D0LSystem, Morphism, classify_letters
from .words import Word, exact_power_of, primitive_root


@dataclass(frozen=True)
class FirstLetterCycleCandidate:
    """Unbounded letter on a cycle of the first-letter graph, with its length."""

    letter: int
    exponent: int  # least l >= 1 with first(phi^l(letter)) = letter


def first_letter_candidates(system: D0LSystem) -> list[FirstLetterCycleCandidate]:
    """All unbounded letters lying on a cycle of the graph a -> first(phi(a)).

    Every letter of each cycle is kept (the engine deduplicates equivalent
    results); the cycle length never exceeds the alphabet size.
    """
    phi = system.morphism
    if phi.is_erasing():
        raise ValueError("first-letter graph requires a non-erasing morphism")
    cls = classify_letters(phi)
    out: list[FirstLetterCycleCandidate] = []
    for a in sorted(cls.unbounded):
        b = a
        for l in range(1, len(phi.source) + 1):
            b = phi.first_letter(b)
            if b == a:
                out.append(FirstLetterCycleCandidate(a, l))
                break
    return out


def _advance_counts(phi: Morphism, counts: list[int], steps: int) -> list[int]:
    """Letter-occurrence vector of phi^steps applied to a word with the given counts."""
    for _ in range(steps):
        nxt = [0] * len(counts)
        for a, c in enumerate(counts):
            if c:
                for b in phi.image(a):
                    nxt[b] += c
        counts = nxt
    return counts


def _expand(phi: Morphism, a: int, depth: int) -> Iterator[int]:
    """Letters of phi^depth(a), left to right, produced lazily."""
    if depth == 0:
        yield a
        return
    for b in phi.image(a):
        yield from _expand(phi, b, depth - 1)


def _prefix_before_second(phi: Morphism, letter: int, depth: int) -> Word:
    """Prefix of phi^depth(letter) in which `letter` occurs only as the first letter."""
    prefix: list[int] = []
    occurrences = 0
    for c in _expand(phi, letter, depth):
        if c == letter:
            occurrences += 1
            if occurrences == 2:
                return tuple(prefix)
        prefix.append(c)
    raise AssertionError("second occurrence promised by the count vector is missing")


def lando_periodic_check(phi: Morphism, exponent: int, letter: int) -> Word | None:
    """Return v with (phi^exponent)^omega(letter) = v^omega, or None.

    Writing psi = phi^exponent: find the least s <= #A such that psi^s(letter)
    repeats some unbounded letter; require the candidate letter itself to
    repeat there; let v be the prefix up to (excluding) its second occurrence
    and accept iff psi(v) = v^m with m >= 2.
    """
    if not phi.is_endomorphism():
        raise ValueError("pure-periodicity check applies to endomorphisms")
    if phi.is_erasing():
        raise ValueError("pure-periodicity check requires a non-erasing morphism")
    if exponent < 1:
        raise ValueError("exponent must be positive")
    b = letter
    for _ in range(exponent):
        b = phi.first_letter(b)
    if b != letter:
        raise ValueError("first(phi^exponent(letter)) must equal the letter itself")

    cls = classify_letters(phi)
    if letter not in cls.unbounded:
        raise ValueError("the candidate letter must be unbounded")
    n = len(phi.source)
    counts = [0] * n
    counts[letter] = 1
    found_s = None
    for s in range(1, n + 1):
        counts = _advance_counts(phi, counts, exponent)
        if any(counts[c] >= 2 for c in cls.unbounded):
            found_s = s
            break
    if found_s is None:
        return None
    if counts[letter] < 2:
        return None

    v = _prefix_before_second(phi, letter, exponent * found_s)
    m = exact_power_of(phi.iterate(v, exponent), v)
    if m is None:
        return None
    if m < 2:
        # v starts with an unbounded letter, so psi(v) = v is impossible.
        raise AssertionError("psi(v) = v contradicts unboundedness of the candidate letter")
    return v


def unbounded_periodic_classes(system: D0LSystem) -> list[Word]:
    """Primitive roots of all periodic periodic-point words of the system.

    The system is expected to be the reduced injective simplification, which
    makes every accepted v^m an actual factor of the language; injectivity is
    not re-verified here.
    """
    phi = system.morphism
    out: list[Word] = []
    for cand in first_letter_candidates(system):
        v = lando_periodic_check(phi, cand.exponent, cand.letter)
        if v is not None:
            out.append(primitive_root(v))
    return list(dict.fromkeys(out))
