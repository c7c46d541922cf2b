"""Simplification of D0L-systems down to an injective one.

A single simplification of an endomorphism f on A is a pair of morphisms
h: A* -> B*, k: B* -> A* with #B < #A and k o h = f; the simplified
endomorphism is g = h o k on B.  Three constructions cover every
non-injective case, applied in priority order until the morphism is
injective: delete an erasing letter, merge letters with identical images,
and shrink the image set to a smaller code (defect-style reduction).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .morphism import (
    Alphabet,
    D0LSystem,
    Morphism,
    code_witness,
    compose,
    injectivity_witness,
    translate_word,
)
from .words import Word

STEP_KINDS = ("erasing-elimination", "duplicate-merge", "code-reduction")


class SimplificationError(RuntimeError):
    """A simplification step could not be carried out."""


class CodeReductionError(SimplificationError):
    """No smaller code basis generating the image set was found."""


@dataclass(frozen=True)
class SimplificationStep:
    """One simplification: h maps the old alphabet onto the new, k maps back."""

    kind: str
    h: Morphism
    k: Morphism

    def simplified(self) -> Morphism:
        """The reduced endomorphism g = h o k on the smaller alphabet."""
        return compose(self.h, self.k)


def _checked_step(kind: str, f: Morphism, h: Morphism, k: Morphism) -> SimplificationStep:
    # Hard postcondition of every construction below, never skipped.
    if compose(k, h) != f:
        raise SimplificationError(f"{kind}: k o h does not reproduce the input morphism")
    if len(h.target) >= len(h.source):
        raise SimplificationError(f"{kind}: alphabet did not shrink")
    return SimplificationStep(kind, h, k)


def eliminate_erasing(f: Morphism) -> SimplificationStep:
    """Delete the lowest-id letter with an empty image.

    h projects the letter away, k keeps the remaining images verbatim, so
    k o h = f holds exactly and g = h o k drops the letter from all images.
    """
    if not f.is_endomorphism():
        raise ValueError("simplification applies to endomorphisms")
    erasing = [a for a in range(len(f.source)) if not f.image(a)]
    if not erasing:
        raise ValueError("no erasing letter to eliminate")
    if len(f.source) == 1:
        raise SimplificationError(
            "cannot eliminate the only letter: the system's language is finite"
        )
    z = erasing[0]
    keep = [a for a in range(len(f.source)) if a != z]
    sub = Alphabet(tuple(f.source.symbols[a] for a in keep))
    renum = {a: i for i, a in enumerate(keep)}
    h = Morphism(f.source, sub, tuple(() if a == z else (renum[a],) for a in range(len(f.source))))
    k = Morphism(sub, f.source, tuple(f.image(a) for a in keep))
    return _checked_step("erasing-elimination", f, h, k)


def merge_duplicate_images(f: Morphism) -> SimplificationStep:
    """Quotient the alphabet by image equality (non-erasing f required).

    Each class keeps its lowest-id letter as representative; h sends a letter
    to its representative, k sends a representative to the shared image.
    """
    if not f.is_endomorphism():
        raise ValueError("simplification applies to endomorphisms")
    if f.is_erasing():
        raise ValueError("merge requires a non-erasing morphism")
    rep_of_image: dict[Word, int] = {}
    for a in range(len(f.source)):
        rep_of_image.setdefault(f.image(a), a)
    if len(rep_of_image) == len(f.source):
        raise ValueError("no two letters share an image")
    reps = sorted(rep_of_image.values())
    sub = Alphabet(tuple(f.source.symbols[a] for a in reps))
    renum = {a: i for i, a in enumerate(reps)}
    h = Morphism(
        f.source, sub, tuple((renum[rep_of_image[f.image(a)]],) for a in range(len(f.source)))
    )
    k = Morphism(sub, f.source, tuple(f.image(a) for a in reps))
    return _checked_step("duplicate-merge", f, h, k)


def _sorted_words(words) -> list[Word]:
    return sorted(words, key=lambda w: (len(w), w))


def _factorization(word: Word, pieces: list[Word]) -> list[int] | None:
    """Indices of one factorization of word over pieces, or None."""
    n = len(word)
    parent: list[tuple[int, int] | None] = [None] * (n + 1)
    reached = [False] * (n + 1)
    reached[0] = True
    for i in range(n + 1):
        if not reached[i]:
            continue
        for pi, p in enumerate(pieces):
            j = i + len(p)
            if j <= n and not reached[j] and word[i:j] == p:
                reached[j] = True
                parent[j] = (i, pi)
    if not reached[n]:
        return None
    out: list[int] = []
    pos = n
    while pos:
        prev, pi = parent[pos]  # type: ignore[misc]
        out.append(pi)
        pos = prev
    out.reverse()
    return out


def _reduce_to_code(images: list[Word]) -> set[Word]:
    """Find a code Y with every image in Y+ and #Y < #images.

    Iterative shrinking: drop any word decomposable over the others, else
    strip the lexicographically least proper-prefix pair (u, v) to u^-1 v.
    Total length strictly decreases, so this terminates; the result is a
    code because a prefix-free set is one.  A rare failure to shrink the
    cardinality falls back to exhaustive search over small candidate bases.
    """
    X = set(images)
    Y = set(X)
    budget = sum(len(w) for w in Y) + 1
    for _ in range(budget):
        members = _sorted_words(Y)
        if code_witness(members) is None:
            break
        dropped = False
        for y in members:
            others = _sorted_words(Y - {y})
            if _factorization(y, others) is not None:
                Y.discard(y)
                dropped = True
                break
        if dropped:
            continue
        pairs = sorted(
            (u, v) for u in Y for v in Y if len(u) < len(v) and v[: len(u)] == u
        )
        if not pairs:
            raise SimplificationError("non-code word set is prefix-free: impossible")
        u, v = pairs[0]
        Y.discard(v)
        Y.add(v[len(u) :])
    else:
        raise SimplificationError("code reduction failed to terminate")

    if len(Y) < len(X):
        return Y

    # Exhaustive fallback: small sets of factors of the images that jointly
    # factorize every image and form a code.
    max_len = max(len(x) for x in X)
    pool = _sorted_words(
        {x[i:j] for x in X for i in range(len(x)) for j in range(i + 1, min(len(x), i + max_len) + 1)}
    )
    for size in range(1, len(X)):
        for combo in combinations(pool, size):
            basis = list(combo)
            if all(_factorization(x, basis) is not None for x in X) and code_witness(basis) is None:
                return set(basis)
    raise CodeReductionError("defect reduction failed: no smaller code basis found")


def code_reduce(f: Morphism) -> SimplificationStep:
    """Shrink a non-erasing, duplicate-free, non-injective morphism via a code.

    The image set X is replaced by a code Y with X in Y+ and #Y < #X.  Fresh
    letters x0, x1, ... name Y's members (ordered by length, then letter ids);
    k maps a fresh letter to its word and h(a) encodes the Y-factorization
    of f(a), which forces k o h = f.
    """
    if not f.is_endomorphism():
        raise ValueError("simplification applies to endomorphisms")
    if f.is_erasing():
        raise ValueError("code reduction requires a non-erasing morphism")
    images = [f.image(a) for a in range(len(f.source))]
    if len(set(images)) != len(images):
        raise ValueError("code reduction requires pairwise distinct images")
    if code_witness(images) is None:
        raise ValueError("image set is already a code; nothing to reduce")

    ordered = _sorted_words(_reduce_to_code(images))
    fresh = Alphabet(tuple(f"x{i}" for i in range(len(ordered))))
    k = Morphism(fresh, f.source, tuple(ordered))
    h_images = []
    for a in range(len(f.source)):
        enc = _factorization(f.image(a), ordered)
        if enc is None:
            raise SimplificationError("image not factorizable over the reduced code")
        h_images.append(tuple(enc))
    h = Morphism(f.source, fresh, tuple(h_images))
    return _checked_step("code-reduction", f, h, k)


@dataclass(frozen=True)
class SimplificationChain:
    """Sequence of simplification steps ending in an injective system.

    systems[0] is the (reduced) input; systems[i+1] is the re-reduced system
    obtained from step i.  ``map_back`` undoes the chain on words by applying
    each step's k in reverse order.
    """

    steps: tuple[SimplificationStep, ...]
    systems: tuple[D0LSystem, ...]

    @property
    def original_system(self) -> D0LSystem:
        return self.systems[0]

    @property
    def final_system(self) -> D0LSystem:
        return self.systems[-1]

    def map_back(self, word: Word) -> Word:
        """Map a word over the final alphabet back to the original alphabet."""
        alphabet = self.final_system.alphabet
        out = tuple(word)
        for step in reversed(self.steps):
            # Re-reduction after a step may have shrunk the alphabet, so embed
            # into the step's own target alphabet first (symbols are preserved).
            out = step.k(translate_word(out, alphabet, step.k.source))
            alphabet = step.k.target
        return out


def injective_simplification(system: D0LSystem) -> SimplificationChain:
    """Simplify until the morphism is injective, re-reducing after each step.

    Steps are chosen in priority order: erasing elimination, duplicate merge,
    code reduction.  Each shrinks the alphabet, so at most #A steps occur.
    An already-injective system yields an empty chain.
    """
    if not system.is_reduced():
        raise ValueError("injective_simplification expects a reduced system")
    systems = [system]
    steps: list[SimplificationStep] = []
    current = system
    while injectivity_witness(current.morphism) is not None:
        f = current.morphism
        if f.is_erasing():
            step = eliminate_erasing(f)
        elif len(set(f.images)) != len(f.images):
            step = merge_duplicate_images(f)
        else:
            step = code_reduce(f)
        new_axiom = step.h(current.axiom)
        if not new_axiom:
            raise SimplificationError(
                "axiom erased during simplification: the system's language is finite"
            )
        current = D0LSystem(step.simplified(), new_axiom).reduced()
        steps.append(step)
        systems.append(current)
    return SimplificationChain(tuple(steps), tuple(systems))
