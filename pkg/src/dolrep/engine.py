"""End-to-end analysis: simplify, harvest periodic factors, map back, report.

The pipeline reduces the input, simplifies it to an injective system,
collects the period words of both the bounded-letter and unbounded-letter
infinite periodic factors of the final system, maps them back through the
chain, and canonicalizes them into conjugacy classes over the original
alphabet.  A system whose reduced alphabet has no unbounded letter has a
finite language and is reported as neither pushy nor repetitive.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum

from .morphism import (
    D0LSystem,
    LetterClassification,
    classify_letters,
    translate_word,
)
from .pushy import bounded_periodic_classes, is_pushy
from .simplify import SimplificationChain, injective_simplification
from .unbounded import unbounded_periodic_classes
from .words import Word, canonical_rotation, conjugates, primitive_root


class EngineInvariantError(RuntimeError):
    """An internal structural invariant failed; indicates an engine bug."""


class FactorSource(Enum):
    BOUNDED = "bounded"
    UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class PeriodicFactorClass:
    """Conjugacy class (v-rotations) of one infinite periodic factor v^omega."""

    representative: Word  # canonical rotation of the primitive root
    conjugates: frozenset[Word]
    source: FactorSource


@dataclass(frozen=True)
class AnalysisReport:
    original: D0LSystem
    chain: SimplificationChain
    classification: LetterClassification  # of the original system's morphism
    pushy: bool
    repetitive: bool
    strongly_repetitive: bool
    classes: tuple[PeriodicFactorClass, ...]


def _final_period_words(final: D0LSystem) -> list[Word]:
    """Primitive period words of the final (injective, reduced) system."""
    words = [emission.period for emission in bounded_periodic_classes(final)]
    words.extend(unbounded_periodic_classes(final))
    return words


def analyze(system: D0LSystem) -> AnalysisReport:
    """Full analysis of a D0L-system; deterministic for equal inputs."""
    raw_classification = classify_letters(system.morphism)
    reduced = system.reduced()
    if not classify_letters(reduced.morphism).unbounded:
        # Finite language: nothing repeats unboundedly and A0-factors are finite.
        chain = SimplificationChain(steps=(), systems=(reduced,))
        return AnalysisReport(
            original=system,
            chain=chain,
            classification=raw_classification,
            pushy=False,
            repetitive=False,
            strongly_repetitive=False,
            classes=(),
        )

    chain = injective_simplification(reduced)
    final = chain.final_system.reduced()
    if final is not chain.final_system:
        chain = SimplificationChain(chain.steps, chain.systems[:-1] + (final,))

    classes: dict[Word, PeriodicFactorClass] = {}
    for word in _final_period_words(final):
        back = translate_word(chain.map_back(word), reduced.alphabet, system.alphabet)
        representative = canonical_rotation(primitive_root(back))
        if representative in classes:
            continue
        bounded = all(a in raw_classification.bounded for a in representative)
        classes[representative] = PeriodicFactorClass(
            representative=representative,
            conjugates=frozenset(conjugates(representative)),
            source=FactorSource.BOUNDED if bounded else FactorSource.UNBOUNDED,
        )

    ordered = tuple(classes[r] for r in sorted(classes))
    repetitive = bool(ordered)
    return AnalysisReport(
        original=system,
        chain=chain,
        classification=raw_classification,
        pushy=is_pushy(final),
        repetitive=repetitive,
        strongly_repetitive=repetitive,
        classes=ordered,
    )


def is_repetitive(system: D0LSystem) -> bool:
    """True iff some word has all its powers among the language's factors."""
    return bool(analyze(system).classes)


@dataclass(frozen=True)
class PeriodicFactorGraph:
    """Classes of the final injective system with the edge [v] -> [phi(v)]."""

    vertices: tuple[Word, ...]
    edges: dict[Word, Word]


def periodic_factor_graph(report: AnalysisReport) -> PeriodicFactorGraph:
    """Graph of infinite periodic factors of the final system of the chain.

    Vertices are canonical class representatives over the final alphabet
    (before back-mapping).  The morphism must permute them: out- and
    indegree are asserted to be exactly one.
    """
    final = report.chain.final_system
    if not classify_letters(final.morphism).unbounded:
        return PeriodicFactorGraph((), {})
    vertex_set = {canonical_rotation(primitive_root(w)) for w in _final_period_words(final)}
    vertices = tuple(sorted(vertex_set))
    edges: dict[Word, Word] = {}
    for v in vertices:
        image = canonical_rotation(primitive_root(final.morphism(v)))
        if image not in vertex_set:
            raise EngineInvariantError(
                f"class image {image} is not among the computed classes"
            )
        edges[v] = image
    indegree = Counter(edges.values())
    if any(indegree[v] != 1 for v in vertices):
        raise EngineInvariantError("periodic factor graph is not 1-regular")
    return PeriodicFactorGraph(vertices, edges)
