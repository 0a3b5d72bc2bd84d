"""Synthetic cuspidal spectra with per-place Satake data.

A simple parameter stands in for a symplectic-type cuspidal representation
of GL(m): an opaque label, an even degree m, and an independent
Haar-random class in USp(m) at every unramified place (the generic
tempered model; all Satake eigenvalues sit on the unit circle).  Cuspidal
parameters are unordered sets of distinct simple parameters whose degrees
sum to 2N; each one arises from exactly one elliptic datum, the sorted
degree multiset.

Generation is keyed entirely by (seed, config): each parameter draws its
angles from its own child of the master seed, so stores regenerate
bit-exactly and serialize to byte-identical JSON.
"""

from __future__ import annotations

import base64
import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

import numpy as np

from endoscopy_kit.endoscopy import EndoDatum, embed_class
from endoscopy_kit.haar import sample_angles
from endoscopy_kit.primes import Place, build_places
from endoscopy_kit.symplectic import SemisimpleClass

SCHEMA = "endoscopy-kit/1"


@dataclass(frozen=True, eq=False)
class SimpleParameter:
    """A formal simple generic parameter of even degree.

    angles[i] is the class of the parameter at the i-th unramified place
    (row-aligned with SpectrumStore.unramified_places).  Identity, equality
    and hashing go through the label: two simple parameters are the same
    object of the pool exactly when their labels agree.
    """

    label: str
    degree: int
    tau: float
    angles: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        if self.degree < 2 or self.degree % 2 != 0:
            raise ValueError(f"degree must be a positive even integer, got {self.degree}")
        if self.angles.ndim != 2 or self.angles.shape[1] != self.degree // 2:
            raise ValueError("angles must be (places, degree/2)")

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SimpleParameter) and other.label == self.label

    def __hash__(self) -> int:
        return hash(self.label)

    def satake(self, row: int) -> SemisimpleClass:
        """Satake class at the row-th unramified place."""
        return SemisimpleClass(self.degree // 2, tuple(self.angles[row]))


def _sort_components(components: Iterable[SimpleParameter]) -> tuple[SimpleParameter, ...]:
    return tuple(sorted(components, key=lambda p: (-p.degree, p.label)))


@dataclass(frozen=True)
class CuspidalParameter:
    """An unordered sum of distinct simple parameters with total degree 2N."""

    components: tuple[SimpleParameter, ...]

    def __post_init__(self) -> None:
        comps = _sort_components(self.components)
        labels = [p.label for p in comps]
        if len(set(labels)) != len(labels):
            raise ValueError("components must be mutually inequivalent")
        object.__setattr__(self, "components", comps)

    @property
    def k(self) -> int:
        return len(self.components)

    @property
    def N(self) -> int:
        return sum(p.degree for p in self.components) // 2

    @property
    def weight(self) -> Fraction:
        """1/|S_phi| = 2^{1-k}."""
        return Fraction(1, 2 ** (self.k - 1))

    @property
    def key(self) -> tuple[str, ...]:
        return tuple(p.label for p in self.components)

    def satake(self, row: int) -> SemisimpleClass:
        datum = EndoDatum(tuple(p.degree for p in self.components))
        return embed_class(datum, [p.satake(row) for p in self.components])


@dataclass(frozen=True)
class StarPrimitiveParameter:
    """Distinct simple parameters matched to the parts of a datum, unordered."""

    datum: EndoDatum
    components: tuple[SimpleParameter, ...]

    def __post_init__(self) -> None:
        comps = _sort_components(self.components)
        if tuple(p.degree for p in comps) != self.datum.parts:
            raise ValueError("component degrees do not match the datum parts")
        labels = [p.label for p in comps]
        if len(set(labels)) != len(labels):
            raise ValueError("components must be mutually inequivalent")
        object.__setattr__(self, "components", comps)

    @property
    def key(self) -> tuple[str, ...]:
        return tuple(p.label for p in self.components)

    def block_classes(self, row: int) -> list[SemisimpleClass]:
        return [p.satake(row) for p in self.components]


@dataclass(frozen=True)
class SpectrumStore:
    """Immutable pool of simple parameters over a fixed list of places."""

    seed: int
    primes_up_to: int
    ramified: int
    pool_sizes: tuple[tuple[int, int], ...]  # (degree, count), degree ascending
    places: tuple[Place, ...]
    params: tuple[SimpleParameter, ...]

    @property
    def unramified_places(self) -> tuple[Place, ...]:
        return tuple(w for w in self.places if not w.ramified)

    def unramified_norms(self) -> np.ndarray:
        return np.array([w.norm for w in self.unramified_places], dtype=np.int64)

    def params_of_degree(self, degree: int) -> tuple[SimpleParameter, ...]:
        return tuple(p for p in self.params if p.degree == degree)

    def row_of_place(self, index: int) -> int:
        """Row (into per-parameter angle arrays) of the place with this index."""
        for row, w in enumerate(self.unramified_places):
            if w.index == index:
                return row
        raise KeyError(f"place index {index} is not an unramified place of the store")


def generate_spectrum(
    pool_sizes: Mapping[int, int],
    primes_up_to: int,
    seed: int,
    ramified: int = 0,
) -> SpectrumStore:
    """Deterministic synthetic spectrum.

    pool_sizes maps even degree -> number of simple parameters of that
    degree.  Every parameter receives independent Haar USp(degree) classes
    at each unramified place, drawn from a child seed indexed by the
    parameter's position in the (degree-sorted) pool.
    """
    if primes_up_to < 100:
        raise ValueError("primes_up_to must be at least 100")
    sizes = tuple(sorted((int(d), int(c)) for d, c in pool_sizes.items()))
    for d, c in sizes:
        if d < 2 or d % 2 != 0:
            raise ValueError(f"pool degree must be a positive even integer, got {d}")
        if c < 0:
            raise ValueError("pool counts must be nonnegative")
    places = tuple(build_places(primes_up_to, ramified))
    n_unram = sum(1 for w in places if not w.ramified)
    params: list[SimpleParameter] = []
    master = np.random.SeedSequence(seed)
    children = master.spawn(sum(c for _, c in sizes))
    pos = 0
    for d, c in sizes:
        for i in range(c):
            rng = np.random.default_rng(children[pos])
            pos += 1
            angles = sample_angles(d // 2, n_unram, rng)
            params.append(
                SimpleParameter(label=f"d{d}.{i}", degree=d, tau=0.0, angles=angles)
            )
    return SpectrumStore(
        seed=int(seed),
        primes_up_to=int(primes_up_to),
        ramified=int(ramified),
        pool_sizes=sizes,
        places=places,
        params=tuple(params),
    )


def enumerate_phi2(store: SpectrumStore, N: int) -> list[CuspidalParameter]:
    """All sets of distinct pool parameters with total degree 2N."""
    target = 2 * N
    pool = store.params
    out: list[CuspidalParameter] = []

    def walk(start: int, chosen: list[SimpleParameter], remaining: int) -> None:
        if remaining == 0:
            out.append(CuspidalParameter(tuple(chosen)))
            return
        for i in range(start, len(pool)):
            if pool[i].degree <= remaining:
                chosen.append(pool[i])
                walk(i + 1, chosen, remaining - pool[i].degree)
                chosen.pop()

    walk(0, [], target)
    return out


def enumerate_star_prim(
    store: SpectrumStore, d: EndoDatum
) -> list[StarPrimitiveParameter]:
    """All unordered assignments of distinct pool parameters to the parts of d."""
    multiplicity: dict[int, int] = {}
    for m in d.parts:
        multiplicity[m] = multiplicity.get(m, 0) + 1
    per_degree: list[list[tuple[SimpleParameter, ...]]] = []
    for m, mult in sorted(multiplicity.items()):
        combos = list(itertools.combinations(store.params_of_degree(m), mult))
        per_degree.append(combos)
    out: list[StarPrimitiveParameter] = []
    for choice in itertools.product(*per_degree):
        comps = tuple(itertools.chain.from_iterable(choice))
        out.append(StarPrimitiveParameter(d, comps))
    return out


def compose(p: StarPrimitiveParameter) -> CuspidalParameter:
    """The cuspidal parameter with the same component set."""
    return CuspidalParameter(p.components)


def classify(phi: CuspidalParameter) -> tuple[EndoDatum, StarPrimitiveParameter]:
    """The unique (datum, primitive parameter) this parameter arises from."""
    d = EndoDatum(tuple(p.degree for p in phi.components))
    return d, StarPrimitiveParameter(d, phi.components)


# ---------------------------------------------------------------------------
# serialization (byte-exact round trip)
# ---------------------------------------------------------------------------


def store_to_json(store: SpectrumStore) -> str:
    doc = {
        "schema": SCHEMA,
        "kind": "spectrum",
        "seed": store.seed,
        "primes_up_to": store.primes_up_to,
        "ramified": store.ramified,
        "pool": [[d, c] for d, c in store.pool_sizes],
        "params": [
            {
                "label": p.label,
                "degree": p.degree,
                "tau": p.tau,
                "angles": base64.b64encode(np.ascontiguousarray(p.angles).tobytes()).decode(
                    "ascii"
                ),
            }
            for p in store.params
        ],
    }
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))


def store_from_json(text: str) -> SpectrumStore:
    doc = json.loads(text)
    if doc.get("schema") != SCHEMA or doc.get("kind") != "spectrum":
        raise ValueError("not a spectrum document")
    places = tuple(build_places(doc["primes_up_to"], doc["ramified"]))
    n_unram = sum(1 for w in places if not w.ramified)
    params = []
    for rec in doc["params"]:
        raw = base64.b64decode(rec["angles"])
        angles = np.frombuffer(raw, dtype=np.float64).reshape(n_unram, rec["degree"] // 2)
        params.append(
            SimpleParameter(
                label=rec["label"],
                degree=rec["degree"],
                tau=rec["tau"],
                angles=angles.copy(),
            )
        )
    return SpectrumStore(
        seed=doc["seed"],
        primes_up_to=doc["primes_up_to"],
        ramified=doc["ramified"],
        pool_sizes=tuple((d, c) for d, c in doc["pool"]),
        places=places,
        params=tuple(params),
    )
