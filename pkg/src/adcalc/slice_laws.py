"""Functoriality identities for triangle pullbacks and cone homotopies.

Each law has a seeded instance drawer (rejection sampling on top of the
random family generators) and an exact checker comparing integer matrices.
"""

from __future__ import annotations

import functools
import itertools
import random
from dataclasses import dataclass, field

from .cells import enumerate_adc_morphisms
from .complexes import Complex, Morphism, compose_morphisms, identity_morphism
from .constructions import disk_complex, simplex_complex
from .homotopy import (
    ANTIHOMOTOPY,
    AcceptanceCount,
    Family,
    cod2_sum,
    gray_interchange,
    homotopy_identity,
    random_antihomotopy,
    random_family_from,
    vertical_sum,
    whisker_left,
    whisker_right,
)
from .slices import (
    Slice,
    cone_after_pullback,
    cone_before_pullback,
    cone_homotopy,
    triangle_pullback,
    validate_cone_homotopy,
)


_HOMS: dict = {}


def _rng_morphism(K: Complex, L: Complex, rng: random.Random, cap: int = 1):
    key = (id(K), id(L), cap)
    if key not in _HOMS:
        _HOMS[key] = enumerate_adc_morphisms(K, L, cap)
    options = _HOMS[key]
    return rng.choice(options) if options else None


@functools.lru_cache(maxsize=None)
def _shapes():
    """Small (K, K′, K″, L) quadruples used for random instances."""
    D0, D1 = disk_complex(0, "x"), disk_complex(1, "x")
    E1 = disk_complex(1, "y")
    S1 = simplex_complex(1)
    L2, D2 = simplex_complex(2), disk_complex(2, "z")
    return (
        (D0, S1, E1, L2),
        (D1, E1, S1, L2),
        (D0, E1, S1, D2),
        (D1, S1, disk_complex(1, "w"), L2),
    )


@dataclass
class LawOutcome:
    name: str
    attempts: int = 0
    accepted: int = 0
    failures: list = field(default_factory=list)

    @property
    def rate(self) -> float:
        return AcceptanceCount(self.attempts, self.accepted).rate

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "law": self.name,
            "attempts": self.attempts,
            "accepted": self.accepted,
            "acceptance_rate": round(self.rate, 4),
            "failures": self.failures[:5],
        }


def _triangle(f: Morphism, g2: Morphism, seed: int):
    """A triangle (f, h) over g′ = g2: returns (g, h) or None."""
    return random_antihomotopy(f, g2, seed)


def _components_equal(a: dict, b: dict) -> bool:
    return a.keys() == b.keys() and all(a[k] == b[k] for k in a)


def _nonzero(F: Family) -> bool:
    return any(not c.is_zero() for c in F.components.values())


# ----- instance drawers; each returns a tuple of data or None ---------------


def draw_composite(seed: int):
    rng = random.Random(seed)
    K, K1, K2, L = rng.choice(_shapes())
    f = _rng_morphism(K, K1, rng)
    f1 = _rng_morphism(K1, K2, rng)
    g2 = _rng_morphism(K2, L, rng)
    if None in (f, f1, g2):
        return None
    r1 = _triangle(f1, g2, rng.randrange(1 << 30))
    if r1 is None:
        return None
    g1, h1 = r1
    r0 = _triangle(f, g1, rng.randrange(1 << 30))
    if r0 is None:
        return None
    g0, h0 = r0
    if not (_nonzero(h0) or _nonzero(h1)):
        return None
    return f, h0, f1, h1, g0, g1, g2


def check_composite(data) -> bool:
    """(f, h)*(f′, h′)* = (f′f, h′f + h)*."""
    f, h, f1, h1, g0, g1, g2 = data
    S0, S1, S2 = Slice(g0.target, g0), Slice(g1.target, g1), Slice(g2.target, g2)
    outer = triangle_pullback(f, h, g0, g1, S1, S0)
    inner = triangle_pullback(f1, h1, g1, g2, S2, S1)
    combined = triangle_pullback(
        compose_morphisms(f1, f), vertical_sum(whisker_right(h1, f), h), g0, g2, S2, S0
    )
    return compose_morphisms(outer.morphism, inner.morphism).maps == combined.morphism.maps


def draw_identity(seed: int):
    rng = random.Random(seed)
    K, _, _, L = rng.choice(_shapes())
    g = _rng_morphism(K, L, rng, cap=rng.choice([1, 2]))
    return None if g is None else (g,)


def check_identity(data) -> bool:
    """(id, id)* = id."""
    (g,) = data
    S = Slice(g.target, g)
    P = triangle_pullback(identity_morphism(g.source), homotopy_identity(g, ANTIHOMOTOPY), g, g, S, S)
    return P.morphism.maps == identity_morphism(S.ambient).maps


def _cone_data(rng: random.Random, K: Complex, K1: Complex, L: Complex, g1: Morphism | None = None):
    """f, k: f → f′, g′, h, H: g′k + h → h′ as a dict, or None."""
    f = _rng_morphism(K, K1, rng)
    g1 = g1 or _rng_morphism(K1, L, rng)
    if f is None or g1 is None:
        return None
    r = random_family_from(f, rng.randrange(1 << 30), ANTIHOMOTOPY)
    if r is None:
        return None
    f1, k = r
    r = _triangle(f, g1, rng.randrange(1 << 30))
    if r is None:
        return None
    g, h = r
    base = vertical_sum(whisker_left(g1, k), h)
    r = random_family_from(base, rng.randrange(1 << 30), ANTIHOMOTOPY)
    if r is None:
        return None
    h1, H = r
    if not (_nonzero(k) and _nonzero(H)):
        return None
    return {"f": f, "f1": f1, "k": k, "g": g, "g1": g1, "h": h, "h1": h1, "H": H}


def _cone(d: dict, S1: Slice, S0: Slice):
    target = triangle_pullback(d["f"], d["h"], d["g"], d["g1"], S1, S0)
    source = triangle_pullback(d["f1"], d["h1"], d["g"], d["g1"], S1, S0)
    return cone_homotopy(d["k"], d["H"], source, target)


def draw_left_whisker(seed: int):
    rng = random.Random(seed)
    K, K1, K2, L = rng.choice(_shapes())
    cone = _cone_data(rng, K1, K2, L)
    if cone is None:
        return None
    f = _rng_morphism(K, K1, rng)
    if f is None:
        return None
    r = _triangle(f, cone["g"], rng.randrange(1 << 30))
    if r is None:
        return None
    g0, h0 = r
    return f, h0, g0, cone


def check_left_whisker(data) -> bool:
    """(f, h)*(k, H)* = (kf, Hf)*."""
    f, h0, g0, cone = data
    L = g0.target
    S0, S1, S2 = Slice(L, g0), Slice(L, cone["g"]), Slice(L, cone["g1"])
    P = triangle_pullback(f, h0, g0, cone["g"], S1, S0)
    C = _cone(cone, S2, S1)
    whiskered = whisker_right(cone["H"], f)
    H2 = cod2_sum(whiskered, homotopy_identity(h0))
    d = {
        "f": compose_morphisms(cone["f"], f),
        "f1": compose_morphisms(cone["f1"], f),
        "k": whisker_right(cone["k"], f),
        "g": g0,
        "g1": cone["g1"],
        "h": vertical_sum(whisker_right(cone["h"], f), h0),
        "h1": vertical_sum(whisker_right(cone["h1"], f), h0),
        "H": H2,
    }
    combined = _cone(d, S2, S0)
    return (
        validate_cone_homotopy(combined).ok
        and _components_equal(cone_after_pullback(P, C), combined.components)
    )


def draw_right_whisker(seed: int):
    rng = random.Random(seed)
    K, K1, K2, L = rng.choice(_shapes())
    g2 = _rng_morphism(K2, L, rng)
    f2 = _rng_morphism(K1, K2, rng)
    if g2 is None or f2 is None:
        return None
    r = _triangle(f2, g2, rng.randrange(1 << 30))
    if r is None:
        return None
    g1, h2 = r
    cone = _cone_data(rng, K, K1, L, g1=g1)
    if cone is None:
        return None
    return f2, h2, g2, cone


def check_right_whisker(data) -> bool:
    """(k, H)*(f″, h″)* = (f″k, H + h″k)*."""
    f2, h2, g2, cone = data
    L = g2.target
    S0, S1, S2 = Slice(L, cone["g"]), Slice(L, cone["g1"]), Slice(L, g2)
    P = triangle_pullback(f2, h2, cone["g1"], g2, S2, S1)
    C = _cone(cone, S1, S0)
    k, H, h, h1 = cone["k"], cone["H"], cone["h"], cone["h1"]
    interchange = gray_interchange(h2, k)
    first = cod2_sum(interchange, homotopy_identity(h))
    second = cod2_sum(homotopy_identity(whisker_right(h2, cone["f1"])), H)
    combined_H = vertical_sum(second, first)
    d = {
        "f": compose_morphisms(f2, cone["f"]),
        "f1": compose_morphisms(f2, cone["f1"]),
        "k": whisker_left(f2, k),
        "g": cone["g"],
        "g1": g2,
        "h": vertical_sum(whisker_right(h2, cone["f"]), h),
        "h1": vertical_sum(whisker_right(h2, cone["f1"]), h1),
        "H": combined_H,
    }
    combined = _cone(d, S2, S0)
    return (
        validate_cone_homotopy(combined).ok
        and _components_equal(cone_before_pullback(C, P), combined.components)
    )


def draw_vertical(seed: int):
    rng = random.Random(seed)
    K, K1, _, L = rng.choice(_shapes())
    first = _cone_data(rng, K, K1, L)
    if first is None:
        return None
    r = random_family_from(first["f1"], rng.randrange(1 << 30), ANTIHOMOTOPY)
    if r is None:
        return None
    f2, k2 = r
    base = vertical_sum(whisker_left(first["g1"], k2), first["h1"])
    r = random_family_from(base, rng.randrange(1 << 30), ANTIHOMOTOPY)
    if r is None:
        return None
    h2, H2 = r
    second = dict(first, f=first["f1"], f1=f2, k=k2, h=first["h1"], h1=h2, H=H2)
    return first, second


def check_vertical(data) -> bool:
    """(k, H)* + (k′, H′)* = (k′ + k, H′ + H)*."""
    first, second = data
    L = first["g"].target
    S0, S1 = Slice(L, first["g"]), Slice(L, first["g1"])
    C1 = _cone(first, S1, S0)
    C2 = _cone(second, S1, S0)
    total = {g: C1.components[g] + C2.components[g] for g in C1.components}
    combined_H = vertical_sum(
        second["H"], cod2_sum(homotopy_identity(whisker_left(first["g1"], second["k"])), first["H"])
    )
    d = dict(first, f1=second["f1"], k=vertical_sum(second["k"], first["k"]), h1=second["h1"], H=combined_H)
    combined = _cone(d, S1, S0)
    return validate_cone_homotopy(combined).ok and _components_equal(total, combined.components)


LAWS = {
    "triangle_composite": (draw_composite, check_composite),
    "triangle_identity": (draw_identity, check_identity),
    "cone_left_whisker": (draw_left_whisker, check_left_whisker),
    "cone_right_whisker": (draw_right_whisker, check_right_whisker),
    "cone_vertical": (draw_vertical, check_vertical),
}


def run_law(name: str, required: int = 25, seed: int = 0, max_attempts: int = 4000) -> LawOutcome:
    """Draw seeded instances until `required` are accepted, checking each."""
    draw, check = LAWS[name]
    outcome = LawOutcome(name)
    for s in itertools.count(seed):
        if outcome.accepted >= required or outcome.attempts >= max_attempts:
            break
        outcome.attempts += 1
        data = draw(s)
        if data is None:
            continue
        outcome.accepted += 1
        if not check(data):
            outcome.failures.append(s)
    return outcome
