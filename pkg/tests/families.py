"""Deterministic random binomial towers for the oracle-agreement checks."""

from __future__ import annotations

import random
from dataclasses import dataclass

from regtensor.exactscalar import GF
from regtensor.polyrat import MultiPoly, RatFunc
from regtensor.towers import FieldTower, InvalidStep, ReducibleMinPoly, adjoin_insep, ambient_root

VARS = ("x", "y", "z")


@dataclass
class Instance:
    p: int
    exps: dict
    K: FieldTower
    L: FieldTower
    label: str


def _random_element(rng, p, names, exps):
    dom = GF(p)
    terms = {}
    for _ in range(rng.randint(1, 2)):
        e = tuple(rng.randrange(p ** exps[v]) if v in names else 0 for v in VARS[: len(exps)])
        terms[e] = rng.randrange(1, p)
    poly = MultiPoly(dom, VARS[: len(exps)], terms)
    if poly.is_constant():
        return None
    return RatFunc(poly)


def _tower(rng, k, p, exps, count):
    T = k
    names = list(exps)
    for _ in range(count):
        for _attempt in range(10):
            g = _random_element(rng, p, rng.sample(names, rng.randint(1, len(names))), exps)
            if g is None:
                continue
            try:
                T = adjoin_insep(T, g)
                break
            except (ReducibleMinPoly, InvalidStep):
                continue
    return T


def instance(seed: int) -> Instance:
    rng = random.Random(seed)
    p = rng.choice([2, 3])
    nv = rng.randint(1, 3 if p == 2 else 2)
    exps = {v: rng.randint(1, 2) for v in VARS[:nv]}
    if p == 3 and nv == 2 and sum(exps.values()) > 3:
        exps[VARS[1]] = 1
    dom = GF(p)
    gens = [RatFunc(MultiPoly.var(dom, VARS[:nv], v)) ** (p ** e) for v, e in exps.items()]
    k = FieldTower(ambient_root(p, VARS[:nv], gens))
    K = _tower(rng, k, p, exps, rng.randint(1, 2)).renamed("K")
    L = _tower(rng, k, p, exps, rng.randint(1, 2)).renamed("L")
    return Instance(p, exps, K, L, f"seed={seed} p={p} exps={exps} K={K.describe()} L={L.describe()}")


def family(count: int = 60, start: int = 0) -> list[Instance]:
    return [instance(s) for s in range(start, start + count)]
