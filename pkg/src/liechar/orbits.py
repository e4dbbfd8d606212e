"""Weyl orbit computations on X: dominant representatives, full orbits,
orbit lengths via parabolic stabilizers."""

from __future__ import annotations

from dataclasses import dataclass

from . import intmat
from .errors import NotDominant


@dataclass
class OrbitRecord:
    dominant_rep: tuple
    length: int
    elements: list | None = None


def dominant_representative(datum, weight):
    """The unique dominant weight in the W-orbit (descent algorithm)."""
    w = tuple(weight)
    while True:
        for i, x in enumerate(w):
            if x < 0:
                w = intmat.mat_vec(w, datum.reflections[i])
                break
        else:
            return w


def orbit_elements(datum, weight):
    """The full W-orbit as a deterministic duplicate-free list."""
    start = dominant_representative(datum, weight)
    cache = datum._orbit_cache.get(start)
    if cache is not None:
        return cache
    seen = {start}
    out = [start]
    head = 0
    while head < len(out):
        cur = out[head]
        head += 1
        for s in datum.reflections:
            nxt = intmat.mat_vec(cur, s)
            if nxt not in seen:
                seen.add(nxt)
                out.append(nxt)
    datum._orbit_cache[start] = out
    return out


def orbit(datum, weight):
    """OrbitRecord with materialized elements."""
    elements = orbit_elements(datum, weight)
    rep = elements[0]
    return OrbitRecord(dominant_rep=rep, length=len(elements), elements=elements)


def orbit_length(datum, dominant):
    """|W| / |W_J| with J the zero positions of a dominant weight.

    Never materializes the orbit; the parabolic order comes from Dynkin
    classification of the sub-Cartan matrix.
    """
    if not datum.is_dominant(dominant):
        raise NotDominant(f"{dominant} is not dominant")
    zeros = [i for i, x in enumerate(dominant) if x == 0]
    stab = datum.parabolic_order(zeros)
    assert datum.weyl_order % stab == 0
    return datum.weyl_order // stab
