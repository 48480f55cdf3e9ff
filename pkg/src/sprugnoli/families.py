"""Uniform access to the five array families by name.

Each family is built from named expression slots:

    riordan    g, f
    stretched  g, f   (f is the valuation-2 series xf itself)
    double     g, f1, f2
    sprugnoli  g, f1, f2
    general    g, f1, ..., fm  (m >= 2, the last slot is the stretched one)
"""
from __future__ import annotations

from typing import Mapping, Union

from . import double, higher, riordan, triple
from .expr import series
from .matrix import TriMatrix
from .series import Series

FAMILIES = ("riordan", "stretched", "double", "sprugnoli", "general")

Element = Union[
    riordan.RiordanPair, riordan.StretchedPair, double.DoubleTriple, triple.SprugnoliTriple, higher.GeneralTuple
]


def slot_names(family: str, slots: Mapping[str, str] = ()) -> tuple[str, ...]:
    if family in ("riordan", "stretched"):
        return ("g", "f")
    if family in ("double", "sprugnoli"):
        return ("g", "f1", "f2")
    if family == "general":
        fs = sorted((k for k in slots if k.startswith("f") and k[1:].isdigit()), key=lambda k: int(k[1:]))
        return ("g",) + tuple(fs)
    raise ValueError(f"unknown family {family!r}")


def make_element(family: str, slots: Mapping[str, str], order: int) -> Element:
    """Evaluate the slot expressions to ``order`` and assemble the element."""
    names = slot_names(family, slots)
    missing = [n for n in names if not slots.get(n)]
    if missing:
        raise ValueError(f"family {family} needs slot(s) {', '.join(missing)}")
    s = {n: series(slots[n], order) for n in names}
    if family == "riordan":
        return riordan.RiordanPair(s["g"], s["f"])
    if family == "stretched":
        return riordan.StretchedPair(s["g"], s["f"])
    if family == "double":
        return double.DoubleTriple(s["g"], s["f1"], s["f2"])
    if family == "sprugnoli":
        return triple.SprugnoliTriple(s["g"], s["f1"], s["f2"])
    fs = tuple(s[n] for n in names[1:])
    if [int(n[1:]) for n in names[1:]] != list(range(1, len(fs) + 1)):
        raise ValueError("general slots must be f1, f2, ... without gaps")
    return higher.GeneralTuple(s["g"], fs)


def build(elem: Element, n: int) -> TriMatrix:
    if isinstance(elem, riordan.RiordanPair):
        return riordan.build_riordan(elem, n)
    if isinstance(elem, riordan.StretchedPair):
        return riordan.build_stretched(elem, n)
    if isinstance(elem, double.DoubleTriple):
        return double.build_double(elem, n)
    if isinstance(elem, triple.SprugnoliTriple):
        return triple.build_sprugnoli(elem, n)
    return higher.build_general(elem, n)


def apply(elem: Element, h: Series) -> Series:
    if isinstance(elem, riordan.RiordanPair):
        return riordan.riordan_apply(elem, h)
    if isinstance(elem, riordan.StretchedPair):
        return riordan.stretched_apply(elem, h)
    if isinstance(elem, triple.SprugnoliTriple):
        return triple.sprugnoli_apply(elem, h)
    if isinstance(elem, double.DoubleTriple):
        # no series-level action is defined for double arrays
        return _apply_by_matrix(elem, h)
    return higher.general_apply(elem, h)


def _apply_by_matrix(elem: Element, h: Series) -> Series:
    n = min(elem.order, h.order) + 1
    vec = build(elem, n).apply(h.coeffs[:n])
    return Series(vec)


def multiply(a: Element, b: Element, n: int) -> Union[Element, TriMatrix]:
    """Group product; order-m tuples only multiply at matrix level."""
    if type(a) is not type(b):
        raise ValueError("both factors must belong to the same family")
    if isinstance(a, riordan.RiordanPair):
        return riordan.riordan_mul(a, b)
    if isinstance(a, double.DoubleTriple):
        return double.double_mul(a, b)
    if isinstance(a, triple.SprugnoliTriple):
        return triple.sprugnoli_mul(a, b)
    if isinstance(a, higher.GeneralTuple):
        return higher.general_mul(a, b, n)
    return build(a, n) @ build(b, n)


def invert(elem: Element, n: int) -> Union[Element, TriMatrix]:
    if isinstance(elem, riordan.RiordanPair):
        return riordan.riordan_inv(elem)
    if isinstance(elem, double.DoubleTriple):
        return double.double_inv(elem)
    if isinstance(elem, triple.SprugnoliTriple):
        return triple.sprugnoli_inv(elem)
    if isinstance(elem, higher.GeneralTuple):
        return higher.general_inv(elem, n).matrix
    return build(elem, n).inverse()


def components(elem: Element) -> dict[str, Series]:
    if isinstance(elem, riordan.RiordanPair):
        return {"g": elem.g, "f": elem.f}
    if isinstance(elem, riordan.StretchedPair):
        return {"g": elem.g, "f": elem.xf}
    if isinstance(elem, higher.GeneralTuple):
        out = {"g": elem.g}
        out.update({f"f{i}": f for i, f in enumerate(elem.fs, 1)})
        return out
    return {"g": elem.g, "f1": elem.f1, "f2": elem.f2}


def period(elem: Element) -> int:
    """Number of A-type stripes in the production matrix."""
    if isinstance(elem, (riordan.RiordanPair, riordan.StretchedPair)):
        return 1
    if isinstance(elem, higher.GeneralTuple):
        return elem.m
    return 2
