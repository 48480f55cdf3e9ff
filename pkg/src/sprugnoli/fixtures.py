"""Registry of worked examples with exact expected values.

Each fixture names an element (family + slot expressions) and a list of
checks.  Expected values are either transcribed from published displays
(``derived=False``) or produced by an independent oracle (``derived=True``).
When a transcribed display contains an entry that cannot be reproduced and an
independent argument shows it is a misprint, the corrected value is stored as
derived and the printed value is kept in ``printed`` for reference.
"""
from __future__ import annotations

import fnmatch
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Optional

from . import families
from .expr import series
from .higher import GeneralTuple, general_inv, stripe_zero_pattern
from .matrix import Matrix, TriMatrix
from .production import check_closed_form, extract_stripes, production_matrix, recurrence_check
from .series import Series, jacobi_cf
from .triple import SprugnoliTriple, aeration_split, inverse_parts, sums_gf

ORDER = 12


@dataclass(frozen=True)
class Check:
    kind: str
    expected: Any
    derived: bool = False
    printed: Any = None
    note: str = ""
    order: int = 10  # truncation order for series comparisons


@dataclass(frozen=True)
class Fixture:
    id: str
    family: str
    slots: dict
    checks: tuple[Check, ...]
    where: str
    order: int = ORDER

    def element(self):
        return families.make_element(self.family, self.slots, self.order)


@dataclass(frozen=True)
class CheckResult:
    fixture: str
    kind: str
    ok: bool
    detail: str = ""


# ---------------------------------------------------------------- polynomials


@dataclass(frozen=True)
class PolyRecurrence:
    """P_n = (x + a) P_{n-1} - b P_{n-2} with (a, b) chosen by the parity of n."""

    even: tuple[Fraction, Fraction]
    odd: tuple[Fraction, Fraction]
    seeds: tuple[tuple[int, ...], tuple[int, ...]] = ((), (1,))  # P_{-1}, P_0


def build_poly_recurrence(r: PolyRecurrence, count: int) -> TriMatrix:
    prev, cur = [Fraction(c) for c in r.seeds[0]], [Fraction(c) for c in r.seeds[1]]
    rows = [cur]
    for n in range(1, count):
        a, b = r.even if n % 2 == 0 else r.odd
        nxt = [Fraction(0)] * (n + 1)
        for i, c in enumerate(cur):
            nxt[i + 1] += c
            nxt[i] += a * c
        for i, c in enumerate(prev):
            nxt[i] -= b * c
        prev, cur = cur, nxt
        rows.append(cur)
    return TriMatrix([row + [Fraction(0)] * (count - len(row)) for row in rows])


PNORM_RECURRENCE = PolyRecurrence(even=(Fraction(1), Fraction(1)), odd=(Fraction(-1), Fraction(1)))


# ---------------------------------------------------------------- checks


def _as_matrix(rows) -> Matrix:
    return Matrix(rows)


def _diff_entries(got: Matrix, want: Matrix) -> list[tuple[int, int, Fraction, Fraction]]:
    return [
        (i, j, got[i, j], want[i, j])
        for i in range(want.dim)
        for j in range(want.dim)
        if got[i, j] != want[i, j]
    ]


def _matrix_result(got: Matrix, rows) -> tuple[bool, str]:
    want = _as_matrix(rows)
    diffs = _diff_entries(got, want)
    if not diffs:
        return True, f"{want.dim}x{want.dim} exact"
    shown = ", ".join(f"({i},{j}) got {g} want {w}" for i, j, g, w in diffs[:4])
    return False, f"{len(diffs)} entries differ: {shown}"


def _seq_result(got, want) -> tuple[bool, str]:
    got = [Fraction(v) for v in got[: len(want)]]
    want = [Fraction(v) for v in want]
    if got == want:
        return True, f"{len(want)} terms"
    return False, f"got {_fmt_seq(got)} want {_fmt_seq(want)}"


def _series_result(got: Series, expr: str, order: int) -> tuple[bool, str]:
    want = series(expr, order)
    if got.order < order:
        return False, f"only known to order {got.order}"
    if got.truncate(order) == want:
        return True, f"equal to order {order}"
    return False, f"got {got.truncate(order)} want {want}"


def _fmt_seq(vals) -> str:
    return ",".join(str(v) for v in vals)


def _chk_matrix(fx, elem, c):
    return _matrix_result(families.build(elem, len(c.expected)), c.expected)


def _chk_row_sums(fx, elem, c):
    n = len(c.expected)
    m = families.build(elem, n)
    return _seq_result([sum(r) for r in m.rows], c.expected)


def _chk_apply(fx, elem, c):
    seq_expr, want = c.expected
    return _seq_result(families.apply(elem, series(seq_expr, fx.order)).coeffs, want)


def _chk_apply_gf(fx, elem, c):
    seq_expr, gf_expr = c.expected
    got = families.apply(elem, series(seq_expr, fx.order))
    return _series_result(got, gf_expr, got.order)


def _chk_split(fx, elem, c):
    even_rows, odd_rows = c.expected
    even, odd = aeration_split(elem, len(even_rows))
    ok1, d1 = _matrix_result(even, even_rows)
    ok2, d2 = _matrix_result(odd, odd_rows)
    return ok1 and ok2, f"even part {d1}; odd part {d2}"


def _chk_inverse(fx, elem, c):
    inv = families.invert(elem, fx.order + 1)
    parts = families.components(inv)
    details = []
    ok = True
    for name, expr in c.expected.items():
        good, d = _series_result(parts[name], expr, c.order)
        ok &= good
        details.append(f"{name}: {d}")
    return ok, "; ".join(details)


def _chk_inverse_matrix(fx, elem, c):
    n = len(c.expected)
    inv = families.invert(elem, n)
    mat = inv if isinstance(inv, Matrix) else families.build(inv, n)
    return _matrix_result(mat, c.expected)


def _chk_inverse_identity(fx, elem, c):
    n = c.expected
    inv = families.invert(elem, n)
    mat = inv if isinstance(inv, Matrix) else families.build(inv, n)
    prod = mat @ families.build(elem, n)
    ok = prod == Matrix.identity(n)
    return ok, f"inverse times matrix {'is' if ok else 'is not'} I at dim {n}"


def _production(elem, n):
    return production_matrix(families.build(elem, n + 1))


def _chk_production(fx, elem, c):
    return _matrix_result(_production(elem, len(c.expected)), c.expected)


def _chk_inverse_production(fx, elem, c):
    n = len(c.expected)
    inv = families.invert(elem, n + 1)
    mat = inv if isinstance(inv, Matrix) else families.build(inv, n + 1)
    return _matrix_result(production_matrix(mat), c.expected)


def _stripes_of(elem, length, inverse=False):
    n = length + families.period(elem) + 1
    mat = families.build(elem, n)
    if inverse:
        mat = mat.inverse()
    return extract_stripes(production_matrix(mat), families.period(elem))


def _chk_stripes(fx, elem, c, inverse=False):
    length = max(len(v) for v in c.expected.values())
    st = _stripes_of(elem, length, inverse)
    ok, details = True, []
    for name, want in c.expected.items():
        got = st.z if name == "Z" else st.stripe(name)
        good, d = _seq_result(got, want)
        ok &= good
        details.append(f"{name}: {d}")
    return ok, "; ".join(details)


def _chk_inverse_stripes(fx, elem, c):
    return _chk_stripes(fx, elem, c, inverse=True)


def _chk_stripe_sums(fx, elem, c, inverse=False):
    want = c.expected
    st = _stripes_of(elem, len(want), inverse)
    report = stripe_zero_pattern(st)
    ok, d = _seq_result(report.sums, want)
    if ok and not report.periodic_zeros:
        return False, f"zeros at {report.zero_indices} are not periodic"
    return ok, d + (f"; zeros at {list(report.zero_indices)}" if ok else "")


def _chk_inverse_stripe_sums(fx, elem, c):
    return _chk_stripe_sums(fx, elem, c, inverse=True)


def _chk_recurrences(fx, elem, c):
    mat = families.build(elem, 9)
    st = _stripes_of(elem, 9)
    details, ok = [], True
    for n, k, value in c.expected:
        prev = mat.row(n - 1)
        coeffs = st.z if k == 0 else st.stripe_for_column(k)
        start = 0 if k == 0 else k - 1
        got = sum(prev[start + i] * a for i, a in enumerate(coeffs) if start + i < len(prev))
        good = got == value == mat[n, k]
        ok &= good
        details.append(f"t[{n},{k}]={value} {'ok' if good else f'got {got}'}")
    report = recurrence_check(mat, st)
    ok &= report.ok
    details.append(f"all {report.checked} entries {'obey' if report.ok else 'violate'} the recurrences")
    return ok, "; ".join(details)


def _chk_closed_form(fx, elem, c):
    cf = check_closed_form(elem, c.expected)
    if not cf.agrees:
        return False, f"closed form disagrees: {cf.mismatch}"
    ab = cf.a + cf.b
    odd = [i for i, v in enumerate(ab.coeffs) if i % 2 and v]
    return not odd, "closed-form Z, A, B agree" + (f"; A+B odd terms at {odd}" if odd else "; A+B is even")


def _chk_involution(fx, elem, c):
    n = c.expected
    m = families.build(elem, n)
    ok = m @ m == Matrix.identity(n)
    return ok, f"M^2 {'=' if ok else '!='} I at dim {n}"


def _chk_jacobi(fx, elem, c):
    b, lam, want = c.expected
    return _seq_result(jacobi_cf(b, lam, len(want) - 1).coeffs, want)


def _chk_inverse_column(fx, elem, c):
    want = c.expected
    mat = families.build(elem, len(want)).inverse()
    return _seq_result(mat.column(0), want)


def _inverse_part(name):
    def check(fx, elem, c):
        parts = inverse_parts(elem)
        if name == "col1":
            got = parts.w * parts.s1
        else:
            got = getattr(parts, name)
        return _series_result(got, c.expected, c.order)

    return check


def _chk_poly_array(fx, elem, c):
    n = c.expected
    got = build_poly_recurrence(PNORM_RECURRENCE, n)
    want = families.build(elem, n)
    diffs = _diff_entries(got, want)
    return not diffs, f"recurrence array {'equals' if not diffs else 'differs from'} the {n}x{n} build"


def _chk_polys(fx, elem, c):
    mat = build_poly_recurrence(PNORM_RECURRENCE, len(c.expected))
    for i, coeffs in enumerate(c.expected):
        row = mat.row(i)[: len(coeffs)]
        if row != [Fraction(v) for v in coeffs]:
            return False, f"P_{i} has coefficients {_fmt_seq(row)}"
    return True, f"P_0..P_{len(c.expected) - 1}"


def _chk_regenerates(fx, elem, c):
    res = general_inv(elem, c.expected)
    return res.regenerates, res.reason or f"read-back tuple regenerates the {c.expected}x{c.expected} inverse"


def _chk_schema(fx, elem, c):
    """Each column of the built array equals the product of the factors named for it."""
    comps = families.components(elem)
    n = len(c.expected)
    mat = families.build(elem, n)
    for k, names in enumerate(c.expected):
        prod = Series.one(fx.order)
        for name in names:
            base, _, exp = name.partition("^")
            factor = Series.x(fx.order) if base == "x" else comps[base]
            prod = prod * factor ** int(exp or 1)
        if mat.column(k) != [prod.coeff(i) for i in range(n)]:
            return False, f"column {k} is not {'*'.join(names)}"
    return True, f"{n} columns follow the schema"


def _chk_sums_gf(fx, elem, c):
    mode, want = c.expected
    return _seq_result(sums_gf(elem, mode).coeffs, want)


HANDLERS: dict[str, Callable] = {
    "matrix": _chk_matrix,
    "row_sums": _chk_row_sums,
    "sums_gf": _chk_sums_gf,
    "apply": _chk_apply,
    "apply_gf": _chk_apply_gf,
    "split": _chk_split,
    "inverse": _chk_inverse,
    "inverse_matrix": _chk_inverse_matrix,
    "inverse_identity": _chk_inverse_identity,
    "inverse_column": _chk_inverse_column,
    "production": _chk_production,
    "stripes": _chk_stripes,
    "inverse_stripes": _chk_inverse_stripes,
    "recurrences": _chk_recurrences,
    "closed_form": _chk_closed_form,
    "inverse_production": _chk_inverse_production,
    "stripe_sums": _chk_stripe_sums,
    "inverse_stripe_sums": _chk_inverse_stripe_sums,
    "involution": _chk_involution,
    "jacobi_cf": _chk_jacobi,
    "r1": _inverse_part("r1"),
    "r2": _inverse_part("r2"),
    "w": _inverse_part("w"),
    "s1": _inverse_part("s1"),
    "col1": _inverse_part("col1"),
    "poly_array": _chk_poly_array,
    "polynomials": _chk_polys,
    "regenerates": _chk_regenerates,
    "schema": _chk_schema,
}


def run_fixture(fx: Fixture) -> list[CheckResult]:
    try:
        elem = fx.element()
    except Exception as exc:  # reported, not raised
        return [CheckResult(fx.id, "construct", False, f"{type(exc).__name__}: {exc}")]
    out = []
    for c in fx.checks:
        try:
            ok, detail = HANDLERS[c.kind](fx, elem, c)
        except Exception as exc:
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        out.append(CheckResult(fx.id, c.kind, ok, detail))
    return out


def select(pattern: Optional[str] = None) -> list[Fixture]:
    if not pattern:
        return list(REGISTRY)
    return [f for f in REGISTRY if fnmatch.fnmatchcase(f.id, pattern) or f.id.startswith(pattern)]


# ---------------------------------------------------------------- data

FIB = "1/(1-x-x^2)"

SPRUGNOLI_EXAMPLE = [
    [1, 0, 0, 0, 0, 0, 0, 0, 0],
    [1, 1, 0, 0, 0, 0, 0, 0, 0],
    [1, 3, 1, 0, 0, 0, 0, 0, 0],
    [1, 5, 1, 1, 0, 0, 0, 0, 0],
    [1, 7, 2, 3, 1, 0, 0, 0, 0],
    [1, 9, 2, 6, 1, 1, 0, 0, 0],
    [1, 11, 3, 10, 3, 3, 1, 0, 0],
    [1, 13, 3, 15, 3, 7, 1, 1, 0],
    [1, 15, 4, 21, 6, 13, 4, 3, 1],
]

SPRUGNOLI_EVEN_PART = [[v if k % 2 == 0 else 0 for k, v in enumerate(r)] for r in SPRUGNOLI_EXAMPLE]
SPRUGNOLI_ODD_PART = [[v if k % 2 == 1 else 0 for k, v in enumerate(r)] for r in SPRUGNOLI_EXAMPLE]

PASCAL_LIKE = [
    [1, 0, 0, 0, 0, 0, 0, 0, 0],
    [1, 1, 0, 0, 0, 0, 0, 0, 0],
    [1, 0, 1, 0, 0, 0, 0, 0, 0],
    [1, 1, 1, 1, 0, 0, 0, 0, 0],
    [1, 0, 2, 0, 1, 0, 0, 0, 0],
    [1, 1, 2, 2, 1, 1, 0, 0, 0],
    [1, 0, 3, 0, 3, 0, 1, 0, 0],
    [1, 1, 3, 3, 3, 3, 1, 1, 0],
    [1, 0, 4, 0, 6, 0, 4, 0, 1],
]

# inverse of PASCAL_LIKE by triangular solve
PASCAL_LIKE_INVERSE = [
    [1, 0, 0, 0, 0, 0, 0, 0, 0],
    [-1, 1, 0, 0, 0, 0, 0, 0, 0],
    [-1, 0, 1, 0, 0, 0, 0, 0, 0],
    [1, -1, -1, 1, 0, 0, 0, 0, 0],
    [1, 0, -2, 0, 1, 0, 0, 0, 0],
    [-1, 1, 2, -2, -1, 1, 0, 0, 0],
    [-1, 0, 3, 0, -3, 0, 1, 0, 0],
    [1, -1, -3, 3, 3, -3, -1, 1, 0],
    [1, 0, -4, 0, 6, 0, -4, 0, 1],
]

PRODUCTION_EXAMPLE_MATRIX = [
    [1, 0, 0, 0, 0, 0, 0, 0, 0],
    [1, 1, 0, 0, 0, 0, 0, 0, 0],
    [2, 3, 1, 0, 0, 0, 0, 0, 0],
    [3, 6, 1, 1, 0, 0, 0, 0, 0],
    [5, 11, 3, 3, 1, 0, 0, 0, 0],
    [8, 19, 4, 7, 1, 1, 0, 0, 0],
    [13, 32, 8, 14, 4, 3, 1, 0, 0],
    [21, 53, 12, 26, 5, 8, 1, 1, 0],
    [34, 87, 21, 46, 12, 17, 5, 3, 1],
]

PRODUCTION_EXAMPLE_P = [
    [1, 1, 0, 0, 0, 0, 0, 0, 0],
    [1, 2, 1, 0, 0, 0, 0, 0, 0],
    [-2, -2, -2, 1, 0, 0, 0, 0, 0],
    [-2, -2, -1, 2, 1, 0, 0, 0, 0],
    [4, 4, 2, -2, -2, 1, 0, 0, 0],
    [4, 4, 2, -2, -1, 2, 1, 0, 0],
    [-8, -8, -4, 4, 2, -2, -2, 1, 0],
    [-8, -8, -4, 4, 2, -2, -1, 2, 1],
    [16, 16, 8, -8, -4, 4, 2, -2, -2],
]
# the display shows -4 at (7,3); that column carries A_5 = 4 (see column 1, row 5)
PRODUCTION_EXAMPLE_P_PRINTED_7_3 = -4

PNORM_MATRIX = [
    [1, 0, 0, 0, 0, 0, 0, 0, 0],
    [-1, 1, 0, 0, 0, 0, 0, 0, 0],
    [-2, 0, 1, 0, 0, 0, 0, 0, 0],
    [3, -3, -1, 1, 0, 0, 0, 0, 0],
    [5, 0, -5, 0, 1, 0, 0, 0, 0],
    [-8, 8, 6, -6, -1, 1, 0, 0, 0],
    [-13, 0, 19, 0, -8, 0, 1, 0, 0],
    [21, -21, -25, 25, 9, -9, -1, 1, 0],
    [34, 0, -65, 0, 42, 0, -11, 0, 1],
]

PNORM_INVERSE = [
    [1, 0, 0, 0, 0, 0, 0, 0, 0],
    [1, 1, 0, 0, 0, 0, 0, 0, 0],
    [2, 0, 1, 0, 0, 0, 0, 0, 0],
    [2, 3, 1, 1, 0, 0, 0, 0, 0],
    [5, 0, 5, 0, 1, 0, 0, 0, 0],
    [5, 10, 5, 6, 1, 1, 0, 0, 0],
    [15, 0, 21, 0, 8, 0, 1, 0, 0],
    [15, 36, 21, 29, 8, 9, 1, 1, 0],
    [51, 0, 86, 0, 46, 0, 11, 0, 1],
]

PNORM_INVERSE_P = [
    [1, 1, 0, 0, 0, 0, 0, 0, 0],
    [1, -1, 1, 0, 0, 0, 0, 0, 0],
    [0, 1, 1, 1, 0, 0, 0, 0, 0],
    [0, 0, 1, -1, 1, 0, 0, 0, 0],
    [0, 0, 0, 1, 1, 1, 0, 0, 0],
    [0, 0, 0, 0, 1, -1, 1, 0, 0],
    [0, 0, 0, 0, 0, 1, 1, 1, 0],
    [0, 0, 0, 0, 0, 0, 1, -1, 1],
    [0, 0, 0, 0, 0, 0, 0, 1, 1],
]

INVOLUTION_P = [
    [1, -1, 0, 0, 0, 0, 0],
    [0, -1, 1, 0, 0, 0, 0],
    [0, 0, 1, -1, 0, 0, 0],
    [0, 0, 0, -1, 1, 0, 0],
    [0, 0, 0, 0, 1, -1, 0],
    [0, 0, 0, 0, 0, -1, 1],
    [0, 0, 0, 0, 0, 0, 1],
]

M3_SLOTS = {"g": "1/(1-x)", "f1": "x*(1+x)", "f2": "x/(1-3*x)", "f3": "x/(1-x^3)"}

M3_MATRIX = [
    [1, 0, 0, 0, 0, 0, 0],
    [1, 1, 0, 0, 0, 0, 0],
    [1, 2, 1, 0, 0, 0, 0],
    [1, 2, 5, 1, 0, 0, 0],
    [1, 2, 17, 1, 1, 0, 0],
    [1, 2, 53, 1, 2, 1, 0],
    [1, 2, 161, 2, 2, 5, 1],
]
M3_MATRIX_PRINTED_ROW_6 = [1, 2, 161, 1, 3, 5, 1]

M3_P = [
    [1, 1, 0, 0, 0, 0, 0],
    [0, 1, 1, 0, 0, 0, 0],
    [0, -1, 3, 1, 0, 0, 0],
    [0, 4, 0, -4, 1, 0, 0],
    [0, 12, 0, -12, 1, 1, 0],
    [0, 24, 0, -23, -1, 3, 1],
    [0, 8, 0, -12, 4, 0, -4],
]
M3_P_PRINTED = [
    [1, 1, 0, 0, 0, 0, 0],
    [0, 1, 1, 0, 0, 0, 0],
    [0, -1, 3, 1, 0, 0, 0],
    [0, 4, 0, -4, 1, 0, 0],
    [0, 12, 0, 12, -1, 1, 0],
    [0, 24, 0, -23, 4, 3, 1],
    [0, 8, 0, -12, 12, 0, -4],
]

M3_INVERSE_P = [
    [-1, 1, 0, 0, 0, 0, 0],
    [0, -1, 1, 0, 0, 0, 0],
    [-3, 5, -3, 1, 0, 0, 0],
    [-31, 61, -35, 4, 1, 0, 0],
    [-103, 205, -119, 17, -1, 1, 0],
    [-279, 557, -330, 49, 5, -3, 1],
    [-779, 1557, -934, 125, 61, -35, 4],
]

M3_STRIPES = {
    "A": [1, 1, -1, 4, 12, 24, 8, 24, 48],
    "B": [1, 3, 0, 0, 0, 0, 0, 0, 0],
    "C": [1, -4, -12, -23, -12, -36, -72, -24, -72],
}
M3_INVERSE_STRIPES = {
    "A": [1, -1, 5, 61, 205, 557, 1557, 4485, 13029],
    "B": [1, -3, -35, -119, -330, -934, -2710, -7918, -23458],
    "C": [1, 4, 17, 49, 125, 365, 1125, 3433, 10393],
}
M3_SUMS = [3, 0, -13, -19, 0, -12, -64, 0, -24]
M3_SUMS_PRINTED = [3, 0, 11, -19, 0, -12, -64, 0, -24]
M3_INVERSE_SUMS = [3, 0, -13, -9, 0, -12, -28, 0, -36]

M4_SCHEMA = [
    ["g"],
    ["g", "f1"],
    ["g", "f1", "f2"],
    ["g", "f1", "f2", "f3"],
    ["g", "f4", "x^3"],
    ["g", "f1", "f4", "x^3"],
    ["g", "f1", "f2", "f4", "x^3"],
    ["g", "f1", "f2", "f3", "f4", "x^3"],
    ["g", "f4^2", "x^6"],
    ["g", "f1", "f4^2", "x^6"],
    ["g", "f1", "f2", "f4^2", "x^6"],
]

SURD = "sqrt(1+6*x^2+x^4)"
HARD_W = f"(3*(5-30*x+204*x^2+72*x^3)*{SURD}+216*x^5+1620*x^4+54*x^3+543*x^2-60*x+10)/((5-12*x^2)*(5+42*x^2))"
HARD_COL1_NUM = f"(24*x^3-492*x^2-10*x-65)*{SURD}-1320*x^5-3684*x^4+406*x^3+137*x^2+60*x+65"


def _further(i: int, slots: tuple[str, str, str], inverse: tuple[str, str, str], **kw) -> Fixture:
    g, f1, f2 = inverse
    check = Check("inverse", {"g": g, "f1": f1, "f2": f2}, **kw)
    return Fixture(
        f"further-examples-{i}",
        "sprugnoli",
        dict(zip(("g", "f1", "f2"), slots)),
        (check, Check("inverse_identity", 9, derived=True)),
        "list of simple arrays and their inverses",
    )


REGISTRY: tuple[Fixture, ...] = (
    Fixture(
        "riordan-example",
        "riordan",
        {"g": "1/(1-x)", "f": "x/(1-x)^2"},
        (
            Check("matrix", [
                [1, 0, 0, 0, 0, 0, 0],
                [1, 1, 0, 0, 0, 0, 0],
                [1, 3, 1, 0, 0, 0, 0],
                [1, 6, 5, 1, 0, 0, 0],
                [1, 10, 15, 7, 1, 0, 0],
                [1, 15, 35, 28, 9, 1, 0],
                [1, 21, 70, 84, 45, 11, 1],
            ]),
            Check("row_sums", [1, 2, 5, 13, 34, 89, 233, 610, 1597, 4181, 10946], note="A122367"),
        ),
        "ordinary Riordan array example",
    ),
    Fixture(
        "stretched-example",
        "stretched",
        {"g": "1/(1-x)", "f": "x^2/(1-x-x^2)"},
        (
            Check("matrix", [
                [1, 0, 0, 0, 0, 0, 0, 0, 0],
                [1, 0, 0, 0, 0, 0, 0, 0, 0],
                [1, 1, 0, 0, 0, 0, 0, 0, 0],
                [1, 2, 0, 0, 0, 0, 0, 0, 0],
                [1, 4, 1, 0, 0, 0, 0, 0, 0],
                [1, 7, 3, 0, 0, 0, 0, 0, 0],
                [1, 12, 8, 1, 0, 0, 0, 0, 0],
                [1, 20, 18, 4, 0, 0, 0, 0, 0],
                [1, 33, 38, 13, 1, 0, 0, 0, 0],
            ]),
            Check("apply", (FIB, [1, 1, 2, 3, 7, 14, 32, 69, 154]), derived=True, printed="last term 159"),
            Check("apply_gf", (FIB, "(1/(1-x))/(1-x^2/(1-x-x^2)-(x^2/(1-x-x^2))^2)")),
            Check(
                "apply_gf",
                (FIB, "(1-x-x^2)^2/((1-x)*(1-2*x-2*x^2+3*x^3+x^4))"),
                derived=True,
                printed="denominator factor 1-2x+3x^3+x^4",
            ),
        ),
        "vertically stretched Riordan array example",
    ),
    Fixture(
        "sprugnoli-example",
        "sprugnoli",
        {"g": "1/(1-x)", "f1": "x*(1+x)/(1-x)", "f2": "x/(1-x^2)"},
        (
            Check("matrix", SPRUGNOLI_EXAMPLE),
            Check("split", (SPRUGNOLI_EVEN_PART, SPRUGNOLI_ODD_PART)),
            Check("apply", (FIB, [1, 2, 6, 11, 26, 45, 100, 170, 370])),
            Check("apply_gf", (FIB, "(1+x)*(1+x+x^3)/(1-5*x^2+5*x^4)")),
            Check("sums_gf", ("rows", [sum(r) for r in SPRUGNOLI_EXAMPLE]), derived=True),
            Check("inverse", {
                "g": "(1-x+4*x^2)/(1+2*x^2)",
                "f1": "x*(1-3*x+x^2-4*x^3)/((1+x^2)*(1-x+4*x^2))",
                "f2": "x/(1+x^2)",
            }),
        ),
        "first Sprugnoli array example, its aeration split and the Fibonacci action",
    ),
    Fixture(
        "a051159",
        "sprugnoli",
        {"g": "1/(1-x)", "f1": "x/(1+x)", "f2": "x/(1-x^2)"},
        (
            Check("matrix", PASCAL_LIKE, note="A051159"),
            Check("inverse", {"g": "(1-x)/(1+x^2)", "f1": "x/(1-x)", "f2": "x/(1+x^2)"}, order=12),
            Check("inverse_matrix", PASCAL_LIKE_INVERSE, derived=True),
        ),
        "easy inverse calculation and the palindromic matrix",
    ),
    Fixture(
        "hard-inverse",
        "sprugnoli",
        {"g": "(1+2*x)/(1-4*x)", "f1": "x*(1+3*x)/(1-2*x)", "f2": "x*(1+x^2)/(1-x^2)"},
        (
            Check("r2", f"({SURD}-x^2-1)/(2*x)"),
            Check("r1", f"(5*(1+2*x)*{SURD}-46*x^3-65*x^2-5)/(2*(5+42*x^2))"),
            Check("w", HARD_W),
            Check(
                "col1",
                f"({HARD_COL1_NUM})/(2*(5-12*x^2)*(5+42*x^2))",
                derived=True,
                printed="406*x^4 in place of 406*x^3",
            ),
            Check(
                "s1",
                f"({HARD_COL1_NUM})/(2*(3*(5-30*x+204*x^2+72*x^3)*{SURD}+216*x^5+1620*x^4+54*x^3+543*x^2-60*x+10))",
                derived=True,
                printed="denominator with 54*x^2 in place of 54*x^3+543*x^2",
            ),
            Check("inverse_identity", 9, derived=True),
        ),
        "hard inverse calculation with surds",
    ),
    Fixture(
        "production-example",
        "sprugnoli",
        {"g": "1/(1-x-x^2)", "f1": "x*(1+x)/(1-x)", "f2": "x/(1-x^2)"},
        (
            Check("matrix", PRODUCTION_EXAMPLE_MATRIX),
            Check("production", PRODUCTION_EXAMPLE_P, derived=True, printed="(7,3) = -4"),
            Check("stripes", {
                "Z": [1, 1, -2, -2, 4, 4, -8, -8, 16],
                "A": [1, 2, -2, -2, 4, 4, -8, -8, 16],
                "B": [1, -2, -1, 2, 2, -4, -4, 8, 8],
            }),
            Check("recurrences", [(6, 0, 13), (7, 1, 53), (6, 2, 8)]),
            Check("closed_form", 9, derived=True),
        ),
        "production matrix example with Z, A and B sequences",
    ),
    Fixture(
        "pnorm",
        "sprugnoli",
        {"g": "(1-x+x^2)/(1+3*x^2+x^4)", "f1": "x/(1-x+x^2)", "f2": "x/(1+3*x^2+x^4)"},
        (
            Check("polynomials", [[1], [-1, 1], [-2, 0, 1], [3, -3, -1, 1], [5, 0, -5, 0, 1]]),
            Check("matrix", PNORM_MATRIX),
            Check("poly_array", 9),
            Check("inverse_matrix", PNORM_INVERSE),
            Check("inverse_column", [1, 1, 2, 2, 5, 5, 15, 15, 51], note="A055879"),
            Check("inverse_production", PNORM_INVERSE_P),
            Check("jacobi_cf", ([1, -1], [1], [1, 1, 2, 2, 5, 5, 15, 15, 51, 51])),
            Check("inverse", {
                "g": "(1-x^2-sqrt((1-x^2)*(1-5*x^2)))/(2*x^2*(1-x))",
                "f1": "(1-x^2-sqrt((1-x^2)*(1-5*x^2)))/(2*x*(1+x))",
                "f2": "(1-3*x^2-sqrt((1-x^2)*(1-5*x^2)))/(2*x^3)",
            }),
        ),
        "polynomial family P_n, its coefficient array and moment sequence",
    ),
    Fixture(
        "involution",
        "sprugnoli",
        {"g": "1/(1-x)", "f1": "-x/(1+x)", "f2": "-x/(1-x^2)"},
        (
            Check("involution", 12),
            Check("inverse", {"g": "1/(1-x)", "f1": "-x/(1+x)", "f2": "-x/(1-x^2)"}, order=12),
            Check("production", INVOLUTION_P),
        ),
        "involution in the group and its bidiagonal production matrix",
    ),
    _further(1, ("1/(1+x)", "x/(1-x)", "x/(1-x^2)"), ("(1+x)/(1+x^2)", "x/(1+x)", "x/(1+x^2)")),
    _further(2, ("1/(1-x)", "x", "x*(1+x^2)"), ("1-x", "x*(1-x*c(-x^2))/(1-x)", "x*c(-x^2)")),
    _further(
        3, ("1/(1-x)", "x*(1+x)", "x*(1+x^2)"), ("1-x+x^2*c(-x^2)", "x*(-1+(2-x)*c(-x^2))", "x*c(-x^2)")
    ),
    _further(
        4,
        ("1/(1-2*x)", "x*(1+x)/(1-x)", "x/(1-x^2)"),
        ("(1-2*x+6*x^2)/(1+2*x^2)", "x*(1-4*x+x^2-6*x^3)/((1+x^2)*(1-2*x+6*x^2))", "x/(1+x^2)"),
        derived=True,
        printed="f1 numerator 1-4x-x^2-6x^3",
    ),
    _further(
        5,
        ("1/(1-x)", "x*(1+2*x)/(1-x)", "x/(1-x^2)"),
        ("(1-x+6*x^2)/(1+3*x^2)", "x*(1-4*x+x^2-6*x^3)/((1+x^2)*(1-x+6*x^2))", "x/(1+x^2)"),
    ),
    _further(
        6,
        ("1/(1-x)", "x*(1+x)/(1-x)", "x/(1-x^2)"),
        ("(1-x+4*x^2)/(1+2*x^2)", "x*(1-3*x+x^2-4*x^3)/((1+x^2)*(1-x+4*x^2))", "x/(1+x^2)"),
    ),
    Fixture(
        "m3-example",
        "general",
        M3_SLOTS,
        (
            Check("matrix", M3_MATRIX, derived=True, printed=M3_MATRIX_PRINTED_ROW_6),
            Check("production", M3_P, derived=True, printed=M3_P_PRINTED),
            Check("inverse_production", M3_INVERSE_P),
            Check("stripes", M3_STRIPES, derived=True, printed="C_2 = 12"),
            Check("inverse_stripes", M3_INVERSE_STRIPES, derived=True, printed="B*_4 = -350"),
            Check("stripe_sums", M3_SUMS, derived=True, printed=M3_SUMS_PRINTED),
            Check("inverse_stripe_sums", M3_INVERSE_SUMS),
            Check("inverse_identity", 7, derived=True),
            Check("regenerates", 7, derived=True),
        ),
        "order-3 example: matrix, production arrays and the A+B+C alignment table",
        order=16,
    ),
    Fixture(
        "m4-schema",
        "general",
        {"g": "1/(1-x)", "f1": "x/(1-x)", "f2": "x*(1+x)", "f3": "x/(1-2*x)", "f4": "x/(1-x^4)"},
        (Check("schema", M4_SCHEMA),),
        "column schema for elements (g, f1, f2, f3, f4)",
    ),
    Fixture(
        "oeis-prefixes",
        "riordan",
        {"g": "1", "f": "x"},
        (
            Check("apply", (FIB, [1, 1, 2, 3, 5, 8, 13, 21, 34]), note="A000045"),
            Check("apply", ("c(x)", [1, 1, 2, 5, 14, 42, 132, 429, 1430]), note="A000108"),
            Check("jacobi_cf", ([1, -1], [1], [1, 1, 2, 2, 5, 5, 15, 15, 51, 51]), note="A055879"),
        ),
        "Fibonacci, Catalan and A055879 prefixes through the identity array",
    ),
)
