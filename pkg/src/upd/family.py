"""Parametric families n ↦ I(n) of monomial ideals, and their JSON format.

Two modes:

* ``graded``: a monomial ideal H in A[Z_1..Z_t].  The degree-n component of
  A[Z]/H is A/I(n) with I(n) generated by the A-parts of the generators of H
  whose Z-exponent is <= n componentwise.  This is a finitely generated
  N^t-graded module, so the uniform bounds are theorems for it.
* ``affine``: every exponent is ``const + sum_j coeff_j * n_j``.  No finiteness
  holds in general; these families serve as negative controls.
"""

from __future__ import annotations

import enum
import json
import json.decoder
import json.scanner
from dataclasses import dataclass
from itertools import product as cartesian
from pathlib import Path
from typing import Iterator, Sequence

from .decomposition import associated_primes, prime_key
from .errors import ContextMismatch, ParseError
from .monomial import MonomialIdeal, RingContext


class Mode(str, enum.Enum):
    GRADED = "graded"
    AFFINE = "affine"

    @property
    def guarantee(self) -> str:
        return "theorem-applies" if self is Mode.GRADED else "no-guarantee"


@dataclass(frozen=True)
class GradedGenerator:
    """A generator m_A * Z^e of H: exponents on the x-vars and on the params."""

    x: tuple[int, ...]
    z: tuple[int, ...]


@dataclass(frozen=True)
class AffineExponent:
    const: int
    coeffs: tuple[int, ...]

    def at(self, n: Sequence[int]) -> int:
        return self.const + sum(c * v for c, v in zip(self.coeffs, n))


@dataclass(frozen=True)
class FamilySpec:
    ctx: RingContext
    params: tuple[str, ...]
    mode: Mode
    generators: tuple

    def __post_init__(self):
        object.__setattr__(self, "params", tuple(self.params))
        object.__setattr__(self, "mode", Mode(self.mode))
        object.__setattr__(self, "generators", tuple(self.generators))
        if not self.params:
            raise ValueError("a family needs at least one parameter")
        if len(set(self.params)) != len(self.params):
            raise ValueError("duplicate parameter names")
        if set(self.params) & set(self.ctx.var_names):
            raise ValueError("parameter names must differ from variable names")
        d, t = self.ctx.dim, len(self.params)
        for g in self.generators:
            if self.mode is Mode.GRADED:
                if len(g.x) != d or len(g.z) != t:
                    raise ContextMismatch("graded generator has the wrong shape")
                if min(g.x + g.z, default=0) < 0:
                    raise ValueError("exponents must be non-negative")
            else:
                if len(g) != d or any(len(a.coeffs) != t for a in g):
                    raise ContextMismatch("affine generator has the wrong shape")
                if any(a.const < 0 or min(a.coeffs, default=0) < 0 for a in g):
                    raise ValueError("affine coefficients must be non-negative")

    @property
    def t(self) -> int:
        return len(self.params)

    @classmethod
    def graded(cls, var_names, params, gens: Sequence[dict]) -> "FamilySpec":
        """Convenience constructor: generators as ``{"x": 2, "n": 1}`` dicts."""
        return _build(
            {"mode": "graded", "vars": list(var_names), "params": list(params), "generators": list(gens)}
        )

    @classmethod
    def affine(cls, var_names, params, gens: Sequence[dict]) -> "FamilySpec":
        return _build(
            {"mode": "affine", "vars": list(var_names), "params": list(params), "generators": list(gens)}
        )

    def thresholds(self) -> tuple[int, ...]:
        """Largest Z-exponent per parameter (graded mode); I(n) is constant past it."""
        if self.mode is not Mode.GRADED:
            raise ValueError("thresholds only exist for graded families")
        return tuple(max((g.z[j] for g in self.generators), default=0) for j in range(self.t))

    def to_json(self) -> dict:
        gens = []
        for g in self.generators:
            if self.mode is Mode.GRADED:
                entry = {v: a for v, a in zip(self.ctx.var_names, g.x) if a}
                entry.update({p: a for p, a in zip(self.params, g.z) if a})
            else:
                entry = {}
                for v, a in zip(self.ctx.var_names, g):
                    if any(a.coeffs):
                        entry[v] = {
                            "const": a.const,
                            "coeff": {p: c for p, c in zip(self.params, a.coeffs) if c},
                        }
                    elif a.const:
                        entry[v] = a.const
            gens.append(entry)
        return {
            "mode": self.mode.value,
            "vars": list(self.ctx.var_names),
            "params": list(self.params),
            "generators": gens,
        }


def evaluate(spec: FamilySpec, n: Sequence[int]) -> MonomialIdeal:
    """The ideal I(n) with A/I(n) the degree-n component of the family."""
    n = tuple(n)
    if len(n) != spec.t:
        raise ContextMismatch(f"point {list(n)} has {len(n)} coordinates, family has {spec.t} parameters")
    if any(v < 0 for v in n):
        raise ValueError(f"point {list(n)} is not in N^{spec.t}")
    if spec.mode is Mode.GRADED:
        vecs = [g.x for g in spec.generators if all(e <= v for e, v in zip(g.z, n))]
    else:
        vecs = [tuple(a.at(n) for a in g) for g in spec.generators]
    return MonomialIdeal.from_exponents(spec.ctx, vecs)


@dataclass(frozen=True)
class Box:
    """Inclusive per-parameter ranges [lo_j, hi_j] in N."""

    ranges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        rs = tuple((int(lo), int(hi)) for lo, hi in self.ranges)
        object.__setattr__(self, "ranges", rs)
        if not rs:
            raise ValueError("a box needs at least one range")
        for lo, hi in rs:
            if lo < 0:
                raise ValueError(f"range {lo}..{hi} leaves N")
            if lo > hi:
                raise ValueError(f"empty range {lo}..{hi}")

    @classmethod
    def parse(cls, text: str) -> "Box":
        """Parse ``a..b[,c..d]...``."""
        ranges = []
        for part in text.split(","):
            lo, sep, hi = part.strip().partition("..")
            if not sep:
                raise ValueError(f"bad range {part!r}; expected a..b")
            try:
                ranges.append((int(lo), int(hi)))
            except ValueError:
                raise ValueError(f"bad range {part!r}; expected a..b") from None
        return cls(tuple(ranges))

    @property
    def t(self) -> int:
        return len(self.ranges)

    def widths(self) -> tuple[int, ...]:
        return tuple(hi - lo + 1 for lo, hi in self.ranges)

    def points(self) -> Iterator[tuple[int, ...]]:
        """Lattice points in row-major order (last coordinate fastest)."""
        return cartesian(*(range(lo, hi + 1) for lo, hi in self.ranges))

    def __len__(self):
        size = 1
        for w in self.widths():
            size *= w
        return size

    def first_half(self) -> "Box":
        return Box(tuple((lo, lo + (hi - lo) // 2) for lo, hi in self.ranges))

    def render(self) -> str:
        return ",".join(f"{lo}..{hi}" for lo, hi in self.ranges)


def iterate(spec: FamilySpec, box: Box) -> Iterator[tuple[tuple[int, ...], MonomialIdeal]]:
    if box.t != spec.t:
        raise ContextMismatch(f"box has {box.t} ranges, family has {spec.t} parameters")
    for n in box.points():
        yield n, evaluate(spec, n)


def ass_union(spec: FamilySpec, box: Box) -> tuple[frozenset[MonomialIdeal], bool]:
    """Union of Ass(A/I(n)) over the box, and whether the first half already had it."""
    half = box.first_half()
    in_half = set(half.points())
    early: set[MonomialIdeal] = set()
    full: set[MonomialIdeal] = set()
    for n, I in iterate(spec, box):
        if I.is_unit():
            continue
        primes = associated_primes(I)
        full |= primes
        if n in in_half:
            early |= primes
    return frozenset(full), early == full


def sorted_primes(primes) -> list[MonomialIdeal]:
    return sorted(primes, key=prime_key)


# ---------------------------------------------------------------------------
# JSON format


class _PosDict(dict):
    """A JSON object that remembers where it started and ended in the source."""

    start = 0
    end = 0


class _TrackingDecoder(json.JSONDecoder):
    def __init__(self):
        super().__init__()

        def parse_object(s_and_end, *args, **kwargs):
            _, start = s_and_end
            obj, end = json.decoder.JSONObject(s_and_end, *args, **kwargs)
            tracked = _PosDict(obj)
            tracked.start = start - 1
            tracked.end = end
            return tracked, end

        self.parse_object = parse_object
        # the C scanner ignores parse_object, so force the Python one
        self.scan_once = json.scanner.py_make_scanner(self)


def _line_col(text: str, pos: int) -> tuple[int, int]:
    line = text.count("\n", 0, pos) + 1
    col = pos - text.rfind("\n", 0, pos)
    return line, col


class _Reader:
    def __init__(self, text: str):
        self.text = text

    def fail(self, msg: str, node=None, key: str | None = None):
        pos = 0
        if isinstance(node, _PosDict):
            pos = node.start
            if key is not None:
                found = self.text.find(json.dumps(key), node.start, node.end)
                if found >= 0:
                    pos = found
        line, col = _line_col(self.text, pos)
        raise ParseError(msg, line, col)

    def load(self):
        try:
            return _TrackingDecoder().decode(self.text)
        except json.JSONDecodeError as exc:
            raise ParseError(exc.msg, exc.lineno, exc.colno) from None


def _nonneg_int(reader: _Reader, value, where: str, node, key) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        reader.fail(f"{where}: expected a non-negative integer, got {json.dumps(value)}", node, key)
    return value


def _parse_names(reader: _Reader, doc, key: str, allow_empty: bool) -> list[str]:
    names = doc.get(key)
    if not isinstance(names, list) or not all(isinstance(v, str) for v in names):
        reader.fail(f"'{key}' must be a list of strings", doc, key)
    if not names and not allow_empty:
        reader.fail(f"'{key}' must not be empty", doc, key)
    if len(set(names)) != len(names):
        reader.fail(f"duplicate names in '{key}'", doc, key)
    return names


def _build(doc, reader: _Reader | None = None) -> FamilySpec:
    reader = reader or _Reader(json.dumps(doc))
    if not isinstance(doc, dict):
        reader.fail("a family spec must be a JSON object", doc)
    allowed = {"mode", "vars", "params", "generators"}
    for k in doc:
        if k not in allowed:
            reader.fail(f"unknown key '{k}'", doc, k)
    for k in ("mode", "vars", "params", "generators"):
        if k not in doc:
            reader.fail(f"missing key '{k}'", doc)
    if doc["mode"] not in ("graded", "affine"):
        reader.fail(f"'mode' must be \"graded\" or \"affine\", got {json.dumps(doc['mode'])}", doc, "mode")
    mode = Mode(doc["mode"])
    var_names = _parse_names(reader, doc, "vars", allow_empty=False)
    params = _parse_names(reader, doc, "params", allow_empty=False)
    if set(var_names) & set(params):
        reader.fail("'vars' and 'params' overlap", doc, "params")
    try:
        ctx = RingContext(tuple(var_names))
    except ValueError as exc:
        reader.fail(str(exc), doc, "vars")
    if not isinstance(doc["generators"], list):
        reader.fail("'generators' must be a list", doc, "generators")

    gens = []
    for i, entry in enumerate(doc["generators"]):
        if not isinstance(entry, dict):
            reader.fail(f"generator {i} must be an object", doc, "generators")
        if mode is Mode.GRADED:
            x = [0] * ctx.dim
            z = [0] * len(params)
            for k, v in entry.items():
                if k in var_names:
                    x[var_names.index(k)] = _nonneg_int(reader, v, f"generator {i}, key '{k}'", entry, k)
                elif k in params:
                    z[params.index(k)] = _nonneg_int(reader, v, f"generator {i}, key '{k}'", entry, k)
                else:
                    reader.fail(f"generator {i}: unknown key '{k}'", entry, k)
            gens.append(GradedGenerator(tuple(x), tuple(z)))
        else:
            exps = [AffineExponent(0, (0,) * len(params)) for _ in var_names]
            for k, v in entry.items():
                if k not in var_names:
                    what = "parameters may only appear inside 'coeff'" if k in params else f"unknown key '{k}'"
                    reader.fail(f"generator {i}: {what}", entry, k)
                exps[var_names.index(k)] = _affine_exponent(reader, v, params, f"generator {i}, key '{k}'", entry, k)
            gens.append(tuple(exps))
    return FamilySpec(ctx, tuple(params), mode, tuple(gens))


def _affine_exponent(reader: _Reader, v, params, where, node, key) -> AffineExponent:
    if not isinstance(v, dict):
        return AffineExponent(_nonneg_int(reader, v, where, node, key), (0,) * len(params))
    for k in v:
        if k not in ("const", "coeff"):
            reader.fail(f"{where}: unknown key '{k}'", v, k)
    const = _nonneg_int(reader, v.get("const", 0), f"{where}.const", v, "const")
    coeff = v.get("coeff", {})
    if not isinstance(coeff, dict):
        reader.fail(f"{where}.coeff must be an object", v, "coeff")
    coeffs = [0] * len(params)
    for p, c in coeff.items():
        if p not in params:
            reader.fail(f"{where}.coeff: unknown parameter '{p}'", coeff, p)
        coeffs[params.index(p)] = _nonneg_int(reader, c, f"{where}.coeff.{p}", coeff, p)
    return AffineExponent(const, tuple(coeffs))


def parse_family(text: str) -> FamilySpec:
    """Parse the JSON family format strictly; errors carry line/column."""
    reader = _Reader(text)
    return _build(reader.load(), reader)


def load_family(path: str | Path) -> FamilySpec:
    return parse_family(Path(path).read_text())


def parse_ideal(text: str, ctx: RingContext | None = None) -> MonomialIdeal:
    """Parse an inline ideal: ``{"vars": [...], "generators": [{"x": 2}, ...]}``.

    With ``ctx`` given, ``vars`` may be omitted and must match when present.
    """
    reader = _Reader(text)
    doc = reader.load()
    if not isinstance(doc, dict):
        reader.fail("an ideal must be a JSON object", doc)
    for k in doc:
        if k not in ("vars", "generators", "params", "mode"):
            reader.fail(f"unknown key '{k}'", doc, k)
    if doc.get("params"):
        reader.fail("an inline ideal takes no parameters", doc, "params")
    if "mode" in doc and doc["mode"] != "graded":
        reader.fail("an inline ideal has constant exponents", doc, "mode")
    if "vars" in doc:
        var_names = _parse_names(reader, doc, "vars", allow_empty=False)
        try:
            own = RingContext(tuple(var_names))
        except ValueError as exc:
            reader.fail(str(exc), doc, "vars")
        if ctx is not None and own != ctx:
            reader.fail(f"'vars' {var_names} do not match the family's {list(ctx.var_names)}", doc, "vars")
        ctx = own
    elif ctx is None:
        reader.fail("missing key 'vars'", doc)
    if "generators" not in doc:
        reader.fail("missing key 'generators'", doc)
    if not isinstance(doc["generators"], list):
        reader.fail("'generators' must be a list", doc, "generators")
    vecs = []
    for i, entry in enumerate(doc["generators"]):
        if not isinstance(entry, dict):
            reader.fail(f"generator {i} must be an object", doc, "generators")
        e = [0] * ctx.dim
        for k, v in entry.items():
            if k not in ctx.var_names:
                reader.fail(f"generator {i}: unknown key '{k}'", entry, k)
            e[ctx.index(k)] = _nonneg_int(reader, v, f"generator {i}, key '{k}'", entry, k)
        vecs.append(tuple(e))
    return MonomialIdeal.from_exponents(ctx, vecs)


def ideal_to_json(I: MonomialIdeal) -> dict:
    return {
        "vars": list(I.ctx.var_names),
        "generators": [{v: a for v, a in zip(I.ctx.var_names, g) if a} for g in I.gens],
    }
