"""Reduction-type symbols: an ASCII grammar and a bracketed display form.

A layout is the display form with ``#`` in every integer slot, e.g.
``[IV-II_{#}]`` or ``[I0*-III-#]``.  The ASCII family is derived from it by
turning ``*`` into ``star``, dropping ``_{...}`` groups and a trailing ``-#``::

    [I*_{#-#-#}]  <->  Istar[2,0,0]
    [IX-#]        <->  IX[3]
    [IV-II_{#}]   <->  IV-II[5]

Two layouts that would get the same family and arity are told apart by a
trailing ``_`` on the one carrying a subscript (``II-IIstar_[1]`` is
``[II-II*_{1}]`` while ``II-IIstar[1]`` is ``[II-II*-1]``).
"""

from __future__ import annotations

import re
from dataclasses import dataclass

# every layout appearing in the tables, the wild results included
LAYOUTS: tuple[str, ...] = (
    # smooth stable fiber
    "[I_{#-#-#}]", "[I*_{#-#-#}]", "[II]", "[III]", "[IV]", "[V]", "[V*]", "[VI]",
    "[VII]", "[VII*]", "[VIII-#]", "[IX-#]",
    # one node
    "[II_{#-#}]", "[II*_{#-#}]",
    "[IV-II_{#}]", "[IV*-II_{#}]", "[II-II*_{#}]", "[II*-II*_{#}]",
    "[III-II_{#}]", "[III*-II*_{#}]", "[III-II*_{#}]", "[III*-II_{#}]",
    # two nodes and three nodes
    "[2I_{#}-#]", "[III_{#}]", "[III*_{#}]",
    # two elliptic components
    "[I0-I0-#]", "[I0*-I0*-#]", "[I0-I0*-#]",
    "[IV-IV*-#]", "[II-II*-#]", "[I0-IV-#]", "[I0*-II*-#]", "[IV*-IV*-#]", "[II-II-#]",
    "[I0-IV*-#]", "[I0*-II-#]", "[IV-IV-#]", "[II*-II*-#]",
    "[III-III*-#]", "[I0-III-#]", "[I0*-III*-#]", "[III-III-#]", "[III*-III*-#]",
    "[I0-III*-#]", "[I0*-III-#]",
    "[I0-II-#]", "[I0*-IV*-#]", "[II*-IV-#]", "[I0-IV-#]", "[II-IV-#]", "[II*-IV*-#]",
    "[I0-II*-#]", "[I0*-IV-#]", "[II-IV*-#]",
    "[II*-III-#]", "[IV-III*-#]", "[II-III-#]", "[IV*-III*-#]", "[IV-III-#]",
    "[II*-III*-#]", "[IV*-III-#]", "[II-III*-#]",
    "[2I0-#]", "[2I0*-#]", "[2IV-#]", "[2IV*-#]", "[2III-#]", "[2III*-#]", "[2II-#]", "[2II*-#]",
    # one elliptic and one rational component
    "[I_{#}-I0-#]", "[I0*-I*_{#}-#]", "[I0-I*_{#}-#]", "[I_{#}-I0*-#]",
    "[IV-I_{#}-#]", "[II*-I*_{#}-#]", "[IV*-I_{#}-#]", "[II-I*_{#}-#]",
    "[III-I_{#}-#]", "[III*-I*_{#}-#]", "[III*-I_{#}-#]", "[III-I*_{#}-#]",
    "[II-I_{#}-#]", "[IV*-I*_{#}-#]", "[II*-I_{#}-#]", "[IV-I*_{#}-#]",
    # two rational components
    "[I_{#}-I_{#}-#]", "[I*_{#}-I*_{#}-#]", "[I_{#}-I*_{#}-#]", "[2I*_{#}-#]",
)


def _base_family(layout: str) -> str:
    body = layout[1:-1].replace("*", "star")
    body = re.sub(r"_\{[^}]*\}", "", body)
    return re.sub(r"-#$", "", body)


def _build_registry() -> tuple[dict[tuple[str, int], str], dict[str, tuple[str, int]]]:
    seen: dict[str, None] = dict.fromkeys(LAYOUTS)
    by_key: dict[tuple[str, int], list[str]] = {}
    for lay in seen:
        by_key.setdefault((_base_family(lay), lay.count("#")), []).append(lay)
    fam_of: dict[str, tuple[str, int]] = {}
    for (fam, arity), lays in by_key.items():
        if len(lays) > 2 or (len(lays) == 2 and sum("_{" in x and not x.endswith("-#]") for x in lays) != 1):
            raise RuntimeError(f"unresolvable symbol collision: {lays}")
        for lay in lays:
            marked = len(lays) == 2 and "_{" in lay and not lay.endswith("-#]")
            fam_of[lay] = (fam + "_" if marked else fam, arity)
    layout_of = {key: lay for lay, key in fam_of.items()}
    if len(layout_of) != len(fam_of):
        raise RuntimeError("two layouts share an ASCII family")
    return layout_of, fam_of


LAYOUT_OF, FAMILY_OF = _build_registry()


def _layout_regex(layout: str) -> re.Pattern:
    return re.compile("^" + re.escape(layout).replace(r"\#", r"(-?\d+)") + "$")


_PRETTY_RES = [(lay, _layout_regex(lay)) for lay in FAMILY_OF]
_ASCII_RE = re.compile(r"^([0-9A-Za-z_*\-]+)\[(-?\d+(?:,-?\d+)*)?\]$")


class SymbolError(ValueError):
    pass


@dataclass(frozen=True)
class ReductionSymbol:
    family: str
    params: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "params", tuple(int(x) for x in self.params))
        if (self.family, len(self.params)) not in LAYOUT_OF:
            raise SymbolError(f"unknown family {self.family!r} with {len(self.params)} parameters")

    @property
    def layout(self) -> str:
        return LAYOUT_OF[(self.family, len(self.params))]

    def ascii(self) -> str:
        return f"{self.family}[{','.join(str(x) for x in self.params)}]"

    def pretty(self) -> str:
        it = iter(self.params)
        return re.sub("#", lambda _: str(next(it)), self.layout)

    def __str__(self) -> str:
        return self.pretty()

    @classmethod
    def from_layout(cls, layout: str, params) -> "ReductionSymbol":
        fam, _ = FAMILY_OF[layout]
        return cls(fam, tuple(params))

    @classmethod
    def parse(cls, text: str) -> "ReductionSymbol":
        """Accept the ASCII form or the display form, with or without its brackets."""
        text = text.strip()
        if "[" not in text:
            text = f"[{text}]"
        if text.startswith("["):
            for lay, rx in _PRETTY_RES:
                m = rx.match(text)
                if m:
                    return cls.from_layout(lay, [int(g) for g in m.groups()])
            raise SymbolError(f"unrecognized symbol {text!r}")
        m = _ASCII_RE.match(text)
        if not m:
            raise SymbolError(f"unrecognized symbol {text!r}")
        params = tuple(int(x) for x in m.group(2).split(",")) if m.group(2) else ()
        return cls(m.group(1), params)


_EXPR_RE = re.compile(r"^\(?\s*([a-z]\w*)?\s*([+-]\s*\d+)?\s*\)?(?:/(\d+))?$|^(-?\d+)$")


class NonIntegralParameter(ArithmeticError):
    pass


@dataclass(frozen=True)
class ParamExpr:
    """(var + offset) / den, or a constant when var is None."""

    var: str | None
    offset: int = 0
    den: int = 1

    @classmethod
    def parse(cls, text: str) -> "ParamExpr":
        m = _EXPR_RE.match(text.replace(" ", ""))
        if not m:
            raise ValueError(f"bad parameter expression {text!r}")
        if m.group(4) is not None:
            return cls(None, int(m.group(4)))
        var, off, den = m.group(1), m.group(2), m.group(3)
        if var is None:
            raise ValueError(f"bad parameter expression {text!r}")
        return cls(var, int(off.replace(" ", "")) if off else 0, int(den) if den else 1)

    def __call__(self, env: dict[str, int]) -> int:
        if self.var is None:
            return self.offset
        if self.var not in env or env[self.var] is None:
            raise KeyError(f"parameter {self.var!r} is not available")
        v, rem = divmod(env[self.var] + self.offset, self.den)
        if rem:
            raise NonIntegralParameter(f"({self.var}{self.offset:+d})/{self.den} is not an integer at {self.var}={env[self.var]}")
        return v

    def __str__(self) -> str:
        if self.var is None:
            return str(self.offset)
        core = self.var if not self.offset else f"({self.var}{self.offset:+d})"
        return core if self.den == 1 else f"{core}/{self.den}"


@dataclass(frozen=True)
class SymbolTemplate:
    layout: str
    exprs: tuple[ParamExpr, ...] = ()

    def __post_init__(self) -> None:
        if self.layout not in FAMILY_OF:
            raise ValueError(f"layout {self.layout!r} is not registered")
        if self.layout.count("#") != len(self.exprs):
            raise ValueError(f"{self.layout} needs {self.layout.count('#')} expressions")

    @classmethod
    def of(cls, layout: str, *exprs: str) -> "SymbolTemplate":
        return cls(layout, tuple(ParamExpr.parse(e) for e in exprs))

    def render(self, env: dict[str, int]) -> ReductionSymbol:
        return ReductionSymbol.from_layout(self.layout, [e(env) for e in self.exprs])

    def __str__(self) -> str:
        it = iter(self.exprs)
        return re.sub("#", lambda _: str(next(it)), self.layout)
