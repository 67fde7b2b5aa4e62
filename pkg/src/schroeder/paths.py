"""Lattice paths, colored Dyck paths and the path bijections.

Paths are words over ``N = (0,1)``, ``E = (1,0)`` and ``D = (1,1)`` read
from the origin; the empty word is the one-point path. Enumerators yield
paths in lexicographic order with ``D < E < N``.

Colored Dyck paths are token sequences of bare down-steps and colored
blocks. In block mode with parameter ``a`` a block of length ``j`` spells
``u^((a+1) j) d^j``; in free mode it spells the maximal ascent ``u^j`` and
the descent is made of the bare down-steps that follow it.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import product
from typing import Any, Callable, Iterator, Mapping, Sequence, Union

__all__ = [
    "Step",
    "LatticePath",
    "is_schroeder_path",
    "is_large_schroeder_path",
    "is_sp_wedge",
    "is_rational_path",
    "diagonal_d_steps",
    "contacts",
    "enum_schroeder_paths",
    "enum_large_schroeder_paths",
    "enum_sp_wedge",
    "enum_rational_paths",
    "DOWN",
    "Block",
    "ColoredDyckPath",
    "enum_colored_dyck",
    "sigma_colors",
    "ColoredComposition",
    "enum_colored_compositions",
    "comp_to_path",
    "path_to_comp",
    "xi",
    "xi_inv",
]


class Step(str, Enum):
    D = "D"
    E = "E"
    N = "N"

    @property
    def delta(self) -> tuple[int, int]:
        return _DELTA[self.value]


_DELTA = {"D": (1, 1), "E": (1, 0), "N": (0, 1)}
_ORDER = ("D", "E", "N")


@dataclass(frozen=True, order=True)
class LatticePath:
    """A lattice path given by its step word, e.g. ``LatticePath("NDE")``."""

    word: str = ""

    def __post_init__(self):
        bad = set(self.word) - set(_DELTA)
        if bad:
            raise ValueError(f"invalid steps {sorted(bad)} in path {self.word!r}")

    def __str__(self) -> str:
        return self.word

    def __len__(self) -> int:
        return len(self.word)

    @property
    def steps(self) -> tuple[Step, ...]:
        return tuple(Step(c) for c in self.word)

    @property
    def endpoint(self) -> tuple[int, int]:
        x = sum(_DELTA[c][0] for c in self.word)
        y = sum(_DELTA[c][1] for c in self.word)
        return x, y

    def points(self) -> list[tuple[int, int]]:
        x = y = 0
        pts = [(0, 0)]
        for c in self.word:
            dx, dy = _DELTA[c]
            x, y = x + dx, y + dy
            pts.append((x, y))
        return pts

    def __add__(self, other: "LatticePath") -> "LatticePath":
        return LatticePath(self.word + other.word)


PathLike = Union[LatticePath, str]


def _as_path(p: PathLike) -> LatticePath:
    return p if isinstance(p, LatticePath) else LatticePath(p)


# ---------------------------------------------------------------------------
# Validity predicates
# ---------------------------------------------------------------------------

def is_large_schroeder_path(p: PathLike, n: int) -> bool:
    """Ends at ``(n, n)`` and never goes below ``y = x``."""
    pts = _as_path(p).points()
    return pts[-1] == (n, n) and all(y >= x for x, y in pts)


def is_schroeder_path(p: PathLike, n: int) -> bool:
    """Large Schroeder path with no ``D`` step lying on ``y = x``."""
    p = _as_path(p)
    return is_large_schroeder_path(p, n) and diagonal_d_steps(p) == 0


def is_sp_wedge(p: PathLike, n: int) -> bool:
    """Schroeder path to ``(n, n)`` strictly above ``y = x`` away from its ends.

    For ``n = 1`` this admits both ``D`` and ``NE``; for larger ``n`` the path
    must start with ``N`` and end with ``E``.
    """
    pts = _as_path(p).points()
    if n < 1 or pts[-1] != (n, n):
        return False
    return all(y > x for x, y in pts[1:-1])


def is_rational_path(p: PathLike, n: int, alpha: int) -> bool:
    """Ends at ``(n, alpha n)`` and stays weakly above ``y = alpha x``.

    Steps are straight segments, so checking lattice points suffices.
    """
    pts = _as_path(p).points()
    return pts[-1] == (n, alpha * n) and all(y >= alpha * x for x, y in pts)


def diagonal_d_steps(p: PathLike) -> int:
    """Number of ``D`` steps running along ``y = x``."""
    count = 0
    x = y = 0
    for c in _as_path(p).word:
        if c == "D" and x == y:
            count += 1
        dx, dy = _DELTA[c]
        x, y = x + dx, y + dy
    return count


def contacts(p: PathLike, alpha: int = 1) -> int:
    """Lattice points of ``p`` on ``y = alpha x``, the origin excluded."""
    return sum(1 for x, y in _as_path(p).points()[1:] if y == alpha * x)


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------

def _walks(end: tuple[int, int], point_ok: Callable[[int, int], bool],
           step_ok: Callable[[str, int, int], bool] | None = None) -> Iterator[LatticePath]:
    ex, ey = end
    word: list[str] = []

    def rec(x: int, y: int):
        if (x, y) == (ex, ey):
            yield LatticePath("".join(word))
            return
        for c in _ORDER:
            dx, dy = _DELTA[c]
            nx, ny = x + dx, y + dy
            if nx > ex or ny > ey or not point_ok(nx, ny):
                continue
            if step_ok is not None and not step_ok(c, x, y):
                continue
            word.append(c)
            yield from rec(nx, ny)
            word.pop()

    if point_ok(0, 0):
        yield from rec(0, 0)


def enum_schroeder_paths(n: int) -> Iterator[LatticePath]:
    """Schroeder paths to ``(n, n)`` with no diagonal ``D`` step; ``s_n`` of them."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    return _walks((n, n), lambda x, y: y >= x, lambda c, x, y: not (c == "D" and x == y))


def enum_large_schroeder_paths(n: int) -> Iterator[LatticePath]:
    """All Schroeder paths to ``(n, n)``; ``r_n`` of them."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    return _walks((n, n), lambda x, y: y >= x)


def enum_sp_wedge(n: int) -> Iterator[LatticePath]:
    """Paths of :func:`is_sp_wedge`; ``2 s_{n-1}`` of them."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return _walks((n, n), lambda x, y: y > x or (x, y) in ((0, 0), (n, n)))


def enum_rational_paths(n: int, alpha: int) -> Iterator[LatticePath]:
    """All of ``S_n(alpha)``."""
    if n < 0 or alpha < 1:
        raise ValueError("need n >= 0 and alpha >= 1")
    return _walks((n, alpha * n), lambda x, y: y >= alpha * x)


# ---------------------------------------------------------------------------
# Colored Dyck paths
# ---------------------------------------------------------------------------

DOWN = "d"


@dataclass(frozen=True)
class Block:
    """A colored ascent of length ``length``; ``color`` is any hashable label."""

    length: int
    color: Any

    def __post_init__(self):
        if self.length < 1:
            raise ValueError(f"block length must be positive, got {self.length}")


@dataclass(frozen=True)
class ColoredDyckPath:
    """Tokens are :data:`DOWN` or :class:`Block`; ``a`` is ``None`` in free mode."""

    tokens: tuple
    a: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "tokens", tuple(self.tokens))
        height = 0
        prev_block = False
        for t in self.tokens:
            if isinstance(t, Block):
                if self.a is None and prev_block:
                    raise ValueError("free mode: consecutive ascents must be separated")
                height += t.length if self.a is None else self.a * t.length
                prev_block = True
            elif t == DOWN:
                height -= 1
                prev_block = False
                if height < 0:
                    raise ValueError(f"path dips below the axis: {self.word}")
            else:
                raise ValueError(f"unknown token {t!r}")
        if height != 0:
            raise ValueError(f"path does not return to the axis: {self.word}")

    @property
    def blocks(self) -> list[Block]:
        return [t for t in self.tokens if isinstance(t, Block)]

    @property
    def peaks(self) -> int:
        return len(self.blocks)

    @property
    def n(self) -> int:
        """Sum of block lengths (the index of the family the path belongs to)."""
        return sum(b.length for b in self.blocks)

    @property
    def word(self) -> str:
        parts = []
        for t in self.tokens:
            if t == DOWN:
                parts.append("d")
            elif self.a is None:
                parts.append("u" * t.length)
            else:
                parts.append("u" * ((self.a + 1) * t.length) + "d" * t.length)
        return "".join(parts)

    @property
    def semilength(self) -> int:
        return len(self.word) // 2

    def heights(self) -> list[int]:
        """Heights at token boundaries, starting with 0."""
        h = [0]
        for t in self.tokens:
            if t == DOWN:
                h.append(h[-1] - 1)
            elif self.a is None:
                h.append(h[-1] + t.length)
            else:
                h.append(h[-1] + self.a * t.length)
        return h

    def returns(self) -> int:
        """Returns to height 0 after the start."""
        return sum(1 for h in self.heights()[1:] if h == 0)

    def runs(self) -> list[tuple[Block, int]]:
        """Each block with the number of bare down-steps following it."""
        out: list[list] = []
        for t in self.tokens:
            if isinstance(t, Block):
                out.append([t, 0])
            else:
                out[-1][1] += 1
        return [(b, d) for b, d in out]

    def to_record(self) -> dict:
        return {
            "mode": "free" if self.a is None else f"block:{self.a}",
            "word": self.word,
            "tokens": ["d" if t == DOWN else f"B{t.length}" for t in self.tokens],
            "colors": [str(b.color) for b in self.blocks],
        }

    @classmethod
    def from_record(cls, record: Mapping, parse_color: Callable[[str], Any]) -> "ColoredDyckPath":
        """Inverse of :meth:`to_record`, given a parser for the color texts."""
        mode = record["mode"]
        a = None if mode == "free" else int(mode.partition(":")[2])
        colors = iter(record["colors"])
        tokens = []
        for tok in record["tokens"]:
            if tok == "d":
                tokens.append(DOWN)
            elif tok.startswith("B"):
                text = next(colors, None)
                if text is None:
                    raise ValueError("fewer colors than blocks")
                tokens.append(Block(int(tok[1:]), parse_color(text)))
            else:
                raise ValueError(f"unknown token {tok!r}")
        if next(colors, None) is not None:
            raise ValueError("more colors than blocks")
        return cls(tuple(tokens), a)

    def __str__(self) -> str:
        colors = " | ".join(str(b.color) for b in self.blocks)
        return f"{self.word}[{colors}]"


ColorDomains = Union[Mapping[int, Sequence], Callable[[int], Sequence]]


def _domain(colors: ColorDomains, j: int) -> list:
    if callable(colors):
        return list(colors(j))
    if j not in colors:
        raise ValueError(f"no color domain for length {j}")
    return list(colors[j])


def sigma_colors(j: int) -> list[LatticePath]:
    """Color domain for the rational-path bijection: ``SP^wedge_j``."""
    return list(enum_sp_wedge(j))


def enum_colored_dyck(n: int, a: int | None, colors: ColorDomains) -> Iterator[ColoredDyckPath]:
    """Every colored Dyck path whose block lengths sum to ``n``.

    ``a`` selects block mode (``u^((a+1)j) d^j`` blocks) or free mode when
    ``None``. ``colors`` maps a block length to its color domain. Order: at
    each position a down-step is tried first, then blocks by increasing
    length, colors in domain order.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if a is not None and a < 0:
        raise ValueError(f"a must be nonnegative, got {a}")
    domains = {j: _domain(colors, j) for j in range(1, n + 1)}
    tokens: list = []

    def rec(left: int, height: int, prev_block: bool):
        if left == 0 and height == 0:
            yield ColoredDyckPath(tuple(tokens), a)
            return
        if height > 0:
            tokens.append(DOWN)
            yield from rec(left, height - 1, False)
            tokens.pop()
        if a is None and prev_block:
            return
        for j in range(1, left + 1):
            rise = j if a is None else a * j
            for color in domains[j]:
                tokens.append(Block(j, color))
                yield from rec(left - j, height + rise, True)
                tokens.pop()

    yield from rec(n, 0, False)


# ---------------------------------------------------------------------------
# Colored compositions and the diagonal-split bijection
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ColoredComposition:
    """Parts ``(size, label)``: ``label`` is a diagonal-free Schroeder path to
    ``(size - 1, size - 1)``."""

    parts: tuple[tuple[int, LatticePath], ...]

    def __post_init__(self):
        parts = tuple((int(i), _as_path(lab)) for i, lab in self.parts)
        object.__setattr__(self, "parts", parts)
        for size, label in parts:
            if size < 1 or not is_schroeder_path(label, size - 1):
                raise ValueError(f"invalid part label {label.word!r} for part size {size}")

    @property
    def total(self) -> int:
        return sum(i for i, _ in self.parts)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(i for i, _ in self.parts)

    def __str__(self) -> str:
        return "+".join(f"{i}:{lab.word}" for i, lab in self.parts)


def enum_colored_compositions(n: int, k: int) -> Iterator[ColoredComposition]:
    """Every element of ``CS_{n,k}`` (part ``j`` colored ``s_{j-1}`` ways)."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")

    def sizes(total: int, parts: int):
        if parts == 1:
            yield (total,)
            return
        for first in range(1, total - parts + 2):
            for rest in sizes(total - first, parts - 1):
                yield (first,) + rest

    labels: dict[int, list[LatticePath]] = {}
    for comp in sizes(n, k):
        domains = [labels.setdefault(i, list(enum_schroeder_paths(i - 1))) for i in comp]
        for choice in product(*domains):
            yield ColoredComposition(tuple(zip(comp, choice)))


def comp_to_path(c: ColoredComposition) -> LatticePath:
    """Join the part labels with diagonal ``D`` steps."""
    return LatticePath("D".join(lab.word for _, lab in c.parts))


def path_to_comp(p: PathLike) -> ColoredComposition:
    """Split a Schroeder path at its ``D`` steps on ``y = x``."""
    p = _as_path(p)
    x, y = p.endpoint
    if x != y or not is_large_schroeder_path(p, x):
        raise ValueError(f"{p.word!r} is not a Schroeder path ending on the diagonal")
    parts = []
    start = 0
    px = py = 0
    origin = 0
    for i, c in enumerate(p.word):
        if c == "D" and px == py:
            parts.append((px - origin + 1, LatticePath(p.word[start:i])))
            start = i + 1
            origin = px + 1
        dx, dy = _DELTA[c]
        px, py = px + dx, py + dy
    parts.append((px - origin + 1, LatticePath(p.word[start:])))
    return ColoredComposition(tuple(parts))


# ---------------------------------------------------------------------------
# Rational Schroeder paths <-> sigma-colored Dyck paths
# ---------------------------------------------------------------------------

def xi(p: PathLike, alpha: int) -> ColoredDyckPath:
    """Map ``p`` in ``S_n(alpha)`` to a block-mode ``alpha - 1`` colored Dyck path.

    The path is read backwards from ``(n, alpha n)``. A ``D`` step gives a
    length-1 block colored ``D``; an ``E`` step closes the subpath back to
    the previous point on the same slope-1 line, which becomes the color of
    a block of that width; an ``N`` step gives a bare down-step.
    """
    p = _as_path(p)
    n = p.endpoint[0]
    if not is_rational_path(p, n, alpha):
        raise ValueError(f"{p.word!r} is not a rational Schroeder path of slope {alpha}")
    pts = p.points()
    word = p.word
    tokens: list = []
    i = len(word)
    while i > 0:
        step = word[i - 1]
        if step == "N":
            tokens.append(DOWN)
            i -= 1
        elif step == "D":
            tokens.append(Block(1, LatticePath("D")))
            i -= 1
        else:
            x, y = pts[i]
            m = i - 1
            while pts[m][1] - pts[m][0] != y - x:
                m -= 1
            tokens.append(Block(x - pts[m][0], LatticePath(word[m:i])))
            i = m
    return ColoredDyckPath(tuple(tokens), alpha - 1)


def xi_inv(q: ColoredDyckPath, alpha: int) -> LatticePath:
    """Inverse of :func:`xi`: read ``q`` right to left, bare downs become ``N``."""
    if q.a != alpha - 1:
        raise ValueError(f"expected block mode {alpha - 1}, got {q.a}")
    pieces = []
    for t in reversed(q.tokens):
        if t == DOWN:
            pieces.append("N")
            continue
        color = t.color
        if not isinstance(color, LatticePath) or not is_sp_wedge(color, t.length):
            raise ValueError(f"block of length {t.length} has invalid color {color!r}")
        pieces.append(color.word)
    return LatticePath("".join(pieces))
