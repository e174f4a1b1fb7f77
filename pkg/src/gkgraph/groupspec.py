"""Group identities, the index set I(G) and the partition of pi(G) into classes."""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from sympy import primerange

from .numth import (
    NumthError,
    PrimePower,
    class_nonempty,
    eta,
    kval,
    nu_eps,
    prim_index,
    strip_primes,
    suzuki_ree_divisor,
)

SPORADIC_NAMES = (
    "M11", "M12", "M22", "M23", "M24", "J1", "J2", "J3", "J4", "Ru", "He",
    "McL", "HN", "HiS", "Suz", "Co1", "Co2", "Co3", "Fi22", "Fi23", "Fi24'",
    "O'N", "LyS", "F1", "F2", "F3",
)
SPORADIC_ALIASES = {
    "HS": "HiS", "Ly": "LyS", "ON": "O'N", "Fi24": "Fi24'", "M": "F1",
    "B": "F2", "Th": "F3",
}

CLASSICAL = ("A", "2A", "B", "C", "D", "2D")
EXCEPTIONAL = ("G2", "F4", "E6", "2E6", "E7", "E8", "3D4")
SUZREE = ("2B2", "2G2", "2F4")
FAMILIES = ("Alt", "Spor", "Tits") + CLASSICAL + EXCEPTIONAL + SUZREE

EXCEPTIONAL_INDICES = {
    "G2": (1, 2, 3, 6),
    "F4": (1, 2, 3, 4, 6, 8, 12),
    "E6": (1, 2, 3, 4, 5, 6, 8, 9, 12),
    "2E6": (1, 2, 3, 4, 6, 8, 10, 12, 18),
    "E7": (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 14, 18),
    "E8": (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 14, 15, 18, 20, 24, 30),
    "3D4": (1, 2, 3, 6, 12),
}

# indices outside the clique {p, low classes} of each compact form
EXCEPTIONAL_HIGH = {
    "G2": (3, 6),
    "F4": (4, 6, 8, 12),
    "E6": (4, 5, 8, 9, 12),
    "2E6": (4, 8, 10, 12, 18),
    "E7": (5, 7, 8, 9, 10, 12, 14, 18),
    "E8": (5, 7, 8, 9, 10, 12, 14, 15, 18, 20, 24, 30),
    "3D4": (3, 6, 12),
}


class SpecError(ValueError):
    """Base class for rejected group strings."""


class GrammarError(SpecError):
    pass


class PrimePowerError(SpecError):
    pass


class NotSimpleError(SpecError):
    pass


class OutOfScopeError(SpecError):
    pass


@dataclass(frozen=True)
class GroupSpec:
    """One finite simple group. For the A families n is the matrix dimension."""

    family: str
    n: int | None = None
    q: PrimePower | None = None
    name: str | None = None

    @property
    def eps(self) -> int:
        return -1 if self.family in ("2A", "2D", "2E6") else 1

    @property
    def p(self) -> int | None:
        return self.q.p if self.q else None

    @property
    def qv(self) -> int:
        return self.q.q

    @property
    def tower(self) -> int:
        """n with q = p^(2n+1) for Suzuki and Ree groups."""
        return (self.q.alpha - 1) // 2

    @property
    def is_lie(self) -> bool:
        return self.family in CLASSICAL + EXCEPTIONAL + SUZREE

    def __str__(self) -> str:
        if self.family == "Spor":
            return f"Spor:{self.name}"
        if self.family == "Tits":
            return "Tits"
        if self.family == "Alt":
            return f"Alt:{self.n}"
        if self.family in ("A", "2A"):
            return f"{self.family}:{self.n - 1}:{self.q}"
        if self.family in CLASSICAL:
            return f"{self.family}:{self.n}:{self.q}"
        return f"{self.family}:{self.q}"

    def tex(self) -> str:
        if self.family == "Spor":
            return self.name
        if self.family in ("A", "2A"):
            return f"{self.family}_{self.n - 1}({self.q})"
        if self.family in CLASSICAL:
            return f"{self.family}_{self.n}({self.q})"
        return str(self)


_GRAMMAR = re.compile(r"^\s*([A-Za-z0-9']+)((?::[^:]+)*)\s*$")


def _parse_q(text: str) -> PrimePower:
    text = text.strip()
    try:
        if "^" in text:
            p, a = (int(x) for x in text.split("^"))
            pp = PrimePower.from_int(p)
            if pp.alpha != 1 or a < 1:
                raise PrimePowerError(f"{text} is not of the form p^a with p prime")
            return PrimePower(p, a)
        return PrimePower.from_int(int(text))
    except (NumthError, ValueError) as exc:
        if isinstance(exc, SpecError):
            raise
        raise PrimePowerError(f"{text!r} is not a prime power") from exc


def _int(text: str, what: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise GrammarError(f"{what} must be an integer, got {text!r}") from None


def parse_spec(text: str) -> GroupSpec:
    """Parse FAMILY[:n][:q], e.g. 'B:4:3', '2A:5:4', 'E8:7', 'Alt:19', 'Spor:M23', 'Tits'.

    For the A families the middle field is the Lie rank, so 'A:5:4' is A_5(4) = L_6(4).
    """
    m = _GRAMMAR.match(text or "")
    if not m:
        raise GrammarError(f"cannot parse group {text!r}")
    fam = m.group(1)
    args = [a for a in m.group(2).split(":") if a != ""] if m.group(2) else []
    upper = {f.upper(): f for f in FAMILIES}
    if fam.upper() not in upper:
        raise GrammarError(f"unknown family {fam!r}")
    fam = upper[fam.upper()]

    if fam == "Tits":
        if args:
            raise GrammarError("Tits takes no parameters")
        return GroupSpec("Tits")
    if fam == "Spor":
        if len(args) != 1:
            raise GrammarError("expected Spor:NAME")
        return GroupSpec("Spor", name=sporadic_name(args[0]))
    if fam == "Alt":
        if len(args) != 1:
            raise GrammarError("expected Alt:n")
        n = _int(args[0], "degree")
        if n < 5:
            raise NotSimpleError(f"Alt_{n} is not simple (need n >= 5)")
        return GroupSpec("Alt", n=n)
    if fam in CLASSICAL:
        if len(args) != 2:
            raise GrammarError(f"expected {fam}:n:q")
        rank = _int(args[0], "rank")
        q = _parse_q(args[1])
        n = rank + 1 if fam in ("A", "2A") else rank
        spec = GroupSpec(fam, n=n, q=q)
    else:
        if len(args) != 1:
            raise GrammarError(f"expected {fam}:q")
        spec = GroupSpec(fam, q=_parse_q(args[0]))
    validate(spec)
    return spec


def sporadic_name(raw: str) -> str:
    raw = raw.strip()
    for name in SPORADIC_NAMES:
        if raw.lower() == name.lower():
            return name
    for alias, name in SPORADIC_ALIASES.items():
        if raw.lower() == alias.lower():
            return name
    raise GrammarError(f"unknown sporadic group {raw!r}")


def validate(spec: GroupSpec) -> GroupSpec:
    """Apply the simplicity gates; raise NotSimpleError with the reason."""
    f, n = spec.family, spec.n
    q = spec.qv if spec.q else None
    if f == "A":
        if n < 2:
            raise NotSimpleError("A_n needs n >= 1")
        if n == 2 and q <= 3:
            raise NotSimpleError(f"A_1({q}) is not simple (need q > 3)")
    elif f == "2A":
        if n < 3:
            raise NotSimpleError("2A_n needs n >= 2")
        if n == 3 and q == 2:
            raise NotSimpleError("2A_2(2) is not simple")
    elif f in ("B", "C"):
        if n < 2:
            raise NotSimpleError(f"{f}_n needs n >= 2")
        if n == 2 and q == 2:
            raise NotSimpleError(f"{f}_2(2) is not simple")
    elif f in ("D", "2D"):
        if n < 4:
            raise NotSimpleError(f"{f}_n needs n >= 4")
    elif f == "G2":
        if q < 3:
            raise NotSimpleError("G2(2) is not simple")
    elif f in SUZREE:
        base = 3 if f == "2G2" else 2
        a = spec.q.alpha
        if spec.q.p != base or a % 2 == 0:
            raise OutOfScopeError(f"{f} needs q = {base}^(2m+1)")
        if a == 1:
            hint = "; use Tits for its derived subgroup" if f == "2F4" else ""
            raise NotSimpleError(f"{f}({q}) is not simple{hint}")
    return spec


def alt_pi(n: int) -> tuple:
    if n < 5:
        raise NotSimpleError("need n >= 5")
    return tuple(primerange(2, n + 1))


@dataclass(frozen=True, order=True)
class Vertex:
    """A vertex of the compact graph: p, a split-out prime, or a class R_i / S_i."""

    kind: str
    index: int = 0
    prime: int = 0

    @property
    def label(self) -> str:
        if self.kind == "p":
            return "p"
        if self.kind == "prime":
            return str(self.prime)
        return f"{self.kind}_{self.index}"

    def sort_key(self) -> tuple:
        order = {"p": 0, "prime": 1, "R": 2, "S": 2}
        return (order[self.kind], self.prime, self.index)

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class ClassPartition:
    spec: GroupSpec
    characteristic: int | None
    classes: tuple  # (index, residual cofactor, full k value)
    special_primes: tuple  # (prime, host index or 0)
    index_set: tuple
    high_band: tuple

    def vertices(self) -> tuple:
        vs = []
        if self.characteristic:
            vs.append(Vertex("p", 0, self.characteristic))
        for r, host in self.special_primes:
            vs.append(Vertex("prime", host, r))
        kind = "S" if self.spec.family in SUZREE else "R"
        for i, _, _ in self.classes:
            vs.append(Vertex(kind, i))
        return tuple(sorted(vs, key=Vertex.sort_key))

    def residual(self, index: int) -> int:
        for i, res, _ in self.classes:
            if i == index:
                return res
        return 1

    def hosted(self, index: int) -> tuple:
        return tuple(r for r, h in self.special_primes if h == index)


def candidate_indices(spec: GroupSpec) -> tuple:
    f, n = spec.family, spec.n
    if f in ("A", "2A"):
        return tuple(sorted(i for i in range(1, 2 * n + 1) if nu_eps(i, spec.eps) <= n))
    if f in ("B", "C", "D", "2D"):
        out = [i for i in range(1, 2 * n + 1) if eta(i) <= n]
        if f == "D":
            out = [i for i in out if i != 2 * n]
        if f == "2D" and n % 2:
            out = [i for i in out if i != n]
        return tuple(out)
    if f in EXCEPTIONAL_INDICES:
        return EXCEPTIONAL_INDICES[f]
    if f in SUZREE:
        return tuple(range(1, {"2B2": 4, "2G2": 5, "2F4": 7}[f]))
    raise OutOfScopeError(f"{f} has no index set")


def _suzree_value(spec: GroupSpec, i: int) -> int:
    drop = {"2B2": (), "2G2": (2,), "2F4": (3,)}[spec.family]
    return strip_primes(suzuki_ree_divisor(spec.family, spec.tower, i), drop)


def index_set(spec: GroupSpec) -> tuple:
    """I(G): indices whose primitive class meets pi(G)."""
    if spec.family in SUZREE:
        return tuple(i for i in candidate_indices(spec) if _suzree_value(spec, i) > 1)
    return tuple(i for i in candidate_indices(spec) if class_nonempty(i, spec.qv))


def special_primes(spec: GroupSpec) -> tuple:
    """Primes carved out of their class as their own vertices, with host index."""
    f, q, p = spec.family, spec.qv if spec.q else 0, spec.p
    out = []
    if f in ("A", "2A"):
        if p != 2:
            out.append((2, prim_index(2, q)))
        d = _gcd(spec.n, q - spec.eps)
        for r in primerange(3, d + 1):
            if d % r == 0:
                out.append((r, prim_index(r, q)))
    elif f in ("B", "C", "D", "2D", "F4"):
        if p != 2:
            out.append((2, prim_index(2, q)))
    elif f == "G2":
        if p != 3:
            out.append((3, prim_index(3, q)))
    elif f in ("E6", "2E6"):
        if p != 3 and (q - spec.eps) % 3 == 0:
            out.append((3, prim_index(3, q)))
    elif f == "E8":
        if p != 5 and prim_index(5, q) == 4:
            out.append((5, 4))
    elif f == "2G2":
        out.append((2, 0))
    elif f == "2F4":
        out.append((3, 0))
    return tuple(out)


def _gcd(a: int, b: int) -> int:
    from math import gcd

    return gcd(a, abs(b))


def high_band(spec: GroupSpec, indices) -> tuple:
    f, n = spec.family, spec.n
    if f in ("A", "2A"):
        return tuple(i for i in indices if 2 * nu_eps(i, spec.eps) > n)
    if f in ("B", "C", "D", "2D"):
        return tuple(i for i in indices if 2 * eta(i) > n)
    if f in EXCEPTIONAL_HIGH:
        return tuple(i for i in indices if i in EXCEPTIONAL_HIGH[f])
    return tuple(indices)


@lru_cache(maxsize=4096)
def partition(spec: GroupSpec) -> ClassPartition:
    """Split pi(G) into p, the split-out primes and the residual classes."""
    if not spec.is_lie:
        raise OutOfScopeError(f"{spec} has no class partition")
    idx = index_set(spec)
    specials = special_primes(spec)
    classes = []
    for i in idx:
        full = _suzree_value(spec, i) if spec.family in SUZREE else kval(i, spec.qv)
        hosted = [r for r, h in specials if h == i]
        res = strip_primes(full, hosted)
        if res > 1:
            classes.append((i, res, full))
    return ClassPartition(
        spec=spec,
        characteristic=spec.p,
        classes=tuple(classes),
        special_primes=specials,
        index_set=idx,
        high_band=high_band(spec, idx),
    )


def exceptional_order(family: str, q: int) -> int:
    """|G(q)| for the exceptional families with fixed index lists."""
    def P(*ks, sign=-1):
        out = 1
        for k in ks:
            out *= q**k + (1 if sign > 0 else -1)
        return out

    from math import gcd

    if family == "G2":
        return q**6 * P(2, 6)
    if family == "F4":
        return q**24 * P(2, 6, 8, 12)
    if family == "E6":
        return q**36 * P(2, 5, 6, 8, 9, 12) // gcd(3, q - 1)
    if family == "2E6":
        return q**36 * P(2, 6, 8, 12) * P(5, 9, sign=1) // gcd(3, q + 1)
    if family == "E7":
        return q**63 * P(2, 6, 8, 10, 12, 14, 18) // gcd(2, q - 1)
    if family == "E8":
        return q**120 * P(2, 8, 12, 14, 18, 20, 24, 30)
    if family == "3D4":
        return q**12 * P(2, 6) * (q**8 + q**4 + 1)
    raise OutOfScopeError(family)


def check_exceptional_indices(q: int) -> None:
    """Every listed index divides the group order, and no index outside the list does."""
    for fam, idx in EXCEPTIONAL_INDICES.items():
        order = exceptional_order(fam, q)
        for i in range(1, 61):
            if not class_nonempty(i, q):
                continue
            k = kval(i, q)
            if i in idx:
                assert order % k == 0, (fam, q, i)
            else:
                assert _gcd(order, k) == 1, (fam, q, i)


def class_index_of(spec: GroupSpec, r: int) -> int:
    """The class of an explicit prime r != p."""
    return prim_index(r, spec.qv)

