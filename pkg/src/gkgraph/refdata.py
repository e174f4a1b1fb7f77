"""Reference data: sporadic prime graphs and the expected rows of the coclique tables.

Rows are written in the tables' own notation: "r5" is one prime of R_5, "r2-2" one
prime of R_2 other than 2, "s3" one prime of S_3, "p" the characteristic and a bare
number is that prime. A theta' column is a comma list whose items are single tokens
or braced sets.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Callable

from .cocliques import CompactGraph, VertexGroup, prime_vertex, theta_structure
from .groupspec import (
    SPORADIC_NAMES,
    GroupSpec,
    OutOfScopeError,
    Vertex,
    parse_spec,
    partition,
)
from .numth import eta, nu, valuation


class RefDataError(ValueError):
    pass


class NoRowError(LookupError):
    """The group lies outside the encoded tables."""


# ---- sporadic spectra

@lru_cache(maxsize=1)
def sporadic_spectra() -> dict:
    text = resources.files("gkgraph").joinpath("data/sporadic_spectra.txt").read_text()
    out = {}
    header = False
    for lineno, line in enumerate(text.splitlines(), 1):
        if line.startswith("#"):
            header = header or "Provenance" in line
            continue
        if not line.strip():
            continue
        if ";" not in line:
            raise RefDataError(f"sporadic_spectra.txt:{lineno}: expected NAME;orders")
        name, orders = line.split(";", 1)
        try:
            out[name.strip()] = tuple(int(x) for x in orders.split(","))
        except ValueError:
            raise RefDataError(f"sporadic_spectra.txt:{lineno}: bad order list") from None
    if not header:
        raise RefDataError("sporadic_spectra.txt has no provenance header")
    missing = set(SPORADIC_NAMES + ("Tits",)) - set(out)
    if missing:
        raise RefDataError(f"sporadic_spectra.txt lacks {sorted(missing)}")
    return out


def _primes_of(m: int) -> list:
    from sympy import primefactors

    return primefactors(m)


@lru_cache(maxsize=64)
def sporadic_graph(name: str) -> CompactGraph:
    spectra = sporadic_spectra()
    if name not in spectra:
        raise RefDataError(f"no spectrum for {name!r}")
    orders = spectra[name]
    primes = sorted({r for m in orders for r in _primes_of(m)})
    vs = tuple(prime_vertex(r) for r in primes)
    edges = set()
    for i, r in enumerate(primes):
        for s in primes[i + 1:]:
            if any(m % (r * s) == 0 for m in orders):
                edges.add(frozenset((prime_vertex(r), prime_vertex(s))))
    spec = GroupSpec("Tits") if name == "Tits" else GroupSpec("Spor", name=name)
    return CompactGraph(spec, vs, frozenset(edges), host=(0,) * len(vs))


# ---- tokens

@dataclass(frozen=True)
class Token:
    kind: str  # "p", "prime", "class"
    index: int = 0
    prime: int = 0
    excluded: tuple = ()

    def __str__(self) -> str:
        if self.kind == "p":
            return "p"
        if self.kind == "prime":
            return str(self.prime)
        base = f"r_{self.index}"
        return base + "".join(f"!={x}" for x in self.excluded)


_TOKEN = re.compile(r"^(p|\d+|[rs](\d+)((?:-\d+)*))$")


def parse_token(text: str) -> Token:
    text = text.strip()
    m = _TOKEN.match(text)
    if not m:
        raise RefDataError(f"bad token {text!r}")
    if text == "p":
        return Token("p")
    if text.isdigit():
        return Token("prime", prime=int(text))
    excl = tuple(int(x) for x in m.group(3).split("-")[1:]) if m.group(3) else ()
    return Token("class", index=int(m.group(2)), excluded=excl)


def _split_top(text: str) -> list:
    out, depth, cur = [], 0, ""
    for ch in text:
        if ch == "{":
            depth += 1
        elif ch == "}":
            depth -= 1
        if ch == "," and depth == 0:
            out.append(cur)
            cur = ""
        else:
            cur += ch
    if cur.strip():
        out.append(cur)
    return [x.strip() for x in out]


def parse_set(text: str) -> tuple:
    text = text.strip()
    if text in ("", "-", "empty"):
        return ()
    if text.startswith("{"):
        text = text[1:-1]
    return tuple(parse_token(x) for x in _split_top(text))


def parse_family(text: str) -> tuple:
    text = text.strip()
    if text in ("", "-", "empty"):
        return ()
    return tuple(parse_set(item) for item in _split_top(text))


# ---- expected rows

Guard = Callable[[GroupSpec], bool]


@dataclass(frozen=True)
class ExpectedRow:
    table: str
    row: int
    family: tuple
    condition: str
    guard: Guard
    t: object  # int or callable(spec) -> int
    theta: object  # token string or callable(spec) -> token string
    theta_prime: str | Callable = ""

    def tag(self) -> str:
        return f"Table {self.table} row {self.row}"

    def resolve(self, spec: GroupSpec) -> "ResolvedRow":
        t = self.t(spec) if callable(self.t) else self.t
        th = self.theta(spec) if callable(self.theta) else self.theta
        tp = self.theta_prime(spec) if callable(self.theta_prime) else self.theta_prime
        return ResolvedRow(self, t, parse_set(th), parse_family(tp))


@dataclass(frozen=True)
class ResolvedRow:
    row: ExpectedRow
    t: int
    theta: tuple
    theta_prime: tuple


def _share(m: int, r: int) -> int:
    return r ** valuation(m, r)


def _pow2(m: int) -> bool:
    return m >= 1 and m & (m - 1) == 0


def _q(s):
    return s.qv


def _rs(indices) -> str:
    return "{" + ",".join(f"r{i}" for i in indices) + "}"


def _between(s, lo_ok, hi_ok, skip=(), fn=eta, lo=None, hi=None):
    """Indices i <= 2n with lo < fn(i) <= hi (bounds inclusive when flagged)."""
    n = s.n
    lo = n / 2 if lo is None else lo
    hi = n if hi is None else hi
    out = []
    for i in range(1, 2 * n + 1):
        v = fn(i)
        if (v > lo or (lo_ok and v == lo)) and (v < hi or (hi_ok and v == hi)) and i not in skip:
            out.append(i)
    return _rs(out)


def _nu(eps):
    return (lambda i: i) if eps > 0 else nu


def _rows_linear() -> list:
    L = []
    A, U = ("A",), ("2A",)
    add = L.append
    q = _q
    add(ExpectedRow("2", 1, A, "A_1(q), q>3", lambda s: s.n == 2, 3, "{p,r1,r2}"))
    c3 = lambda s: _share(q(s) - 1, 3) == 3  # noqa: E731
    p2 = lambda s: _pow2(q(s) + 1)  # noqa: E731
    add(ExpectedRow("2", 2, A, "(q-1)_3=3, q+1!=2^k", lambda s: s.n == 3 and c3(s) and not p2(s), 4, "{p,3,r2-2,r3}"))
    add(ExpectedRow("2", 3, A, "(q-1)_3=3, q+1=2^k", lambda s: s.n == 3 and c3(s) and p2(s), 3, "{3,p,r3}"))
    add(ExpectedRow("2", 4, A, "(q-1)_3!=3, q+1!=2^k", lambda s: s.n == 3 and not c3(s) and not p2(s), 3, "{p,r2-2,r3}"))
    add(ExpectedRow("2", 5, A, "(q-1)_3!=3, q+1=2^k", lambda s: s.n == 3 and not c3(s) and p2(s), 2, "r3", "p,r1,2"))
    add(ExpectedRow("2", 6, A, "A_3, (q-1)_2!=4", lambda s: s.n == 4 and _share(q(s) - 1, 2) != 4, 3, "{p,r3,r4}"))
    add(ExpectedRow("2", 7, A, "A_3, (q-1)_2=4", lambda s: s.n == 4 and _share(q(s) - 1, 2) == 4, 3, "{r3,r4}", "p,2"))
    add(ExpectedRow("2", 8, A, "A_4, (q-1)_5!=5", lambda s: s.n == 5 and _share(q(s) - 1, 5) != 5, 3, "{r4,r5}", "p,r3"))
    add(ExpectedRow("2", 9, A, "A_4, (q-1)_5=5", lambda s: s.n == 5 and _share(q(s) - 1, 5) == 5, 3, "{r4,r5}", "5,p,r3"))
    add(ExpectedRow("2", 10, A, "A_5, q=2", lambda s: s.n == 6 and q(s) == 2, 3, "{r3,r4,r5}"))
    add(ExpectedRow("2", 11, A, "A_5, q>2, (q-1)_3!=3", lambda s: s.n == 6 and q(s) > 2 and not c3(s), 3, "r5",
                    "{p,r6},{r3,r4},{r4,r6}"))
    add(ExpectedRow("2", 12, A, "A_5, (q-1)_3=3", lambda s: s.n == 6 and c3(s), 3, "r5",
                    "{p,r6},{r3,r4},{r4,r6},{3,r6}"))
    generic = lambda s: s.n >= 7 and (q(s) != 2 or s.n >= 13)  # noqa: E731
    add(ExpectedRow("2", 13, A, "n>=7 odd, q!=2 for 7<=n<=11", lambda s: generic(s) and s.n % 2 == 1,
                    lambda s: (s.n + 1) // 2, lambda s: _between(s, False, True, fn=lambda i: i)))
    add(ExpectedRow("2", 14, A, "n>=8 even, q!=2 for 8<=n<=12", lambda s: generic(s) and s.n % 2 == 0,
                    lambda s: (s.n + 1) // 2, lambda s: _between(s, False, False, fn=lambda i: i),
                    lambda s: f"r{s.n // 2},r{s.n}"))
    two = lambda m: (lambda s: s.n == m and q(s) == 2)  # noqa: E731
    add(ExpectedRow("2", 15, A, "n=7, q=2", two(7), 3, "{r5,r7}", "r3,r4"))
    add(ExpectedRow("2", 16, A, "n=8, q=2", two(8), 3, "r7", "{p,r8},{r5,r8},{r3,r8},{r4,r5}"))
    add(ExpectedRow("2", 17, A, "n=9, q=2", two(9), 4, "{r5,r7,r8,r9}"))
    add(ExpectedRow("2", 18, A, "n=10, q=2", two(10), 4, "{r7,r9}", "{r4,r10},{r8,r10},{r5,r8}"))
    add(ExpectedRow("2", 19, A, "n=11, q=2", two(11), 5, "{r7,r8,r9,r11}", "r5,r10"))
    add(ExpectedRow("2", 20, A, "n=12, q=2", two(12), 6, "{r7,r8,r9,r10,r11,r12}"))

    u3 = lambda s: _share(q(s) + 1, 3) == 3  # noqa: E731
    m2 = lambda s: _pow2(q(s) - 1)  # noqa: E731
    add(ExpectedRow("2", 21, U, "2A_2, (q+1)_3=3, q-1!=2^k", lambda s: s.n == 3 and u3(s) and not m2(s), 4, "{p,3,r1-2,r6}"))
    add(ExpectedRow("2", 22, U, "2A_2, (q+1)_3=3, q-1=2^k", lambda s: s.n == 3 and u3(s) and m2(s), 3, "{3,p,r6}"))
    add(ExpectedRow("2", 23, U, "2A_2, (q+1)_3!=3, q-1!=2^k", lambda s: s.n == 3 and not u3(s) and not m2(s), 3,
                    "{p,r1-2,r6}"))
    add(ExpectedRow("2", 24, U, "2A_2, (q+1)_3!=3, q-1=2^k>2",
                    lambda s: s.n == 3 and not u3(s) and m2(s) and q(s) > 3, 2, "r6", "p,r2,2"))
    add(ExpectedRow("2", 25, U, "2A_2, q=3", lambda s: s.n == 3 and q(s) == 3, 2, "r6", "p,2"))
    add(ExpectedRow("2", 26, U, "2A_3, (q+1)_2!=4, q!=2", lambda s: s.n == 4 and q(s) != 2 and _share(q(s) + 1, 2) != 4,
                    3, "{p,r6,r4}"))
    add(ExpectedRow("2", 27, U, "2A_3, (q+1)_2=4", lambda s: s.n == 4 and _share(q(s) + 1, 2) == 4, 3, "{r6,r4}", "p,2"))
    add(ExpectedRow("2", 28, U, "2A_3, q=2", lambda s: s.n == 4 and q(s) == 2, 2, "r4", "p,r2"))
    add(ExpectedRow("2", 29, U, "2A_4, q=2", lambda s: s.n == 5 and q(s) == 2, 3, "{p,r4,r10}"))
    add(ExpectedRow("2", 30, U, "2A_4, q>2, (q+1)_5!=5",
                    lambda s: s.n == 5 and q(s) > 2 and _share(q(s) + 1, 5) != 5, 3, "{r4,r10}", "p,r6"))
    add(ExpectedRow("2", 31, U, "2A_4, (q+1)_5=5", lambda s: s.n == 5 and _share(q(s) + 1, 5) == 5, 3, "{r4,r10}",
                    "5,p,r6"))
    add(ExpectedRow("2", 32, U, "2A_5, q=2", lambda s: s.n == 6 and q(s) == 2, 3, "{r10,r3}", "3,p,r4"))
    add(ExpectedRow("2", 33, U, "2A_5, (q+1)_3!=3", lambda s: s.n == 6 and not u3(s), 3, "r10",
                    "{p,r3},{r6,r4},{r4,r3}"))
    add(ExpectedRow("2", 34, U, "2A_5, q>2, (q+1)_3=3", lambda s: s.n == 6 and q(s) > 2 and u3(s), 3, "r10",
                    "{p,r3},{r6,r4},{r4,r3},{3,r3}"))
    add(ExpectedRow("2", 35, U, "2A_{n-1}, n>=7 odd", lambda s: s.n >= 7 and s.n % 2 == 1,
                    lambda s: (s.n + 1) // 2, lambda s: _between(s, False, True, fn=nu)))
    add(ExpectedRow("2", 36, U, "2A_{n-1}, n>=8 even", lambda s: s.n >= 8 and s.n % 2 == 0,
                    lambda s: (s.n + 1) // 2, lambda s: _between(s, False, False, fn=nu),
                    lambda s: f"r{nu(s.n // 2)},r{nu(s.n)}"))
    return L


def _rows_orthsymp() -> list:
    L = []
    add = L.append
    BC, D, U = ("B", "C"), ("D",), ("2D",)
    q = _q
    at = lambda n, qq=None: (lambda s: s.n == n and (qq is None or q(s) == qq))  # noqa: E731
    add(ExpectedRow("3", 1, BC, "n=2, q=3", at(2, 3), 2, "r4", "p,r2"))
    add(ExpectedRow("3", 2, BC, "n=2, q>3", lambda s: s.n == 2 and q(s) > 3, 2, "r4", "p,r1,r2"))
    add(ExpectedRow("3", 3, BC, "n=3, q=2", at(3, 2), 2, "r3", "p,r2,r4"))
    add(ExpectedRow("3", 4, BC, "n=3, q>2", lambda s: s.n == 3 and q(s) > 2, 3, "{r3,r6}", "p,r4"))
    add(ExpectedRow("3", 5, BC, "n=4, q=2", at(4, 2), 3, "{r3,r4,r8}"))
    add(ExpectedRow("3", 6, BC, "n=5, q=2", at(5, 2), 4, "{r5,r8,r10}", "r3,r4"))
    add(ExpectedRow("3", 7, BC, "n=6, q=2", at(6, 2), 5, "{r3,r5,r8,r10,r12}"))
    add(ExpectedRow("3", 8, BC, "n=7, q=2", at(7, 2), 6, "{r5,r7,r10,r12,r14}", "r3,r8"))
    tb = lambda s: (3 * s.n + 5) // 4  # noqa: E731
    off = lambda *pairs: (lambda s: (s.n, q(s)) not in pairs)  # noqa: E731
    add(ExpectedRow("3", 9, BC, "n>3, n=0,1 mod 4, (n,q)!=(4,2),(5,2)",
                    lambda s: s.n > 3 and s.n % 4 in (0, 1) and off((4, 2), (5, 2))(s), tb,
                    lambda s: _between(s, True, True)))
    add(ExpectedRow("3", 10, BC, "n>3, n=2 mod 4, (n,q)!=(6,2)",
                    lambda s: s.n > 3 and s.n % 4 == 2 and off((6, 2))(s), tb,
                    lambda s: _between(s, False, True), lambda s: f"r{s.n // 2},r{s.n}"))
    add(ExpectedRow("3", 11, BC, "n>3, n=3 mod 4, (n,q)!=(7,2)",
                    lambda s: s.n > 3 and s.n % 4 == 3 and off((7, 2))(s), tb,
                    lambda s: _between(s, False, True, lo=(s.n + 1) / 2),
                    lambda s: f"r{(s.n - 1) // 2},r{s.n - 1},r{s.n + 1}"))

    add(ExpectedRow("3", 12, D, "n=4, q=2", at(4, 2), 2, "r3", "p,r2,r4"))
    add(ExpectedRow("3", 13, D, "n=4, q>2", lambda s: s.n == 4 and q(s) > 2, 3, "{r3,r6}", "p,r4"))
    add(ExpectedRow("3", 14, D, "n=5, q=2", at(5, 2), 4, "{r3,r4,r5,r8}"))
    add(ExpectedRow("3", 15, D, "n=6, q=2", at(6, 2), 4, "{r3,r5,r8,r10}"))
    td = lambda s: (3 * s.n + 1) // 4  # noqa: E731
    add(ExpectedRow("3", 16, D, "n>4, n=0 mod 4", lambda s: s.n > 4 and s.n % 4 == 0, td,
                    lambda s: _between(s, True, True, skip=(2 * s.n,))))
    add(ExpectedRow("3", 17, D, "n>4, n=1 mod 4, (n,q)!=(5,2)",
                    lambda s: s.n > 4 and s.n % 4 == 1 and off((5, 2))(s), td,
                    lambda s: _between(s, False, True, skip=(2 * s.n, s.n + 1)),
                    lambda s: f"r{s.n - 1},r{s.n + 1}"))
    add(ExpectedRow("3", 18, D, "n>4, n=2 mod 4, (n,q)!=(6,2)",
                    lambda s: s.n > 4 and s.n % 4 == 2 and off((6, 2))(s), td,
                    lambda s: _between(s, False, True, skip=(2 * s.n,)), lambda s: f"r{s.n // 2},r{s.n}"))
    add(ExpectedRow("3", 19, D, "n>4, n=3 mod 4", lambda s: s.n > 4 and s.n % 4 == 3,
                    lambda s: (3 * s.n + 3) // 4,
                    lambda s: _between(s, True, True, skip=(2 * s.n, s.n - 1), lo=(s.n - 1) / 2)))

    add(ExpectedRow("3", 20, U, "n=4, q=2", at(4, 2), 3, "{r3,r8}", "p,r4"))
    add(ExpectedRow("3", 21, U, "n=4, q>2", lambda s: s.n == 4 and q(s) > 2, 4, "{r3,r6,r8}", "p,r4"))
    add(ExpectedRow("3", 22, U, "n=5, q=2", at(5, 2), 3, "{r8,r10}", "p,r3,r4"))
    add(ExpectedRow("3", 23, U, "n=6, q=2", at(6, 2), 5, "{r5,r8,r10,r12}", "r3,r4"))
    add(ExpectedRow("3", 24, U, "n=7, q=2", at(7, 2), 5, "{r5,r10,r12,r14}", "r3,r8"))
    tu = lambda s: (3 * s.n + 4) // 4  # noqa: E731
    add(ExpectedRow("3", 25, U, "n>4, n=0 mod 4", lambda s: s.n > 4 and s.n % 4 == 0, tu,
                    lambda s: _between(s, True, True)))
    add(ExpectedRow("3", 26, U, "n>4, n=1 mod 4, (n,q)!=(5,2)",
                    lambda s: s.n > 4 and s.n % 4 == 1 and off((5, 2))(s), tu,
                    lambda s: _between(s, False, True, skip=(s.n, (s.n + 1) // 2)),
                    lambda s: f"r{(s.n + 1) // 2},r{s.n - 1}"))
    add(ExpectedRow("3", 27, U, "n>4, n=2 mod 4, (n,q)!=(6,2)",
                    lambda s: s.n > 4 and s.n % 4 == 2 and off((6, 2))(s), tu,
                    lambda s: _between(s, False, True), lambda s: f"r{s.n // 2},r{s.n - 2},r{s.n}"))
    add(ExpectedRow("3", 28, U, "n>4, n=3 mod 4, (n,q)!=(7,2)",
                    lambda s: s.n > 4 and s.n % 4 == 3 and off((7, 2))(s), tu,
                    lambda s: _between(s, True, True, skip=(s.n, (s.n - 1) // 2), lo=(s.n - 1) / 2)))
    return L


def _is_power_of(q: int, p: int) -> bool:
    while q % p == 0:
        q //= p
    return q == 1


def _rows_exceptional() -> list:
    L = []
    add = L.append
    q = _q
    add(ExpectedRow("4", 1, ("G2",), "q=3,4", lambda s: q(s) in (3, 4), 3, "{r3,r6}", "p,r2"))
    add(ExpectedRow("4", 2, ("G2",), "q=8", lambda s: q(s) == 8, 3, "{r3,r6}", "p,r1"))
    add(ExpectedRow("4", 3, ("G2",), "q=3^m>3", lambda s: s.p == 3 and q(s) > 3, 3, "{r3,r6}", "p,r1,r2"))
    add(ExpectedRow("4", 4, ("G2",), "q=1 mod 3, q!=4", lambda s: q(s) % 3 == 1 and q(s) != 4, 3, "{r3,r6}",
                    "p,r2,r1-3"))
    add(ExpectedRow("4", 5, ("G2",), "q=2 mod 3, q!=8", lambda s: q(s) % 3 == 2 and q(s) != 8, 3, "{r3,r6}",
                    "p,r1,r2-3"))
    add(ExpectedRow("4", 6, ("F4",), "q=2", lambda s: q(s) == 2, 4, "{r3,r4,r8,r12}"))
    add(ExpectedRow("4", 7, ("F4",), "q>2", lambda s: q(s) > 2, 5, "{r3,r4,r6,r8,r12}"))
    add(ExpectedRow("4", 8, ("E6",), "q=2", lambda s: q(s) == 2, 5, "{r4,r5,r8,r9}", "r3,r12"))
    add(ExpectedRow("4", 9, ("E6",), "q>2", lambda s: q(s) > 2, 5, "{r5,r8,r9}", "{r3,r4},{r4,r12},{r6,r12}"))
    add(ExpectedRow("4", 10, ("2E6",), "q=2", lambda s: q(s) == 2, 5, "{r8,r10,r12,r18}", "r3,r4"))
    add(ExpectedRow("4", 11, ("2E6",), "q>2", lambda s: q(s) > 2, 5, "{r8,r10,r18}",
                    "{r3,r12},{r4,r6},{r4,r12}"))
    add(ExpectedRow("4", 12, ("E7",), "", lambda s: True, 8, "{r5,r7,r9,r10,r12,r14,r18}", "r4,r8"))
    add(ExpectedRow("4", 13, ("E8",), "", lambda s: True, 12,
                    "{r5,r7,r8,r9,r10,r12,r14,r15,r18,r20,r24,r30}"))
    add(ExpectedRow("4", 14, ("3D4",), "q=2", lambda s: q(s) == 2, 2, "r12", "p,r2,r3"))
    add(ExpectedRow("4", 15, ("3D4",), "q>2", lambda s: q(s) > 2, 3, "{r3,r6,r12}"))
    add(ExpectedRow("4", 16, ("2B2",), "n>=1", lambda s: True, 4, "{p,s1,s2,s3}"))
    add(ExpectedRow("4", 17, ("2G2",), "n>=1", lambda s: True, 5, "{p,s1,s2,s3,s4}"))
    add(ExpectedRow("4", 18, ("2F4",), "n>=2", lambda s: q(s) > 8, 5, "{s2,s3,s4,s5,s6}"))
    add(ExpectedRow("4", 19, ("2F4",), "q=8", lambda s: q(s) == 8, 4, "{s5,s6}", "{3,s3},{s1,s4},{p,s4},{s3,s4}"))
    add(ExpectedRow("4", 20, ("Tits",), "", lambda s: True, 3, "{3,5,13}"))
    return L


SPORADIC_TABLE = {
    "M11": (3, "{5,11}", "2,3"), "M12": (3, "{3,5,11}", ""), "M22": (4, "{5,7,11}", "2,3"),
    "M23": (4, "{11,23}", "{2,5},{3,7}"), "M24": (4, "{5,7,11,23}", ""),
    "J1": (4, "{7,11,19}", "2,3,5"), "J2": (2, "7", "2,3,5"), "J3": (3, "{17,19}", "2,3,5"),
    "J4": (7, "{11,23,29,31,37,43}", "5,7"), "Ru": (4, "{7,13,29}", "3,5"),
    "He": (3, "{5,7,17}", ""), "McL": (3, "{7,11}", "3,5"), "HN": (3, "{11,19}", "3,5,7"),
    "HiS": (3, "{7,11}", "2,3,5"), "Suz": (4, "{5,7,11,13}", ""), "Co1": (4, "{11,13,23}", "5,7"),
    "Co2": (4, "{7,11,23}", "3,5"), "Co3": (4, "{5,7,11,23}", ""), "Fi22": (4, "{5,7,11,13}", ""),
    "Fi23": (5, "{11,13,17,23}", "5,7"), "Fi24'": (6, "{11,13,17,23,29}", "5,7"),
    "O'N": (5, "{7,11,19,31}", "3,5"), "LyS": (6, "{5,7,11,31,37,67}", ""),
    "F1": (11, "{11,13,19,23,29,31,41,47,59,71}", "7,17"),
    "F2": (8, "{7,11,13,17,19,23,31,47}", ""), "F3": (5, "{5,7,13,19,31}", ""),
}


def _rows_sporadic() -> list:
    return [ExpectedRow("1", i, ("Spor",), name, (lambda s, nm=name: s.name == nm), t, th, tp)
            for i, (name, (t, th, tp)) in enumerate(SPORADIC_TABLE.items(), 1)]


@lru_cache(maxsize=1)
def all_rows() -> tuple:
    return tuple(_rows_sporadic() + _rows_linear() + _rows_orthsymp() + _rows_exceptional())


def candidates(spec: GroupSpec) -> list:
    return [r for r in all_rows() if spec.family in r.family and r.guard(spec)]


def expected(spec: GroupSpec) -> ResolvedRow:
    rows = candidates(spec)
    if not rows:
        raise NoRowError(f"{spec} is not covered by the tables")
    if len(rows) > 1:
        raise RefDataError(f"{spec} matches {', '.join(r.tag() for r in rows)}")
    return rows[0].resolve(spec)


def check_guards(specs) -> list:
    """Specs matched by zero or by several rows (the guards must partition each family)."""
    bad = []
    for spec in specs:
        rows = candidates(spec)
        if len(rows) != 1:
            bad.append((str(spec), [r.tag() for r in rows]))
    return bad


# ---- comparison

def _class_vertices(spec: GroupSpec, i: int) -> frozenset:
    part = partition(spec)
    kind = "S" if spec.family in ("2B2", "2G2", "2F4") else "R"
    out = {Vertex("prime", h, r) for r, h in part.special_primes if h == i}
    if part.residual(i) > 1:
        out.add(Vertex(kind, i))
    return frozenset(out)


def token_matches(spec: GroupSpec, token: Token, group: VertexGroup) -> bool:
    members = frozenset(group.members)
    if token.kind == "p":
        return len(members) == 1 and next(iter(members)).kind == "p"
    if token.kind == "prime":
        return len(members) == 1 and next(iter(members)).kind == "prime" and next(iter(members)).prime == token.prime
    want = _class_vertices(spec, token.index)
    want = frozenset(v for v in want if not (v.kind == "prime" and v.prime in token.excluded))
    return bool(want) and members == want


def _present(spec: GroupSpec, token: Token) -> bool:
    """False for class tokens with nothing left for this q (the tables list them regardless)."""
    if token.kind != "class" or not spec.is_lie:
        return True
    return any(not (v.kind == "prime" and v.prime in token.excluded)
               for v in _class_vertices(spec, token.index))


def _match_sets(spec, tokens, groups) -> bool:
    tokens, groups = list(tokens), list(groups)
    if len(tokens) != len(groups):
        return False
    adj = [[j for j, g in enumerate(groups) if token_matches(spec, tk, g)] for tk in tokens]
    owner = [-1] * len(groups)

    def augment(i, seen):
        for j in adj[i]:
            if j in seen:
                continue
            seen.add(j)
            if owner[j] < 0 or augment(owner[j], seen):
                owner[j] = i
                return True
        return False

    return all(augment(i, set()) for i in range(len(tokens)))


def _match_families(spec, fam_tokens, fam_groups) -> bool:
    if len(fam_tokens) != len(fam_groups):
        return False
    adj = [[j for j, g in enumerate(fam_groups) if _match_sets(spec, tk, g)] for tk in fam_tokens]
    owner = [-1] * len(fam_groups)

    def augment(i, seen):
        for j in adj[i]:
            if j in seen:
                continue
            seen.add(j)
            if owner[j] < 0 or augment(owner[j], seen):
                owner[j] = i
                return True
        return False

    return all(augment(i, set()) for i in range(len(fam_tokens)))


@dataclass(frozen=True)
class VerifyResult:
    spec: GroupSpec
    row: str
    ok: bool
    diffs: tuple
    notes: tuple = ()

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        tail = "" if self.ok else " :: " + "; ".join(self.diffs)
        return f"{status} {self.spec} [{self.row}]{tail}"


def _fmt_groups(groups) -> str:
    return "{" + ",".join(g.label for g in groups) + "}"


def verify(spec: GroupSpec) -> VerifyResult:
    exp = expected(spec)
    rep = theta_structure(spec)
    notes = []
    theta = tuple(tk for tk in exp.theta if _present(spec, tk))
    fam = [tuple(tk for tk in member if _present(spec, tk)) for member in exp.theta_prime]
    dropped = len(theta) != len(exp.theta) or any(len(a) != len(b) for a, b in zip(fam, exp.theta_prime))
    fam = [m for m in fam if m]
    t_exp = exp.t
    if dropped:
        notes.append("empty classes dropped from the row")
        if len(fam) == 1:
            theta, fam = theta + fam[0], []
        t_exp = len(theta) + (len(fam[0]) if fam else 0)
    diffs = []
    if rep.t != t_exp:
        diffs.append(f"t: computed {rep.t}, table {t_exp}")
    if not _match_sets(spec, theta, rep.theta):
        diffs.append(f"theta: computed {_fmt_groups(rep.theta)}, table {{{','.join(map(str, theta))}}}")
    if not _match_families(spec, fam, rep.theta_prime):
        got = ", ".join(_fmt_groups(x) for x in rep.theta_prime) or "empty"
        want = ", ".join("{" + ",".join(map(str, m)) + "}" for m in fam) or "empty"
        diffs.append(f"theta': computed {got}, table {want}")
    return VerifyResult(spec, exp.row.tag(), not diffs, tuple(diffs), tuple(notes) + rep.notes)


# ---- sweep ranges

def prime_powers(limit: int) -> list:
    from sympy import factorint

    return [q for q in range(2, limit + 1) if len(factorint(q)) == 1]


def sweep_specs(table: str, n_max: int | None = None, q_max: int | None = None) -> list:
    """The group strings covered by one table within the bounds."""
    out = []

    def add(text):
        try:
            out.append(parse_spec(text))
        except Exception:
            pass

    if table == "1":
        for name in SPORADIC_NAMES:
            add(f"Spor:{name}")
        add("Tits")
    elif table == "2":
        n_max, q_max = n_max or 13, q_max or 32
        for q in prime_powers(q_max):
            for n in range(2, n_max + 1):
                add(f"A:{n - 1}:{q}")
                add(f"2A:{n - 1}:{q}")
    elif table == "3":
        n_max, q_max = n_max or 19, q_max or 32
        for q in prime_powers(q_max):
            for n in range(2, n_max + 1):
                if n > 12 and q > 9:
                    continue
                for f in ("B", "C", "D", "2D"):
                    add(f"{f}:{n}:{q}")
    elif table == "4":
        q_max = q_max or 32
        for q in prime_powers(q_max):
            for f in ("G2", "F4", "E6", "2E6", "E7", "E8", "3D4", "2B2", "2G2", "2F4"):
                add(f"{f}:{q}")
        add("Tits")
    else:
        raise OutOfScopeError(f"unknown table {table!r}")
    return out
