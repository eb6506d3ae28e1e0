"""Finite bases of formal irrationals with refinable rational interval certificates.

A basis declares named symbols ``a1, a2, ...`` that stand for real numbers
which are Q-linearly independent together with 1.  Every symbol carries a
rational interval enclosing a numeric surrogate; intervals can be halved on
demand, and ordering questions about linear combinations are settled by
refining until the sign of the combination is decided.  Equality is never
decided numerically, only by coefficient inspection.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from math import isqrt
from typing import Callable, Optional

from .errors import ConfigurationError

# Symbols whose names would collide with the expression grammar's epsilon suffix.
_RESERVED_NAMES = {"e"}

_PRIMES = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61,
           67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113]


def _next_prime(n: int) -> int:
    candidate = n + 1
    while True:
        if all(candidate % p for p in range(2, isqrt(candidate) + 1)):
            return candidate
        candidate += 1


def _sqrt_refiner(p: int) -> Callable[[Fraction, Fraction], tuple[Fraction, Fraction]]:
    """Bisection step for the fractional part of sqrt(p)."""
    base = isqrt(p)

    def refine(lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
        mid = (lo + hi) / 2
        if (mid + base) * (mid + base) <= p:
            return mid, hi
        return lo, mid

    return refine


class BasisSymbol:
    """One formal irrational with its certificate interval."""

    def __init__(self, name: str, low: Fraction, high: Fraction,
                 refiner: Optional[Callable[[Fraction, Fraction], tuple[Fraction, Fraction]]],
                 refine_spec: str = "explicit"):
        if not low < high:
            raise ConfigurationError(
                f"certificate for {name!r} must satisfy low < high, got [{low}, {high}]")
        self.name = name
        self.low = low
        self.high = high
        self.refiner = refiner
        self.refine_spec = refine_spec

    def refine(self) -> None:
        if self.refiner is None:
            raise ConfigurationError(
                f"certificate for {self.name!r} is explicit and cannot be refined; "
                "a comparison needs more precision than the configured interval provides "
                "(possible declared linear dependence)")
        self.low, self.high = self.refiner(self.low, self.high)


class IrrationalBasis:
    """Ordered list of formal irrationals backing RealValue coordinates.

    Certificate refinement mutates the interval cache, so a basis must be
    used from a single thread at a time (or behind external locking).
    Values built over the basis are immutable and freely shareable.
    """

    def __init__(self, refinement_cap: int = 256, auto_extend: bool = False):
        self.symbols: list[BasisSymbol] = []
        self._index: dict[str, int] = {}
        self.refinement_cap = refinement_cap
        self.auto_extend = auto_extend
        self._prime_cursor = 1  # last prime used for auto symbols

    # -- construction -----------------------------------------------------

    @classmethod
    def default(cls, count: int = 4, refinement_cap: int = 256) -> "IrrationalBasis":
        """Basis whose i-th symbol is the fractional part of sqrt(i-th prime).

        The naming scheme is canonical, so references to later symbols (a5,
        a6, ...) extend the basis on demand; that keeps serialized artifacts
        readable by any default-basis context.
        """
        basis = cls(refinement_cap=refinement_cap, auto_extend=True)
        for _ in range(count):
            basis.append_sqrt_symbol()
        return basis

    def append_sqrt_symbol(self) -> int:
        """Append a fresh symbol backed by the next prime's sqrt fractional part."""
        if self._prime_cursor <= _PRIMES[-1]:
            nxt = next((p for p in _PRIMES if p > self._prime_cursor), None)
            p = nxt if nxt is not None else _next_prime(self._prime_cursor)
        else:
            p = _next_prime(self._prime_cursor)
        self._prime_cursor = p
        name = f"a{len(self.symbols) + 1}"
        # frac(sqrt p) lies strictly inside (0, 1) for non-square p
        return self.append(name, Fraction(0), Fraction(1), _sqrt_refiner(p),
                           refine_spec=f"bisect-sqrt:{p}")

    def append(self, name: str, low: Fraction, high: Fraction,
               refiner: Optional[Callable[[Fraction, Fraction], tuple[Fraction, Fraction]]],
               refine_spec: str = "explicit") -> int:
        if name in self._index:
            raise ConfigurationError(f"duplicate basis symbol {name!r}")
        if name in _RESERVED_NAMES:
            raise ConfigurationError(f"basis symbol name {name!r} is reserved")
        self.symbols.append(BasisSymbol(name, low, high, refiner, refine_spec))
        self._index[name] = len(self.symbols) - 1
        return len(self.symbols) - 1

    # -- lookup ------------------------------------------------------------

    def __len__(self) -> int:
        return len(self.symbols)

    def index_of(self, name: str) -> int:
        if name not in self._index and self.auto_extend:
            match = re.fullmatch(r"a([1-9][0-9]*)", name)
            if match and int(match.group(1)) > len(self.symbols):
                while len(self.symbols) < int(match.group(1)):
                    self.append_sqrt_symbol()
        try:
            return self._index[name]
        except KeyError:
            raise ConfigurationError(f"unknown basis symbol {name!r}") from None

    def name_of(self, index: int) -> str:
        return self.symbols[index].name

    def interval(self, index: int) -> tuple[Fraction, Fraction]:
        sym = self.symbols[index]
        return sym.low, sym.high

    def refine(self, index: int) -> None:
        self.symbols[index].refine()


def load_basis(path: str, refinement_cap: int = 256) -> IrrationalBasis:
    """Load a basis configuration file.

    Format: JSON list of ``{"name": .., "low": "p/q", "high": "p/q",
    "refine": "bisect-sqrt:<n>" | "explicit"}``.
    """
    try:
        with open(path, "r", encoding="utf-8") as handle:
            entries = json.load(handle)
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigurationError(f"cannot load basis file {path!r}: {exc}") from exc
    return basis_from_entries(entries, refinement_cap=refinement_cap)


def basis_from_entries(entries: list[dict], refinement_cap: int = 256) -> IrrationalBasis:
    if not isinstance(entries, list):
        raise ConfigurationError("basis configuration must be a JSON list")
    basis = IrrationalBasis(refinement_cap=refinement_cap)
    for entry in entries:
        try:
            name = entry["name"]
            low = Fraction(entry["low"])
            high = Fraction(entry["high"])
            mode = entry.get("refine", "explicit")
        except (KeyError, TypeError, ValueError) as exc:
            raise ConfigurationError(f"bad basis entry {entry!r}: {exc}") from exc
        if mode == "explicit":
            refiner = None
        elif isinstance(mode, str) and mode.startswith("bisect-sqrt:"):
            try:
                p = int(mode.split(":", 1)[1])
            except ValueError as exc:
                raise ConfigurationError(f"bad refine spec {mode!r}") from exc
            if isqrt(p) * isqrt(p) == p:
                raise ConfigurationError(f"{p} is a perfect square; sqrt({p}) is rational")
            refiner = _sqrt_refiner(p)
        else:
            raise ConfigurationError(f"unknown refine mode {mode!r}")
        basis.append(name, low, high, refiner, refine_spec=mode)
    return basis


def basis_to_entries(basis: IrrationalBasis) -> list[dict]:
    out = []
    for sym in basis.symbols:
        out.append({
            "name": sym.name,
            "low": str(sym.low),
            "high": str(sym.high),
            "refine": sym.refine_spec,
        })
    return out
