"""Sign vectors: the orientation data of a type-A quiver."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator

from .errors import InvalidInput

_ALIASES = {"+": "+", "-": "-", "−": "-", 1: "+", -1: "-"}


@dataclass(frozen=True)
class SignVector:
    """Signs ``eps_0 .. eps_n`` attached to the marked points ``0..n``.

    ``eps_i`` for ``1 <= i <= n-1`` orients the arrow between vertices ``i`` and
    ``i+1`` of the quiver; ``eps_0`` and ``eps_n`` only matter for strands.
    """

    entries: tuple[str, ...]

    def __post_init__(self):
        try:
            norm = tuple(_ALIASES[e] for e in self.entries)
        except (KeyError, TypeError):
            raise InvalidInput(f"sign entries must be '+' or '-', got {self.entries!r}") from None
        if len(norm) < 2:
            raise InvalidInput(f"sign vector needs length >= 2 (n >= 1), got length {len(norm)}")
        object.__setattr__(self, "entries", norm)

    @classmethod
    def parse(cls, text: "str | SignVector | Iterable") -> "SignVector":
        if isinstance(text, SignVector):
            return text
        if isinstance(text, str):
            return cls(tuple(text.strip()))
        return cls(tuple(text))

    @classmethod
    def constant(cls, n: int, sign: str = "-") -> "SignVector":
        return cls((sign,) * (n + 1))

    @property
    def n(self) -> int:
        return len(self.entries) - 1

    def __getitem__(self, i: int) -> str:
        return self.entries[i]

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[str]:
        return iter(self.entries)

    def __str__(self) -> str:
        return "".join(self.entries)

    def is_plus(self, i: int) -> bool:
        return self.entries[i] == "+"

    def is_constant(self) -> bool:
        return len(set(self.entries)) == 1


def all_sign_vectors(n: int) -> Iterator[SignVector]:
    """Every sign vector of length ``n+1``, in lexicographic ``+ < -`` order."""
    for combo in product("+-", repeat=n + 1):
        yield SignVector(combo)
