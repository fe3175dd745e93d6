"""
Vertex and clique codes.

A code is a finite word over the alphabet {1, ..., d+1}. The empty code is the
root vertex; the code of a vertex records which sub-simplex was entered at each
subdivision, so its length is the vertex's generation.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Union

from apollonian.errors import AbsentSymbol, InvalidArgument


@dataclass(frozen=True, slots=True)
class Code:
    """An immutable word over {1, ..., dim+1}."""
    symbols: tuple[int, ...]
    dim: int

    def __post_init__(self):
        if self.dim < 1:
            raise InvalidArgument(f"code dimension must be >= 1, got {self.dim}")
        top = self.dim + 1
        for symbol in self.symbols:
            if not 1 <= symbol <= top:
                raise InvalidArgument(f"symbol {symbol} outside alphabet 1..{top}")

    # ---------------------------------------------------------------------------
    # Construction
    # ---------------------------------------------------------------------------

    @classmethod
    def root(cls, dim: int) -> "Code":
        return cls((), dim)

    @classmethod
    def of(cls, symbols: Iterable[int], dim: int) -> "Code":
        return cls(tuple(int(s) for s in symbols), dim)

    @classmethod
    def parse(cls, text: str, dim: int) -> "Code":
        """Read the serialized form: digits when d+1 <= 9, comma-separated otherwise."""
        text = text.strip()
        if not text:
            return cls.root(dim)
        try:
            if dim + 1 <= 9:
                symbols = tuple(int(ch) for ch in text)
            else:
                symbols = tuple(int(part) for part in text.split(","))
        except ValueError:
            raise InvalidArgument(f"malformed code {text!r} for d={dim}") from None
        return cls(symbols, dim)

    @classmethod
    def _trusted(cls, symbols: tuple[int, ...], dim: int) -> "Code":
        # Skips validation; only for words assembled from already valid codes.
        code = object.__new__(cls)
        object.__setattr__(code, "symbols", symbols)
        object.__setattr__(code, "dim", dim)
        return code

    def child(self, symbol: int) -> "Code":
        _check_symbol(self.dim, symbol)
        return Code._trusted(self.symbols + (symbol,), self.dim)

    def prefix(self, length: int) -> "Code":
        return Code._trusted(self.symbols[:length], self.dim)

    def suffix(self, start: int) -> "Code":
        """The word after the first `start` symbols."""
        return Code._trusted(self.symbols[start:], self.dim)

    # ---------------------------------------------------------------------------
    # Views
    # ---------------------------------------------------------------------------

    @property
    def alphabet_size(self) -> int:
        return self.dim + 1

    @property
    def is_root(self) -> bool:
        return not self.symbols

    def __len__(self) -> int:
        return len(self.symbols)

    def __str__(self) -> str:
        if self.dim + 1 <= 9:
            return "".join(str(s) for s in self.symbols)
        return ",".join(str(s) for s in self.symbols)

    def __repr__(self) -> str:
        return f"Code({str(self)!r}, d={self.dim})"


@dataclass(frozen=True, slots=True)
class Corner:
    """Initial corner vertex i, the vertex an absent-symbol cut resolves to."""
    index: int

    def __str__(self) -> str:
        return f"#{self.index}"


Label = Union[Code, Corner]


def _check_symbol(dim: int, symbol: int) -> None:
    if not 1 <= symbol <= dim + 1:
        raise InvalidArgument(f"symbol {symbol} outside alphabet 1..{dim + 1}")


# ---------------------------------------------------------------------------
# Cut operators
# ---------------------------------------------------------------------------

def last_occurrence(code: Code, symbol: int) -> Optional[int]:
    """1-based position of the last occurrence of `symbol`, or None."""
    _check_symbol(code.dim, symbol)
    symbols = code.symbols
    for position in range(len(symbols), 0, -1):
        if symbols[position - 1] == symbol:
            return position
    return None


def cut_t(code: Code, symbol: int) -> Code:
    """Prefix strictly before the last occurrence of `symbol`."""
    position = last_occurrence(code, symbol)
    if position is None:
        raise AbsentSymbol(code, symbol)
    return code.prefix(position - 1)


def postfix_p(code: Code, symbol: int) -> Code:
    """Suffix starting at the last occurrence of `symbol`."""
    position = last_occurrence(code, symbol)
    if position is None:
        raise AbsentSymbol(code, symbol)
    return code.suffix(position - 1)


def upward_labels(code: Code) -> tuple[Label, ...]:
    """
    T_1(code), ..., T_{d+1}(code) with absent symbols resolved to corners.

    For a vertex these are its neighbours at birth; for an active clique they
    are its d+1 members, in symbol order.
    """
    labels: list[Label] = []
    last_seen: dict[int, int] = {}
    for position, symbol in enumerate(code.symbols):
        last_seen[symbol] = position
    for symbol in range(1, code.dim + 2):
        position = last_seen.get(symbol)
        if position is None:
            labels.append(Corner(symbol))
        else:
            labels.append(code.prefix(position))
    return tuple(labels)
