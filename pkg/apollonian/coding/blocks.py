"""
Block decomposition of codes.

Reading a code from the right, a full coupon-collector block ends as soon as
all d+1 symbols have been seen. Cutting such blocks off greedily (T_min) is
what the shortcut edges do when climbing toward the root, so the number of
blocks is the number of hops needed to climb a code.
"""
from dataclasses import dataclass

from apollonian.coding.codes import Code
from apollonian.errors import InvalidArgument


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[Code, ...]   # left to right

    @property
    def count(self) -> int:
        return len(self.blocks)


def _hop_length(symbols: tuple[int, ...], alphabet: int, end: int) -> int:
    # Length of the greedy block ending at `end`; the whole remaining prefix
    # when some symbol never appears (truncation at the root).
    seen: set[int] = set()
    for offset in range(1, end + 1):
        seen.add(symbols[end - offset])
        if len(seen) == alphabet:
            return offset
    return end


def max_hop(code: Code) -> int:
    """max_i |P_i u|, or |u| when some symbol of the alphabet is missing."""
    if code.is_root:
        raise InvalidArgument("max_hop is undefined for the root code")
    return _hop_length(code.symbols, code.alphabet_size, len(code))


def block_count(code: Code) -> int:
    """Number of greedy T_min cuts until the code is empty."""
    symbols = code.symbols
    alphabet = code.alphabet_size
    end = len(symbols)
    count = 0
    while end > 0:
        end -= _hop_length(symbols, alphabet, end)
        count += 1
    return count


def decompose(code: Code) -> BlockDecomposition:
    symbols = code.symbols
    alphabet = code.alphabet_size
    end = len(symbols)
    blocks: list[Code] = []
    while end > 0:
        start = end - _hop_length(symbols, alphabet, end)
        blocks.append(Code._trusted(symbols[start:end], code.dim))
        end = start
    blocks.reverse()
    return BlockDecomposition(tuple(blocks))


def has_truncated_block(code: Code) -> bool:
    """True when the leftmost greedy block does not contain every symbol."""
    if code.is_root:
        return False
    leftmost = decompose(code).blocks[0]
    return len(set(leftmost.symbols)) < code.alphabet_size


def min_blocks_oracle(code: Code, leftmost_unrestricted: bool = False) -> int:
    """
    Minimum number of blocks over all decompositions whose blocks each have a
    leading symbol that does not recur inside the block.

    O(len^2) dynamic programme over prefixes. With `leftmost_unrestricted` the
    block starting at position 0 may instead be any truncated block, one that
    misses some symbol of the alphabet.
    """
    symbols = code.symbols
    alphabet = code.alphabet_size
    n = len(symbols)
    unreachable = n + 1
    best = [0] + [unreachable] * n
    for end in range(1, n + 1):
        inside: set[int] = set()
        for start in range(end - 1, -1, -1):
            lead = symbols[start]
            allowed = lead not in inside
            inside.add(lead)
            if not allowed and start == 0 and leftmost_unrestricted:
                allowed = len(inside) < alphabet
            if allowed and best[start] + 1 < best[end]:
                best[end] = best[start] + 1
    return best[n]
