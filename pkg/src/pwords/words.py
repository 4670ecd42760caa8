"""Partition words.

A d-dimensional partition of ``n`` is written as a word of length ``n - 1``
over the letters ``0..d``.  Splitting a word on its lowest letter ``l``
yields slices, each of which is itself a partition word one dimension down
(letters ``l+1..d``); the grammar requires every slice to contain the next
one cell by cell.  At the top letter a slice is a run ``d^(v-1)`` and encodes
the single value ``v``.  For ``d = 1`` this reduces to blocks of 1s separated
by single 0s with non-increasing block lengths, followed by trailing 0s.

Words are handled as digit strings (``"2102"``); sequences of ints are
accepted wherever a word is expected.
"""

from __future__ import annotations

import time
from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Mapping, Sequence, Union

import numpy as np

from .errors import (
    BudgetExceededError,
    InvalidAlphabetError,
    InvalidPartitionError,
    InvalidWordError,
)

__all__ = [
    "MAX_DIMENSION",
    "PartitionWord",
    "DDimPartition",
    "WordSet",
    "as_word",
    "validate",
    "validate_recursive",
    "validate_structural",
    "dominates",
    "to_partition",
    "from_partition",
    "enumerate_words",
    "symbol_totals",
    "format_words",
    "parse_words",
]

MAX_DIMENSION = 9

PartitionWord = str
WordLike = Union[str, Sequence[int]]

_DIGITS = "0123456789"


def _check_dimension(d: int) -> None:
    if not isinstance(d, (int, np.integer)) or isinstance(d, bool):
        raise InvalidAlphabetError(f"dimension must be an integer, got {d!r}")
    if d < 1 or d > MAX_DIMENSION:
        raise InvalidAlphabetError(
            f"dimension must be in [1, {MAX_DIMENSION}], got {d}"
        )


def as_word(word: WordLike, d: int) -> PartitionWord:
    """Normalize ``word`` to a digit string, checking every symbol is in ``0..d``.

    Raises
    ------
    InvalidAlphabetError
        If ``d`` is out of range or a symbol falls outside ``0..d``.
    """
    _check_dimension(d)
    if isinstance(word, str):
        s = word
    else:
        try:
            s = "".join(_DIGITS[int(x)] if 0 <= int(x) <= 9 else "?" for x in word)
        except (TypeError, ValueError) as exc:
            raise InvalidAlphabetError(f"not a symbol sequence: {word!r}") from exc
    top = _DIGITS[d]
    for ch in s:
        if ch < "0" or ch > top:
            raise InvalidAlphabetError(
                f"symbol {ch!r} in {word!r} is outside the alphabet 0..{d}"
            )
    return s


# -- grammar ---------------------------------------------------------------


@lru_cache(maxsize=1 << 20)
def _valid(seg: str, level: int, d: int) -> bool:
    # seg holds letters >= level only
    if level == d:
        return True
    parts = seg.split(_DIGITS[level])
    for p in parts:
        if not _valid(p, level + 1, d):
            return False
    for b, c in zip(parts, parts[1:]):
        if not _dominates(b, c, level + 1, d):
            return False
    return True


@lru_cache(maxsize=1 << 20)
def _dominates(b: str, c: str, level: int, d: int) -> bool:
    # Does the slice encoded by b contain the slice encoded by c?
    if level == d:
        return len(b) >= len(c)
    sep = _DIGITS[level]
    bs = b.split(sep)
    cs = c.split(sep)
    if len(bs) < len(cs):
        return False
    return all(_dominates(x, y, level + 1, d) for x, y in zip(bs, cs))


def _valid_binary(word: str) -> bool:
    prev = None
    for block in word.split("0"):
        size = len(block)
        if prev is not None and size > prev:
            return False
        prev = size
    return True


def validate(word: WordLike, d: int) -> bool:
    """Return True iff ``word`` is a partition word over ``0..d``.

    ``d = 1`` takes the block-length fast path; higher dimensions use the
    recursive slice-dominance rules.

    Raises
    ------
    InvalidAlphabetError
        If a symbol is outside ``0..d``.  An out-of-alphabet word is an
        error, not merely invalid.

    Examples
    --------
    >>> validate("11010", 1), validate("011", 1)
    (True, False)
    >>> validate("2102", 2), validate("3102", 3)
    (True, False)
    """
    s = as_word(word, d)
    if d == 1:
        return _valid_binary(s)
    return _valid(s, 0, d)


def validate_recursive(word: WordLike, d: int) -> bool:
    """Recursive-rule validator for every ``d`` (no binary fast path)."""
    return _valid(as_word(word, d), 0, d)


def _decode(seg: str, level: int, d: int) -> dict:
    # Reads the nested slice structure without checking any order condition.
    if level == d:
        return {(): len(seg) + 1}
    out = {}
    for k, part in enumerate(seg.split(_DIGITS[level]), start=1):
        for coords, value in _decode(part, level + 1, d).items():
            out[(k,) + coords] = value
    return out


def validate_structural(word: WordLike, d: int) -> bool:
    """Validator that decodes the word into a cell array and checks that the
    array is a d-dimensional partition (monotone along every axis).

    Independent of the dominance recursion; used to cross-check it.
    """
    s = as_word(word, d)
    return _is_partition(_decode(s, 0, d), d)


def dominates(b: WordLike, c: WordLike, level: int, d: int) -> bool:
    """Whether ``b + level + c`` is a valid word on the letters ``level..d``.

    ``b`` and ``c`` must be valid words on the letters strictly above
    ``level``.  At the top level this is the plain ``len(b) >= len(c)``
    block rule.
    """
    _check_dimension(d)
    if not 0 <= level < d:
        raise InvalidAlphabetError(f"level must be in [0, {d - 1}], got {level}")
    bs, cs = as_word(b, d), as_word(c, d)
    low = _DIGITS[level]
    for s in (bs, cs):
        if any(ch <= low for ch in s):
            raise InvalidAlphabetError(
                f"{s!r} uses letters at or below the joining level {level}"
            )
        if not _valid(s, level + 1, d):
            raise InvalidWordError(f"{s!r} is not a valid word above level {level}")
    return _dominates(bs, cs, level + 1, d)


# -- partitions ------------------------------------------------------------


def _is_partition(cells: Mapping[tuple, int], d: int) -> bool:
    if not cells:
        return False
    for coords, value in cells.items():
        if len(coords) != d or any(int(c) < 1 for c in coords):
            return False
        if int(value) < 1:
            return False
        for axis in range(d):
            if coords[axis] > 1:
                prev = coords[:axis] + (coords[axis] - 1,) + coords[axis + 1 :]
                if prev not in cells or cells[prev] < value:
                    return False
    return True


@dataclass(frozen=True)
class DDimPartition:
    """A d-dimensional partition: positive values on integer coordinates.

    ``cells`` is a sorted tuple of ``(coords, value)`` pairs with 1-based
    coordinate tuples of length ``d``.  Values must be non-increasing along
    every axis and the support downward closed; use :meth:`is_valid` to
    check.  The first coordinate indexes the outermost slice of the word
    encoding, so a plane partition reads row by row.
    """

    d: int
    cells: tuple

    @classmethod
    def from_mapping(cls, d: int, mapping: Mapping[tuple, int]) -> "DDimPartition":
        items = tuple(sorted((tuple(int(c) for c in k), int(v)) for k, v in mapping.items()))
        return cls(d, items)

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> "DDimPartition":
        """An ordinary (d = 1) partition from its list of parts."""
        return cls(1, tuple(((i,), int(v)) for i, v in enumerate(parts, start=1)))

    @property
    def n(self) -> int:
        return sum(v for _, v in self.cells)

    def as_dict(self) -> dict:
        return dict(self.cells)

    def as_list(self) -> list:
        """Parts in order, for d = 1 only."""
        if self.d != 1:
            raise ValueError("as_list is only defined for d = 1")
        return [v for _, v in self.cells]

    def is_valid(self) -> bool:
        return _is_partition(dict(self.cells), self.d)

    def __len__(self) -> int:
        return len(self.cells)


def to_partition(word: WordLike, d: int) -> DDimPartition:
    """Decode a valid partition word into its d-dimensional partition.

    >>> to_partition("1101", 1).as_list()
    [3, 2]
    >>> to_partition("1100", 1).as_list()
    [3, 1, 1]
    """
    s = as_word(word, d)
    if not validate(s, d):
        raise InvalidWordError(f"{s!r} is not a partition word for d={d}")
    return DDimPartition.from_mapping(d, _decode(s, 0, d))


def _encode(cells: Mapping[tuple, int], level: int, d: int) -> str:
    if level == d:
        (value,) = cells.values()
        return _DIGITS[d] * (value - 1)
    slices = defaultdict(dict)
    for coords, value in cells.items():
        slices[coords[0]][coords[1:]] = value
    return _DIGITS[level].join(
        _encode(slices[k], level + 1, d) for k in sorted(slices)
    )


def from_partition(p: Union[DDimPartition, Sequence[int]], d: int = None) -> PartitionWord:
    """Encode a d-dimensional partition as its word.

    A plain sequence of ints is taken as an ordinary partition.

    >>> from_partition([3, 2, 2, 1])
    '1101010'
    """
    if not isinstance(p, DDimPartition):
        p = DDimPartition.from_parts(p)
    if d is not None and d != p.d:
        raise InvalidPartitionError(f"partition has d={p.d}, expected {d}")
    _check_dimension(p.d)
    cells = p.as_dict()
    if not _is_partition(cells, p.d):
        raise InvalidPartitionError(f"not a valid {p.d}-dimensional partition: {p}")
    return _encode(cells, 0, p.d)


# -- enumeration -----------------------------------------------------------


@dataclass(frozen=True)
class WordSet:
    """All partition words for ``(d, n)`` in canonical (lexicographic) order.

    Symbols are stored one byte per position in ``array`` of shape
    ``(count, n - 1)``.
    """

    d: int
    n: int
    array: np.ndarray

    @cached_property
    def words(self) -> tuple:
        if self.n == 1:
            return ("",) * len(self.array)
        raw = (self.array + ord("0")).tobytes().decode("ascii")
        L = self.n - 1
        return tuple(raw[i : i + L] for i in range(0, len(raw), L))

    @cached_property
    def _index(self) -> dict:
        return {w: i for i, w in enumerate(self.words)}

    @property
    def count(self) -> int:
        return len(self.array)

    def index(self, word: WordLike) -> int:
        return self._index[as_word(word, self.d)]

    def __len__(self) -> int:
        return len(self.array)

    def __iter__(self) -> Iterator[str]:
        return iter(self.words)

    def __getitem__(self, i):
        return self.words[i]

    def __contains__(self, word) -> bool:
        try:
            return as_word(word, self.d) in self._index
        except InvalidAlphabetError:
            return False

    @classmethod
    def from_words(cls, d: int, n: int, words: Iterable[str]) -> "WordSet":
        words = sorted(words)
        L = n - 1
        if L == 0:
            arr = np.zeros((len(words), 0), dtype=np.uint8)
        else:
            buf = "".join(words).encode("ascii")
            arr = (np.frombuffer(buf, dtype=np.uint8) - ord("0")).reshape(len(words), L)
        arr.setflags(write=False)
        return cls(d, n, arr)


def _extends(word: str, letter: str, d: int) -> bool:
    # word is valid; is word + letter valid?  Only the last slice can change.
    if letter == "0":
        return True
    cut = word.rfind("0")
    last = word[cut + 1 :] + letter
    if d == 1:
        if cut < 0:
            return True
        start = word.rfind("0", 0, cut)
        return cut - start - 1 >= len(last)
    if not _valid(last, 1, d):
        return False
    if cut < 0:
        return True
    prev = word[word.rfind("0", 0, cut) + 1 : cut]
    return _dominates(prev, last, 1, d)


def enumerate_words(
    d: int,
    n: int,
    *,
    max_words: int = None,
    time_budget: float = None,
) -> WordSet:
    """Enumerate every partition word of length ``n - 1`` over ``0..d``.

    Words of length ``L`` are grown from those of length ``L - 1`` by
    appending each letter and keeping the valid results.

    Parameters
    ----------
    d, n : int
        Dimension (1..9) and the total being partitioned (>= 1).
    max_words : int, optional
        Abort once any generation exceeds this many words.
    time_budget : float, optional
        Abort after this many seconds.

    Raises
    ------
    BudgetExceededError
        If a budget runs out; ``partial`` holds the words produced so far.

    Examples
    --------
    >>> enumerate_words(1, 4).words
    ('000', '100', '101', '110', '111')
    >>> len(enumerate_words(3, 6))
    140
    """
    _check_dimension(d)
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    start = time.perf_counter()
    letters = _DIGITS[: d + 1]
    level = [""]
    for _ in range(n - 1):
        nxt = []
        for w in level:
            for x in letters:
                if _extends(w, x, d):
                    nxt.append(w + x)
            if max_words is not None and len(nxt) > max_words:
                raise BudgetExceededError(
                    f"more than {max_words} words for d={d}, n={n}", partial=len(nxt)
                )
            if time_budget is not None and time.perf_counter() - start > time_budget:
                raise BudgetExceededError(
                    f"time budget of {time_budget}s exhausted for d={d}, n={n}",
                    partial=len(nxt),
                )
        level = nxt
    return WordSet.from_words(d, n, level)


def symbol_totals(d: int, n: int, words: WordSet = None) -> dict:
    """Total occurrences of each letter over all words for ``(d, n)``.

    The totals sum to ``(n - 1) * p_d(n)``; for d = 1 the 0-total counts the
    plus signs over all partitions of ``n``.

    >>> symbol_totals(1, 4)
    {0: 7, 1: 8}
    """
    ws = words if words is not None else enumerate_words(d, n)
    counts = np.bincount(ws.array.ravel(), minlength=d + 1)
    return {k: int(counts[k]) for k in range(d + 1)}


# -- text format -----------------------------------------------------------


def format_words(ws: Union[WordSet, Iterable[str]]) -> str:
    """One word per line, newline terminated; n = 1 gives a single empty line."""
    return "".join(w + "\n" for w in ws)


def parse_words(text: str, d: int) -> WordSet:
    """Inverse of :func:`format_words`.  Every line must be a valid word of
    the same length."""
    if not text.endswith("\n"):
        raise ValueError("word file must be newline terminated")
    lines = text[:-1].split("\n")
    lengths = {len(w) for w in lines}
    if len(lengths) != 1:
        raise ValueError(f"word file mixes lengths {sorted(lengths)}")
    for w in lines:
        if not validate(w, d):
            raise InvalidWordError(f"{w!r} is not a partition word for d={d}")
    if len(set(lines)) != len(lines):
        raise ValueError("word file contains duplicates")
    return WordSet.from_words(d, lengths.pop() + 1, lines)
