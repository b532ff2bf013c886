"""Exact irreducible characters of symmetric groups.

Character values are computed by the border-strip (Murnaghan-Nakayama)
recursion over beta numbers, stripping the largest remaining cycle first so
the recursion depth is bounded by the number of cycles.  A memoized full
table builder serves as the substrate for the Kronecker coefficient oracle.

Cycle types are ordinary partitions of n, read as conjugacy classes of the
symmetric group on n letters.

Concurrency: ``character_value`` and ``character_table`` are pure; the
memo caches behind them are ordinary dicts whose insertions are atomic, so
concurrent callers are safe and, at worst, duplicate some work while always
observing identical results.
"""

from __future__ import annotations

import os
import sys
from functools import lru_cache
from math import factorial

from .partitions import (
    Partition,
    check_partition,
    enumerate_partitions,
    parse_partition,
)

CycleType = Partition

DEFAULT_CAP = 24

__all__ = [
    "CycleType",
    "CharacterTable",
    "DEFAULT_CAP",
    "centralizer_order",
    "character_value",
    "character_table",
    "save_character_table",
    "load_character_table",
    "set_cache_dir",
]


def centralizer_order(rho: CycleType) -> int:
    """Order of the centralizer of a permutation of cycle type ``rho``.

    Equals prod(m^a_m * a_m!) over the distinct part sizes m, where a_m is
    the multiplicity of m.  The conjugacy class has n!/centralizer_order
    elements.
    """
    rho = check_partition(rho)
    z = 1
    mult = 0
    for i, part in enumerate(rho):
        mult += 1
        z *= part
        if i + 1 == len(rho) or rho[i + 1] != part:
            z *= factorial(mult)
            mult = 0
    return z


@lru_cache(maxsize=None)
def _char(lam: Partition, rho: Partition) -> int:
    # Strip one border strip of length rho[0] from lam in all possible ways.
    if not rho:
        return 1
    strip = rho[0]
    rest = rho[1:]
    k = len(lam)
    beta = [lam[i] + k - 1 - i for i in range(k)]  # strictly decreasing
    beta_set = set(beta)
    total = 0
    for i, b in enumerate(beta):
        low = b - strip
        if low < 0 or low in beta_set:
            continue
        height = 0
        j = i + 1
        while j < k and beta[j] > low:
            height += 1
            j += 1
        new_beta = sorted(beta_set - {b} | {low}, reverse=True)
        new_lam = tuple(x - (k - 1 - m) for m, x in enumerate(new_beta))
        cut = len(new_lam)
        while cut and new_lam[cut - 1] == 0:
            cut -= 1
        term = _char(new_lam[:cut], rest)
        total += -term if height % 2 else term
    return total


def character_value(lam: Partition, rho: CycleType) -> int:
    """Exact character value of the irreducible ``lam`` on the class ``rho``."""
    lam = check_partition(lam)
    rho = check_partition(rho)
    if sum(lam) != sum(rho):
        raise ValueError(
            f"partition and cycle type live in different symmetric groups: "
            f"|{lam}| = {sum(lam)} vs |{rho}| = {sum(rho)}"
        )
    return _char(lam, rho)


class CharacterTable:
    """Complete character table of the symmetric group on ``n`` letters.

    Rows are indexed by partitions of n (irreducibles) and columns by cycle
    types, both in ``enumerate_partitions(n)`` order.  Carries centralizer
    orders as class data; all values are exact integers.
    """

    def __init__(
        self,
        n: int,
        partitions: tuple[Partition, ...],
        rows: dict[Partition, tuple[int, ...]],
        centralizer_orders: dict[CycleType, int],
    ):
        self.n = n
        self.partitions = partitions
        self.rows = rows
        self.centralizer_orders = centralizer_orders
        self.group_order = factorial(n)
        self.class_sizes = tuple(
            self.group_order // centralizer_orders[rho] for rho in partitions
        )
        self._col = {rho: i for i, rho in enumerate(partitions)}

    def value(self, lam: Partition, rho: CycleType) -> int:
        return self.rows[lam][self._col[rho]]

    def class_size(self, rho: CycleType) -> int:
        return self.class_sizes[self._col[rho]]

    def validate(self) -> None:
        """Check column orthogonality; raise ValueError on any failure.

        Columns rho, sigma must satisfy
        sum_lam chi(lam, rho) * chi(lam, sigma) = centralizer_order(rho) * [rho == sigma].
        """
        cols = list(zip(*(self.rows[lam] for lam in self.partitions)))
        for i, rho in enumerate(self.partitions):
            for j in range(i, len(self.partitions)):
                got = sum(a * b for a, b in zip(cols[i], cols[j]))
                want = self.centralizer_orders[rho] if i == j else 0
                if got != want:
                    raise ValueError(
                        f"column orthogonality fails at ({rho}, {self.partitions[j]}): "
                        f"{got} != {want}"
                    )


def _build_table(n: int) -> CharacterTable:
    parts = enumerate_partitions(n)
    rows = {lam: tuple(_char(lam, rho) for rho in parts) for lam in parts}
    orders = {rho: centralizer_order(rho) for rho in parts}
    return CharacterTable(n, parts, rows, orders)


_tables: dict[int, CharacterTable] = {}
_cache_dir: str | None = None


def set_cache_dir(path: str | None) -> None:
    """Enable (or disable, with None) the on-disk TSV table cache."""
    global _cache_dir
    _cache_dir = path


def character_table(n: int, *, cap: int = DEFAULT_CAP) -> CharacterTable:
    """Memoized complete character table of the symmetric group on ``n`` letters.

    Raises ValueError when ``n`` is negative or exceeds ``cap`` (the cap
    keeps accidental huge builds out; p(24) = 1575 rows is the default
    ceiling).  When a cache directory is configured, tables are read from
    and written to ``s<n>.tsv`` files there.
    """
    if n < 0:
        raise ValueError(f"no symmetric group on {n} letters")
    if n > cap:
        raise ValueError(f"character table for n={n} exceeds the cap {cap}")
    table = _tables.get(n)
    if table is None:
        table = _load_from_cache_dir(n)
        if table is None:
            table = _build_table(n)
            _save_to_cache_dir(table)
        _tables[n] = table
    return table


def _partition_text(lam: Partition) -> str:
    # TSV cells use the parseable input grammar, so the empty partition is "0".
    return ",".join(str(x) for x in lam) if lam else "0"


def save_character_table(table: CharacterTable, path: str) -> None:
    """Write a table as TSV, one ``lam<TAB>rho<TAB>value`` record per entry.

    Partitions are comma-separated part lists ("0" for the empty partition);
    records appear row by row in enumeration order.
    """
    lines = []
    for lam in table.partitions:
        row = table.rows[lam]
        for rho, value in zip(table.partitions, row):
            lines.append(f"{_partition_text(lam)}\t{_partition_text(rho)}\t{value}\n")
    tmp = f"{path}.tmp"
    with open(tmp, "w") as handle:
        handle.writelines(lines)
    os.replace(tmp, path)


def load_character_table(path: str) -> CharacterTable:
    """Read a TSV table written by ``save_character_table`` and validate it.

    Column orthogonality is checked before the table is trusted; a file
    that is incomplete, malformed, or fails orthogonality raises ValueError.
    """
    values: dict[tuple[Partition, Partition], int] = {}
    with open(path) as handle:
        for line_no, line in enumerate(handle, 1):
            line = line.rstrip("\n")
            if not line:
                continue
            fields = line.split("\t")
            if len(fields) != 3:
                raise ValueError(f"{path}:{line_no}: expected 3 tab-separated fields")
            lam = parse_partition(fields[0])
            rho = parse_partition(fields[1])
            values[(lam, rho)] = int(fields[2])
    if not values:
        raise ValueError(f"{path}: empty character table file")
    sizes = {sum(lam) for lam, _ in values} | {sum(rho) for _, rho in values}
    if len(sizes) != 1:
        raise ValueError(f"{path}: mixed symmetric group sizes {sorted(sizes)}")
    n = sizes.pop()
    parts = enumerate_partitions(n)
    try:
        rows = {lam: tuple(values[(lam, rho)] for rho in parts) for lam in parts}
    except KeyError as missing:
        raise ValueError(f"{path}: incomplete table, missing entry {missing}") from None
    orders = {rho: centralizer_order(rho) for rho in parts}
    table = CharacterTable(n, parts, rows, orders)
    table.validate()
    return table


def _cache_path(n: int) -> str:
    assert _cache_dir is not None
    return os.path.join(_cache_dir, f"s{n}.tsv")


def _load_from_cache_dir(n: int) -> CharacterTable | None:
    if _cache_dir is None:
        return None
    path = _cache_path(n)
    if not os.path.exists(path):
        return None
    try:
        return load_character_table(path)
    except (ValueError, OSError) as exc:
        print(f"warning: ignoring bad table cache {path}: {exc}", file=sys.stderr)
        return None


def _save_to_cache_dir(table: CharacterTable) -> None:
    if _cache_dir is None:
        return
    os.makedirs(_cache_dir, exist_ok=True)
    save_character_table(table, _cache_path(table.n))
