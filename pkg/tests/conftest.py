from __future__ import annotations

import numpy as np
import pytest

from indecomp.construct import (
    abelian,
    cyclic,
    dihedral,
    direct_product,
    generalized_quaternion,
    metacyclic,
    semidirect_pq,
    symmetric,
)

_acceptance_lines: list[str] = []


def record_acceptance(line: str) -> None:
    _acceptance_lines.append(line)


def pytest_terminal_summary(terminalreporter):
    """Echo one line per acceptance criterion after the run, capture or not."""
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)


def brute_subgroup_masks(table: np.ndarray) -> set[int]:
    """Exhaustive subset oracle: every identity-containing subset closed under
    the table. Only feasible for small orders; independent of the library's
    closure code."""
    n = len(table)
    assert n <= 16, "subset oracle is exponential; keep it small"
    rows = table.tolist()
    out = set()
    for bits in range(2 ** (n - 1)):
        mask = bits << 1 | 1
        elems = [g for g in range(n) if mask >> g & 1]
        if all(mask >> rows[a][b] & 1 for a in elems for b in elems):
            out.add(mask)
    return out


def brute_center_mask(table: np.ndarray) -> int:
    n = len(table)
    mask = 0
    for z in range(n):
        if all(table[z, g] == table[g, z] for g in range(n)):
            mask |= 1 << z
    return mask


def brute_conjugate_mask(table: np.ndarray, mask: int, g: int) -> int:
    n = len(table)
    ginv = next(h for h in range(n) if table[g, h] == 0)
    out = 0
    for h in range(n):
        if mask >> h & 1:
            out |= 1 << int(table[int(table[g, h]), ginv])
    return out


def quaternion_units_table() -> np.ndarray:
    """The order-8 quaternion unit group {+-1, +-i, +-j, +-k} built from
    symbolic sign arithmetic; an oracle independent of the Q(n) constructor."""
    units = ["1", "i", "j", "k", "-1", "-i", "-j", "-k"]
    base = {
        ("1", "1"): "1", ("1", "i"): "i", ("1", "j"): "j", ("1", "k"): "k",
        ("i", "1"): "i", ("i", "i"): "-1", ("i", "j"): "k", ("i", "k"): "-j",
        ("j", "1"): "j", ("j", "i"): "-k", ("j", "j"): "-1", ("j", "k"): "i",
        ("k", "1"): "k", ("k", "i"): "j", ("k", "j"): "-i", ("k", "k"): "-1",
    }

    def mul(a: str, b: str) -> str:
        sign = 1
        if a.startswith("-"):
            sign, a = -sign, a[1:]
        if b.startswith("-"):
            sign, b = -sign, b[1:]
        c = base[(a, b)]
        if c.startswith("-"):
            sign, c = -sign, c[1:]
        return c if sign == 1 else "-" + c

    table = np.zeros((8, 8), dtype=np.int64)
    for x, a in enumerate(units):
        for y, b in enumerate(units):
            table[x, y] = units.index(mul(a, b))
    return table


@pytest.fixture(scope="session")
def s3():
    return symmetric(3)


@pytest.fixture(scope="session")
def s4():
    return symmetric(4)


@pytest.fixture(scope="session")
def s5():
    return symmetric(5)


@pytest.fixture(scope="session")
def q3():
    return generalized_quaternion(3)


@pytest.fixture(scope="session")
def q4():
    return generalized_quaternion(4)


@pytest.fixture(scope="session")
def klein():
    return abelian([2, 2])


@pytest.fixture(scope="session")
def small_corpus():
    """Structurally diverse groups of order <= 24 for property sweeps."""
    return [
        cyclic(1),
        cyclic(2),
        cyclic(9),
        cyclic(12),
        cyclic(15),
        abelian([2, 2]),
        abelian([4, 2]),
        abelian([2, 2, 2]),
        abelian([9, 3]),
        symmetric(3),
        symmetric(4),
        dihedral(4),
        dihedral(5),
        dihedral(6),
        generalized_quaternion(3),
        generalized_quaternion(4),
        metacyclic(7, 3, 2),
        metacyclic(5, 4, 2),
        semidirect_pq(3, 1, 2, 2, 2),
        semidirect_pq(5, 1, 2, 2, 4),
        semidirect_pq(7, 1, 3, 1, 2),
        direct_product(symmetric(3), cyclic(2)),
        direct_product(generalized_quaternion(3), cyclic(3)),
    ]
