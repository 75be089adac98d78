from __future__ import annotations

import pytest

from zvect.groups import FiniteGroup, cyclic_group, group_from_generators, product_group


def make_q8() -> FiniteGroup:
    names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    rules = {
        ("1", "1"): ("1", 1), ("1", "i"): ("i", 1), ("1", "j"): ("j", 1), ("1", "k"): ("k", 1),
        ("i", "1"): ("i", 1), ("j", "1"): ("j", 1), ("k", "1"): ("k", 1),
        ("i", "i"): ("1", -1), ("j", "j"): ("1", -1), ("k", "k"): ("1", -1),
        ("i", "j"): ("k", 1), ("j", "i"): ("k", -1),
        ("j", "k"): ("i", 1), ("k", "j"): ("i", -1),
        ("k", "i"): ("j", 1), ("i", "k"): ("j", -1),
    }

    def mul(a: str, b: str) -> str:
        sa, ua = (-1 if a.startswith("-") else 1), a.lstrip("-")
        sb, ub = (-1 if b.startswith("-") else 1), b.lstrip("-")
        u, s = rules[(ua, ub)]
        s = s * sa * sb
        return ("" if s > 0 else "-") + u

    idx = {n: i for i, n in enumerate(names)}
    table = [[idx[mul(a, b)] for b in names] for a in names]
    return FiniteGroup(table, names=names)


@pytest.fixture(scope="session")
def s3():
    return group_from_generators(3, [[1, 0, 2], [1, 2, 0]])


@pytest.fixture(scope="session")
def q8():
    return make_q8()


@pytest.fixture(scope="session")
def z2():
    return cyclic_group(2)


@pytest.fixture(scope="session")
def z3():
    return cyclic_group(3)


@pytest.fixture(scope="session")
def z4():
    return cyclic_group(4)


@pytest.fixture(scope="session")
def z2z2():
    return product_group(cyclic_group(2), cyclic_group(2))
