"""
Nonabelian simple groups of order at most 10^7 with their minimal faithful permutation degrees
"""

import math
from dataclasses import dataclass
from typing import Dict, List

ORDER_LIMIT = 10 ** 7


@dataclass(frozen=True)
class SimpleGroupEntry:
    name: str
    order: int
    min_degree: int


_OTHER_GROUPS = [
    ("PSL(3,3)", 5616, 13),
    ("PSU(3,3)", 6048, 28),
    ("M11", 7920, 11),
    ("PSL(3,4)", 20160, 21),
    ("PSp(4,3)", 25920, 27),
    ("Sz(8)", 29120, 65),
    ("PSU(3,4)", 62400, 65),
    ("M12", 95040, 12),
    ("PSU(3,5)", 126000, 50),
    ("J1", 175560, 266),
    ("PSL(3,5)", 372000, 31),
    ("M22", 443520, 22),
    ("J2", 604800, 100),
    ("PSp(4,4)", 979200, 85),
    ("PSp(6,2)", 1451520, 28),
    ("PSL(3,7)", 1876896, 57),
    ("PSU(4,3)", 3265920, 112),
    ("G2(3)", 4245696, 351),
    ("PSp(4,5)", 4680000, 156),
    ("PSU(3,8)", 5515776, 513),
    ("PSU(3,7)", 5663616, 344),
    ("PSL(4,3)", 6065280, 40),
    ("PSL(5,2)", 9999360, 31),
]

# PSL(2,q) whose minimal degree is below q+1; q = 4, 5, 9 coincide with A5, A5, A6
_PSL2_SMALL_DEGREE = {7: 7, 11: 11}
_PSL2_ALIASES = {4, 5, 9}


def _prime_power(q: int) -> bool:
    for p in range(2, q + 1):
        if q % p == 0:
            while q % p == 0:
                q //= p
            return q == 1
    return False


def _build_table() -> List[SimpleGroupEntry]:
    entries = []
    n = 5
    while math.factorial(n) // 2 <= ORDER_LIMIT:
        entries.append(SimpleGroupEntry(f"A{n}", math.factorial(n) // 2, n))
        n += 1

    q = 4
    while True:
        order = q * (q * q - 1) // math.gcd(2, q - 1)
        if q * (q * q - 1) // 2 > ORDER_LIMIT:
            break
        if order <= ORDER_LIMIT and _prime_power(q) and q not in _PSL2_ALIASES:
            entries.append(SimpleGroupEntry(f"PSL(2,{q})", order, _PSL2_SMALL_DEGREE.get(q, q + 1)))
        q += 1

    entries.extend(SimpleGroupEntry(name, order, degree) for name, order, degree in _OTHER_GROUPS)
    return sorted(entries, key=lambda e: (e.order, e.name))


SIMPLE_GROUPS: List[SimpleGroupEntry] = _build_table()

BY_ORDER: Dict[int, List[SimpleGroupEntry]] = {}
for _entry in SIMPLE_GROUPS:
    BY_ORDER.setdefault(_entry.order, []).append(_entry)


def candidates_for_order(order: int) -> List[SimpleGroupEntry]:
    return list(BY_ORDER.get(order, []))
