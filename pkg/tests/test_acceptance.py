"""Acceptance suite: one test per criterion, each reported as a PASS/FAIL line.

Run with pytest (lines appear in the terminal summary) or directly with
`python tests/test_acceptance.py`.
"""

import io
import random
import sys
import time
from contextlib import redirect_stdout
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from conftest import census  # noqa: E402
from figures import not_sc_4433, not_sc_8363  # noqa: E402
from scsplit.cli import main as cli_main  # noqa: E402
from scsplit.constructors import (  # noqa: E402
    BlockSpec,
    build_circulant_power,
    build_elementary,
    build_gibbs_onecycle,
    build_Zk,
    decompose_elementary,
    four_degree_sequence,
    gibbs_antimorphism,
    witness_four_degree,
    witness_regular,
    witness_two_degree,
)
from scsplit.degseq import (  # noqa: E402
    DegreeSequence,
    applicable_two_switches,
    degree_sequence,
    graphical_sequences,
    is_forcibly_sc,
    is_forcibly_sc_bruteforce,
    is_potentially_sc_bruteforce,
    iter_realizations,
    realization_closure,
    realize,
    two_switch,
)
from scsplit.enumeration import lambda_pseudo_split, lambda_split  # noqa: E402
from scsplit.graph import (  # noqa: E402
    Permutation,
    complement,
    find_antimorphism,
    graph6_write,
    induced_subgraph,
    is_antimorphism,
    is_isomorphic,
)
from scsplit.oracle import has_sc_realization  # noqa: E402
from scsplit.partitions import (  # noqa: E402
    diamond_from_antimorphism,
    is_self_complementary_partition,
    is_valid_partition,
    rectangle_partition,
)
from scsplit.recognition import apex_extend, is_split, odd_reduce  # noqa: E402

DS = DegreeSequence.parse
RESULTS: dict[int, tuple[str, bool, str]] = {}

ORDERS = [4, 5, 8, 9, 12, 13, 16, 17, 20, 21]
SPLIT_COUNTS = [1, 1, 3, 3, 16, 16, 218, 218, 9608, 9608]
PSEUDO_COUNTS = [1, 2, 3, 4, 16, 19, 218, 234, 9608, 9826]


def record(number, title, check):
    try:
        check()
    except Exception as exc:
        RESULTS[number] = (title, False, f"{type(exc).__name__}: {exc}")
        raise
    RESULTS[number] = (title, True, "")


def result_lines():
    lines = []
    for number in sorted(RESULTS):
        title, ok, why = RESULTS[number]
        line = f"criterion {number} {'PASS' if ok else 'FAIL'}: {title}"
        lines.append(line + (f" ({why})" if why else ""))
    return lines


def criterion_1():
    start = time.perf_counter()
    buf = io.StringIO()
    with redirect_stdout(buf):
        assert cli_main(["count", *map(str, ORDERS)]) == 0
    elapsed = time.perf_counter() - start
    header, split_row, pseudo_row = buf.getvalue().splitlines()
    assert [int(x) for x in header.split()[1:]] == ORDERS
    assert [int(x) for x in split_row.split()[-len(ORDERS):]] == SPLIT_COUNTS
    assert [int(x) for x in pseudo_row.split()[-len(ORDERS):]] == PSEUDO_COUNTS
    assert [lambda_split(n) for n in ORDERS] == SPLIT_COUNTS
    assert [lambda_pseudo_split(n) for n in ORDERS] == PSEUDO_COUNTS
    assert elapsed < 1.0, f"count took {elapsed:.2f}s"


def criterion_2():
    expected = [(4, "split", 1), (8, "split", 3), (12, "split", 16),
                (5, "pseudo-split", 2), (9, "pseudo-split", 4), (8, "all", 10)]
    for n, flt, count in expected:
        got = len(census(n, flt))
        assert got == count, f"n={n} {flt}: census {got}, expected {count}"
        if flt != "all":
            formula = lambda_split(n) if flt == "split" else lambda_pseudo_split(n)
            assert got == formula


def criterion_3():
    for n in (4, 5, 8, 9):
        for ds in graphical_sequences(n):
            assert is_forcibly_sc(ds) == is_forcibly_sc_bruteforce(ds), f"disagreement on {ds}"
    assert is_forcibly_sc(DS("5^4,2^4")) and is_forcibly_sc_bruteforce(DS("5^4,2^4"))
    assert is_forcibly_sc(DS("6^2,4^2,3^2,1^2")) and is_forcibly_sc_bruteforce(DS("6^2,4^2,3^2,1^2"))
    assert not is_forcibly_sc(DS("4^4,3^4")) and not is_forcibly_sc_bruteforce(DS("4^4,3^4"))


def criterion_4():
    checked = 0
    # elementary graphs have at least one vertex, so the null graph is left out
    for n in range(1, 10):
        for ds in graphical_sequences(n):
            if not is_forcibly_sc(ds):
                continue
            for g in iter_realizations(ds):
                assert decompose_elementary(g) is not None, f"{graph6_write(g)} with {ds}"
                checked += 1
    assert checked > 0


def criterion_5():
    g = witness_regular(2)
    assert g == build_circulant_power(2)
    assert degree_sequence(g) == DS("4^9")
    assert find_antimorphism(g) is None

    g = witness_two_degree(2, 4)
    assert is_isomorphic(g, not_sc_4433()) is not None
    assert degree_sequence(g) == DS("4^4,3^4")
    assert find_antimorphism(g) is None

    g = witness_two_degree(3, 8)
    assert is_isomorphic(g, not_sc_8363()) is not None
    assert degree_sequence(g) == DS("8^6,3^6")
    assert find_antimorphism(g) is None

    # smallest admissible four-degree parameters
    g = witness_four_degree(1, 1, 5, 8)
    assert degree_sequence(g) == four_degree_sequence(1, 1, 5, 8)
    assert find_antimorphism(g) is None


def criterion_6():
    for k in range(1, 6):
        sigma = gibbs_antimorphism(k)
        assert sigma == Permutation.from_cycles(4 * k, [tuple(range(4 * k))])
        for d in range(2 * k, 3 * k):
            g = build_gibbs_onecycle(k, d)
            assert is_antimorphism(g, sigma)
            assert degree_sequence(g) == DegreeSequence(((d, 2 * k), (4 * k - 1 - d, 2 * k)))
    # the larger degree d fixes the sequence; outside the range it has no SC realization
    for k in range(1, 4):
        for d in range(3 * k, 4 * k):
            ds = DegreeSequence(((d, 2 * k), (4 * k - 1 - d, 2 * k)))
            if realize(ds) is None:
                with pytest.raises(ValueError):
                    realization_closure(ds)
            else:
                assert all(find_antimorphism(h) is None for h in realization_closure(ds))
            assert not has_sc_realization(ds)
            if ds.n <= 10:
                assert not is_potentially_sc_bruteforce(ds)


def criterion_7():
    for n in (8, 12):
        k = n // 4
        zk = build_Zk(k)
        rectangles = []
        for g in census(n, "split").graphs:
            p = diamond_from_antimorphism(g, find_antimorphism(g))
            assert is_valid_partition(g, p) and is_self_complementary_partition(g, p)
            r = rectangle_partition(g)
            if r is not None:
                assert is_valid_partition(g, r)
                rectangles.append(g)
            assert (r is not None) == (is_isomorphic(g, zk) is not None)
        assert len(rectangles) == 1, f"order {n}: {len(rectangles)} rectangle members"


def _constructor_outputs():
    out = [build_elementary(BlockSpec.parse(t)) for t in
           ("P4", "P4,P4", "A,B", "P4;apex", "A,P4;apex", ";c5", "B;c5", "P4,P4,P4")]
    out += [build_Zk(k) for k in (1, 2, 3)]
    out += [build_gibbs_onecycle(k, d) for k in (1, 2, 3) for d in range(2 * k, 3 * k)]
    return out


def criterion_8(cases=3000, seed=20240611):
    rng = random.Random(seed)
    pool = []
    for n, flt in ((4, "all"), (5, "all"), (8, "all"), (9, "all"), (12, "split"), (13, "pseudo-split")):
        pool += census(n, flt).graphs
    pool += _constructor_outputs()
    split_even = {n: census(n, "split").graphs for n in (4, 8, 12)}
    for _ in range(cases):
        g = rng.choice(pool)
        perm = list(range(g.n))
        rng.shuffle(perm)
        g = g.relabel(Permutation(tuple(perm)))
        assert complement(complement(g)) == g
        assert 4 * len(g.edges()) == g.n * (g.n - 1)
        sigma = find_antimorphism(g)
        assert sigma is not None and is_antimorphism(g, sigma)
        lengths = sigma.cycle_lengths()
        assert lengths.count(1) <= 1 and all(x == 1 or x % 4 == 0 for x in lengths)
        cycles = list(sigma.cycles)
        chosen = rng.sample(cycles, rng.randint(1, len(cycles)))
        assert find_antimorphism(induced_subgraph(g, [v for c in chosen for v in c])) is not None
        switches = list(applicable_two_switches(g))
        if switches:
            h = two_switch(g, *rng.choice(switches))
            assert h.degrees == g.degrees
            assert is_split(h) == is_split(g)
        n = rng.choice([4, 8, 12])
        base = rng.choice(split_even[n])
        v, back = odd_reduce(apex_extend(base))
        assert v == n and back == base


CRITERIA = [
    (1, "count reproduces the published split / pseudo-split counts in under 1 s", criterion_1),
    (2, "census counts agree with the formula and the table", criterion_2),
    (3, "forcibly-SC test agrees with brute force for n in {4,5,8,9}", criterion_3),
    (4, "every realization of every forcibly-SC sequence with n <= 9 is elementary", criterion_4),
    (5, "witness graphs have the requested degrees and no antimorphism", criterion_5),
    (6, "one-cycle construction for k <= 5 and no SC realization outside the range", criterion_6),
    (7, "SC diamond for every order 8/12 split census member; rectangle exactly on Z_k", criterion_7),
    (8, "randomized invariant battery over census members and constructor outputs", criterion_8),
]


@pytest.mark.parametrize("number, title, check", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(number, title, check):
    record(number, title, check)


if __name__ == "__main__":
    for number, title, check in CRITERIA:
        try:
            record(number, title, check)
        except Exception:
            pass
    print("\n".join(result_lines()))
    sys.exit(0 if all(ok for _, ok, _ in RESULTS.values()) else 1)
