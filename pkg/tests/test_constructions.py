import random
from math import prod

import pytest

from gendef import (
    Dag,
    Dfa,
    InputError,
    PatternWitness,
    PreconditionError,
    ResourceLimitError,
    ReverseDefiniteCaseError,
    admits_pd,
    admits_pg,
    classify,
    dag_reachable,
    definitize,
    enumerate_semigroup,
    is_reduced,
    minimize,
    reduce_dag_reach,
    sink_partition,
    validate_witness,
)
from gendef.automaton import act, shortest_word
from gendef.oracle import enumerate_dfas
from gendef.semigroup import restrict


def random_dag(rng, n, p=0.3):
    return Dag(n, {(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1) if rng.random() < p})


def test_dag_validation():
    with pytest.raises(InputError):
        Dag(3, {(2, 1)})
    with pytest.raises(InputError):
        Dag(3, {(1, 4)})
    with pytest.raises(InputError):
        Dag(0, set())
    assert Dag(3, {(1, 3), (1, 2)}).neighbours(1) == [2, 3]


def test_reduction_table_by_hand():
    g = Dag(3, {(1, 2), (2, 3)})
    dfa = reduce_dag_reach(g)
    assert dfa.state_count == 4 and dfa.alphabet == ("1", "2", "3")
    assert dfa.start == 0 and dfa.finals == {3}
    # 0-based rows for vertices 1, 2, 3 and the extra state 4
    assert dfa.delta == ((1, 3, 3), (2, 3, 3), (0, 0, 3), (3, 3, 3))


def test_reduction_examples():
    assert not classify(reduce_dag_reach(Dag(3, {(1, 2), (2, 3)}))).is_generalized_definite
    assert classify(reduce_dag_reach(Dag(3, {(1, 2)}))).is_generalized_definite
    assert classify(reduce_dag_reach(Dag(2, set()))).is_generalized_definite
    with pytest.raises(PreconditionError):
        reduce_dag_reach(Dag(1, set()))


def test_reduction_witness_with_single_letter_n():
    n = 4
    g = Dag(n, {(1, 2), (2, 4), (1, 3)})
    dfa = reduce_dag_reach(g)
    # vertex 1 -> 2 -> 4 along the first neighbours, then letter 1 returns to vertex 1
    loop = shortest_word(dfa, 0, n - 1) + (0,)
    assert act(dfa, 0, loop) == 0
    w = PatternWitness("Pg", n - 1, n, tuple(a for a in loop[-1:] + loop[:-1]), (n - 1,))
    assert validate_witness(dfa, w)


@pytest.mark.parametrize("n", [2, 3, 4, 8, 12])
def test_reduction_soundness_random(n):
    rng = random.Random(n)
    for _ in range(100):
        g = random_dag(rng, n, p=rng.choice([0.1, 0.25, 0.5]))
        dfa = reduce_dag_reach(g)
        reachable = dag_reachable(g)
        assert (admits_pg(dfa) is not None) == reachable
        assert (admits_pg(minimize(dfa).reduced) is not None) == reachable
        assert (admits_pd(minimize(dfa).reduced) is None) == (not reachable)


def test_sink_partition_examples(A2, A3, A5, A6):
    sp = sink_partition(A2)
    assert sp.q0_states == (0,) and sp.sinks == ((1,), (2,))
    sp = sink_partition(A6)
    assert sp.q0_states == (0,) and sp.sinks == ((1, 2),)
    assert sp.order() == [0, 1, 2]
    sp = sink_partition(A5)
    assert sp.q0_states == () and sp.sinks == ((0, 1),)
    with pytest.raises(PreconditionError):
        sink_partition(A3)


def test_definitize_examples(A2, A3, A5, A6):
    b = definitize(A5)
    assert b.alphabet == ("0,0", "1,1")
    assert len(enumerate_semigroup(b)) == 2 and admits_pd(b) is None

    b = definitize(A6)
    assert len(b.alphabet) == 4
    assert len(enumerate_semigroup(b)) == 4 >= len(enumerate_semigroup(A6)) == 3
    assert is_reduced(b) and admits_pd(b) is None
    assert b.start == A6.start and b.finals == A6.finals

    with pytest.raises(ReverseDefiniteCaseError):
        definitize(A2)
    with pytest.raises(PreconditionError):
        definitize(A3)
    unreduced = Dfa(3, ["a", "b"], [[1, 0], [1, 0], [1, 0]], 0, [1])
    with pytest.raises(PreconditionError):
        definitize(unreduced)
    with pytest.raises(ResourceLimitError):
        definitize(A6, limit=3)


def test_definitize_letters_are_elevating_and_sink_maps(A6):
    b = definitize(A6)
    order = sink_partition(A6).order()
    rank = {q: i for i, q in enumerate(order)}
    for name in b.alphabet:
        image = [int(x) for x in name.split(",")]
        assert rank[image[0]] > rank[0]
        assert all(image[q] in (1, 2) for q in (1, 2))
    assert list(b.alphabet) == sorted(b.alphabet)


def test_definitize_on_all_small_generalized_definite_automata():
    seen = set()
    built = 0
    for dfa in enumerate_dfas(3, 2):
        a = minimize(dfa).reduced
        if a in seen or admits_pg(a) is not None:
            continue
        seen.add(a)
        sg = enumerate_semigroup(a)
        part = sink_partition(a)
        # |T| is at most the product of the block restriction counts
        blocks = [list(part.q0_states)] if part.q0_states else []
        blocks += [list(s) for s in part.sinks]
        per_block = [len({tuple(t[q] for q in block) for t in sg}) for block in blocks]
        assert len(sg) <= prod(per_block)
        if len(part.sinks[-1]) == 1:
            with pytest.raises(ReverseDefiniteCaseError):
                definitize(a)
            continue
        b = definitize(a)
        assert is_reduced(b) and admits_pd(b) is None
        assert len(enumerate_semigroup(b)) >= len(sg)
        largest = part.sinks[-1]
        assert {restrict(t, largest) for t in enumerate_semigroup(b)} >= {restrict(t, largest) for t in sg}
        built += 1
    assert built > 0
