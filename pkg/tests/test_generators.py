import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cactus_evc.engine import compute_evc
from cactus_evc.generators import (
    GenSpec,
    SplitMix64,
    bare_cycle,
    derive_seed,
    enumerate_small_cacti,
    fig1_family,
    generate,
    random_cactus,
    random_chordal_block_graph,
    random_tree,
)
from cactus_evc.graph import BlockKind, biconnected_components, is_cactus, serialize_edge_list
from cactus_evc.oracle import brute_force_mvc, oracle_evc


def test_splitmix_reference_vectors():
    rng = SplitMix64(0)
    assert [rng.next_u64() for _ in range(3)] == [
        0xE220A8397B1DCDAF,
        0x6E789E6AA1B965F4,
        0x06C45D188009454F,
    ]
    rng = SplitMix64(1234567)
    assert [rng.next_u64() for _ in range(3)] == [
        6457827717110365317,
        3203168211198807973,
        9817491932198370423,
    ]


@given(st.integers(0, 2**64 - 1), st.integers(1, 1000))
def test_below_in_range(seed, n):
    rng = SplitMix64(seed)
    assert all(0 <= rng.below(n) < n for _ in range(20))
    assert 0.0 <= rng.random() < 1.0


def test_below_rejects_zero():
    with pytest.raises(ValueError):
        SplitMix64(1).below(0)


def test_derive_seed_distinct():
    assert len({derive_seed(42, i) for i in range(1000)}) == 1000


def test_fig1_shape():
    g = fig1_family(2)
    assert (g.vertex_count, g.edge_count) == (6, 6)
    assert compute_evc(g).evc == 4
    assert oracle_evc(g) == 4


def test_fig1_k3_ratio():
    g = fig1_family(3)
    evc = compute_evc(g).evc
    mvc = brute_force_mvc(g)
    assert (evc, mvc) == (5, 3)
    assert evc > 1.5 * mvc


def test_fig1_rejects_small_k():
    with pytest.raises(ValueError):
        fig1_family(1)


def test_random_cactus_examples():
    assert random_cactus(1).vertex_count == 1
    t = random_cactus(50, 0.0, seed=11)
    assert t.edge_count == 49 and t.is_connected()
    g = random_cactus(9, 0.5, 7)
    assert compute_evc(g).evc == oracle_evc(g) == 6


def test_chordal_examples():
    g = random_chordal_block_graph(9, 3)
    assert compute_evc(g).evc == oracle_evc(g) == 7
    bowtie = random_chordal_block_graph(5, 1, menu=("K3",), attachments=("chordal",))
    assert bowtie.edges == ((0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4))


@given(st.integers(1, 80), st.floats(0, 1), st.integers(0, 2**64 - 1))
@settings(max_examples=80)
def test_cactus_guarantees(n, frac, seed):
    g = random_cactus(n, frac, seed)
    assert g.vertex_count == n and g.is_connected() and is_cactus(g)
    assert serialize_edge_list(g) == serialize_edge_list(random_cactus(n, frac, seed))


@given(st.integers(1, 80), st.integers(0, 2**64 - 1))
@settings(max_examples=80)
def test_chordal_guarantees(n, seed):
    g = random_chordal_block_graph(n, seed)
    assert g.vertex_count == n and g.is_connected()
    kinds = {b.kind for b in biconnected_components(g).blocks}
    assert BlockKind.OTHER not in kinds
    assert g == random_chordal_block_graph(n, seed)


@pytest.mark.parametrize(
    "spec",
    [
        GenSpec("tree", 30, 5),
        GenSpec("cactus", 30, 5, 0.7),
        GenSpec("fig1", 4),
        GenSpec("chordal", 30, 9, menu=("K4", "2tree")),
        GenSpec("cycle", 7),
    ],
)
def test_genspec_round_trip(spec):
    again = GenSpec.from_json(spec.to_json())
    assert again == spec
    assert serialize_edge_list(generate(again)) == serialize_edge_list(generate(spec))


def test_genspec_rejects_kind():
    with pytest.raises(ValueError):
        GenSpec("wheel", 5)


def test_generate_dispatch():
    assert generate(GenSpec("cycle", 5)) == bare_cycle(5)
    assert generate(GenSpec("tree", 20, 3)) == random_tree(20, 3)


def test_enumeration_small_members():
    by_n = {}
    for g in enumerate_small_cacti(4):
        by_n.setdefault(g.vertex_count, []).append(g)
    assert [len(by_n[n]) for n in (1, 2, 3, 4)] == [1, 1, 2, 4]
    degrees = sorted(tuple(sorted(g.degree(v) for v in range(4))) for g in by_n[4])
    # C4, triangle + pendant, P4, star
    assert degrees == [(1, 1, 1, 3), (1, 1, 2, 2), (1, 2, 2, 3), (2, 2, 2, 2)]


def test_enumeration_counts_frozen():
    assert sum(1 for _ in enumerate_small_cacti(5)) == 17
    counts = {}
    for g in enumerate_small_cacti(8):
        counts[g.vertex_count] = counts.get(g.vertex_count, 0) + 1
    assert [counts[n] for n in range(1, 9)] == [1, 1, 2, 4, 9, 23, 63, 188]


def test_tree_enumeration_counts():
    counts = {}
    for g in enumerate_small_cacti(9, trees_only=True):
        assert g.edge_count == g.vertex_count - 1
        counts[g.vertex_count] = counts.get(g.vertex_count, 0) + 1
    assert [counts[n] for n in range(1, 10)] == [1, 1, 1, 2, 3, 6, 11, 23, 47]


def test_enumeration_cap():
    with pytest.raises(ValueError):
        list(enumerate_small_cacti(10))
