import networkx as nx
import pytest

from src.errors import InvalidOrder, NotATree, OrderTooLarge
from src.graph import Graph, cycle_graph, is_tree, path_graph, star_graph, to_networkx
from src.treeenum import (
    LevelSequence,
    all_free_trees,
    canonical_code,
    format_tree_dump,
    free_tree_level_sequences,
    level_sequence_to_tree,
    parse_tree_dump,
    prufer_census,
    prufer_decode,
    tree_centers,
)

TREE_COUNTS = [(1, 1), (2, 1), (3, 1), (4, 2), (5, 3), (6, 6), (7, 11), (8, 23), (9, 47),
               (10, 106), (11, 235), (12, 551)]


@pytest.mark.parametrize('n, count', TREE_COUNTS)
def test_tree_counts(n, count):
    assert sum(1 for _ in all_free_trees(n)) == count


@pytest.mark.parametrize('n', range(1, 11))
def test_one_tree_per_class(n):
    trees = list(all_free_trees(n))
    codes = {canonical_code(t) for t in trees}
    assert len(codes) == len(trees)
    assert all(is_tree(t) and t.n == n for t in trees)


def test_trees_are_pairwise_non_isomorphic_by_networkx():
    trees = [to_networkx(t) for t in all_free_trees(8)]
    for i in range(len(trees)):
        for j in range(i + 1, len(trees)):
            assert not nx.is_isomorphic(trees[i], trees[j])


def test_generation_is_deterministic():
    assert list(free_tree_level_sequences(9)) == list(free_tree_level_sequences(9))


def test_order_four():
    codes = {canonical_code(t) for t in all_free_trees(4)}
    assert codes == {canonical_code(path_graph(4)), canonical_code(star_graph(4))}


@pytest.mark.parametrize('n', range(2, 13))
def test_star_and_path_are_present(n):
    codes = [canonical_code(t) for t in all_free_trees(n)]
    assert codes.count(canonical_code(star_graph(n))) == 1
    assert codes.count(canonical_code(path_graph(n))) == 1


def test_single_vertex_tree():
    assert [t.edges for t in all_free_trees(1)] == [()]


def test_order_limits():
    with pytest.raises(OrderTooLarge):
        list(all_free_trees(23))
    with pytest.raises(InvalidOrder):
        list(all_free_trees(0))


def test_level_sequence_to_tree():
    assert level_sequence_to_tree([0, 1, 2, 1]).edges == ((0, 1), (0, 3), (1, 2))
    assert level_sequence_to_tree([0, 1, 1, 1]) == star_graph(4)
    assert level_sequence_to_tree([0]) == Graph(1)


@pytest.mark.parametrize('seq', [[1], [0, 2], [0, 0], [0, 1, 3]])
def test_invalid_level_sequences(seq):
    with pytest.raises(ValueError):
        level_sequence_to_tree(seq)
    with pytest.raises(ValueError):
        LevelSequence(tuple(seq))


def test_canonical_code_is_label_invariant():
    relabeled = Graph(4, [(2, 0), (0, 3), (3, 1)])
    assert canonical_code(relabeled) == canonical_code(path_graph(4))
    assert canonical_code(path_graph(4)) != canonical_code(star_graph(4))


def test_canonical_code_of_bicentral_tree_ignores_center_order():
    a = Graph(6, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)])
    b = Graph(6, [(5, 4), (5, 0), (4, 1), (4, 2), (5, 3)])
    assert canonical_code(a) == canonical_code(b)


def test_canonical_code_needs_a_tree():
    with pytest.raises(NotATree):
        canonical_code(cycle_graph(4))


def test_tree_id():
    tid = canonical_code(path_graph(5)).tree_id()
    assert len(tid) == 12
    int(tid, 16)


@pytest.mark.parametrize('g, centers', [
    (path_graph(5), [2]),
    (path_graph(4), [1, 2]),
    (star_graph(6), [0]),
    (Graph(1), [0]),
    (path_graph(2), [0, 1]),
])
def test_tree_centers(g, centers):
    assert tree_centers(g) == centers


def test_prufer_decode():
    t = prufer_decode([3, 3, 3, 4], 6)
    assert t.edges == ((0, 3), (1, 3), (2, 3), (3, 4), (4, 5))
    assert prufer_decode([], 2).edges == ((0, 1),)


def test_prufer_decode_rejects_bad_input():
    with pytest.raises(InvalidOrder):
        prufer_decode([0, 1], 3)
    with pytest.raises(ValueError):
        prufer_decode([5], 3)


@pytest.mark.parametrize('n, count', [(2, 1), (3, 1), (4, 2), (5, 3), (6, 6), (7, 11)])
def test_prufer_census(n, count):
    assert prufer_census(n) == count


@pytest.mark.slow
@pytest.mark.parametrize('n, count', [(8, 23), (9, 47)])
def test_prufer_census_large(n, count):
    assert prufer_census(n, jobs=4) == count
    assert sum(1 for _ in all_free_trees(n)) == count


def test_prufer_census_in_parallel():
    assert prufer_census(6, jobs=2) == 6


def test_prufer_census_limits():
    with pytest.raises(OrderTooLarge):
        prufer_census(10)
    with pytest.raises(InvalidOrder):
        prufer_census(1)


def test_tree_dump_format():
    ls = LevelSequence((0, 1, 2, 1))
    assert format_tree_dump(ls) == "4:0,1,2,1"
    assert parse_tree_dump("4:0,1,2,1\n") == ls


@pytest.mark.parametrize('line', ["4:0,1", "0,1,2", "x:0,1", "2:0,5"])
def test_bad_tree_dump(line):
    with pytest.raises(ValueError):
        parse_tree_dump(line)
