import pytest
from hypothesis import given, strategies as st

from conftest import SAMPLE
from lyndex import oracle
from lyndex.lyndon import is_lyndon, to_ranks
from lyndex.tree import build_lyndon_tree


def spans(tree):
    out = set()
    for node in tree.nodes:
        if node.left >= 0:
            l, r = tree.nodes[node.left], tree.nodes[node.right]
            out.add(((node.start, node.end), (l.start, l.end), (r.start, r.end)))
    return out


def oracle_spans(t):
    out = set()
    stack = [t]
    while stack:
        s, e, l, r = stack.pop()
        if l is not None:
            out.add(((s, e), l[:2], r[:2]))
            stack.extend((l, r))
    return out


def test_sample_root_split():
    tree = build_lyndon_tree(to_ranks(SAMPLE))
    root = tree.nodes[tree.root]
    assert (root.start, root.end) == (1, 11)
    assert tree.nodes[root.left][:2] == (1, 5)  # aabab
    assert tree.nodes[root.right][:2] == (6, 11)  # aababb
    assert len(tree.leaves()) == 11
    assert len(tree) == 21


def test_sample_matches_oracle():
    t = to_ranks(SAMPLE)
    assert spans(build_lyndon_tree(t)) == oracle_spans(oracle.naive_lyndon_tree(t))


def test_single_symbol():
    tree = build_lyndon_tree([5])
    assert len(tree) == 1 and tree.is_leaf(tree.root) and tree.height() == 0


@pytest.mark.parametrize("bad", [[], [2, 1], [1, 1], [1, 2, 1, 2]])
def test_non_lyndon_rejected(bad):
    with pytest.raises(ValueError, match="Lyndon"):
        build_lyndon_tree(bad)


lyndon_inputs = st.lists(st.integers(1, 3), min_size=1, max_size=40).map(lambda t: [0] + t)


@given(lyndon_inputs)
def test_matches_recursive_definition(t):
    assert is_lyndon(t)
    assert spans(build_lyndon_tree(t)) == oracle_spans(oracle.naive_lyndon_tree(t))


@given(lyndon_inputs)
def test_every_node_is_lyndon(t):
    tree = build_lyndon_tree(t)
    for node in tree.nodes:
        assert is_lyndon(t[node.start - 1:node.end])
    assert [tree.nodes[v].start for v in tree.leaves()] == list(range(1, len(t) + 1))
