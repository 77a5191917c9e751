import functools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from ltgec._kernels import _dl_matrix_loops, dl_matrix, dl_matrix_numpy
from ltgec.alignment import (
    DELETE,
    INSERT,
    MATCH,
    SUBSTITUTE,
    TRANSPOSE,
    _encode,
    align,
    extract_edits,
    replay,
)
from ltgec.edits import Edit, apply_edits


def oracle_distance(a: str, b: str) -> int:
    """Plain recursive restricted Damerau-Levenshtein, memoized."""

    @functools.lru_cache(maxsize=None)
    def d(i: int, j: int) -> int:
        if i == 0:
            return j
        if j == 0:
            return i
        best = min(
            d(i - 1, j) + 1,
            d(i, j - 1) + 1,
            d(i - 1, j - 1) + (a[i - 1] != b[j - 1]),
        )
        if i > 1 and j > 1 and a[i - 1] == b[j - 2] and a[i - 2] == b[j - 1]:
            best = min(best, d(i - 2, j - 2) + 1)
        return best

    return d(len(a), len(b))


WORDS = st.text(alphabet="abą ", max_size=10)


class TestDistance:
    @pytest.mark.parametrize("a,b,cost", [
        ("", "", 0),
        ("a", "", 1),
        ("", "ab", 2),
        ("dirbti", "dirbti", 0),
        ("dirpti", "dirbti", 1),
        ("ab", "ba", 1),
        ("grazi", "graži", 1),
        ("atle isime", "atleisime", 1),
        ("kava", "kavos", 2),
    ])
    def test_known_costs(self, a, b, cost):
        assert align(a, b).cost == cost

    @given(WORDS, WORDS)
    def test_matches_oracle(self, a, b):
        assert align(a, b).cost == oracle_distance(a, b)

    @given(WORDS, WORDS)
    def test_symmetry(self, a, b):
        assert align(a, b).cost == align(b, a).cost

    @given(WORDS)
    def test_identity(self, a):
        script = align(a, a)
        assert script.cost == 0
        assert all(op.kind == MATCH for op in script.ops)

    @given(WORDS, WORDS)
    def test_length_difference_lower_bound(self, a, b):
        assert align(a, b).cost >= abs(len(a) - len(b))


class TestBackends:
    @given(WORDS, WORDS)
    def test_numpy_equals_loops(self, a, b):
        ca, cb = _encode(a), _encode(b)
        assert np.array_equal(dl_matrix_numpy(ca, cb), _dl_matrix_loops(ca, cb))

    @given(WORDS, WORDS)
    def test_dispatch_equals_loops(self, a, b):
        ca, cb = _encode(a), _encode(b)
        assert np.array_equal(dl_matrix(ca, cb), _dl_matrix_loops(ca, cb))


class TestScript:
    def test_substitution_position(self):
        ops = [op for op in align("dirpti", "dirbti").ops if op.kind != MATCH]
        assert ops == [align("dirpti", "dirbti").ops[3]]
        assert ops[0].kind == SUBSTITUTE
        assert (ops[0].src_pos, ops[0].src_text, ops[0].dst_text) == (3, "p", "b")

    def test_transposition(self):
        ops = [op for op in align("adgtal", "atgdal").ops if op.kind != MATCH]
        kinds = {op.kind for op in ops}
        assert align("ab", "ba").cost == 1
        assert TRANSPOSE in {op.kind for op in align("ab", "ba").ops}
        assert kinds <= {TRANSPOSE, SUBSTITUTE}

    @given(WORDS, WORDS)
    def test_replay_reconstructs_target(self, a, b):
        assert replay(align(a, b), a) == b

    def test_replay_rejects_wrong_source(self):
        script = align("abc", "abd")
        with pytest.raises(ValueError):
            replay(script, "xbc")

    @given(WORDS, WORDS)
    def test_op_count_consistency(self, a, b):
        script = align(a, b)
        cost = sum(1 for op in script.ops if op.kind != MATCH)
        assert cost == script.cost


class TestExtractEdits:
    def test_single_substitution(self):
        assert extract_edits("dirpti", "dirbti") == [Edit(3, 4, "b")]

    def test_stray_space_deletion(self):
        assert extract_edits("atle isime", "atleisime") == [Edit(4, 5, "")]

    def test_pure_insertion_is_zero_width(self):
        edits = extract_edits("išūkis", "iššūkis")
        assert len(edits) == 1
        assert edits[0].start == edits[0].end
        assert edits[0].replacement == "š"

    def test_adjacent_ops_merge(self):
        edits = extract_edits("abXYcd", "abcd")
        assert edits == [Edit(2, 4, "")]

    def test_two_separate_edits(self):
        edits = extract_edits("nusprende, kad grazu", "nusprendė, kad gražu")
        assert edits == [Edit(8, 9, "ė"), Edit(18, 19, "ž")]

    def test_no_difference(self):
        assert extract_edits("tas pats", "tas pats") == []

    @given(WORDS, WORDS)
    def test_apply_round_trip(self, a, b):
        edits = extract_edits(a, b)
        assert apply_edits(a, edits) == b
        # spans are sorted and disjoint by construction
        for prev, cur in zip(edits, edits[1:]):
            assert prev.end <= cur.start
