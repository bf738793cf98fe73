import pytest
from hypothesis import given
from hypothesis import strategies as st

from onevar.alphabet import Alphabet, ExpansionTooLong, PoppedRecord


@pytest.fixture
def alph():
    return Alphabet()


def test_pair_weight_and_memo(alph):
    a, b = alph.intern("a"), alph.intern("b")
    ab = alph.fresh_pair_letter(a, b)
    assert alph.weight(ab) == 2
    assert alph.fresh_pair_letter(a, b) == ab
    assert alph.expand(ab) == "ab"


def test_pair_of_composite(alph):
    a, b = alph.intern("a"), alph.intern("b")
    c = alph.fresh_pair_letter(a, b)
    ca = alph.fresh_pair_letter(c, a)
    assert alph.weight(ca) == 3
    assert alph.expand(ca) == "aba"


def test_pair_of_equal_letters_rejected(alph):
    a = alph.intern("a")
    with pytest.raises(ValueError, match="block, not pair"):
        alph.fresh_pair_letter(a, a)


def test_blocks(alph):
    a, b = alph.intern("a"), alph.intern("b")
    assert alph.weight(alph.fresh_block_letter(a, 3)) == 3
    c = alph.fresh_pair_letter(a, b)
    cc = alph.fresh_block_letter(c, 2)
    assert alph.expand(cc) == "abab" and alph.weight(cc) == 4
    assert cc in alph.block_letters
    with pytest.raises(ValueError):
        alph.fresh_block_letter(a, 1)


def test_nested_expansion(alph):
    a, b = alph.intern("a"), alph.intern("b")
    blk = alph.fresh_block_letter(alph.fresh_pair_letter(a, b), 3)
    assert alph.expand(blk, limit=10) == "ababab"


def test_expansion_limit(alph):
    a = alph.intern("a")
    big = alph.fresh_block_letter(a, 10**9)
    with pytest.raises(ExpansionTooLong, match=str(10**9)):
        alph.expand(big, limit=10**6)


def test_renumber_compacts_ids(alph):
    ids = [alph.intern(chr(0x100 + k)) for k in range(124)]
    words = [[ids[5], ids[9]], [ids[123], ids[5]]]
    chars = [alph.expand(c) for c in (ids[5], ids[9], ids[123])]
    alph.renumber(words)
    assert words == [[0, 1], [2, 0]]
    assert [alph.expand(c) for c in (0, 1, 2)] == chars
    before = [list(w) for w in words]
    alph.renumber(words)
    assert words == before


def test_renumber_empty(alph):
    alph.intern("a")
    assert alph.renumber([]) == {}


def test_popped_record_weights():
    rec = PoppedRecord()
    rec.pop_left(0, 2, 1)
    rec.pop_right(1, 1, 3)
    prefix, suffix, pw, sw = rec.snapshot()
    assert (pw, sw) == (2, 3)
    assert prefix == ((0, 2),) and suffix == ((1, 1),)


@given(st.lists(st.sampled_from("abc"), min_size=2, max_size=30))
def test_pair_compression_preserves_expansion(chars):
    alph = Alphabet()
    word = [alph.intern(c) for c in chars]
    a, b = word[0], word[1]
    if a == b:
        return
    p = alph.fresh_pair_letter(a, b)
    out, i = [], 0
    while i < len(word):
        if i + 1 < len(word) and word[i] == a and word[i + 1] == b:
            out.append(p)
            i += 2
        else:
            out.append(word[i])
            i += 1
    assert "".join(alph.expand(c) for c in out) == "".join(chars)
