import random
from itertools import product

from curlnum import core
from curlnum.fastcn import fast_curling_number, fast_tail_length, packed_cn
from curlnum.table import SuffixCNTable, default_table


def test_fast_matches_oracle_exhaustive():
    for n in range(1, 13):
        for s in product((2, 3), repeat=n):
            f = fast_curling_number(s)
            o = core.curling_number(s)
            assert (f.k, f.pi) == (o.k, o.pi), s


def test_fast_matches_oracle_random_long():
    rng = random.Random(7)
    for _ in range(2000):
        n = rng.randint(13, 50)
        s = tuple(rng.choice((2, 3)) for _ in range(n))
        f = fast_curling_number(s)
        o = core.curling_number(s)
        assert (f.k, f.pi) == (o.k, o.pi), s


def test_fast_with_lookup_table():
    tab = default_table()
    rng = random.Random(11)
    for _ in range(500):
        n = rng.randint(2, 40)
        s = tuple(rng.choice((2, 3)) for _ in range(n))
        assert fast_curling_number(s, table=tab) == fast_curling_number(s)


def test_packed_cn_agrees():
    tab = default_table()
    for n in range(1, 13):
        for s in product((2, 3), repeat=n):
            code = 0
            for sym in s:
                code = (code << 1) | (sym - 2)
            assert packed_cn(code, n, None) == fast_curling_number(s)
            assert packed_cn(code, n, tab) == fast_curling_number(s)


def test_fast_tail_length():
    assert fast_tail_length((2, 3, 2, 3)).tau == 4
    assert fast_tail_length((2, 3)).tau == 0
    for s in product((2, 3), repeat=8):
        fast = fast_tail_length(s)
        slow = core.extend_to_tail(s)
        assert (fast.tau, fast.extension) == (slow.tau, slow.extension)


def test_suffix_table_roundtrip(tmp_path):
    tab = SuffixCNTable.build(10)
    p = str(tmp_path / "suffix.bin")
    tab.save(p)
    back = SuffixCNTable.load(p)
    assert back.w == tab.w
    assert (back.codes == tab.codes).all()


def test_suffix_table_entries_are_capped_curl():
    tab = SuffixCNTable.build(8)
    for s in product((2, 3), repeat=8):
        code = 0
        for sym in s:
            code = (code << 1) | (sym - 2)
        assert tab.codes[code] == min(core.curling_number(s).k, 4)
