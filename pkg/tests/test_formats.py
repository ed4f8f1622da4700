import pytest

from curlnum.errors import FormatError
from curlnum.formats import (
    BFile,
    make_bfile,
    parse_bfile,
    parse_seq,
    read_bfile,
    read_csv_rows,
    render_bfile,
    render_csv,
    seq_to_text,
    write_bfile,
)


def test_parse_seq_forms():
    assert parse_seq("2323") == (2, 3, 2, 3)
    assert parse_seq("2,3,2,3") == (2, 3, 2, 3)
    assert parse_seq("0,1,-4,10") == (0, 1, -4, 10)
    assert parse_seq(" 2, 3 ") == (2, 3)


def test_parse_seq_rejects_garbage():
    for bad in ("", "2,,3", "abc", "23a", "2 3", ","):
        with pytest.raises(ValueError):
            parse_seq(bad)


def test_seq_to_text_roundtrip():
    assert seq_to_text((2, 3, 2)) == "232"
    assert seq_to_text((2, 3, 4)) == "2,3,4"
    for s in ((2, 3, 2, 2), (1, 2, 3), (10, -2)):
        assert parse_seq(seq_to_text(s)) == s


def test_bfile_render_parse_roundtrip():
    bf = make_bfile(1, [0, 2, 2, 4, 4])
    text = render_bfile(bf)
    assert text == "1 0\n2 2\n3 2\n4 4\n5 4\n"
    assert parse_bfile(text) == bf
    bf0 = make_bfile(0, [7])
    assert parse_bfile(render_bfile(bf0)) == bf0


def test_bfile_file_roundtrip(tmp_path):
    bf = make_bfile(1, list(range(50)))
    p = str(tmp_path / "b000000.txt")
    write_bfile(p, bf)
    assert read_bfile(p) == bf
    with open(p, "rb") as fh:
        raw = fh.read()
    assert b"\r" not in raw
    assert raw.endswith(b"\n")


def test_bfile_rejects_malformed():
    for bad in ("", "1 2", "1 2\n2\n", "1 2\nx 3\n", "1 2\n3 4\n", "2 1\n1 2\n"):
        with pytest.raises(FormatError):
            parse_bfile(bad)


def test_bfile_rejects_bad_build():
    with pytest.raises(FormatError):
        render_bfile(BFile(0, ((0, 1), (2, 2))))  # gap in indices


def test_csv_roundtrip(tmp_path):
    text = render_csv(("n", "value"), [(1, 2), (2, 4)])
    assert text == "n,value\n1,2\n2,4\n"
    p = tmp_path / "t.csv"
    p.write_text(text)
    header, rows = read_csv_rows(str(p))
    assert header == ["n", "value"]
    assert rows == [["1", "2"], ["2", "4"]]
