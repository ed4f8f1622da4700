import json
import os

from curlnum.cache import Cache


def test_store_fetch_roundtrip(tmp_path):
    c = Cache(str(tmp_path))
    assert c.fetch("omega", ("8", "exhaustive")) is None
    c.store("omega", ("8", "exhaustive"), "omega=58 best=23222323\n")
    assert c.fetch("omega", ("8", "exhaustive")) == "omega=58 best=23222323\n"
    # params are normalized, so equal values of different types share a slot
    assert c.fetch("omega", (8, "exhaustive")) == "omega=58 best=23222323\n"


def test_distinct_params_distinct_slots(tmp_path):
    c = Cache(str(tmp_path))
    c.store("omega", ("8",), "eight\n")
    c.store("omega", ("9",), "nine\n")
    assert c.fetch("omega", ("8",)) == "eight\n"
    assert c.fetch("omega", ("9",)) == "nine\n"


def test_version_mismatch_misses(tmp_path):
    old = Cache(str(tmp_path), version=1)
    old.store("tables", ("12",), "rows\n")
    assert Cache(str(tmp_path), version=2).fetch("tables", ("12",)) is None
    assert old.fetch("tables", ("12",)) == "rows\n"


def test_corrupted_payload_misses(tmp_path):
    c = Cache(str(tmp_path))
    entry = c.store("tails", ("6",), "i count\n")
    with open(entry.payload_path, "w") as fh:
        fh.write("tampered\n")
    assert c.fetch("tails", ("6",)) is None


def test_corrupted_metadata_misses(tmp_path):
    c = Cache(str(tmp_path))
    entry = c.store("tails", ("7",), "payload\n")
    meta = entry.payload_path[:-len(".out")] + ".json"
    assert os.path.exists(meta)
    with open(meta, "w") as fh:
        fh.write("{not json")
    assert c.fetch("tails", ("7",)) is None


def test_entry_metadata_shape(tmp_path):
    c = Cache(str(tmp_path))
    entry = c.store("omega", ("4", "pruned"), "omega=4\n")
    meta = entry.payload_path[:-len(".out")] + ".json"
    with open(meta) as fh:
        data = json.load(fh)
    assert data["name"] == "omega"
    assert data["params"] == ["4", "pruned"]
    assert data["version"] == 1
    assert len(data["digest"]) == 64
