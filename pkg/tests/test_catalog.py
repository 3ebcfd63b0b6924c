import json

import pytest

from dncat.catalog import build_catalog, default_dir, read_catalog, write_catalog
from dncat.triangulations import count_all, equivalence_classes


def test_build_counts():
    catalog = build_catalog(5)
    assert len(catalog.triangulations) == count_all(5)
    assert len(catalog.classes) == len(equivalence_classes(5))
    assert catalog.type_census() == {"1": 15, "2": 4, "3": 2, "4": 5}


def test_round_trip_is_byte_identical(tmp_path):
    catalog = build_catalog(4)
    target = write_catalog(catalog, tmp_path)
    first = {p.name: p.read_bytes() for p in target.iterdir()}
    loaded = read_catalog(4, tmp_path)
    write_catalog(loaded, tmp_path)
    second = {p.name: p.read_bytes() for p in target.iterdir()}
    assert first == second
    assert set(first) == {"triangulations.jsonl", "classes.jsonl", "meta.json"}


def test_checksum_validation(tmp_path):
    write_catalog(build_catalog(4), tmp_path)
    victim = tmp_path / "n=4" / "classes.jsonl"
    victim.write_text(victim.read_text().replace("p:1-3", "p:1-4"), encoding="utf-8")
    with pytest.raises(ValueError, match="checksum"):
        read_catalog(4, tmp_path)


def test_meta_contents(tmp_path):
    write_catalog(build_catalog(4), tmp_path)
    meta = json.loads((tmp_path / "n=4" / "meta.json").read_text())
    assert meta["counts"]["triangulations"] == 50
    assert meta["counts"]["classes"] == len(equivalence_classes(4))
    assert meta["checksums"]["triangulations.jsonl"].startswith("sha256:")


def test_parallel_build_matches_serial(tmp_path):
    serial = build_catalog(5, jobs=1)
    parallel = build_catalog(5, jobs=2)
    assert serial.classes == parallel.classes
    a = write_catalog(serial, tmp_path / "a")
    b = write_catalog(parallel, tmp_path / "b")
    for name in ("triangulations.jsonl", "classes.jsonl", "meta.json"):
        assert (a / name).read_bytes() == (b / name).read_bytes()


def test_dir_override(monkeypatch, tmp_path):
    monkeypatch.setenv("DNCAT_DIR", str(tmp_path / "somewhere"))
    assert default_dir() == tmp_path / "somewhere"
