"""Persistent JSON catalog: triangulations, classes with quivers and
relations, and a checksummed metadata header.

Layout: <dir>/n=<k>/triangulations.jsonl, classes.jsonl, meta.json.  The
directory defaults to ./dncat_catalog and can be overridden by the
DNCAT_DIR environment variable or an explicit argument.  All serialization
is deterministic, so a build-write-read-rewrite round trip is byte
identical.
"""

from __future__ import annotations

import hashlib
import json
import os
from dataclasses import dataclass
from pathlib import Path

from . import quivers as qv
from . import relations as rl
from . import triangulations as tr

VERSION = "0.1.0"


def default_dir() -> Path:
    return Path(os.environ.get("DNCAT_DIR", "dncat_catalog"))


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


@dataclass
class Catalog:
    n: int
    triangulations: list[tr.Triangulation]
    classes: list[dict]  # class payloads with quiver and relations attached

    def type_census(self) -> dict:
        census: dict[str, int] = {}
        for payload in self.classes:
            key = str(payload["type"])
            census[key] = census.get(key, 0) + 1
        return census


def _class_payload(cls: tr.TriangulationClass) -> dict:
    quiver = qv.quiver_of(cls.representative)
    rels = rl.relations_of(cls.representative)
    payload = cls.to_json()
    payload["quiver"] = quiver.to_json()
    payload["relations"] = rels.to_json()
    return payload


def build_catalog(n: int, jobs: int = 1) -> Catalog:
    triangulations = list(tr.enumerate_all(n))
    qv.transport_table(n)  # built before forking so workers inherit it
    classes = list(tr.equivalence_classes(n))
    if jobs > 1:
        from multiprocessing import get_context

        with get_context("fork").Pool(jobs) as pool:
            payloads = pool.map(_class_payload, classes, chunksize=8)
    else:
        payloads = [_class_payload(c) for c in classes]
    return Catalog(n, triangulations, payloads)


def _sha256(path: Path) -> str:
    digest = hashlib.sha256(path.read_bytes()).hexdigest()
    return f"sha256:{digest}"


def write_catalog(catalog: Catalog, directory: Path | None = None) -> Path:
    base = Path(directory) if directory is not None else default_dir()
    target = base / f"n={catalog.n}"
    target.mkdir(parents=True, exist_ok=True)

    tri_path = target / "triangulations.jsonl"
    lines = [_dumps({"n": catalog.n, "count": len(catalog.triangulations)})]
    lines += [_dumps({"edges": t.token()}) for t in catalog.triangulations]
    tri_path.write_text("\n".join(lines) + "\n", encoding="utf-8")

    cls_path = target / "classes.jsonl"
    lines = [_dumps({"n": catalog.n, "count": len(catalog.classes)})]
    lines += [_dumps(payload) for payload in catalog.classes]
    cls_path.write_text("\n".join(lines) + "\n", encoding="utf-8")

    meta = {
        "version": VERSION,
        "n": catalog.n,
        "counts": {
            "triangulations": len(catalog.triangulations),
            "classes": len(catalog.classes),
            "typeCensus": catalog.type_census(),
        },
        "checksums": {
            "triangulations.jsonl": _sha256(tri_path),
            "classes.jsonl": _sha256(cls_path),
        },
    }
    (target / "meta.json").write_text(_dumps(meta) + "\n", encoding="utf-8")
    return target


def read_catalog(n: int, directory: Path | None = None) -> Catalog:
    base = Path(directory) if directory is not None else default_dir()
    target = base / f"n={n}"
    meta = json.loads((target / "meta.json").read_text(encoding="utf-8"))
    for name, recorded in meta["checksums"].items():
        actual = _sha256(target / name)
        if actual != recorded:
            raise ValueError(f"checksum mismatch for {name}: {actual} != {recorded}")

    tri_lines = (target / "triangulations.jsonl").read_text(encoding="utf-8").splitlines()
    header = json.loads(tri_lines[0])
    if header["count"] != len(tri_lines) - 1:
        raise ValueError("triangulation count disagrees with the header")
    triangulations = [
        tr.parse_triangulation(n, json.loads(line)["edges"]) for line in tri_lines[1:]
    ]

    cls_lines = (target / "classes.jsonl").read_text(encoding="utf-8").splitlines()
    header = json.loads(cls_lines[0])
    if header["count"] != len(cls_lines) - 1:
        raise ValueError("class count disagrees with the header")
    classes = [json.loads(line) for line in cls_lines[1:]]
    for payload in classes:
        rep = tr.parse_triangulation(n, payload["representative"])
        canonical, orbit = tr.canonical_form(rep)
        if canonical != rep or orbit != payload["orbitSize"]:
            raise ValueError(f"class representative {payload['representative']} not canonical")
    return Catalog(n, triangulations, classes)


def describe(catalog: Catalog) -> str:
    census = ", ".join(f"type {k}: {v}" for k, v in sorted(catalog.type_census().items()))
    return (
        f"n={catalog.n}: {len(catalog.triangulations)} triangulations, "
        f"{len(catalog.classes)} classes ({census})"
    )
