"""The built-in test corpus: generator files shipped under ``data/corpus``.

The files are produced by :func:`write_corpus` from catalog constructors and
committed; scans read the files, never the constructors.
"""
from __future__ import annotations

from importlib import resources
from pathlib import Path

from . import catalog as C
from .permcore import GeneratedGroup, load_group, parse_group_text

CORPUS_DIR = "data/corpus"


def _specs():
    A, S, Cy, D = C.alternating, C.symmetric, C.cyclic, C.dihedral
    return [
        ("c01", lambda: Cy(1)),
        ("c02", lambda: Cy(2)),
        ("c03", lambda: Cy(3)),
        ("c04", lambda: Cy(4)),
        ("c07", lambda: Cy(7)),
        ("c08", lambda: Cy(8)),
        ("c09", lambda: Cy(9)),
        ("c15", lambda: Cy(15)),
        ("c2xc2", lambda: C.direct_product([Cy(2), Cy(2)])),
        ("c3xc3xc3", lambda: C.direct_product([Cy(3), Cy(3), Cy(3)])),
        ("d08", lambda: D(8)),
        ("d10", lambda: D(10)),
        ("d12", lambda: D(12)),
        ("d16", lambda: D(16)),
        ("s3", lambda: S(3)),
        ("s4", lambda: S(4)),
        ("s5", lambda: S(5)),
        ("s6", lambda: S(6)),
        ("s3xs3", lambda: C.direct_product([S(3), S(3)])),
        ("a4", lambda: A(4)),
        ("a5", lambda: A(5)),
        ("a6", lambda: A(6)),
        ("a5xc7", lambda: C.direct_product([A(5), Cy(7)])),
        ("a5xs3", lambda: C.direct_product([A(5), S(3)])),
        ("sl2_3", lambda: C.sl2_vectors(3)),
        ("agl1_5", lambda: C.affine(5, 4)),
        ("frob21", lambda: C.affine(7, 3)),
        ("frob55", lambda: C.affine(11, 5)),
        ("frob57", lambda: C.affine(19, 3)),
        ("psl2_7", lambda: C.psl2(7)),
        ("psl2_8", lambda: C.psl2(8)),
        ("psl2_11", lambda: C.psl2(11)),
        ("psl2_13", lambda: C.psl2(13)),
        ("psl2_16", lambda: C.psl2(16)),
        ("psl2_27", lambda: C.psl2(27)),
        ("psl3_3", C.psl3_3),
        ("sz8", C.suzuki_8),
    ]


def corpus_entries() -> list[tuple[str, "C.CatalogEntry"]]:
    return [(name, make()) for name, make in _specs()]


def write_corpus(directory) -> list[Path]:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    paths = []
    for name, entry in corpus_entries():
        path = directory / f"{name}.grp"
        entry.export(path)
        paths.append(path)
    return paths


def load_dir(directory) -> list[tuple[str, GeneratedGroup]]:
    """Every ``*.grp`` file in a directory, in lexicographic filename order."""
    paths = sorted(Path(directory).glob("*.grp"), key=lambda p: p.name)
    return [(p.stem, load_group(p)) for p in paths]


def builtin_corpus() -> list[tuple[str, GeneratedGroup]]:
    root = resources.files("sylowlab").joinpath(CORPUS_DIR)
    files = sorted((f for f in root.iterdir() if f.name.endswith(".grp")), key=lambda f: f.name)
    return [(f.name[:-4], parse_group_text(f.read_text(encoding="utf-8"), path=f.name)) for f in files]


def builtin_corpus_dir() -> Path:
    return Path(str(resources.files("sylowlab").joinpath(CORPUS_DIR)))
