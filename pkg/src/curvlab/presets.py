"""Shipped fixtures, written as ring/module TOML files.

r1: k[x]/(x^2)                 — hypersurface, complete intersection
r2: k[x,y]/(x^2, xy, y^2)      — minimal multiplicity, m^2 = 0
r3: k[a,b,c]/(a^2, bc, c^2, b^2 - a*c) — the h = 2 semigroup example,
    with the modules A/(a) (1-periodic) and A/(b,c)
r4: k[x,y]/(y^2)               — dimension 1, for the mod-x lemma
"""

from __future__ import annotations

import os

from .errors import UnknownPreset

_RING = """[ring]
char = {char}
vars = [{vars}]
order = "grevlex"
ideal = [{ideal}]
"""

_CYCLIC = """[module]
kind = "cyclic"
ideal = [{ideal}]
"""


def _ring_text(char, names, gens):
    return _RING.format(char=char,
                        vars=", ".join(f'"{v}"' for v in names),
                        ideal=", ".join(f'"{g}"' for g in gens))


def _cyclic_text(gens):
    return _CYCLIC.format(ideal=", ".join(f'"{g}"' for g in gens))


def write_preset(name: str, outdir: str = ".", h: int = 2,
                 char: int = 101) -> list[str]:
    """Write the fixture files for a preset; returns the written paths."""
    files: dict[str, str] = {}
    if name == "ex1":
        if h != 2:
            raise UnknownPreset("preset ex1 ships the h = 2 instance only")
        files["r3.toml"] = _ring_text(char, ["a", "b", "c"],
                                      ["a^2", "b*c", "c^2", "b^2 - a*c"])
        files["mod-a.toml"] = _cyclic_text(["a"])
        files["mod-bc.toml"] = _cyclic_text(["b", "c"])
    elif name == "msquare":
        files["r2.toml"] = _ring_text(char, ["x", "y"], ["x^2", "x*y", "y^2"])
    elif name == "hypersurface":
        files["r1.toml"] = _ring_text(char, ["x"], ["x^2"])
    elif name == "modx":
        files["r4.toml"] = _ring_text(char, ["x", "y"], ["y^2"])
    else:
        raise UnknownPreset(f"unknown preset {name!r}")
    os.makedirs(outdir, exist_ok=True)
    paths = []
    for fname, text in files.items():
        path = os.path.join(outdir, fname)
        with open(path, "w") as fh:
            fh.write(text)
        paths.append(path)
    return paths


PRESET_NAMES = ("ex1", "msquare", "hypersurface", "modx")
