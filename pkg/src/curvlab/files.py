"""Strict TOML-subset input files for rings and modules.

Ring files:    [ring]   char, vars, order (optional), ideal
Module files:  [module] kind = "cyclic" | "cokernel", ideal | matrix

Unknown keys or tables are parse errors: the formats are an interchange
contract, not a configuration language.
"""

from __future__ import annotations

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

from .algebra import QuotientAlgebra, build_algebra
from .errors import ParseError
from .modrep import ModuleRep, cyclic_module, cokernel_module, presentation_from_strings


def _load_toml(path: str) -> dict:
    try:
        with open(path, "rb") as fh:
            return tomllib.load(fh)
    except FileNotFoundError:
        raise ParseError(f"no such file: {path}") from None
    except tomllib.TOMLDecodeError as exc:
        raise ParseError(f"{path}: {exc}") from None


def _require_table(data: dict, name: str, path: str) -> dict:
    if set(data) != {name}:
        raise ParseError(f"{path}: expected exactly one [{name}] table, "
                         f"got {sorted(data)}")
    table = data[name]
    if not isinstance(table, dict):
        raise ParseError(f"{path}: [{name}] is not a table")
    return table


def load_ring(path: str, degree_guard: int = 32) -> QuotientAlgebra:
    table = _require_table(_load_toml(path), "ring", path)
    allowed = {"char", "vars", "order", "ideal"}
    unknown = set(table) - allowed
    if unknown:
        raise ParseError(f"{path}: unknown ring keys {sorted(unknown)}")
    for req in ("char", "vars", "ideal"):
        if req not in table:
            raise ParseError(f"{path}: missing ring key {req!r}")
    char = table["char"]
    vars_ = table["vars"]
    order = table.get("order", "grevlex")
    ideal = table["ideal"]
    if not isinstance(char, int):
        raise ParseError(f"{path}: char must be an integer")
    if (not isinstance(vars_, list)
            or not all(isinstance(v, str) for v in vars_)):
        raise ParseError(f"{path}: vars must be a list of strings")
    if order not in ("grevlex", "lex"):
        raise ParseError(f"{path}: order must be 'grevlex' or 'lex'")
    if (not isinstance(ideal, list)
            or not all(isinstance(s, str) for s in ideal)):
        raise ParseError(f"{path}: ideal must be a list of polynomial strings")
    return build_algebra(char, vars_, ideal, order=order,
                         degree_guard=degree_guard)


def load_module(path: str, a: QuotientAlgebra) -> ModuleRep:
    table = _require_table(_load_toml(path), "module", path)
    kind = table.get("kind")
    if kind == "cyclic":
        allowed = {"kind", "ideal"}
        if set(table) - allowed:
            raise ParseError(f"{path}: unknown module keys "
                             f"{sorted(set(table) - allowed)}")
        ideal = table.get("ideal")
        if (not isinstance(ideal, list)
                or not all(isinstance(s, str) for s in ideal)):
            raise ParseError(f"{path}: cyclic module needs ideal = [strings]")
        return cyclic_module(a, ideal)
    if kind == "cokernel":
        allowed = {"kind", "matrix"}
        if set(table) - allowed:
            raise ParseError(f"{path}: unknown module keys "
                             f"{sorted(set(table) - allowed)}")
        matrix = table.get("matrix")
        if (not isinstance(matrix, list) or not matrix
                or not all(isinstance(row, list)
                           and all(isinstance(s, str) for s in row)
                           for row in matrix)):
            raise ParseError(f"{path}: cokernel module needs "
                             "matrix = [[strings]]")
        return cokernel_module(a, presentation_from_strings(a, matrix))
    raise ParseError(f"{path}: kind must be 'cyclic' or 'cokernel'")
