"""Artifact file formats: manifest.json, matrix CSV, basis and word files.

Writers are deterministic (sorted JSON keys, LF newlines, no floats or
timestamps in anything persisted) and atomic (temp file then rename inside
the target directory), so regenerating with the same flags reproduces every
artifact byte for byte.
"""

import json
import os
from dataclasses import dataclass
from pathlib import Path

from .construct import Code, Monomial, build_monomial_basis, validate_params
from .errors import FormatError
from .field import Field

FORMAT_VERSION = 1
ERASURE_MARK = "?"
POINT_ORDER = "row-coset-power"

MANIFEST_NAME = "manifest.json"
GENERATOR_NAME = "generator.csv"
PARITY_NAME = "parity.csv"
BASIS_NAME = "basis.txt"


def dumps_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def write_text_atomic(path: str | Path, text: str) -> None:
    path = Path(path)
    tmp = path.with_name(path.name + ".tmp")
    with open(tmp, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)
    os.replace(tmp, path)


def matrix_to_csv(rows: list[list[int]]) -> str:
    return "\n".join(",".join(str(x) for x in row) for row in rows) + "\n"


def parse_matrix_csv(text: str, q: int, path: str = "matrix") -> list[list[int]]:
    rows = []
    for ln, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        try:
            row = [int(tok) for tok in line.split(",")]
        except ValueError:
            raise FormatError(f"{path}: line {ln} is not comma-separated integers")
        if any(not 0 <= x < q for x in row):
            raise FormatError(f"{path}: line {ln} has entries outside [0, {q})")
        rows.append(row)
    if not rows:
        raise FormatError(f"{path}: no rows")
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise FormatError(f"{path}: ragged rows")
    return rows


def basis_to_text(basis: list[Monomial]) -> str:
    return "\n".join(f"{i} {j}" for i, j in basis) + "\n"


def parse_basis(text: str, path: str = "basis") -> list[Monomial]:
    out = []
    for ln, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"{path}: line {ln} is not an 'i j' pair")
        try:
            out.append(Monomial(int(parts[0]), int(parts[1])))
        except ValueError:
            raise FormatError(f"{path}: line {ln} is not an 'i j' pair")
    return out


def word_to_text(symbols: list[int | None]) -> str:
    return ",".join(ERASURE_MARK if s is None else str(s) for s in symbols) + "\n"


def parse_word(text: str, q: int, path: str = "word") -> list[int | None]:
    """Codeword file: one line of comma-separated indices, '?' for erased."""
    body = text.strip()
    if not body:
        raise FormatError(f"{path}: empty")
    out: list[int | None] = []
    for tok in body.split(","):
        tok = tok.strip()
        if tok == ERASURE_MARK:
            out.append(None)
            continue
        try:
            v = int(tok)
        except ValueError:
            raise FormatError(f"{path}: token {tok!r} is not an integer or '?'")
        if not 0 <= v < q:
            raise FormatError(f"{path}: symbol {v} outside [0, {q})")
        out.append(v)
    return out


def parse_message(text: str, q: int, k: int, path: str = "message") -> list[int]:
    symbols = parse_word(text, q, path)
    if any(s is None for s in symbols):
        raise FormatError(f"{path}: messages cannot contain '?'")
    if len(symbols) != k:
        raise FormatError(f"{path}: expected {k} symbols, found {len(symbols)}")
    return symbols  # type: ignore[return-value]


def manifest_dict(code: Code) -> dict:
    return {
        "format_version": FORMAT_VERSION,
        "field": code.field.spec_dict(),
        "code": {
            "r": code.r,
            "n": code.n,
            "k": code.k,
            "d_claimed": code.params.d_target,
            "optimal_regime": code.params.optimal_regime,
        },
        "ordering": {
            "primitive_element": code.domain.g,
            "point_order": POINT_ORDER,
        },
        "files": {
            "generator": GENERATOR_NAME,
            "parity": PARITY_NAME,
            "basis": BASIS_NAME,
        },
    }


def write_artifacts(code: Code, outdir: str | Path) -> dict[str, Path]:
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    paths = {
        "manifest": outdir / MANIFEST_NAME,
        "generator": outdir / GENERATOR_NAME,
        "parity": outdir / PARITY_NAME,
        "basis": outdir / BASIS_NAME,
    }
    write_text_atomic(paths["manifest"], dumps_json(manifest_dict(code)))
    write_text_atomic(paths["generator"], matrix_to_csv(code.generator_matrix))
    write_text_atomic(paths["parity"], matrix_to_csv(code.parity_check_matrix))
    write_text_atomic(paths["basis"], basis_to_text(code.basis))
    return paths


@dataclass
class LoadedArtifacts:
    """A rebuilt Code plus the matrices exactly as stored on disk.

    Matrix files are taken as-is (not re-derived), so downstream checks see
    any tampering instead of silently repairing it.
    """

    code: Code
    manifest: dict
    generator_rows: list[list[int]]
    parity_rows: list[list[int]]


def load_artifacts(dirpath: str | Path) -> LoadedArtifacts:
    dirpath = Path(dirpath)
    mpath = dirpath / MANIFEST_NAME
    try:
        manifest = json.loads(mpath.read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        raise FormatError(f"{mpath}: invalid JSON ({e})") from None
    try:
        fsec = manifest["field"]
        csec = manifest["code"]
        osec = manifest["ordering"]
        fsec_p, fsec_m = int(fsec["p"]), int(fsec["m"])
        modulus = [int(c) for c in fsec["modulus"]]
        r = int(csec["r"])
    except (KeyError, TypeError, ValueError):
        raise FormatError(f"{mpath}: missing or malformed manifest fields") from None
    if manifest.get("format_version") != FORMAT_VERSION:
        raise FormatError(f"{mpath}: unsupported format_version")
    if osec.get("point_order") != POINT_ORDER:
        raise FormatError(f"{mpath}: unknown point order {osec.get('point_order')!r}")
    try:
        field = Field(fsec_p, fsec_m, modulus)
    except ValueError as e:
        raise FormatError(f"{mpath}: bad field spec ({e})") from None
    if field.q != fsec.get("q"):
        raise FormatError(f"{mpath}: q does not match p^m")
    if osec.get("primitive_element") != field.generator:
        raise FormatError(f"{mpath}: primitive element does not match the field")
    params = validate_params(field, r)
    if params.n != csec.get("n") or params.k != csec.get("k"):
        raise FormatError(f"{mpath}: recorded n, k do not match q, r")
    code = Code.build(field, r)
    files = manifest.get("files", {})
    gname = files.get("generator", GENERATOR_NAME)
    pname = files.get("parity", PARITY_NAME)
    g_rows = parse_matrix_csv((dirpath / gname).read_text(encoding="utf-8"), field.q, gname)
    h_rows = parse_matrix_csv((dirpath / pname).read_text(encoding="utf-8"), field.q, pname)
    if len(g_rows) != params.k or len(g_rows[0]) != params.n:
        raise FormatError(f"{gname}: expected a {params.k} x {params.n} matrix")
    if len(h_rows) != params.n - params.k or len(h_rows[0]) != params.n:
        raise FormatError(
            f"{pname}: expected a {params.n - params.k} x {params.n} matrix"
        )
    return LoadedArtifacts(
        code=code, manifest=manifest, generator_rows=g_rows, parity_rows=h_rows
    )
