"""
Text serialisation of Wigner grids.

Grid CSV::

    # dwigner v1 N=<N> rows=p cols=q
    <2N lines; line p holds W(0, p), ..., W(2N-1, p) with 17 significant digits>

Heatmap: ASCII PGM (P2), 2N x 2N, maxval 255, top row p = 2N - 1, with the
value range stored as ``# W_min=`` / ``# W_max=`` comments so that pixel
values map back to Wigner values.
"""

import os
import re
import tempfile
from pathlib import Path

import numpy as np

from .wigner import grid_dim

CSV_MAGIC = "# dwigner v1"
_HEADER = re.compile(r"^# dwigner v1 N=(\d+) rows=p cols=q$")
MAXVAL = 255


def atomic_write(path, text):
    """Write ``text`` to ``path`` through a temporary file and a rename."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _fmt(x):
    # 17 significant digits round-trip any double; normalise -0.0
    return "%.17g" % (x + 0.0)


def format_grid_csv(w):
    w = np.asarray(w, dtype=float)
    N = grid_dim(w)
    lines = [f"{CSV_MAGIC} N={N} rows=p cols=q"]
    for p in range(2 * N):
        lines.append(",".join(_fmt(v) for v in w[:, p]))
    return "\n".join(lines) + "\n"


def parse_grid_csv(text):
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty grid file")
    m = _HEADER.match(lines[0].strip())
    if not m:
        raise ValueError(f"bad grid header {lines[0]!r}")
    N = int(m.group(1))
    rows = lines[1:]
    if len(rows) != 2 * N:
        raise ValueError(f"expected {2 * N} data lines for N={N}, found {len(rows)}")
    data = np.array([[float(x) for x in row.split(",")] for row in rows])
    if data.shape != (2 * N, 2 * N):
        raise ValueError(f"expected {2 * N} values per line, got shape {data.shape}")
    # file rows are p, columns q
    return np.ascontiguousarray(data.T)


def write_grid_csv(path, w):
    atomic_write(path, format_grid_csv(w))


def read_grid_csv(path):
    return parse_grid_csv(Path(path).read_text(encoding="utf-8"))


def pgm_pixels(w):
    """Grey levels round(255 (W - W_min) / (W_max - W_min)), image row 0 = top = p = 2N - 1."""
    w = np.asarray(w, dtype=float)
    lo, hi = float(w.min()), float(w.max())
    if hi > lo:
        pix = np.floor(MAXVAL * (w - lo) / (hi - lo) + 0.5).astype(int)
    else:
        pix = np.zeros(w.shape, dtype=int)
    return pix.T[::-1], lo, hi


def format_pgm(w):
    N = grid_dim(w)
    pix, lo, hi = pgm_pixels(w)
    out = ["P2", f"# dwigner heatmap N={N} x=q y=p", f"# W_min={_fmt(lo)}", f"# W_max={_fmt(hi)}"]
    out.append(f"{2 * N} {2 * N}")
    out.append(str(MAXVAL))
    out.extend(" ".join(str(v) for v in row) for row in pix)
    return "\n".join(out) + "\n"


def write_pgm(path, w):
    atomic_write(path, format_pgm(w))


def parse_pgm(text):
    """Return (pixels indexed [q, p], W_min, W_max)."""
    lo = hi = None
    tokens = []
    for ln in text.splitlines():
        if ln.startswith("#"):
            key, _, val = ln[1:].strip().partition("=")
            if key == "W_min":
                lo = float(val)
            elif key == "W_max":
                hi = float(val)
            continue
        tokens.extend(ln.split())
    if not tokens or tokens[0] != "P2":
        raise ValueError("not an ASCII PGM (P2) file")
    width, height, maxval = (int(t) for t in tokens[1:4])
    pix = np.array([int(t) for t in tokens[4:]]).reshape(height, width)
    if maxval != MAXVAL:
        raise ValueError(f"unsupported maxval {maxval}")
    return np.ascontiguousarray(pix[::-1].T), lo, hi


def pgm_to_values(text):
    """Approximate Wigner values recovered from a heatmap (quantised to 1/255 of the range)."""
    pix, lo, hi = parse_pgm(text)
    return lo + (hi - lo) * pix / MAXVAL
