"""Text renderings of a figure: ASCII, SVG, TikZ and canonical JSON.

All formats put the longest row at the bottom and align rows on the left,
so a figure reads the same way as the worked ``n <= 10`` table.
"""

from __future__ import annotations

from dataclasses import dataclass

from ._util import dumps
from .diagram import Partition, to_json

__all__ = ["FORMATS", "RenderSpec", "render"]

FORMATS = ("ascii", "svg", "tikz", "json")


@dataclass(frozen=True)
class RenderSpec:
    format: str = "ascii"
    cell_size: float = 10
    align: str = "bottom_left"

    def __post_init__(self):
        if self.format not in FORMATS:
            raise ValueError(f"unknown format {self.format!r}; expected one of {FORMATS}")
        if not self.cell_size > 0:
            raise ValueError(f"cell_size must be positive, got {self.cell_size!r}")
        if self.align != "bottom_left":
            raise ValueError("only bottom_left alignment is supported")


def _num(v: float) -> str:
    return f"{v:g}"


def _cells(d: Partition):
    """Yield ``(column, level)`` per square; level 0 is the bottom row."""
    for level, length in enumerate(d):
        for col in range(length):
            yield col, level


def render_ascii(d: Partition) -> str:
    return "".join("#" * length + "\n" for length in reversed(d))


def render_svg(d: Partition, cell_size: float = 10) -> str:
    s = cell_size
    w, h = (d[0] if d else 0) * s, len(d) * s
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
           f'width="{_num(w)}" height="{_num(h)}" viewBox="0 0 {_num(w)} {_num(h)}">']
    for col, level in _cells(d):
        y = (len(d) - 1 - level) * s
        out.append(f'  <rect x="{_num(col * s)}" y="{_num(y)}" width="{_num(s)}" height="{_num(s)}" '
                   f'fill="none" stroke="black"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_tikz(d: Partition, cell_size: float = 10) -> str:
    # cell_size 10 gives scale=0.2, the table's figure scale
    out = [f"\\begin{{tikzpicture}}[scale={_num(cell_size / 50)}]"]
    for col, level in _cells(d):
        out.append(f"   \\draw ({col},{level}) rectangle +(1,1);")
    out.append("\\end{tikzpicture}")
    return "\n".join(out) + "\n"


def render(d, spec: RenderSpec | None = None) -> str:
    """Render ``d`` deterministically in the format named by ``spec``."""
    spec = spec or RenderSpec()
    d = d if isinstance(d, Partition) else Partition(d)
    if spec.format == "ascii":
        return render_ascii(d)
    if spec.format == "svg":
        return render_svg(d, spec.cell_size)
    if spec.format == "tikz":
        return render_tikz(d, spec.cell_size)
    return dumps(to_json(d), separators=(",", ":")) + "\n"
