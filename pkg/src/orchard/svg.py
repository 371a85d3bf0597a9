"""SVG rendering of a planar configuration coloured by a two-partition."""

from __future__ import annotations

from xml.sax.saxutils import escape

from .errors import InputError

SIZE = 800
MARGIN = 0.05
RADIUS = 8


def render_svg(c, partition, names=("cherry", "plum")) -> str:
    """Circles for the class of the first point, squares for the other class."""
    if c.dim != 2:
        raise InputError("SVG output is only available for planar configurations")
    xs = [float(p[0]) for p in c.points]
    ys = [float(p[1]) for p in c.points]
    span = max(max(xs) - min(xs), max(ys) - min(ys)) or 1.0
    inner = SIZE * (1 - 2 * MARGIN)
    scale = inner / span
    x0 = min(xs) - (span - (max(xs) - min(xs))) / 2
    y0 = min(ys) - (span - (max(ys) - min(ys))) / 2

    def px(x, y):
        # SVG y axis points down
        return SIZE * MARGIN + (x - x0) * scale, SIZE - SIZE * MARGIN - (y - y0) * scale

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" '
        f'viewBox="0 0 {SIZE} {SIZE}">',
        "<style>"
        f".{names[0]} {{ fill: #c0142b; }} .{names[1]} {{ fill: #5b2a86; }}"
        "</style>",
    ]
    for label, x, y in zip(c.labels.labels, xs, ys):
        cx, cy = px(x, y)
        if partition.sign_of(label) == 1:
            lines.append(f'<circle class="{names[0]}" cx="{cx:.3f}" cy="{cy:.3f}" r="{RADIUS}"><title>{escape(str(label))}</title></circle>')
        else:
            lines.append(
                f'<rect class="{names[1]}" x="{cx - RADIUS:.3f}" y="{cy - RADIUS:.3f}" '
                f'width="{2 * RADIUS}" height="{2 * RADIUS}"><title>{escape(str(label))}</title></rect>'
            )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
