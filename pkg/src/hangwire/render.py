"""SVG wire diagrams.

Nails sit on a horizontal line. Each letter is one loop over the top of its
nail: ``+j`` enters from the left, ``-j`` from the right. Repeated passes
around a nail get larger radii so loops never coincide, and the strand
between two loops arches above the nails, higher for each later strand.
The whole wire is one path, so every later strand is drawn over the
earlier ones and no over/under choice is encoded.
"""

from __future__ import annotations

from xml.sax.saxutils import escape

from hangwire.word import as_word, format_word

MAX_RENDER_NAILS = 16
SPACING = 80
BASE_RADIUS = 14
RADIUS_STEP = 5
LANE_STEP = 4


def render_svg(w, title: str | None = None) -> str:
    w = as_word(w)
    if not w:
        raise ValueError("cannot render the zero word")
    n = max(w.support)
    if n > MAX_RENDER_NAILS:
        raise ValueError(f"rendering is limited to {MAX_RENDER_NAILS} nails, word uses nail {n}")

    passes = {j: 0 for j in range(1, n + 1)}
    for x in w:
        passes[abs(x)] += 1
    top_radius = BASE_RADIUS + RADIUS_STEP * max(passes.values())
    lift = top_radius + 12
    baseline = 20 + lift + LANE_STEP * len(w)
    width = SPACING * (n + 1)
    height = baseline + 50

    seen = {j: 0 for j in range(1, n + 1)}
    x0, y0 = SPACING // 4, 20
    d = [f"M {x0} {y0}"]
    for i, x in enumerate(w):
        j = abs(x)
        r = BASE_RADIUS + RADIUS_STEP * seen[j]
        seen[j] += 1
        cx = SPACING * j
        enter, leave, sweep = (cx - r, cx + r, 1) if x > 0 else (cx + r, cx - r, 0)
        lane = baseline - lift - LANE_STEP * i
        d.append(f"C {x0} {lane} {enter} {lane} {enter} {baseline}")
        d.append(f"A {r} {r} 0 0 {sweep} {leave} {baseline}")
        x0 = leave
    x1 = width - SPACING // 4
    lane = baseline - lift - LANE_STEP * len(w)
    d.append(f"C {x0} {lane} {x1} {lane} {x1} 20")

    label = title if title is not None else format_word(w)
    lines = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        '<!DOCTYPE svg PUBLIC "-//W3C//DTD SVG 1.1//EN" "http://www.w3.org/Graphics/SVG/1.1/DTD/svg11.dtd">',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f"<title>{escape(label)}</title>",
        '<g id="nails">',
    ]
    for j in range(1, n + 1):
        cx = SPACING * j
        lines.append(f'<circle cx="{cx}" cy="{baseline}" r="5" fill="black"/>')
        lines.append(f'<text x="{cx}" y="{baseline + 30}" text-anchor="middle" font-family="sans-serif" font-size="14">{j}</text>')
    lines.append("</g>")
    lines.append(f'<path id="wire" d="{" ".join(d)}" fill="none" stroke="firebrick" stroke-width="2"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
