"""Word-cloud geometry and SVG rendering.

Words are sized linearly by weight, measured with a fixed font-metric
model, and placed greedily along an Archimedean spiral from the canvas
center. Boxes never rotate and never overlap once inflated by the
padding margin. Everything is deterministic: equal inputs give
byte-identical SVG.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Mapping
from xml.sax.saxutils import escape

from .textpipe import top_terms

_TWO_PI = 2.0 * math.pi

# Monospace-ish approximation; real glyph metrics vary by renderer.
_CHAR_WIDTH_EM = 0.6
_LINE_HEIGHT_EM = 1.2
# Baseline sits 0.3 em below the line-box center (0.8/0.2 ascent/descent
# split plus half-leading of the 1.2 em line box).
_BASELINE_DROP_EM = 0.3

DEFAULT_PALETTE = (
    "#4e79a7",
    "#f28e2b",
    "#e15759",
    "#76b7b2",
    "#59a14f",
    "#edc948",
    "#b07aa1",
    "#ff9da7",
    "#9c755f",
    "#bab0ac",
)


@dataclass(frozen=True)
class CloudConfig:
    width: int = 800
    height: int = 500
    min_font_size: float = 12.0
    max_font_size: float = 48.0
    padding: float = 2.0
    spiral_step: float = 12.0  # radius gained per full turn, px
    angle_step: float = 0.35  # radians between candidates
    max_words: int = 100
    seed: int = 0
    font_family: str = "Helvetica, Arial, sans-serif"
    palette: tuple[str, ...] = DEFAULT_PALETTE

    def __post_init__(self) -> None:
        if self.width < 16 or self.height < 16:
            raise ValueError("canvas must be at least 16x16 px")
        if self.min_font_size <= 0 or self.max_font_size < self.min_font_size:
            raise ValueError("need 0 < min_font_size <= max_font_size")
        if self.padding < 0:
            raise ValueError("padding must be nonnegative")
        if self.spiral_step <= 0 or self.angle_step <= 0:
            raise ValueError("spiral_step and angle_step must be positive")
        if self.max_words < 0:
            raise ValueError("max_words must be nonnegative")
        if self.seed < 0 or self.seed >= 2**64:
            raise ValueError("seed must fit in 64 unsigned bits")
        if not self.palette:
            raise ValueError("palette must contain at least one color")


@dataclass(frozen=True)
class WordBox:
    term: str
    weight: float
    font_size: float
    x: float  # center
    y: float  # center
    box_width: float
    box_height: float


@dataclass(frozen=True)
class CloudLayout:
    config: CloudConfig
    placed: tuple[WordBox, ...] = ()
    skipped: tuple[tuple[str, float], ...] = ()


def scale_font(weight: float, wmin: float, wmax: float, cfg: CloudConfig) -> float:
    """Map weight linearly from [wmin, wmax] to [min_font_size, max_font_size]."""
    if not wmin <= weight <= wmax:
        raise ValueError(f"weight {weight} outside [{wmin}, {wmax}]")
    if wmax == wmin:
        return cfg.max_font_size
    span = cfg.max_font_size - cfg.min_font_size
    return cfg.min_font_size + span * (weight - wmin) / (wmax - wmin)


def measure_text(term: str, font_size: float) -> tuple[float, float]:
    """Box size for a term under the fixed font-metric model."""
    if not term:
        raise ValueError("cannot measure an empty term")
    return _CHAR_WIDTH_EM * font_size * len(term), _LINE_HEIGHT_EM * font_size


def _start_angle(seed: int) -> float:
    if seed == 0:
        return 0.0
    return random.Random(seed).uniform(0.0, _TWO_PI)


def place_words(weights: Mapping[str, float], cfg: CloudConfig) -> CloudLayout:
    """Lay out the top-weighted terms on the canvas.

    Words are processed heaviest first (ties by term) and each takes the
    first spiral candidate whose padded box fits inside the canvas without
    touching any previously placed padded box. A word whose spiral runs
    past the canvas diagonal is skipped, not shrunk.
    """
    terms = top_terms(weights, cfg.max_words)
    if not terms:
        return CloudLayout(config=cfg)

    wmax = terms[0][1]
    wmin = terms[-1][1]
    cx = cfg.width / 2.0
    cy = cfg.height / 2.0
    eccentricity = cfg.height / cfg.width
    diagonal = math.hypot(cfg.width, cfg.height)
    phi0 = _start_angle(cfg.seed)
    half_pad = cfg.padding / 2.0

    placed: list[WordBox] = []
    obstacles: list[tuple[float, float, float, float]] = []  # padded l, t, r, b
    skipped: list[tuple[str, float]] = []
    last_hit = -1  # spiral neighbours usually collide with the same box

    for term, weight in terms:
        font_size = scale_font(weight, wmin, wmax, cfg)
        bw, bh = measure_text(term, font_size)
        hw = bw / 2.0 + half_pad
        hh = bh / 2.0 + half_pad
        spot = None
        if 2 * hw <= cfg.width and 2 * hh <= cfg.height:
            j = 0
            while True:
                t = j * cfg.angle_step
                r = cfg.spiral_step * t / _TWO_PI
                if r > diagonal:
                    break
                x = cx + r * math.cos(t + phi0)
                y = cy + eccentricity * r * math.sin(t + phi0)
                j += 1
                left, top, right, bottom = x - hw, y - hh, x + hw, y + hh
                if left < 0 or top < 0 or right > cfg.width or bottom > cfg.height:
                    continue
                if 0 <= last_hit < len(obstacles):
                    ol, ot, orr, ob = obstacles[last_hit]
                    if left < orr and ol < right and top < ob and ot < bottom:
                        continue
                collision = False
                for i, (ol, ot, orr, ob) in enumerate(obstacles):
                    if left < orr and ol < right and top < ob and ot < bottom:
                        collision = True
                        last_hit = i
                        break
                if not collision:
                    spot = (x, y)
                    break
        if spot is None:
            skipped.append((term, weight))
            continue
        placed.append(
            WordBox(
                term=term,
                weight=weight,
                font_size=font_size,
                x=spot[0],
                y=spot[1],
                box_width=bw,
                box_height=bh,
            )
        )
        obstacles.append((spot[0] - hw, spot[1] - hh, spot[0] + hw, spot[1] + hh))

    return CloudLayout(config=cfg, placed=tuple(placed), skipped=tuple(skipped))


def _attr(value: str) -> str:
    return escape(value, {'"': "&quot;"})


def render_svg(layout: CloudLayout) -> str:
    """Serialize a layout to a standalone SVG 1.1 document.

    One <text> per placed word, fill cycling through the palette in placed
    order; terms and weights ride along as data attributes so a UI can wire
    click-to-filter without re-tokenizing anything.
    """
    cfg = layout.config
    lines = [
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{cfg.width}" height="{cfg.height}" '
        f'viewBox="0 0 {cfg.width} {cfg.height}" '
        f'font-family="{_attr(cfg.font_family)}">'
    ]
    for rank, box in enumerate(layout.placed):
        color = cfg.palette[rank % len(cfg.palette)]
        baseline = box.y + _BASELINE_DROP_EM * box.font_size
        lines.append(
            f'<text x="{box.x:.2f}" y="{baseline:.2f}" '
            f'font-size="{box.font_size:.2f}" text-anchor="middle" '
            f'fill="{_attr(color)}" data-term="{_attr(box.term)}" '
            f'data-weight="{box.weight:.2f}">{escape(box.term)}</text>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
