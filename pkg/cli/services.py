import logging
from dataclasses import dataclass
from fractions import Fraction

from django.template.loader import render_to_string

from arrangement.models import variable_names
from extend.search import line_intersection
from utils.exceptions import NotAllowed

logger = logging.getLogger(__name__)

SVG_SIZE = 400
PADDING = Fraction(1, 5)
DEFAULT_VIEWPORT = (Fraction(-1), Fraction(-1), Fraction(1), Fraction(1))


def pivot_parse(A, text):
    """A hyperplane given by a variable name ("z") or by its coefficients ("0 0 1", "0,0,1")."""
    text = (text or '').strip()
    names = variable_names(A.dim)
    if text in names:
        coefficients = [1 if name == text else 0 for name in names]
    else:
        tokens = text.replace(',', ' ').split()
        if len(tokens) != A.dim:
            raise NotAllowed(f"'{text}' is neither a variable of {', '.join(names)} nor {A.dim} coefficients")
        coefficients = [A.field.parse(t) for t in tokens]
    hyperplane = A.hyperplane(coefficients)
    A.index(hyperplane)
    return hyperplane


@dataclass(frozen=True)
class DeconeLine:
    label: str
    segment: tuple
    vertical: bool


@dataclass(frozen=True)
class DeconeFigure:
    viewport: tuple
    lines: tuple
    points: tuple
    ideal: str

    @property
    def marked_points(self):
        return [p for p, count in self.points if count >= 3]


def _affine_lines(E, H0):
    if E.dim != 3 or E.field.characteristic:
        raise NotAllowed('Deconings are drawn for rational arrangements in 3-space')
    nonzero = [i for i, c in enumerate(H0.coefficients) if c != 0]
    if len(nonzero) != 1:
        raise NotAllowed('Deconing needs the kernel of a coordinate')
    w = nonzero[0]
    u, v = [i for i in range(3) if i != w]
    lines = []
    for h in E.hyperplanes:
        if h == H0:
            continue
        a, b, c = h.coefficients[u], h.coefficients[v], h.coefficients[w]
        lines.append((str(h), (a, b, -c)))
    return lines


def _intersections(lines):
    points = {}
    for i, (_, first) in enumerate(lines):
        for j in range(i + 1, len(lines)):
            second = lines[j][1]
            if first[0] * second[1] - first[1] * second[0] == 0:
                continue
            points.setdefault(line_intersection(first, second), set()).update((i, j))
    return sorted(((p, len(through)) for p, through in points.items()), key=lambda item: item[0])


def _default_viewport(points):
    if not points:
        return DEFAULT_VIEWPORT
    xs = [p[0] for p, _ in points]
    ys = [p[1] for p, _ in points]
    box = []
    for low, high in ((min(xs), max(xs)), (min(ys), max(ys))):
        pad = (high - low) * PADDING if high > low else Fraction(1)
        box.append((low - pad, high + pad))
    return box[0][0], box[1][0], box[0][1], box[1][1]


def _clip(line, viewport):
    """Segment of a*x + b*y = t inside the viewport, or None."""
    a, b, t = line
    x0, y0, x1, y1 = viewport
    ends = set()
    if b != 0:
        for x in (x0, x1):
            y = (t - a * x) / b
            if y0 <= y <= y1:
                ends.add((x, y))
    if a != 0:
        for y in (y0, y1):
            x = (t - b * y) / a
            if x0 <= x <= x1:
                ends.add((x, y))
    if len(ends) < 2:
        return None
    ends = sorted(ends)
    return ends[0], ends[-1]


def decone_figure(E, H0, viewport=None):
    """Lines of E at H0 = 1, with their intersection points."""
    lines = _affine_lines(E, H0)
    points = _intersections(lines)
    viewport = tuple(Fraction(v) for v in viewport) if viewport else _default_viewport(points)
    if viewport[0] >= viewport[2] or viewport[1] >= viewport[3]:
        raise NotAllowed('A viewport is given as x0 y0 x1 y1 with x0 < x1 and y0 < y1')
    drawn = []
    for label, line in lines:
        segment = _clip(line, viewport)
        if segment is None:
            logger.debug('%s misses the viewport', label)
            continue
        drawn.append(DeconeLine(label, segment, line[1] == 0))
    inside = tuple((p, count) for p, count in points
                   if viewport[0] <= p[0] <= viewport[2] and viewport[1] <= p[1] <= viewport[3])
    return DeconeFigure(viewport, tuple(drawn), inside, f'ideal line: {H0}')


def _screen(viewport, point):
    x0, y0, x1, y1 = viewport
    x, y = point
    sx = (x - x0) / (x1 - x0) * SVG_SIZE
    sy = (y1 - y) / (y1 - y0) * SVG_SIZE
    return f'{float(sx):.3f}', f'{float(sy):.3f}'


def decone_svg(figure):
    lines = []
    for line in figure.lines:
        (sx1, sy1), (sx2, sy2) = (_screen(figure.viewport, end) for end in line.segment)
        lines.append(dict(x1=sx1, y1=sy1, x2=sx2, y2=sy2, label=line.label, vertical=line.vertical))
    points = []
    for p in figure.marked_points:
        cx, cy = _screen(figure.viewport, p)
        points.append(dict(cx=cx, cy=cy, count=dict(figure.points)[p]))
    return render_to_string('cli/decone.svg', dict(
        size=SVG_SIZE, lines=lines, points=points, ideal=figure.ideal,
        viewport=' '.join(str(v) for v in figure.viewport),
    ))
