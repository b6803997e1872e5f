"""Depth-first search for free extensions of A2 and B2 multiarrangements.

Candidates are drawn in the deconing z = 1, where each hyperplane ker(a*x + b*y - t*z)
is the affine line a*x + b*y = t. For a simple extension E of (A, m),

    LMP(E) = |m| + sum of m_i*m_j over pairs of classes - gain,

where gain sums (k - 1)(k - 2)/2 over affine points on k lines. E is free exactly when
LMP(E) = VGMP(E, H0), so a leaf is free when its gain equals the required saving.
"""
import itertools
import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from arrangement.models import Hyperplane, Multiarrangement
from arrangement.services import A2_FORMS, B2_FORMS, multiplicity_is_balanced
from classify.services import exponents
from utils.exceptions import ConsistencyError, NotAllowed
from utils.timing import timed
from .models import ExtensionCandidate, SearchResult
from .services import candidate_freeness, restriction_bounds

logger = logging.getLogger(__name__)

COUNTERS = ('tested', 'pruned_restriction', 'pruned_lmp', 'free_found', 'tasks')


def line_intersection(first, second):
    (a1, b1, t1), (a2, b2, t2) = first, second
    det = a1 * b2 - a2 * b1
    return (t1 * b2 - t2 * b1) / det, (a1 * t2 - a2 * t1) / det


class _Canvas:
    """Affine lines of a partial candidate with the points where they meet."""

    def __init__(self):
        self.lines = []
        self.points = {}
        self.sizes = []
        self.gain = 0
        self._journal = []

    def place(self, cls, form, t):
        """Adds a line and returns the indices of lines that gained a point."""
        n = len(self.lines)
        line = (form[0], form[1], t)
        before, created, extended, grown = self.gain, [], [], [n]
        self.sizes.append(0)
        for j, (other_cls, other) in enumerate(self.lines):
            if other_cls == cls:
                continue
            p = line_intersection(line, other)
            through = self.points.get(p)
            if through is None:
                self.points[p] = [j, n]
                self.sizes[j] += 1
                self.sizes[n] += 1
                created.append(p)
                grown.append(j)
            elif through[-1] != n:
                self.gain += len(through) - 1
                through.append(n)
                self.sizes[n] += 1
                extended.append(p)
        self.lines.append((cls, line))
        self._journal.append((before, created, extended))
        return grown

    def undo(self):
        before, created, extended = self._journal.pop()
        for p in created:
            self.sizes[self.points.pop(p)[0]] -= 1
        for p in extended:
            self.points[p].pop()
        self.lines.pop()
        self.sizes.pop()
        self.gain = before

    def restriction_size(self, j):
        """|E^H| of line j: its affine points plus the point at infinity on H0."""
        return self.sizes[j] + 1


@dataclass
class _Plan:
    base: Multiarrangement
    classes: tuple
    forms: tuple
    mult: tuple
    pinned: tuple
    pools: tuple
    saving: int
    bounds: tuple
    lmp_prune: bool
    slots: tuple
    left: tuple
    remaining: tuple

    def violates_bounds(self, canvas, grown):
        if self.bounds is None:
            return False
        return any(canvas.restriction_size(j) > self.bounds[canvas.lines[j][0]].upper for j in grown)

    def over_budget(self, canvas, slot):
        return canvas.gain > self.saving or canvas.gain + self.remaining[slot] < self.saving

    def candidate(self, prefix, chosen):
        offsets = [None] * len(self.classes)
        for pos, values in enumerate(prefix):
            offsets[self.classes[pos]] = values
        for pos in range(len(prefix), len(self.classes)):
            values = tuple(t for s, t in zip(self.slots, chosen) if s == pos)
            offsets[self.classes[pos]] = self.pinned[pos] + values
        return ExtensionCandidate(self.base, offsets)


def _plan_classes(base):
    if base.dim != 2 or base.size not in (3, 4):
        raise NotAllowed('Free extensions are searched for A2 and B2 bases')
    forms = B2_FORMS if base.size == 4 else A2_FORMS
    classes = []
    for form in forms:
        hyperplane = Hyperplane(base.field, form)
        if hyperplane not in base:
            raise NotAllowed(f'{base} is not an A2 or B2 multiarrangement')
        classes.append(base.index(hyperplane))
    return tuple(classes)


def _pools(field, universe, mult):
    zero, one = field.zero, field.one
    ordered = field.characteristic == 0
    x_pinned = (zero, one) if mult[0] >= 2 else (zero,)
    pinned = [x_pinned, (zero,)] + [()] * (len(mult) - 2)
    pools = []
    for pos, fixed in enumerate(pinned):
        if not fixed:
            pools.append(tuple(universe))
        elif ordered:
            pools.append(tuple(v for v in universe if v > fixed[-1]))
        else:
            pools.append(tuple(v for v in universe if v not in fixed))
    return tuple(pinned), tuple(pools)


def _remaining_gain(mult, pinned):
    """Upper bound on the gain still reachable from each free slot after the x and y classes."""
    counts = [0] * len(mult)
    increments = []
    for pos, m in enumerate(mult):
        for k in range(m):
            others = [c for j, c in enumerate(counts) if j != pos]
            if pos >= 2 and k >= len(pinned[pos]):
                increments.append(sum(others) - max(others, default=0))
            counts[pos] += 1
    remaining = [0] * (len(increments) + 1)
    for s in range(len(increments) - 1, -1, -1):
        remaining[s] = remaining[s + 1] + increments[s]
    return tuple(remaining)


def search_plan(base, domain):
    if not domain.universe:
        raise NotAllowed('The search domain has no offsets')
    field = domain.field
    if base.field != field:
        base = Multiarrangement(field, base.dim, [(Hyperplane(field, h.coefficients), m) for h, m in base])
    classes = _plan_classes(base)
    mult = tuple(base.mult[i] for i in classes)
    pinned, pools = _pools(field, domain.universe, mult)
    pair = exponents(base)
    pairs = sum(mult[i] * mult[j] for i, j in itertools.combinations(range(len(mult)), 2))
    saving = sum(mult) + pairs - (pair.d1 + pair.d2 + pair.d1 * pair.d2)
    bounds = None
    if domain.restriction_prune and len(mult) == 4 and field.characteristic == 0 and multiplicity_is_balanced(mult):
        bounds = tuple(restriction_bounds(mult, pos) for pos in range(4))
    slots = tuple(pos for pos in range(2, len(mult)) for _ in range(mult[pos] - len(pinned[pos])))
    left = tuple(sum(1 for later in slots[s + 1:] if later == pos) for s, pos in enumerate(slots))
    return _Plan(
        base=base, classes=classes, forms=tuple(base.hyperplanes[i].coefficients for i in classes), mult=mult,
        pinned=pinned, pools=pools, saving=saving, bounds=bounds, lmp_prune=domain.lmp_prune,
        slots=slots, left=left, remaining=_remaining_gain(mult, pinned),
    )


def search_tasks(plan):
    """Prefix choices of the x and y classes; each is an independent subtree."""
    choices = [
        [plan.pinned[pos] + rest for rest in itertools.combinations(plan.pools[pos], plan.mult[pos] - len(plan.pinned[pos]))]
        for pos in (0, 1)
    ]
    return list(itertools.product(*choices))


def _verify(plan, candidate):
    E, report = candidate_freeness(candidate)
    if not report.is_free:
        raise ConsistencyError('A search leaf met the LMP budget but is not free', dict(
            candidate=repr(candidate), report=report.as_dict()))
    return report


def _check_lower_bounds(plan, canvas):
    if plan.bounds is None:
        return
    for j, (cls, _) in enumerate(canvas.lines):
        if canvas.restriction_size(j) < plan.bounds[cls].lower:
            raise ConsistencyError('A free candidate has a restriction below its lower bound', dict(
                line=j, size=canvas.restriction_size(j), bounds=plan.bounds[cls].__dict__))


def _descend(plan, canvas, prefix, slot, start, chosen, found, counters):
    if slot == len(plan.slots):
        counters['tested'] += 1
        if canvas.gain == plan.saving:
            _check_lower_bounds(plan, canvas)
            candidate = plan.candidate(prefix, chosen)
            found.append((candidate, _verify(plan, candidate)))
        return
    pos = plan.slots[slot]
    pool = plan.pools[pos]
    first = start if slot and plan.slots[slot - 1] == pos else 0
    for k in range(first, len(pool) - plan.left[slot]):
        grown = canvas.place(pos, plan.forms[pos], pool[k])
        chosen.append(pool[k])
        if plan.violates_bounds(canvas, grown):
            counters['pruned_restriction'] += 1
        elif plan.lmp_prune and plan.over_budget(canvas, slot + 1):
            counters['pruned_lmp'] += 1
        else:
            _descend(plan, canvas, prefix, slot + 1, k + 1, chosen, found, counters)
        chosen.pop()
        canvas.undo()


def run_task(plan, index, prefix):
    """Searches one subtree. Returns (index, [(candidate, report)], counters)."""
    counters = Counter()
    found = []
    canvas = _Canvas()
    for pos, values in enumerate(prefix):
        for t in values:
            grown = canvas.place(pos, plan.forms[pos], t)
            if plan.violates_bounds(canvas, grown):
                counters['pruned_restriction'] += 1
                return index, found, counters
    if plan.lmp_prune and plan.over_budget(canvas, 0):
        counters['pruned_lmp'] += 1
        return index, found, counters
    _descend(plan, canvas, prefix, 0, 0, [], found, counters)
    return index, found, counters


def _run_task_packed(args):
    return run_task(*args)


@timed
def search_free_extensions(base, domain, limit=0, workers=1):
    """All free extensions of ``base`` with offsets in ``domain``, up to normalization, in a fixed order."""
    plan = search_plan(base, domain)
    tasks = search_tasks(plan)
    logger.info('searching %s over %s: %d tasks, saving %d, restriction bounds %s',
                plan.base, domain.description, len(tasks), plan.saving, 'on' if plan.bounds else 'off')
    totals = Counter({name: 0 for name in COUNTERS})
    totals['tasks'] = len(tasks)
    results = []
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            outcomes = list(executor.map(_run_task_packed, [(plan, i, prefix) for i, prefix in enumerate(tasks)]))
        for index, found, counters in sorted(outcomes, key=lambda outcome: outcome[0]):
            totals.update(counters)
            results.extend(found)
    else:
        for index, prefix in enumerate(tasks):
            _, found, counters = run_task(plan, index, prefix)
            totals.update(counters)
            results.extend(found)
            if limit and len(results) >= limit:
                break
    totals['free_found'] = len(results)
    if limit:
        results = results[:limit]
    logger.info('search finished: %s', ', '.join(f'{name} {totals[name]}' for name in COUNTERS))
    return SearchResult(domain=domain, found=results, counters=dict(totals))
