import logging

from utils.exceptions import NotAllowed
from .selectors import hyperplane_signatures

logger = logging.getLogger(__name__)


def lattice_isomorphic(first, second):
    """Whether a bijection of hyperplanes carries the rank-2 flats of one lattice onto the other."""
    if first.rank != 3 or second.rank != 3:
        raise NotAllowed('Lattice isomorphism is decided for rank-3 lattices')
    n = first.arrangement.size
    if n != second.arrangement.size:
        return False
    if sorted(len(f.members) for f in first.flats(2)) != sorted(len(f.members) for f in second.flats(2)):
        return False
    signatures1 = hyperplane_signatures(first)
    signatures2 = hyperplane_signatures(second)
    if sorted(signatures1) != sorted(signatures2):
        return False

    image = {}
    used = set()

    def consistent(i, j):
        for a, b in image.items():
            if len(first.pair_flat(a, i).members) != len(second.pair_flat(b, j).members):
                return False
        assigned = list(image.items())
        for s in range(len(assigned)):
            for t in range(s + 1, len(assigned)):
                (a1, b1), (a2, b2) = assigned[s], assigned[t]
                if (i in first.pair_flat(a1, a2).members) != (j in second.pair_flat(b1, b2).members):
                    return False
        return True

    def extend(i):
        if i == n:
            return True
        for j in range(n):
            if j in used or signatures1[i] != signatures2[j] or not consistent(i, j):
                continue
            image[i] = j
            used.add(j)
            if extend(i + 1):
                return True
            del image[i]
            used.discard(j)
        return False

    found = extend(0)
    logger.debug('lattice isomorphism search on %d hyperplanes: %s', n, found)
    return found
