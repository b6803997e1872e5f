from collections import Counter

from utils.exceptions import NotAllowed


def rank2_profile(lattice):
    """Map i -> number of rank-2 flats lying on exactly i hyperplanes."""
    _require_simple_rank3(lattice)
    return dict(sorted(Counter(len(flat.members) for flat in lattice.flats(2)).items()))


def restriction_sizes(lattice):
    """|A^H| for every hyperplane H, i.e. the number of rank-2 flats on H."""
    sizes = [0] * lattice.arrangement.size
    for flat in lattice.flats(2):
        for j in flat.members:
            sizes[j] += 1
    return sizes


def hyperplane_signatures(lattice):
    signatures = [[] for _ in range(lattice.arrangement.size)]
    for flat in lattice.flats(2):
        for j in flat.members:
            signatures[j].append(len(flat.members))
    return [tuple(sorted(s)) for s in signatures]


def simple_lmp_get(lattice):
    return sum(len(flat.members) - 1 for flat in lattice.flats(2))


def flats_describe(lattice):
    A = lattice.arrangement
    return [
        [dict(members=[str(A.hyperplanes[j]) for j in sorted(flat.members)], mobius=flat.mobius)
         for flat in lattice.flats(rank)]
        for rank in range(lattice.rank + 1)
    ]


def _require_simple_rank3(lattice):
    if lattice.rank != 3 or not lattice.arrangement.is_simple:
        raise NotAllowed('Rank-2 profiles are taken of simple rank-3 arrangements')
