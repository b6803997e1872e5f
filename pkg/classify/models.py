from dataclasses import dataclass

UNBALANCED_RULE = 'unbalanced-rule'
A2_RULE = 'a2-rule'
B2_PEAK_RULE = 'b2-peak-rule'
SOLVER = 'solver'


@dataclass(frozen=True)
class ExponentPair:
    d1: int
    d2: int
    provenance: str = SOLVER

    @property
    def delta(self):
        return self.d2 - self.d1

    def as_tuple(self):
        return self.d1, self.d2

    def __str__(self):
        return f'({self.d1}, {self.d2})'
