from fractions import Fraction

from faker import Faker

from utils.exceptions import NotAllowed

fake_data_generator = Faker()

Faker.seed(0)

PROPERTY_CASES = 500


def random_multiplicity(size, low=1, high=5):
    return tuple(fake_data_generator.random_int(min=low, max=high) for _ in range(size))


def random_rational(height=4):
    numerator = fake_data_generator.random_int(min=-height, max=height)
    return Fraction(numerator, fake_data_generator.random_int(min=1, max=height))


def random_offsets(universe, size):
    if size > len(universe):
        raise NotAllowed(f'Cannot draw {size} distinct offsets from {len(universe)} values')
    return tuple(sorted(fake_data_generator.random_sample(elements=list(universe), length=size)))


def random_form(dim, height=3):
    while True:
        form = tuple(fake_data_generator.random_int(min=-height, max=height) for _ in range(dim))
        if any(form):
            return form
