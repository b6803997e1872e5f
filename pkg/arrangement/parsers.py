"""Reading and writing the line-oriented arrangement format and its JSON mirror."""
import json
import logging
import os

from exactalg.fields import FieldSpec, field_make, parse_modulus
from utils.exceptions import CustomBaseException, NotFound, ParseError
from utils.validators import check
from .models import Hyperplane, Multiarrangement
from .validators import arrangement_properties

logger = logging.getLogger(__name__)


def arrangement_parse(text, field_spec=None):
    spec = FieldSpec.rationals()
    field = None
    dim = None
    pairs = []
    seen = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        keyword = tokens[0].lower()
        if keyword == 'field':
            if pairs:
                raise ParseError('field must come before the first hyperplane', lineno)
            try:
                spec = FieldSpec.parse(' '.join(tokens[1:]))
                field = field_make(field_spec or spec)
            except CustomBaseException as e:
                raise ParseError(e.message, lineno)
        elif keyword == 'dim':
            if len(tokens) != 2 or not tokens[1].isdigit() or int(tokens[1]) < 1:
                raise ParseError('dim takes one positive integer', lineno)
            if pairs:
                raise ParseError('dim must come before the first hyperplane', lineno)
            dim = int(tokens[1])
        elif keyword == 'h':
            if dim is None:
                raise ParseError('dim must be declared before hyperplanes', lineno)
            if field is None:
                try:
                    field = field_make(field_spec or spec)
                except CustomBaseException as e:
                    raise ParseError(e.message, lineno)
            coefficients, m = _hyperplane_tokens(tokens[1:], lineno)
            if len(coefficients) != dim:
                raise ParseError(f'expected {dim} coefficients, got {len(coefficients)}', lineno)
            try:
                hyperplane = Hyperplane(field, [field.parse(t) for t in coefficients])
            except CustomBaseException as e:
                raise ParseError(e.message, lineno)
            if hyperplane in seen:
                raise ParseError(f'hyperplane {hyperplane} repeats line {seen[hyperplane]}', lineno)
            seen[hyperplane] = lineno
            pairs.append((hyperplane, m))
        else:
            raise ParseError(f"unknown keyword '{tokens[0]}'", lineno)
    if dim is None:
        raise ParseError('missing dim declaration')
    field = field or field_make(field_spec or spec)
    return Multiarrangement(field, dim, pairs)


def _hyperplane_tokens(tokens, lineno):
    if 'm' not in tokens:
        return tokens, 1
    index = tokens.index('m')
    if index != len(tokens) - 2 or not tokens[-1].isdigit():
        raise ParseError("'m' must be followed by one nonnegative integer at the end of the line", lineno)
    return tokens[:index], int(tokens[-1])


def arrangement_from_json(data, field_spec=None):
    check(data, arrangement_properties, error=ParseError)
    spec = field_spec or _json_field_spec(data.get('field', 'Q'))
    try:
        field = field_make(spec)
        dim = data['dim']
        pairs = []
        for position, item in enumerate(data['hyperplanes']):
            coefficients = [field.parse(str(c)) for c in item['coefficients']]
            if len(coefficients) != dim:
                raise ParseError(f'hyperplanes.{position}: expected {dim} coefficients')
            pairs.append((Hyperplane(field, coefficients), item.get('m', 1)))
    except ParseError:
        raise
    except CustomBaseException as e:
        raise ParseError(e.message)
    if len({h for h, _ in pairs}) != len(pairs):
        raise ParseError('a hyperplane is listed twice')
    return Multiarrangement(field, dim, pairs)


def _json_field_spec(value):
    try:
        if isinstance(value, str):
            return FieldSpec.parse(value)
        p = value['p']
        modulus = parse_modulus(value['modulus'], p) if value.get('modulus') else ()
        return FieldSpec.finite(p, value.get('e', 1), modulus)
    except (KeyError, TypeError):
        raise ParseError('field objects carry p, and optionally e and modulus')
    except CustomBaseException as e:
        raise ParseError(e.message)


def arrangement_load(path, field_spec=None):
    try:
        with open(path) as handle:
            text = handle.read()
    except OSError:
        raise NotFound(f'Cannot read {path}')
    logger.debug('Loaded %s', path)
    if os.path.splitext(path)[1].lower() == '.json':
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise ParseError(e.msg, e.lineno)
        return arrangement_from_json(data, field_spec)
    return arrangement_parse(text, field_spec)


def arrangement_dump(A):
    lines = [f'field {A.field.spec.describe()}', f'dim {A.dim}']
    for hyperplane, m in A:
        coefficients = ' '.join(A.field.format(c) for c in hyperplane.coefficients)
        lines.append(f'H {coefficients} m {m}')
    return '\n'.join(lines) + '\n'


def arrangement_to_json(A):
    return dict(
        field=A.field.spec.describe(),
        dim=A.dim,
        hyperplanes=[dict(coefficients=[A.field.format(c) for c in h.coefficients], m=m) for h, m in A],
    )
