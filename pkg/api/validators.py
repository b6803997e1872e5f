from arrangement.validators import arrangement_properties
from utils.validators import make_array_object, make_object, validate

arrangement_schema = validate(arrangement_properties)

freecheck_schema = validate(
    arrangement_properties,
    make_array_object('pivot', ["string", "integer"], is_required=False),
)

peak_schema = validate(
    make_object('multiplicity', "array", items=dict(type="integer", minimum=0), minItems=4, maxItems=4),
)
