from utils.validators import make_array_object, make_integer_object, make_object

hyperplane_properties = {
    **make_array_object('coefficients', ["string", "integer"]),
    **make_integer_object('m', is_required=False, minimum=0),
}

arrangement_properties = {
    **make_object('field', ["string", "object"], is_required=False),
    **make_integer_object('dim', minimum=1),
    **make_object('hyperplanes', "array", items=dict(type="object", properties=hyperplane_properties)),
}
