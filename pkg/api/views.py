from django.views.decorators.http import require_GET, require_POST

from arrangement.parsers import arrangement_from_json
from classify.services import exponents, peak_report
from extend.services import default_pivot, yoshinaga_freeness
from lattice.selectors import flats_describe
from lattice.services import characteristic_polynomial, intersection_lattice
from .validators import arrangement_schema, freecheck_schema, peak_schema


@require_GET
def check_server_status(_):
    return dict()


@require_POST
@arrangement_schema
def get_exponents(request):
    pair = exponents(arrangement_from_json(request.json))
    return dict(exponents=list(pair.as_tuple()), provenance=pair.provenance)


@require_POST
@arrangement_schema
def get_chi(request):
    chi = characteristic_polynomial(arrangement_from_json(request.json))
    return dict(coefficients=list(chi.coefficients), b1=chi.b1, b2=chi.b2)


@require_POST
@arrangement_schema
def get_lattice(request):
    lattice = intersection_lattice(arrangement_from_json(request.json))
    return dict(ranks=flats_describe(lattice))


@require_POST
@freecheck_schema
def check_freeness(request):
    data = request.json
    E = arrangement_from_json(data)
    pivot = E.hyperplane([E.field.parse(str(c)) for c in data['pivot']]) if 'pivot' in data else default_pivot(E)
    return yoshinaga_freeness(E, pivot).as_dict()


@require_POST
@peak_schema
def get_peak(request):
    return peak_report(request.json['multiplicity'])
