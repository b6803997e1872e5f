from django.urls import path

from .views import check_freeness, check_server_status, get_chi, get_exponents, get_lattice, get_peak

urlpatterns = list(
    map(lambda x: path(x[0], x[1]), [
        ('', check_server_status),
        ('exponents/', get_exponents),
        ('chi/', get_chi),
        ('lattice/', get_lattice),
        ('freecheck/', check_freeness),
        ('peak/', get_peak),
    ])
)
