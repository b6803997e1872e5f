import json

from django.test import SimpleTestCase

from arrangement.parsers import arrangement_to_json
from arrangement.services import boolean, coxeter_b2, coxeter_bn
from cli.verification import gf9_extension


class ApiTestCase(SimpleTestCase):
    def post(self, url, body):
        return self.client.post(url, data=json.dumps(body), content_type='application/json')


class StatusTests(ApiTestCase):
    def test_status(self):
        response = self.client.get('/')
        self.assertEqual(response.status_code, 200)
        self.assertEqual(response.json(), {})

    def test_unknown_url(self):
        response = self.client.get('/nowhere/')
        self.assertEqual(response.status_code, 404)
        self.assertIn('error', response.json())

    def test_method(self):
        self.assertEqual(self.client.get('/exponents/').status_code, 405)


class ComputationTests(ApiTestCase):
    def test_exponents(self):
        response = self.post('/exponents/', arrangement_to_json(coxeter_b2((2, 4, 1, 4))))
        self.assertEqual(response.status_code, 200)
        self.assertEqual(response.json()['exponents'], [5, 6])

    def test_chi(self):
        data = self.post('/chi/', arrangement_to_json(boolean(3))).json()
        self.assertEqual(data, dict(coefficients=[1, -3, 3, -1], b1=2, b2=1))

    def test_lattice(self):
        ranks = self.post('/lattice/', arrangement_to_json(coxeter_b2())).json()['ranks']
        self.assertEqual([len(flats) for flats in ranks], [1, 4, 1])
        self.assertEqual(ranks[2][0]['mobius'], 3)

    def test_freecheck(self):
        body = arrangement_to_json(gf9_extension())
        data = self.post('/freecheck/', body).json()
        self.assertEqual(data['verdict'], 'free')
        self.assertEqual(data['exponents'], [1, 5, 5])
        self.assertEqual(data['b2'], 25)
        body['pivot'] = ['0', '0', '1']
        self.assertEqual(self.post('/freecheck/', body).json()['slack'], 0)

    def test_peak(self):
        data = self.post('/peak/', dict(multiplicity=[1, 1, 1, 1])).json()
        self.assertTrue(data['peak'])
        self.assertEqual(data['exponents'], [1, 3])


class ErrorTests(ApiTestCase):
    def test_schema(self):
        response = self.post('/peak/', dict(multiplicity=[1, 1, 1]))
        self.assertEqual(response.status_code, 401)
        self.assertEqual(self.post('/exponents/', dict(dim=2)).status_code, 401)

    def test_invalid_json(self):
        response = self.client.post('/chi/', data='{"dim": ', content_type='application/json')
        self.assertEqual(response.status_code, 400)

    def test_precondition(self):
        self.assertEqual(self.post('/peak/', dict(multiplicity=[1, 1, 5, 1])).status_code, 409)
        self.assertEqual(self.post('/chi/', arrangement_to_json(coxeter_bn(4))).status_code, 409)

    def test_parse_error(self):
        body = dict(dim=2, hyperplanes=[dict(coefficients=[1, 0, 0])])
        response = self.post('/exponents/', body)
        self.assertEqual(response.status_code, 400)
        self.assertIn('hyperplanes.0', response.json()['error'])

    def test_unknown_pivot(self):
        body = arrangement_to_json(boolean(3))
        body['pivot'] = [1, 1, 1]
        self.assertEqual(self.post('/freecheck/', body).status_code, 404)
