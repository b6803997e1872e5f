import django.middleware.common as common
import json
import logging
from django.conf import settings
from django.http import JsonResponse

logger = logging.getLogger(__name__)


def jsonify(data):
    status_code = int(data.get("status_code", 200))
    if "status_code" in data:
        del data["status_code"]
    return JsonResponse(data, status=status_code, json_dumps_params=dict(indent=4))


class CustomMiddleware(common.CommonMiddleware):
    def process_request(self, request):
        super(CustomMiddleware, self).process_request(request)
        if request.method == "OPTIONS":
            return
        if request.content_type == "application/json":
            if request.body:
                try:
                    request.json = json.loads(request.body)
                except json.JSONDecodeError:
                    return jsonify(dict(error="The request body is not valid JSON", status_code=400))
            else:
                request.json = dict()

    def process_response(self, request, response):
        if isinstance(response, dict):
            response = jsonify(response)
        else:
            if response.status_code == 404:
                response = jsonify(dict(error="The requested url was not found", status_code=404))
        return super().process_response(request, response)

    def process_exception(self, request, exception):
        if 'status_code' in exception.__dict__:
            data = dict(error=exception.message, status_code=exception.status_code)
            if getattr(exception, 'diagnostics', None):
                data['diagnostics'] = exception.diagnostics
            return data
        if settings.DEBUG:
            logger.exception('Unhandled error on %s', request.path)
            try:
                logger.debug('Request body: %s', request.json)
            except AttributeError:
                pass
        return dict(error="Server error", status_code=500)
