class CustomBaseException(Exception):
    def __init__(self, message='Bad request'):
        super().__init__(message)
        self.message = message
        self.status_code = 400
        self.exit_code = 1


class NotFound(CustomBaseException):
    def __init__(self, message='The requested object was not found'):
        super().__init__(message)
        self.status_code = 404


class AccessDenied(CustomBaseException):
    def __init__(self, message='The request does not match its schema'):
        super().__init__(message)
        self.status_code = 401


class NotAllowed(CustomBaseException):
    def __init__(self, message='This operation is not allowed'):
        super().__init__(message)
        self.status_code = 409


class ParseError(CustomBaseException):
    def __init__(self, message='The arrangement could not be parsed', line=None):
        if line is not None:
            message = f'line {line}: {message}'
        super().__init__(message)
        self.line = line


class ConsistencyError(CustomBaseException):
    """An internal cross-check failed. Signals a bug, never a property of the input."""

    def __init__(self, message='Internal consistency check failed', diagnostics=None):
        super().__init__(message)
        self.diagnostics = diagnostics or {}
        self.status_code = 500
        self.exit_code = 2
