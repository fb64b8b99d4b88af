EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_DIFFERENCE = 2
EXIT_USAGE = 3


class QCartanException(Exception):
    """Base class for all errors raised by qcartan"""
    exit_code: int = EXIT_FAILURE

    def __init__(self, detail: str):
        super().__init__(detail)
        self.detail = detail


class NotFoundException(QCartanException):
    """Exception raised when a named object (statement, block) does not exist"""
    exit_code = EXIT_USAGE

    def __init__(self, resource_name: str, resource_id: object):
        super().__init__(f"{resource_name} {resource_id} not found")
        self.resource_name = resource_name
        self.resource_id = resource_id


class BadRequestException(QCartanException):
    """Exception raised for requests outside the configured limits"""
    exit_code = EXIT_USAGE


class ValidationException(QCartanException):
    """Exception raised for mathematically invalid input"""
    exit_code = EXIT_USAGE


class ConsistencyException(QCartanException):
    """Exception raised when an internal identity that must hold does not"""
    exit_code = EXIT_FAILURE


class CacheException(QCartanException):
    """Exception raised for cache read/write errors"""
    exit_code = EXIT_FAILURE

    def __init__(self, detail: str = "Cache operation failed"):
        super().__init__(detail)


class InternalException(QCartanException):
    """Exception raised for unexpected errors"""
    exit_code = EXIT_FAILURE

    def __init__(self, detail: str = "An internal error occurred"):
        super().__init__(detail)
