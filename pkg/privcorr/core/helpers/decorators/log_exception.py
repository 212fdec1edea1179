# Standard library imports
import functools


def log_exception(log, message=None):
    """Provide a decorator that logs exceptions before rethrowing them.

    Parameter log should be a logging.Logger instance to which exceptions
    will be recorded, prefixed with the optional message. The message may
    hold `str.format` fields naming keyword arguments of the wrapped call.

    Useful for functions run in worker processes, whose tracebacks are
    otherwise reduced to the re-raised exception in the parent.

    Example:

        >>> import logging
        >>> @log_exception(logging.getLogger('doctest'), 'Replicate {index}')
        ... def fail(index):
        ...     raise ValueError(index)
        >>> fail(index=3)
        Traceback (most recent call last):
          ...
        ValueError: 3

    """

    if message is None:
        message = "Exception:"

    def decorator(func):
        @functools.wraps(func)
        def wrapper(*args, **kwargs):
            try:
                return func(*args, **kwargs)
            except Exception:
                try:
                    text = message.format(**kwargs)
                except (KeyError, IndexError):
                    text = message
                log.exception(text)
                raise
        return wrapper
    return decorator
