import contextlib
import json
import sys


@contextlib.contextmanager
def unlimited_int_digits():
    """Lift CPython's int/str conversion digit cap for the duration."""
    get = getattr(sys, "get_int_max_str_digits", None)
    if get is None:
        yield
        return
    old = get()
    sys.set_int_max_str_digits(0)
    try:
        yield
    finally:
        sys.set_int_max_str_digits(old)


def dumps(obj, **kwargs) -> str:
    """``json.dumps`` that also accepts reports and very long integers."""
    if hasattr(obj, "to_dict"):
        obj = obj.to_dict()
    with unlimited_int_digits():
        return json.dumps(obj, **kwargs)
