"""Python front end of the sshg checker."""

import json

from ._core import (  # noqa: F401
    SCHEMA_VERSION,
    ConfigError,
    Error,
    ParseError,
    canonical,
    check_names,
    equal,
    object_names,
    print_object,
    verify_json,
)


def verify(checks=("all",), mode="solve", strict=False, golden=None):
    """Run checks and return (report dict, exit status)."""
    if isinstance(checks, str):
        checks = [checks]
    text, status = verify_json(list(checks), mode, strict, golden)
    return json.loads(text), status
