"""Operation layer shared by the HTTP API and the command line."""

from . import operations  # noqa: F401
