from ._tambarize import *  # noqa: F401,F403
