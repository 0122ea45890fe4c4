from ._bigrade import *  # noqa: F401,F403
