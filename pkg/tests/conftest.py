import os
import sys

from hypothesis import settings

sys.path.insert(0, os.path.dirname(__file__))

# exact symbolic work has uneven per-example cost; keep runs reproducible
settings.register_profile("repo", deadline=None, derandomize=True)
settings.load_profile("repo")
