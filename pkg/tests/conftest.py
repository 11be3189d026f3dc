import os
import sys

# allow running the tests from a fresh checkout without installing
_src = os.path.join(os.path.dirname(__file__), "..", "src")
try:
    import zonalg  # noqa: F401
except ImportError:
    sys.path.insert(0, os.path.abspath(_src))
