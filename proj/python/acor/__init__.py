"""Python façade over the acor C++ core."""

try:
    from ._acor import *  # noqa: F401,F403
    from ._acor import __doc__  # noqa: F401
except ImportError:  # pragma: no cover - build-tree layout
    from _acor import *  # noqa: F401,F403
