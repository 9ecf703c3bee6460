"""
App-level settings with defaults.

Values come from ``django.conf.settings`` when Django is configured (see
``core/settings.py``, which reads them from the environment through
python-decouple) and fall back to the defaults below otherwise, so the
library modules can be imported without a settings module.
"""
from django.conf import settings

DEFAULTS = {
    "TSIRELSON_SDP_SOLVER": "CLARABEL",
    "TSIRELSON_SDP_MAX_ITERS": 500,
    "TSIRELSON_JACOBI_MAX_SWEEPS": 64,
    "TSIRELSON_SCAN_SEED": 0,
}


def get(name):
    """
    Return the configured value of an app setting.

    :param name: one of the keys of ``DEFAULTS``
    """
    if name not in DEFAULTS:
        raise KeyError(f"Unknown tsirelson setting {name!r}")
    if settings.configured:
        return getattr(settings, name, DEFAULTS[name])
    return DEFAULTS[name]
