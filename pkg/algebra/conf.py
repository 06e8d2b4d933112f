from django.conf import settings

DEFAULTS = {
    "PRECISION": 64,
    "SEED": 0,
    "CARTAN_TRIALS": 32,
    "WITNESS_BOX": 5,
    "DEFAULT_DEGREE": 3,
    "REALIZATIONS_DIR": None,
}


def lie_setting(name, override=None):
    """Return `override` if given, else settings.LIEFIELDS[name], else the default."""
    if override is not None:
        return override
    cfg = getattr(settings, "LIEFIELDS", {}) or {}
    value = cfg.get(name)
    return DEFAULTS.get(name) if value is None else value
